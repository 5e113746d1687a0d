"""
Exact scalar fields: the rationals and GF(p) for primes p >= 5.

Scalars are sympy domain elements (``QQ`` or ``GF(p, symmetric=False)``),
so arithmetic is exact and equality is plain ``==``.
"""
from __future__ import annotations

from functools import cache
from typing import Any, Iterable

from pydantic import model_validator
from sympy import GF, QQ, Rational, isprime
from sympy.polys.domains.domain import Domain

from ...helpers.data.models import ProjectBaseModel, StrEnum, Vector
from ...internal.errors import InputError


class FieldKind(StrEnum):
    RATIONAL: str
    PRIME: str


@cache
def get_domain(kind: str, p: int | None) -> Domain:
    if kind == FieldKind.RATIONAL:
        return QQ
    return GF(p, symmetric=False)


class FieldSpec(ProjectBaseModel, frozen=True):
    kind: FieldKind = FieldKind.RATIONAL
    p: int | None = None

    @model_validator(mode="after")
    def check_modulus(self):
        if self.kind == FieldKind.RATIONAL:
            if self.p is not None:
                raise ValueError("a rational field takes no modulus")
            return self
        if self.p is None:
            raise ValueError("a prime field needs a modulus p")
        if not isprime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p in (2, 3):
            raise ValueError(f"characteristic {self.p} is excluded, need p >= 5")
        return self

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(kind=FieldKind.RATIONAL)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        try:
            return cls(kind=FieldKind.PRIME, p=p)
        except ValueError as e:
            raise InputError(str(e)) from e

    @property
    def domain(self) -> Domain:
        return get_domain(self.kind, self.p)

    @property
    def is_prime(self) -> bool:
        return self.kind == FieldKind.PRIME

    @property
    def label(self) -> str:
        return f"GF({self.p})" if self.is_prime else "Q"

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    @property
    def half(self) -> Any:
        return self.domain.one / self.domain(2)

    def scalar(self, value: Any) -> Any:
        """
        Convert ints, "n/d" strings, Fractions or existing domain
        elements into an element of this field.
        """
        domain = self.domain
        if isinstance(value, bool):
            raise InputError(f"{value!r} is not a field element")
        if isinstance(value, int):
            return domain(value)
        if isinstance(value, str):
            try:
                rational = Rational(value.strip())
            except (TypeError, ValueError, SyntaxError, ZeroDivisionError) as e:
                raise InputError(f"cannot read {value!r} as an exact scalar") from e
            return self._from_fraction(int(rational.p), int(rational.q))
        if hasattr(value, "denominator") and hasattr(value, "numerator"):
            return self._from_fraction(int(value.numerator), int(value.denominator))
        try:
            return domain.convert(value)
        except Exception as e:
            raise InputError(f"cannot read {value!r} as an element of {self.label}") from e

    def _from_fraction(self, numerator: int, denominator: int) -> Any:
        if not self.is_prime:
            return QQ(numerator, denominator)
        assert self.p is not None
        if denominator % self.p == 0:
            raise InputError(
                f"{numerator}/{denominator} has no value in {self.label}"
            )
        return self.domain(numerator) / self.domain(denominator)

    def vector(self, values: Iterable[Any]) -> Vector:
        return tuple(self.scalar(v) for v in values)

    def zero_vector(self, n: int) -> Vector:
        return tuple(self.zero for _ in range(n))

    def unit_vector(self, n: int, i: int) -> Vector:
        return tuple(self.one if k == i else self.zero for k in range(n))

    def elements(self) -> list[Any]:
        """
        Every element of a prime field in residue order.
        """
        if not self.is_prime:
            raise InputError("only prime fields can be enumerated")
        assert self.p is not None
        return [self.domain(r) for r in range(self.p)]
