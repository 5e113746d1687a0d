from __future__ import annotations

from typing import Any, Sequence

from ...helpers.data.models import Vector
from ...internal.errors import InputError


def check_length(v: Sequence[Any], n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise InputError(f"{what} has length {len(v)}, expected {n}")


def add(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def combination(
    coefficients: Sequence[Any], vectors: Sequence[Sequence[Any]], zero: Any, n: int
) -> Vector:
    """
    sum_i coefficients[i] * vectors[i], skipping zero coefficients.
    """
    total = [zero] * n
    for c, v in zip(coefficients, vectors, strict=True):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                total[k] += c * a
    return tuple(total)
