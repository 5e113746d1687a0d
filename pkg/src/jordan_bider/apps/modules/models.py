from __future__ import annotations

from typing import Any, Sequence

from pydantic import model_validator

from ...helpers.data.models import ExactModel, Vector
from ..algebras.models import JordanAlgebra, Table, convert_table
from ..linalg.matrices import Matrix


class JModule(ExactModel):
    """
    A module M over J given by e_a . v_x = sum_k action[a][x][k] v_k.
    One tensor serves both a . x and x . a.
    """

    algebra: JordanAlgebra
    dim: int
    action: Table

    @model_validator(mode="after")
    def check_shape(self):
        n = self.algebra.dim
        if len(self.action) != n:
            raise ValueError(f"action has {len(self.action)} slices, expected {n}")
        for a, block in enumerate(self.action):
            if len(block) != self.dim:
                raise ValueError(f"action slice {a} has {len(block)} rows, expected {self.dim}")
            for x, entry in enumerate(block):
                if len(entry) != self.dim:
                    raise ValueError(
                        f"action entry ({a}, {x}) has {len(entry)} coefficients, expected {self.dim}"
                    )
        return self

    @classmethod
    def from_action(
        cls, algebra: JordanAlgebra, dim: int, action: Sequence[Sequence[Sequence[Any]]]
    ) -> JModule:
        return cls(algebra=algebra, dim=dim, action=convert_table(algebra.field, action))

    def act(self, a: Sequence[Any], v: Sequence[Any]) -> Vector:
        """
        a . v for a in J and v in M.
        """
        out = [self.algebra.field.zero] * self.dim
        for i, coefficient in enumerate(a):
            if not coefficient:
                continue
            block = self.action[i]
            for x, b in enumerate(v):
                if not b:
                    continue
                cb = coefficient * b
                for k, c in enumerate(block[x]):
                    if c:
                        out[k] += cb * c
        return tuple(out)

    def act_on_basis(self, a: int, v: Sequence[Any]) -> Vector:
        out = [self.algebra.field.zero] * self.dim
        block = self.action[a]
        for x, b in enumerate(v):
            if b:
                for k, c in enumerate(block[x]):
                    if c:
                        out[k] += b * c
        return tuple(out)

    def action_matrix(self, a: Sequence[Any]) -> Matrix:
        """
        The operator v -> a . v acting on column vectors.
        """
        field = self.algebra.field
        rows = []
        for k in range(self.dim):
            row = []
            for x in range(self.dim):
                total = field.zero
                for i, coefficient in enumerate(a):
                    if coefficient:
                        c = self.action[i][x][k]
                        if c:
                            total += coefficient * c
                row.append(total)
            rows.append(tuple(row))
        return Matrix(field=field, n_rows=self.dim, n_cols=self.dim, rows=tuple(rows))


class Representation(ExactModel):
    """
    a -> S_a, one matrix per basis vector of J, acting on column vectors.
    """

    algebra: JordanAlgebra
    dim: int
    matrices: tuple[Matrix, ...]

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.matrices) != self.algebra.dim:
            raise ValueError(
                f"expected {self.algebra.dim} matrices, got {len(self.matrices)}"
            )
        for a, m in enumerate(self.matrices):
            if (m.n_rows, m.n_cols) != (self.dim, self.dim):
                raise ValueError(f"matrix {a} is not {self.dim}x{self.dim}")
        return self


def regular_module(j: JordanAlgebra) -> JModule:
    return JModule(algebra=j, dim=j.dim, action=j.table)


def zero_module(j: JordanAlgebra) -> JModule:
    return JModule(algebra=j, dim=0, action=tuple(() for _ in range(j.dim)))


def action_matrix(m: JModule, a: Sequence[Any]) -> Matrix:
    return m.action_matrix(a)


def representation_of(m: JModule) -> Representation:
    n = m.algebra.dim
    return Representation(
        algebra=m.algebra,
        dim=m.dim,
        matrices=tuple(
            m.action_matrix(m.algebra.basis_vector(a)) for a in range(n)
        ),
    )
