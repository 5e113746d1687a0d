from __future__ import annotations

from typing import Any, Sequence

from pydantic import Field, model_validator

from ...helpers.data.models import ExactModel, ProjectBaseModel, Vector
from ..linalg.fields import FieldSpec
from ..linalg.matrices import Subspace

Table = tuple[tuple[Vector, ...], ...]


def default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


def convert_table(field: FieldSpec, table: Sequence[Sequence[Sequence[Any]]]) -> Table:
    return tuple(tuple(field.vector(entry) for entry in row) for row in table)


def _check_table(table: Table, dim: int, labels: tuple[str, ...]) -> None:
    if len(labels) != dim:
        raise ValueError(f"expected {dim} basis labels, got {len(labels)}")
    if len(table) != dim:
        raise ValueError(f"table has {len(table)} rows, expected {dim}")
    for i, row in enumerate(table):
        if len(row) != dim:
            raise ValueError(f"table row {i} has {len(row)} entries, expected {dim}")
        for j, entry in enumerate(row):
            if len(entry) != dim:
                raise ValueError(
                    f"table entry ({i}, {j}) has {len(entry)} coefficients, expected {dim}"
                )


class JordanAlgebra(ExactModel):
    """
    Structure constants of a finite-dimensional algebra:
    e_i o e_j = sum_k table[i][j][k] e_k.

    Commutativity and the Jordan identity are properties checked by
    ``verify_jordan`` so that failing tables stay loadable for reporting.
    """

    field: FieldSpec
    dim: int
    basis_labels: tuple[str, ...]
    table: Table
    name: str | None = None

    @model_validator(mode="after")
    def check_shape(self):
        _check_table(self.table, self.dim, self.basis_labels)
        return self

    @classmethod
    def from_table(
        cls,
        field: FieldSpec,
        table: Sequence[Sequence[Sequence[Any]]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
    ) -> JordanAlgebra:
        dim = len(table)
        return cls(
            field=field,
            dim=dim,
            basis_labels=tuple(labels) if labels else default_labels("e", dim),
            table=convert_table(field, table),
            name=name,
        )

    @classmethod
    def zero_algebra(cls, field: FieldSpec) -> JordanAlgebra:
        return cls(field=field, dim=0, basis_labels=(), table=())

    def product_of_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    @property
    def left_operators(self) -> tuple[tuple[Vector, ...], ...]:
        """
        L_a for each basis vector, as rows acting on column vectors:
        (L_a v)[k] = sum_x table[a][x][k] v[x].
        """
        n = self.dim
        return tuple(
            tuple(tuple(self.table[a][x][k] for x in range(n)) for k in range(n))
            for a in range(n)
        )

    def vector(self, values: Sequence[Any]) -> Vector:
        return self.field.vector(values)

    def basis_vector(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)


class AssociativeAlgebra(ExactModel):
    """
    Structure constants of an associative algebra: e_i e_j = sum_k table[i][j][k] e_k.
    """

    field: FieldSpec
    dim: int
    basis_labels: tuple[str, ...]
    table: Table
    name: str | None = None

    @model_validator(mode="after")
    def check_shape(self):
        _check_table(self.table, self.dim, self.basis_labels)
        return self

    @classmethod
    def from_table(
        cls,
        field: FieldSpec,
        table: Sequence[Sequence[Sequence[Any]]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
    ) -> AssociativeAlgebra:
        dim = len(table)
        return cls(
            field=field,
            dim=dim,
            basis_labels=tuple(labels) if labels else default_labels("e", dim),
            table=convert_table(field, table),
            name=name,
        )

    def basis_vector(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)


class JordanCheck(ProjectBaseModel):
    commutative: bool
    jordan_identity: bool
    witness: tuple[int, ...] | None = Field(
        default=None,
        description="(i, j, k) for a commutativity failure, (p, q, r, s) for the Jordan identity",
    )

    @property
    def passed(self) -> bool:
        return self.commutative and self.jordan_identity


class AlgebraReport(ExactModel):
    algebra_name: str | None = None
    field_label: str
    dim: int
    check: JordanCheck
    center: Subspace
    derived: Subspace
    second_derived: Subspace
    perfect: bool
    unit: Vector | None = None
    derivation_dim: int | None = None
    centroid_dim: int | None = None

    @property
    def unital(self) -> bool:
        return self.unit is not None
