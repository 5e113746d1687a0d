"""
Exact matrices, row reduction and subspaces.

Row reduction is sympy's sparse Gauss-Jordan on ``DomainMatrix``.
Constraint systems are built as sparse rows ``{column: coefficient}``
so nothing is densified before elimination.
"""
from __future__ import annotations

from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from pydantic import model_validator
from sympy.polys.matrices import DomainMatrix

from ...helpers.data.models import ExactModel, Vector
from ...internal.errors import InputError, VerificationFailure
from .fields import FieldSpec
from .vectors import check_length

SparseRow = Mapping[int, Any]


class Matrix(ExactModel):
    field: FieldSpec
    n_rows: int
    n_cols: int
    rows: tuple[Vector, ...]

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if len(row) != self.n_cols:
                raise ValueError(
                    f"row {i} has {len(row)} entries, expected {self.n_cols}"
                )
        return self

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[Any]], n_cols: int | None = None
    ) -> Matrix:
        """
        Build from raw values (ints, "n/d" strings or field elements).
        """
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        return cls(
            field=field,
            n_rows=len(rows),
            n_cols=n_cols,
            rows=tuple(field.vector(row) for row in rows),
        )

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(
            field=field,
            n_rows=n,
            n_cols=n,
            rows=tuple(field.unit_vector(n, i) for i in range(n)),
        )

    def sparse_rows(self) -> list[dict[int, Any]]:
        return [{j: v for j, v in enumerate(row) if v} for row in self.rows]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(
            field=self.field,
            n_rows=self.n_cols,
            n_cols=self.n_rows,
            rows=tuple(self.column(j) for j in range(self.n_cols)),
        )

    def apply(self, v: Sequence[Any]) -> Vector:
        """
        Matrix times column vector.
        """
        check_length(v, self.n_cols)
        zero = self.field.zero
        out = []
        for row in self.rows:
            total = zero
            for a, b in zip(row, v):
                if a and b:
                    total += a * b
            out.append(total)
        return tuple(out)



class EchelonForm(NamedTuple):
    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def _reduce_sparse(
    field: FieldSpec, rows: Iterable[SparseRow], n_cols: int
) -> tuple[list[dict[int, Any]], tuple[int, ...]]:
    """
    Gauss-Jordan on sparse rows. Returns the nonzero reduced rows
    (pivot entry 1, first nonzero in column order) and their pivots.
    """
    entries = {}
    for row in rows:
        cleaned = {j: v for j, v in row.items() if v}
        if cleaned:
            entries[len(entries)] = cleaned
    if not entries or n_cols == 0:
        return [], ()
    dm = DomainMatrix(entries, (len(entries), n_cols), field.domain)
    reduced, pivots = dm.rref(method="GJ")
    grouped: list[dict[int, Any]] = [{} for _ in pivots]
    for (i, j), value in reduced.to_dok().items():
        if i < len(grouped) and value:
            grouped[i][j] = value
    return grouped, tuple(pivots)


def _densify(field: FieldSpec, row: SparseRow, n: int) -> Vector:
    dense = [field.zero] * n
    for j, v in row.items():
        dense[j] = v
    return tuple(dense)


def _free_vectors(
    field: FieldSpec,
    reduced: list[dict[int, Any]],
    pivots: tuple[int, ...],
    n_cols: int,
) -> list[Vector]:
    pivot_set = set(pivots)
    vectors = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        v = [field.zero] * n_cols
        v[f] = field.one
        for row, p in zip(reduced, pivots):
            a = row.get(f)
            if a:
                v[p] = -a
        vectors.append(tuple(v))
    return vectors


def rref(m: Matrix) -> EchelonForm:
    reduced, pivots = _reduce_sparse(m.field, m.sparse_rows(), m.n_cols)
    rows = [_densify(m.field, row, m.n_cols) for row in reduced]
    rows += [m.field.zero_vector(m.n_cols)] * (m.n_rows - len(rows))
    matrix = Matrix(field=m.field, n_rows=m.n_rows, n_cols=m.n_cols, rows=tuple(rows))
    return EchelonForm(matrix=matrix, rank=len(pivots), pivots=pivots)


class Subspace(ExactModel):
    """
    A coordinate subspace held by its reduced row-echelon basis,
    so two subspaces are equal exactly when their models are equal.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.basis) != len(self.pivots):
            raise ValueError("one pivot per basis row is required")
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError(
                    f"basis row has length {len(row)}, expected {self.ambient_dim}"
                )
        return self

    @classmethod
    def span(
        cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[Any]]
    ) -> Subspace:
        rows = []
        for v in vectors:
            check_length(v, ambient_dim)
            rows.append({j: a for j, a in enumerate(v) if a})
        return cls._from_sparse(field, ambient_dim, rows)

    @classmethod
    def _from_sparse(
        cls, field: FieldSpec, ambient_dim: int, rows: Iterable[SparseRow]
    ) -> Subspace:
        reduced, pivots = _reduce_sparse(field, rows, ambient_dim)
        return cls(
            field=field,
            ambient_dim=ambient_dim,
            basis=tuple(_densify(field, row, ambient_dim) for row in reduced),
            pivots=pivots,
        )

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(
            field=field,
            ambient_dim=ambient_dim,
            basis=tuple(field.unit_vector(ambient_dim, i) for i in range(ambient_dim)),
            pivots=tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def residual(self, v: Sequence[Any]) -> Vector:
        """
        v reduced against the echelon basis; zero iff v lies in the subspace.
        """
        check_length(v, self.ambient_dim)
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, a in enumerate(row):
                    if a:
                        out[j] -= c * a
        return tuple(out)

    def contains(self, v: Sequence[Any]) -> bool:
        return not any(self.residual(v))

    def coordinates(self, v: Sequence[Any]) -> Vector:
        """
        Coordinates of v in the echelon basis.
        """
        if not self.contains(v):
            raise VerificationFailure("subspace membership", witness=tuple(v))
        return tuple(v[p] for p in self.pivots)

    def from_coordinates(self, coordinates: Sequence[Any]) -> Vector:
        check_length(coordinates, self.dim, "coordinate vector")
        out = [self.field.zero] * self.ambient_dim
        for c, row in zip(coordinates, self.basis):
            if c:
                for j, a in enumerate(row):
                    if a:
                        out[j] += c * a
        return tuple(out)

    def equations(self) -> Matrix:
        """
        A matrix whose nullspace is exactly this subspace.
        """
        rows = _free_vectors(
            self.field,
            [{j: a for j, a in enumerate(row) if a} for row in self.basis],
            self.pivots,
            self.ambient_dim,
        )
        return Matrix(
            field=self.field,
            n_rows=len(rows),
            n_cols=self.ambient_dim,
            rows=tuple(rows),
        )

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(row) for row in self.basis)

    def intersection(self, other: Subspace) -> Subspace:
        if other.ambient_dim != self.ambient_dim:
            raise InputError("subspaces live in different ambient spaces")
        equations = self.equations().sparse_rows() + other.equations().sparse_rows()
        return sparse_nullspace(self.field, equations, self.ambient_dim)

    def sum(self, other: Subspace) -> Subspace:
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)


def sparse_nullspace(
    field: FieldSpec, rows: Iterable[SparseRow], n_unknowns: int
) -> Subspace:
    """
    Solution space of the homogeneous system given by sparse rows.
    """
    reduced, pivots = _reduce_sparse(field, rows, n_unknowns)
    if not pivots:
        return Subspace.full(field, n_unknowns)
    return Subspace.span(field, n_unknowns, _free_vectors(field, reduced, pivots, n_unknowns))


def nullspace(m: Matrix) -> Subspace:
    return sparse_nullspace(m.field, m.sparse_rows(), m.n_cols)


def solve_many(a: Matrix, columns: Sequence[Sequence[Any]]) -> list[Vector | None]:
    """
    Solve a x = b for several right-hand sides with one elimination.
    Free variables are set to zero, so the answer is the first solution
    in pivot order.
    """
    for b in columns:
        check_length(b, a.n_rows, "right-hand side")
    n = a.n_cols
    augmented = []
    for i, row in enumerate(a.rows):
        sparse = {j: v for j, v in enumerate(row) if v}
        for t, b in enumerate(columns):
            if b[i]:
                sparse[n + t] = b[i]
        augmented.append(sparse)
    reduced, pivots = _reduce_sparse(a.field, augmented, n + len(columns))

    solutions: list[Vector | None] = []
    for t in range(len(columns)):
        x = [a.field.zero] * n
        consistent = True
        for row, p in zip(reduced, pivots):
            value = row.get(n + t)
            if p >= n:
                if value:
                    consistent = False
                    break
            elif value:
                x[p] = value
        solutions.append(tuple(x) if consistent else None)
    return solutions


def solve_linear(a: Matrix, b: Sequence[Any]) -> Vector | None:
    if len(b) != a.n_rows:
        raise InputError(f"right-hand side has length {len(b)}, expected {a.n_rows}")
    return solve_many(a, [b])[0]


def subspace_contains(s: Subspace, v: Sequence[Any]) -> bool:
    if len(v) != s.ambient_dim:
        raise InputError(f"vector has length {len(v)}, subspace lives in dimension {s.ambient_dim}")
    return s.contains(v)


class QuotientBasis(NamedTuple):
    """
    Complement of a subspace I spanned by the standard vectors at the
    non-pivot positions of I's echelon basis.
    """

    subspace: Subspace
    free_columns: tuple[int, ...]
    representatives: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.free_columns)

    def coordinates(self, v: Sequence[Any]) -> Vector:
        """
        Coordinates of v + I against the representatives.
        """
        reduced = self.subspace.residual(v)
        return tuple(reduced[f] for f in self.free_columns)


def quotient_basis(ambient_dim: int, i: Subspace) -> QuotientBasis:
    if i.ambient_dim != ambient_dim:
        raise InputError(
            f"subspace lives in dimension {i.ambient_dim}, expected {ambient_dim}"
        )
    pivot_set = set(i.pivots)
    free = tuple(f for f in range(ambient_dim) if f not in pivot_set)
    return QuotientBasis(
        subspace=i,
        free_columns=free,
        representatives=tuple(i.field.unit_vector(ambient_dim, f) for f in free),
    )
