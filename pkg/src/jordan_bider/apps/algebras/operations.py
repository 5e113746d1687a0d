"""
Products, axiom checks, spans, annihilators and quotients of algebras
given by structure constants.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations_with_replacement, permutations
from typing import Any, NamedTuple, Sequence

from ...helpers.data.models import Vector
from ...internal.errors import HypothesisFailure, InputError, VerificationFailure
from ..linalg.fields import FieldSpec
from ..linalg.maps import LinearMap
from ..linalg.matrices import (
    Matrix,
    QuotientBasis,
    Subspace,
    nullspace,
    quotient_basis,
    solve_many,
    sparse_nullspace,
)
from ..linalg.vectors import add, check_length
from ..modules.models import JModule, regular_module
from .models import (
    AlgebraReport,
    AssociativeAlgebra,
    JordanAlgebra,
    JordanCheck,
    Table,
    default_labels,
)


def bilinear_product(
    field: FieldSpec, table: Table, u: Sequence[Any], v: Sequence[Any]
) -> Vector:
    n = len(table)
    out = [field.zero] * n
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for x, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(row[x]):
                if c:
                    out[k] += ab * c
    return tuple(out)


def multiply(j: JordanAlgebra, u: Sequence[Any], v: Sequence[Any]) -> Vector:
    check_length(u, j.dim)
    check_length(v, j.dim)
    return bilinear_product(j.field, j.table, u, v)


def assoc_multiply(a: AssociativeAlgebra, u: Sequence[Any], v: Sequence[Any]) -> Vector:
    check_length(u, a.dim)
    check_length(v, a.dim)
    return bilinear_product(a.field, a.table, u, v)


def commutativity_witness(table: Table) -> tuple[int, int, int] | None:
    n = len(table)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if table[i][j][k] != table[j][i][k]:
                    return (i, j, k)
    return None


def _right_multiply(field: FieldSpec, table: Table, v: Sequence[Any], s: int) -> Vector:
    n = len(table)
    out = [field.zero] * n
    for i, a in enumerate(v):
        if a:
            for k, c in enumerate(table[i][s]):
                if c:
                    out[k] += a * c
    return tuple(out)


def _operator_of(
    field: FieldSpec, left: tuple[tuple[Vector, ...], ...], u: Sequence[Any]
) -> list[list[Any]]:
    """
    Left multiplication by u as rows acting on column vectors.
    """
    n = len(left)
    rows = [[field.zero] * n for _ in range(n)]
    for a, coefficient in enumerate(u):
        if not coefficient:
            continue
        operator = left[a]
        for k in range(n):
            for x, c in enumerate(operator[k]):
                if c:
                    rows[k][x] += coefficient * c
    return rows


def _apply_rows(rows: list[list[Any]], v: Sequence[Any], zero: Any) -> Vector:
    out = []
    for row in rows:
        total = zero
        for a, b in zip(row, v):
            if a and b:
                total += a * b
        out.append(total)
    return tuple(out)


def verify_jordan(j: JordanAlgebra) -> JordanCheck:
    """
    Check commutativity and the Jordan identity (x^2 o y) o x = x^2 o (x o y)
    as a formal identity.

    The coefficient of x_p x_q x_r y_s on each side is the sum, over the
    distinct orderings of the multiset {p, q, r}, of
    ((e_p o e_q) o e_s) o e_r and (e_p o e_q) o (e_r o e_s) respectively.
    Comparing those sums for every p <= q <= r and every s is exact over
    any field, where sampling x and y would not be.
    """
    n = j.dim
    field = j.field
    zero = field.zero
    commutative_witness = commutativity_witness(j.table)

    squares = j.table
    # (e_p o e_q) o e_s
    partial = [
        [[_right_multiply(field, j.table, squares[p][q], s) for s in range(n)] for q in range(n)]
        for p in range(n)
    ]
    left = j.left_operators
    operators = [[_operator_of(field, left, squares[p][q]) for q in range(n)] for p in range(n)]

    jordan_witness = None
    for p, q, r in combinations_with_replacement(range(n), 3):
        orderings = set(permutations((p, q, r)))
        for s in range(n):
            lhs = [zero] * n
            rhs = [zero] * n
            for a, b, c in orderings:
                left = _right_multiply(field, j.table, partial[a][b][s], c)
                right = _apply_rows(operators[a][b], squares[c][s], zero)
                for k in range(n):
                    lhs[k] += left[k]
                    rhs[k] += right[k]
            if lhs != rhs:
                jordan_witness = (p, q, r, s)
                break
        if jordan_witness:
            break

    return JordanCheck(
        commutative=commutative_witness is None,
        jordan_identity=jordan_witness is None,
        witness=commutative_witness or jordan_witness,
    )


def annihilator(
    j: JordanAlgebra, s: Subspace, m: JModule | None = None
) -> Subspace:
    """
    Z_M(S) = {v in M | S . v = 0}; the regular module gives Z_J(S).
    """
    module = m if m is not None else regular_module(j)
    if s.ambient_dim != j.dim:
        raise InputError(f"subspace lives in dimension {s.ambient_dim}, algebra has dimension {j.dim}")
    rows = []
    for b in s.basis:
        for k in range(module.dim):
            row = {}
            for x in range(module.dim):
                total = j.field.zero
                for a, coefficient in enumerate(b):
                    if coefficient:
                        c = module.action[a][x][k]
                        if c:
                            total += coefficient * c
                if total:
                    row[x] = total
            if row:
                rows.append(row)
    return sparse_nullspace(j.field, rows, module.dim)


def product_span(j: JordanAlgebra, u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != j.dim or v.ambient_dim != j.dim:
        raise InputError("subspaces must live in the algebra's coordinates")
    return Subspace.span(
        j.field, j.dim, (multiply(j, a, b) for a in u.basis for b in v.basis)
    )


def center(j: JordanAlgebra) -> Subspace:
    return annihilator(j, j.full_space())


def derived(j: JordanAlgebra) -> Subspace:
    return product_span(j, j.full_space(), j.full_space())


def second_derived(j: JordanAlgebra) -> Subspace:
    # the span of all (x o y) o z
    return product_span(j, derived(j), j.full_space())


def is_perfect(j: JordanAlgebra) -> bool:
    return derived(j).dim == j.dim


def find_unit(j: JordanAlgebra) -> Vector | None:
    """
    Solve e o e_x = e_x for every basis vector; None if there is no unit.
    """
    n = j.dim
    if n == 0:
        return ()
    rows = []
    rhs = []
    for x in range(n):
        for k in range(n):
            rows.append(tuple(j.table[i][x][k] for i in range(n)))
            rhs.append(j.field.one if k == x else j.field.zero)
    a = Matrix(field=j.field, n_rows=len(rows), n_cols=n, rows=tuple(rows))
    return solve_many(a, [rhs])[0]


def ideal_witness(j: JordanAlgebra, i: Subspace) -> tuple[int, int] | None:
    for r, b in enumerate(i.basis):
        for x in range(j.dim):
            e = j.basis_vector(x)
            if not i.contains(multiply(j, b, e)) or not i.contains(multiply(j, e, b)):
                return (r, x)
    return None


class QuotientAlgebra(NamedTuple):
    algebra: JordanAlgebra
    projection: LinearMap
    basis: QuotientBasis


def quotient(j: JordanAlgebra, i: Subspace) -> QuotientAlgebra:
    """
    J / I on the non-pivot standard vectors of I, with the projection J -> J/I.
    """
    witness = ideal_witness(j, i)
    if witness is not None:
        raise VerificationFailure(
            "ideal", witness=witness, detail="product of ideal basis row and e_x leaves the subspace"
        )
    basis = quotient_basis(j.dim, i)
    table = tuple(
        tuple(basis.coordinates(j.table[f][g]) for g in basis.free_columns)
        for f in basis.free_columns
    )
    algebra = JordanAlgebra(
        field=j.field,
        dim=basis.dim,
        basis_labels=tuple(j.basis_labels[f] for f in basis.free_columns),
        table=table,
    )
    projection = LinearMap(
        field=j.field,
        source_dim=j.dim,
        target_dim=basis.dim,
        images=tuple(basis.coordinates(j.basis_vector(x)) for x in range(j.dim)),
    )
    return QuotientAlgebra(algebra=algebra, projection=projection, basis=basis)


class Subalgebra(NamedTuple):
    algebra: JordanAlgebra
    subspace: Subspace


def subalgebra(j: JordanAlgebra, s: Subspace, prefix: str = "b") -> Subalgebra:
    """
    The algebra induced on a product-closed subspace, in echelon-basis coordinates.
    """
    table = []
    for r, u in enumerate(s.basis):
        row = []
        for t, v in enumerate(s.basis):
            product = multiply(j, u, v)
            if not s.contains(product):
                raise VerificationFailure("closed under the product", witness=(r, t))
            row.append(s.coordinates(product))
        table.append(tuple(row))

    labels = []
    for r, u in enumerate(s.basis):
        support = [k for k, a in enumerate(u) if a]
        if len(support) == 1 and u[support[0]] == j.field.one:
            labels.append(j.basis_labels[support[0]])
        else:
            labels.append(f"{prefix}{r + 1}")
    algebra = JordanAlgebra(
        field=j.field, dim=s.dim, basis_labels=tuple(labels), table=tuple(table)
    )
    return Subalgebra(algebra=algebra, subspace=s)


class ProductDecomposer:
    """
    Writes vectors of J' as sums sum_{i,j} lambda_ij e_i o e_j.
    Coefficients are indexed i * n + j.
    """

    def __init__(self, j: JordanAlgebra):
        self.algebra = j
        n = j.dim
        self.products = Matrix(
            field=j.field,
            n_rows=n,
            n_cols=n * n,
            rows=tuple(
                tuple(j.table[i][x][k] for i in range(n) for x in range(n))
                for k in range(n)
            ),
        )

    @cached_property
    def kernel(self) -> Subspace:
        return nullspace(self.products)

    def decompose_all(self, vectors: Sequence[Sequence[Any]]) -> list[Vector]:
        solutions = solve_many(self.products, vectors)
        out = []
        for v, solution in zip(vectors, solutions):
            if solution is None:
                raise HypothesisFailure(
                    "perfect", f"{tuple(str(a) for a in v)} is not a sum of products"
                )
            out.append(solution)
        return out

    def decompose(self, v: Sequence[Any]) -> Vector:
        check_length(v, self.algebra.dim)
        return self.decompose_all([v])[0]

    def alternative(self, primary: Vector) -> Vector:
        """
        A second decomposition of the same vector, different from the
        primary one whenever the products are linearly dependent.
        """
        if self.kernel.is_zero:
            return primary
        return add(primary, self.kernel.basis[0])


def product_decomposition(
    j: JordanAlgebra, v: Sequence[Any], alternative: bool = False
) -> Vector:
    decomposer = ProductDecomposer(j)
    primary = decomposer.decompose(v)
    return decomposer.alternative(primary) if alternative else primary


def associativity_witness(a: AssociativeAlgebra) -> tuple[int, int, int] | None:
    n = a.dim
    for x in range(n):
        for y in range(n):
            xy = a.table[x][y]
            for z in range(n):
                left = _right_multiply(a.field, a.table, xy, z)
                right = bilinear_product(
                    a.field, a.table, a.field.unit_vector(n, x), a.table[y][z]
                )
                if left != right:
                    return (x, y, z)
    return None


def jordanize_associative(a: AssociativeAlgebra) -> JordanAlgebra:
    """
    A+ with x o y = (xy + yx) / 2.
    """
    witness = associativity_witness(a)
    if witness is not None:
        raise VerificationFailure("associativity", witness=witness)
    half = a.field.half
    n = a.dim
    table = tuple(
        tuple(
            tuple(half * (a.table[i][j][k] + a.table[j][i][k]) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return JordanAlgebra(
        field=a.field,
        dim=n,
        basis_labels=a.basis_labels or default_labels("e", n),
        table=table,
        name=a.name,
    )


def analyze_algebra(j: JordanAlgebra) -> AlgebraReport:
    derived_space = derived(j)
    return AlgebraReport(
        algebra_name=j.name,
        field_label=j.field.label,
        dim=j.dim,
        check=verify_jordan(j),
        center=center(j),
        derived=derived_space,
        second_derived=product_span(j, derived_space, j.full_space()),
        perfect=derived_space.dim == j.dim,
        unit=find_unit(j),
    )
