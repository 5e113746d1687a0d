"""
Named algebras: the special and hermitian matrix families, spin factors
and a few small tables with known structure.

Every builder takes an optional field (rationals by default).
"""
from __future__ import annotations

from typing import Any, Callable, Sequence

from ...internal.errors import InputError, VerificationFailure
from ..linalg.fields import FieldSpec
from ..linalg.matrices import Matrix, nullspace, solve_many
from .models import AssociativeAlgebra, JordanAlgebra, default_labels
from .operations import jordanize_associative

FlatMatrix = tuple[Any, ...]

PERFECT_COMMUTATIVE = "example_2_6"
SUM_TABLE_LITERAL = "example_2_13_literal"
SUM_TABLE_OFFDIAG = "example_2_13_offdiag"
DIAGONAL_SPIN = "example_3_2"


def _field(field: FieldSpec | None) -> FieldSpec:
    return field if field is not None else FieldSpec.rational()


def _check_size(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise InputError(f"size must be at least {minimum}, got {n}")


def _matmul(field: FieldSpec, size: int, x: FlatMatrix, y: FlatMatrix) -> FlatMatrix:
    out = [field.zero] * (size * size)
    for i in range(size):
        for k in range(size):
            a = x[i * size + k]
            if not a:
                continue
            for j in range(size):
                b = y[k * size + j]
                if b:
                    out[i * size + j] += a * b
    return tuple(out)


def _matrix_unit(field: FieldSpec, size: int, a: int, b: int) -> FlatMatrix:
    return field.unit_vector(size * size, a * size + b)


def _matrix_subalgebra(
    field: FieldSpec,
    size: int,
    basis: Sequence[FlatMatrix],
    labels: Sequence[str],
    name: str,
) -> JordanAlgebra:
    """
    The Jordan algebra on a span of size x size matrices under (XY + YX) / 2.
    """
    d = len(basis)
    half = field.half
    columns = Matrix(
        field=field, n_rows=d, n_cols=size * size, rows=tuple(basis)
    ).transpose()
    products = []
    for x in basis:
        for y in basis:
            xy = _matmul(field, size, x, y)
            yx = _matmul(field, size, y, x)
            products.append(tuple(half * (a + b) for a, b in zip(xy, yx)))
    coordinates = [c for c in solve_many(columns, products) if c is not None]
    if len(coordinates) != len(products):
        raise VerificationFailure("matrix span closed under the Jordan product")
    table = tuple(
        tuple(coordinates[i * d + j] for j in range(d)) for i in range(d)
    )
    return JordanAlgebra(
        field=field, dim=d, basis_labels=tuple(labels), table=table, name=name
    )


def full_matrix_associative(n: int, field: FieldSpec | None = None) -> AssociativeAlgebra:
    field = _field(field)
    _check_size(n)
    size = n * n
    table = []
    for a in range(n):
        for b in range(n):
            row = []
            for c in range(n):
                for d in range(n):
                    # E_ab E_cd = [b == c] E_ad
                    if b == c:
                        row.append(field.unit_vector(size, a * n + d))
                    else:
                        row.append(field.zero_vector(size))
            table.append(tuple(row))
    labels = tuple(f"E{a + 1}{b + 1}" for a in range(n) for b in range(n))
    return AssociativeAlgebra(
        field=field, dim=size, basis_labels=labels, table=tuple(table), name=f"full_matrix_{n}"
    )


def matrix_jordan(n: int, field: FieldSpec | None = None) -> JordanAlgebra:
    """
    All n x n matrices under the symmetrized product.
    """
    algebra = jordanize_associative(full_matrix_associative(n, field))
    return algebra.model_copy(update={"name": "matrix_jordan"})


def sym_matrix_jordan(n: int, field: FieldSpec | None = None) -> JordanAlgebra:
    """
    Symmetric n x n matrices; basis E_aa and E_ab + E_ba for a < b.
    """
    field = _field(field)
    _check_size(n)
    basis = []
    labels = []
    for a in range(n):
        for b in range(a, n):
            unit = _matrix_unit(field, n, a, b)
            if a != b:
                unit = tuple(x + y for x, y in zip(unit, _matrix_unit(field, n, b, a)))
            basis.append(unit)
            labels.append(f"S{a + 1}{b + 1}")
    return _matrix_subalgebra(field, n, basis, labels, "sym_matrix_jordan")


def _block_swap(field: FieldSpec, n: int) -> list[list[Any]]:
    # diag(Q, ..., Q) with Q = [[0, 1], [1, 0]]
    size = 2 * n
    s = [[field.zero] * size for _ in range(size)]
    for t in range(n):
        s[2 * t][2 * t + 1] = field.one
        s[2 * t + 1][2 * t] = field.one
    return s


def symplectic_jordan(n: int, field: FieldSpec | None = None) -> JordanAlgebra:
    """
    Fixed points of X -> S' X' S on 2n x 2n matrices, S = diag(Q, ..., Q).
    """
    field = _field(field)
    _check_size(n)
    size = 2 * n
    s = _block_swap(field, n)
    # (S' X' S)_ij = sum_{k,l} S_ki X_lk S_lj
    rows = []
    for i in range(size):
        for j in range(size):
            row = [field.zero] * (size * size)
            row[i * size + j] += field.one
            for k in range(size):
                if not s[k][i]:
                    continue
                for m in range(size):
                    if s[m][j]:
                        row[m * size + k] -= s[k][i] * s[m][j]
            rows.append(tuple(row))
    fixed = nullspace(
        Matrix(field=field, n_rows=len(rows), n_cols=size * size, rows=tuple(rows))
    )
    labels = default_labels("H", fixed.dim)
    return _matrix_subalgebra(field, size, fixed.basis, labels, "symplectic_jordan")


def spin_factor(form: Sequence[Sequence[Any]], field: FieldSpec | None = None) -> JordanAlgebra:
    """
    F1 + V with 1 the unit and v_i o v_j = B_ij 1 for a symmetric form B.
    """
    field = _field(field)
    m = len(form)
    b = [field.vector(row) for row in form]
    for i, row in enumerate(b):
        if len(row) != m:
            raise InputError(f"form row {i} has {len(row)} entries, expected {m}")
    for i in range(m):
        for j in range(i + 1, m):
            if b[i][j] != b[j][i]:
                raise InputError(f"form is not symmetric at ({i}, {j})")
    n = m + 1
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == 0:
                row.append(field.unit_vector(n, j))
            elif j == 0:
                row.append(field.unit_vector(n, i))
            else:
                entry = [field.zero] * n
                entry[0] = b[i - 1][j - 1]
                row.append(tuple(entry))
        table.append(tuple(row))
    labels = ("1",) + default_labels("v", m)
    return JordanAlgebra(
        field=field, dim=n, basis_labels=labels, table=tuple(table), name="spin_factor"
    )


def diagonal_spin(alpha: Sequence[Any], field: FieldSpec | None = None) -> JordanAlgebra:
    """
    Basis 1, u_1..u_n with u_i o u_i = alpha_i 1 and u_i o u_j = 0 otherwise.
    """
    field = _field(field)
    values = field.vector(alpha)
    if not values:
        raise InputError("alpha needs at least one entry")
    if any(not a for a in values):
        raise InputError("every alpha_i must be nonzero")
    m = len(values)
    form = [[values[i] if i == j else field.zero for j in range(m)] for i in range(m)]
    algebra = spin_factor(form, field)
    return algebra.model_copy(
        update={
            "basis_labels": ("1",) + default_labels("u", m),
            "name": DIAGONAL_SPIN,
        }
    )


def perfect_commutative_associative(field: FieldSpec | None = None) -> AssociativeAlgebra:
    """
    e1 e1 = e1, e2 e2 = e2, e2 e3 = e3 e2 = e3, all other products zero.
    """
    field = _field(field)
    raw = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    raw[0][0] = [1, 0, 0]
    raw[1][1] = [0, 1, 0]
    raw[1][2] = [0, 0, 1]
    raw[2][1] = [0, 0, 1]
    return AssociativeAlgebra.from_table(
        field, raw, labels=("e1", "e2", "e3"), name=PERFECT_COMMUTATIVE
    )


def perfect_commutative(field: FieldSpec | None = None) -> JordanAlgebra:
    return jordanize_associative(perfect_commutative_associative(field))


def _sum_table(field: FieldSpec, include_squares: bool, name: str) -> JordanAlgebra:
    # x1 annihilates everything; products among x2, x3 equal x1 + x2 + x3
    raw = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    for i in (1, 2):
        for j in (1, 2):
            if i != j or include_squares:
                raw[i][j] = [1, 1, 1]
    return JordanAlgebra.from_table(
        field, raw, labels=("x1", "x2", "x3"), name=name
    )


def sum_table_literal(field: FieldSpec | None = None) -> JordanAlgebra:
    """
    Squares of x2 and x3 included in the sum rule.
    """
    return _sum_table(_field(field), True, SUM_TABLE_LITERAL)


def sum_table_offdiag(field: FieldSpec | None = None) -> JordanAlgebra:
    """
    Only x2 o x3 follows the sum rule; squares are zero.
    """
    return _sum_table(_field(field), False, SUM_TABLE_OFFDIAG)


def idempotent_line(field: FieldSpec | None = None) -> JordanAlgebra:
    field = _field(field)
    return JordanAlgebra.from_table(field, [[[1]]], labels=("u",), name="idempotent_line")


def zero_product(n: int, field: FieldSpec | None = None) -> JordanAlgebra:
    field = _field(field)
    _check_size(n, minimum=0)
    raw = [[[0] * n for _ in range(n)] for _ in range(n)]
    return JordanAlgebra.from_table(field, raw, name="zero_product")


def _parse_form(form: str | Sequence[Sequence[Any]] | None) -> list[list[Any]]:
    if form is None:
        return []
    if isinstance(form, str):
        if not form.strip():
            return []
        # rows separated by ";", entries by "," or spaces
        return [row.replace(",", " ").split() for row in form.split(";")]
    return [list(row) for row in form]


def _parse_alpha(alpha: str | Sequence[Any] | None) -> list[Any]:
    if alpha is None:
        raise InputError(f"{DIAGONAL_SPIN} needs --alpha")
    if isinstance(alpha, str):
        return [a.strip() for a in alpha.split(",") if a.strip()]
    return list(alpha)


def _needs_n(n: int | None, name: str) -> int:
    if n is None:
        raise InputError(f"{name} needs --n")
    return n


CatalogBuilder = Callable[..., JordanAlgebra]

CATALOG: dict[str, CatalogBuilder] = {
    "matrix_jordan": lambda field, n=None, **_: matrix_jordan(_needs_n(n, "matrix_jordan"), field),
    "sym_matrix_jordan": lambda field, n=None, **_: sym_matrix_jordan(_needs_n(n, "sym_matrix_jordan"), field),
    "symplectic_jordan": lambda field, n=None, **_: symplectic_jordan(_needs_n(n, "symplectic_jordan"), field),
    "spin_factor": lambda field, form=None, **_: spin_factor(_parse_form(form), field),
    DIAGONAL_SPIN: lambda field, alpha=None, **_: diagonal_spin(_parse_alpha(alpha), field),
    PERFECT_COMMUTATIVE: lambda field, **_: perfect_commutative(field),
    SUM_TABLE_LITERAL: lambda field, **_: sum_table_literal(field),
    SUM_TABLE_OFFDIAG: lambda field, **_: sum_table_offdiag(field),
    "idempotent_line": lambda field, **_: idempotent_line(field),
    "zero_product": lambda field, n=None, **_: zero_product(_needs_n(n, "zero_product"), field),
}

# descriptive names for the published examples
CATALOG_ALIASES: dict[str, str] = {
    "diagonal_spin": DIAGONAL_SPIN,
    "perfect_commutative": PERFECT_COMMUTATIVE,
    "sum_table_literal": SUM_TABLE_LITERAL,
    "sum_table_offdiag": SUM_TABLE_OFFDIAG,
}


def catalog(
    name: str,
    field: FieldSpec | None = None,
    n: int | None = None,
    form: str | Sequence[Sequence[Any]] | None = None,
    alpha: str | Sequence[Any] | None = None,
) -> JordanAlgebra:
    try:
        builder = CATALOG[CATALOG_ALIASES.get(name, name)]
    except KeyError:
        options = ", ".join(sorted([*CATALOG, *CATALOG_ALIASES]))
        raise InputError(f"unknown catalog entry {name!r}; choose from {options}") from None
    return builder(_field(field), n=n, form=form, alpha=alpha)
