"""
Biderivations, derivations and centroid elements as solution spaces of
exact linear systems.

Every defining condition is linear in the unknown map, so each space is
the nullspace of a sparse constraint matrix with one row per basis
triple (or pair) and output coordinate. The verifiers evaluate the same
conditions on a concrete map and are used to check solved bases back.
"""
from __future__ import annotations

from itertools import product
from typing import Any, Iterator, Sequence

from ...helpers.data.models import Vector
from ...internal.errors import InputError
from ..algebras.models import JordanAlgebra
from ..linalg.maps import LinearMap
from ..linalg.matrices import sparse_nullspace
from ..linalg.vectors import add, combination
from ..modules.models import JModule, regular_module
from .models import (
    BiderivationCheck,
    BiderivationFlags,
    BilinearMap,
    CentroidCheck,
    DerivationCheck,
    SolutionSpace,
    SpaceKind,
)

Row = dict[int, Any]


def resolve_module(j: JordanAlgebra, m: JModule | None) -> JModule:
    if m is None:
        return regular_module(j)
    if m.algebra.dim != j.dim:
        raise InputError(f"module is over an algebra of dimension {m.algebra.dim}, expected {j.dim}")
    return m


def _accumulate(row: Row, column: int, value: Any) -> None:
    total = row.get(column)
    total = value if total is None else total + value
    if total:
        row[column] = total
    else:
        row.pop(column, None)


class BilinearCoordinates:
    """
    Maps the tensor entry d[i][j][k] onto signed columns of the stored
    coordinates described by ``SolutionSpace.pairs``.
    """

    def __init__(self, n: int, m: int, flags: BiderivationFlags):
        self.n = n
        self.m = m
        self.flags = flags
        self.index: dict[tuple[int, int], int] = {}
        if flags.skew:
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        elif flags.symmetric:
            pairs = [(i, j) for i in range(n) for j in range(i, n)]
        else:
            pairs = [(i, j) for i in range(n) for j in range(n)]
        for position, pair in enumerate(pairs):
            self.index[pair] = position
        self.n_unknowns = len(pairs) * m

    def var(self, i: int, j: int, k: int) -> list[tuple[int, bool]]:
        """
        (column, negated) pairs whose signed sum is d[i][j][k].
        """
        if self.flags.skew:
            if i == j:
                return []
            if i < j:
                return [(self.index[(i, j)] * self.m + k, False)]
            return [(self.index[(j, i)] * self.m + k, True)]
        if self.flags.symmetric and i > j:
            i, j = j, i
        return [(self.index[(i, j)] * self.m + k, False)]

    def add(self, row: Row, i: int, j: int, k: int, coefficient: Any) -> None:
        for column, negated in self.var(i, j, k):
            _accumulate(row, column, -coefficient if negated else coefficient)


def _axiom_rows(
    j: JordanAlgebra, module: JModule, coords: BilinearCoordinates
) -> Iterator[Row]:
    n, m = j.dim, module.dim
    c = j.table
    act = module.action
    for x, y, z in product(range(n), repeat=3):
        for k in range(m):
            # (i) d(e_x o e_y, e_z) - e_x . d(e_y, e_z) - e_y . d(e_x, e_z)
            row: Row = {}
            for t, coefficient in enumerate(c[x][y]):
                if coefficient:
                    coords.add(row, t, z, k, coefficient)
            for w in range(m):
                if act[x][w][k]:
                    coords.add(row, y, z, w, -act[x][w][k])
                if act[y][w][k]:
                    coords.add(row, x, z, w, -act[y][w][k])
            if row:
                yield row
            # (ii) d(e_x, e_y o e_z) - e_y . d(e_x, e_z) - e_z . d(e_x, e_y)
            row = {}
            for t, coefficient in enumerate(c[y][z]):
                if coefficient:
                    coords.add(row, x, t, k, coefficient)
            for w in range(m):
                if act[y][w][k]:
                    coords.add(row, x, z, w, -act[y][w][k])
                if act[z][w][k]:
                    coords.add(row, x, y, w, -act[z][w][k])
            if row:
                yield row


def _condition1_rows(
    j: JordanAlgebra, module: JModule, coords: BilinearCoordinates
) -> Iterator[Row]:
    # d(e_w, e_u o e_v) = e_w . d(e_u, e_v)
    n, m = j.dim, module.dim
    for w, u, v in product(range(n), repeat=3):
        for k in range(m):
            row: Row = {}
            for t, coefficient in enumerate(j.table[u][v]):
                if coefficient:
                    coords.add(row, w, t, k, coefficient)
            for s in range(m):
                a = module.action[w][s][k]
                if a:
                    coords.add(row, u, v, s, -a)
            if row:
                yield row


def _symmetry_rows(j: JordanAlgebra, coords: BilinearCoordinates) -> Iterator[Row]:
    # only needed when symmetric is requested on top of skew coordinates
    one = j.field.one
    for a in range(coords.n):
        for b in range(a + 1, coords.n):
            for k in range(coords.m):
                row: Row = {}
                coords.add(row, a, b, k, one)
                coords.add(row, b, a, k, -one)
                if row:
                    yield row


def bilinear_rows(
    j: JordanAlgebra, module: JModule, coords: BilinearCoordinates
) -> list[Row]:
    """
    Constraint rows for the biderivation axioms plus the requested flags.
    """
    rows = list(_axiom_rows(j, module, coords))
    if coords.flags.condition1:
        rows.extend(_condition1_rows(j, module, coords))
    if coords.flags.symmetric and coords.flags.skew:
        rows.extend(_symmetry_rows(j, coords))
    return rows


def biderivation_space(
    j: JordanAlgebra,
    m: JModule | None = None,
    flags: BiderivationFlags | None = None,
) -> SolutionSpace:
    module = resolve_module(j, m)
    flags = flags or BiderivationFlags()
    coords = BilinearCoordinates(j.dim, module.dim, flags)
    space = sparse_nullspace(j.field, bilinear_rows(j, module, coords), coords.n_unknowns)
    return SolutionSpace(
        kind=SpaceKind.BIDERIVATION,
        field=j.field,
        source_dim=j.dim,
        target_dim=module.dim,
        flags=flags,
        space=space,
    )


def derivation_space(j: JordanAlgebra, m: JModule | None = None) -> SolutionSpace:
    """
    D : J -> M with D(e_x o e_y) = e_x . D(e_y) + e_y . D(e_x).
    Unknown D[t][k] (coordinate k of D(e_t)) sits in column t * dim M + k.
    """
    module = resolve_module(j, m)
    n, dm = j.dim, module.dim
    act = module.action
    rows = []
    for x, y in product(range(n), repeat=2):
        for k in range(dm):
            row: Row = {}
            for t, coefficient in enumerate(j.table[x][y]):
                if coefficient:
                    _accumulate(row, t * dm + k, coefficient)
            for w in range(dm):
                if act[x][w][k]:
                    _accumulate(row, y * dm + w, -act[x][w][k])
                if act[y][w][k]:
                    _accumulate(row, x * dm + w, -act[y][w][k])
            if row:
                rows.append(row)
    return SolutionSpace(
        kind=SpaceKind.DERIVATION,
        field=j.field,
        source_dim=n,
        target_dim=dm,
        space=sparse_nullspace(j.field, rows, n * dm),
    )


def _act_on_image(
    row: Row, module: JModule, a: int, argument: Sequence[Any], k: int, sign: Any
) -> None:
    """
    Adds sign * (e_a . gamma(argument))[k] in terms of the unknowns gamma[t][w].
    """
    dm = module.dim
    for w in range(dm):
        action = module.action[a][w][k]
        if not action:
            continue
        for t, coefficient in enumerate(argument):
            if coefficient:
                _accumulate(row, t * dm + w, sign * action * coefficient)


def centroid_space(
    j: JordanAlgebra, m: JModule | None = None, condition2: bool = False
) -> SolutionSpace:
    """
    gamma : J -> M with gamma(e_x o e_y) = e_x . gamma(e_y); with condition2
    also e_z . gamma(e_x o e_y) = e_x . gamma(e_y o e_z) + e_y . gamma(e_x o e_z).
    """
    module = resolve_module(j, m)
    n, dm = j.dim, module.dim
    one = j.field.one
    rows = []
    for x, y in product(range(n), repeat=2):
        for k in range(dm):
            row: Row = {}
            for t, coefficient in enumerate(j.table[x][y]):
                if coefficient:
                    _accumulate(row, t * dm + k, coefficient)
            _act_on_image(row, module, x, j.field.unit_vector(n, y), k, -one)
            if row:
                rows.append(row)
    if condition2:
        c = j.table
        for x, y, z in product(range(n), repeat=3):
            for k in range(dm):
                row = {}
                _act_on_image(row, module, z, c[x][y], k, one)
                _act_on_image(row, module, x, c[y][z], k, -one)
                _act_on_image(row, module, y, c[x][z], k, -one)
                if row:
                    rows.append(row)
    return SolutionSpace(
        kind=SpaceKind.CENTROID,
        field=j.field,
        source_dim=n,
        target_dim=dm,
        condition2=condition2,
        space=sparse_nullspace(j.field, rows, n * dm),
    )


def _check_bilinear_shape(j: JordanAlgebra, module: JModule, d: BilinearMap) -> None:
    if d.source_dim != j.dim or d.target_dim != module.dim:
        raise InputError(
            f"bilinear map is {d.source_dim}x{d.source_dim} -> {d.target_dim}, "
            f"expected {j.dim}x{j.dim} -> {module.dim}"
        )


def _check_linear_shape(j: JordanAlgebra, module: JModule, f: LinearMap) -> None:
    if f.source_dim != j.dim or f.target_dim != module.dim:
        raise InputError(
            f"linear map is {f.source_dim} -> {f.target_dim}, expected {j.dim} -> {module.dim}"
        )


def _left_linear(d: BilinearMap, coefficients: Sequence[Any], z: int) -> Vector:
    # d(sum_t c_t e_t, e_z)
    return combination(
        coefficients, [d.tensor[t][z] for t in range(d.source_dim)], d.field.zero, d.target_dim
    )


def _right_linear(d: BilinearMap, x: int, coefficients: Sequence[Any]) -> Vector:
    return combination(coefficients, d.tensor[x], d.field.zero, d.target_dim)


def verify_biderivation(
    j: JordanAlgebra,
    m: JModule | None,
    d: BilinearMap,
    flags: BiderivationFlags | None = None,
) -> BiderivationCheck:
    module = resolve_module(j, m)
    _check_bilinear_shape(j, module, d)
    flags = flags or BiderivationFlags()
    n = j.dim
    c = j.table

    failed = None
    witness = None
    axiom_i = True
    axiom_ii = True
    for x, y, z in product(range(n), repeat=3):
        if axiom_i:
            lhs = _left_linear(d, c[x][y], z)
            rhs = add(module.act_on_basis(x, d.tensor[y][z]), module.act_on_basis(y, d.tensor[x][z]))
            if lhs != rhs:
                axiom_i = False
                failed, witness = failed or "axiom_i", witness or (x, y, z)
        if axiom_ii:
            lhs = _right_linear(d, x, c[y][z])
            rhs = add(module.act_on_basis(y, d.tensor[x][z]), module.act_on_basis(z, d.tensor[x][y]))
            if lhs != rhs:
                axiom_ii = False
                failed, witness = failed or "axiom_ii", witness or (x, y, z)

    symmetric = None
    if flags.symmetric:
        symmetric = d.is_symmetric
        if not symmetric:
            failed = failed or "symmetric"
    skew = None
    if flags.skew:
        skew = all(
            d.tensor[i][k] == tuple(-a for a in d.tensor[k][i])
            for i in range(n)
            for k in range(i, n)
        )
        if not skew:
            failed = failed or "skew"
    condition1 = None
    if flags.condition1:
        condition1 = True
        for w, u, v in product(range(n), repeat=3):
            if _right_linear(d, w, c[u][v]) != module.act_on_basis(w, d.tensor[u][v]):
                condition1 = False
                failed, witness = failed or "condition1", witness or (w, u, v)
                break
    return BiderivationCheck(
        axiom_i=axiom_i,
        axiom_ii=axiom_ii,
        symmetric=symmetric,
        skew=skew,
        condition1=condition1,
        failed=failed,
        witness=witness,
    )


def verify_derivation(j: JordanAlgebra, m: JModule | None, d: LinearMap) -> DerivationCheck:
    module = resolve_module(j, m)
    _check_linear_shape(j, module, d)
    for x, y in product(range(j.dim), repeat=2):
        lhs = d.apply(j.table[x][y])
        rhs = add(module.act_on_basis(x, d.images[y]), module.act_on_basis(y, d.images[x]))
        if lhs != rhs:
            return DerivationCheck(derivation=False, witness=(x, y))
    return DerivationCheck(derivation=True)


def verify_centroid(
    j: JordanAlgebra, m: JModule | None, gamma: LinearMap, condition2: bool = False
) -> CentroidCheck:
    module = resolve_module(j, m)
    _check_linear_shape(j, module, gamma)
    n = j.dim
    c = j.table
    for x, y in product(range(n), repeat=2):
        if gamma.apply(c[x][y]) != module.act_on_basis(x, gamma.images[y]):
            return CentroidCheck(
                centroid=False,
                condition2=None,
                failed="centroid",
                witness=(x, y),
            )
    if not condition2:
        return CentroidCheck(centroid=True)
    for x, y, z in product(range(n), repeat=3):
        lhs = module.act_on_basis(z, gamma.apply(c[x][y]))
        rhs = add(
            module.act_on_basis(x, gamma.apply(c[y][z])),
            module.act_on_basis(y, gamma.apply(c[x][z])),
        )
        if lhs != rhs:
            return CentroidCheck(
                centroid=True, condition2=False, failed="condition2", witness=(x, y, z)
            )
    return CentroidCheck(centroid=True, condition2=True)
