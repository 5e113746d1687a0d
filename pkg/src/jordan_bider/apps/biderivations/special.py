"""
Trivial biderivations (values in Z(J), vanishing on J x J') and special
biderivations (vanishing on J' x J', with d(J, J') inside Z_J(J')).
Both are symmetric maps J x J -> J.
"""
from __future__ import annotations

from itertools import product
from typing import Any, Iterator, Sequence

from ..algebras.models import JordanAlgebra
from ..algebras.operations import annihilator, center, derived
from ..linalg.matrices import Matrix, Subspace, sparse_nullspace
from ..modules.models import regular_module
from .models import (
    BiderivationFlags,
    BilinearMap,
    SolutionSpace,
    SpaceKind,
    SpecialCheck,
    TrivialCheck,
)
from .solver import BilinearCoordinates, Row, bilinear_rows, verify_biderivation

SYMMETRIC = BiderivationFlags(symmetric=True)


def _range_rows(
    coords: BilinearCoordinates,
    equations: Matrix,
    left: Sequence[Any],
    right: Sequence[Any],
) -> Iterator[Row]:
    """
    Rows forcing d(left, right) into the nullspace of ``equations``.
    """
    for equation in equations.rows:
        row: Row = {}
        for i, a in enumerate(left):
            if not a:
                continue
            for j, b in enumerate(right):
                if not b:
                    continue
                for k, e in enumerate(equation):
                    if e:
                        coords.add(row, i, j, k, a * b * e)
        if row:
            yield row


def _vanishing_rows(
    j: JordanAlgebra,
    coords: BilinearCoordinates,
    left: Subspace,
    right: Subspace,
) -> Iterator[Row]:
    # d(u, v) = 0 for u, v running over the two bases
    identity = Matrix.identity(j.field, j.dim)
    for u, v in product(left.basis, right.basis):
        yield from _range_rows(coords, identity, u, v)


def _space(j: JordanAlgebra, kind: SpaceKind, coords: BilinearCoordinates, rows: list[Row]) -> SolutionSpace:
    return SolutionSpace(
        kind=kind,
        field=j.field,
        source_dim=j.dim,
        target_dim=j.dim,
        flags=SYMMETRIC,
        space=sparse_nullspace(j.field, rows, coords.n_unknowns),
    )


def trivial_biderivation_space(j: JordanAlgebra) -> SolutionSpace:
    coords = BilinearCoordinates(j.dim, j.dim, SYMMETRIC)
    in_center = center(j).equations()
    rows: list[Row] = []
    for x, y in product(range(j.dim), repeat=2):
        rows.extend(
            _range_rows(coords, in_center, j.basis_vector(x), j.basis_vector(y))
        )
    rows.extend(_vanishing_rows(j, coords, j.full_space(), derived(j)))
    return _space(j, SpaceKind.TRIVIAL, coords, rows)


def special_biderivation_space(j: JordanAlgebra) -> SolutionSpace:
    coords = BilinearCoordinates(j.dim, j.dim, SYMMETRIC)
    rows = bilinear_rows(j, regular_module(j), coords)
    derived_space = derived(j)
    rows.extend(_vanishing_rows(j, coords, derived_space, derived_space))
    in_annihilator = annihilator(j, derived_space).equations()
    for x in range(j.dim):
        for b in derived_space.basis:
            rows.extend(_range_rows(coords, in_annihilator, j.basis_vector(x), b))
    return _space(j, SpaceKind.SPECIAL, coords, rows)


def verify_trivial(j: JordanAlgebra, d: BilinearMap) -> TrivialCheck:
    z = center(j)
    derived_space = derived(j)
    n = j.dim
    return TrivialCheck(
        symmetric=d.is_symmetric,
        central_values=all(z.contains(d.tensor[x][y]) for x in range(n) for y in range(n)),
        vanishes_on_derived=all(
            not any(d.evaluate(j.basis_vector(x), b))
            for x in range(n)
            for b in derived_space.basis
        ),
        biderivation=verify_biderivation(j, None, d, SYMMETRIC).passed,
    )


def verify_special(j: JordanAlgebra, d: BilinearMap) -> SpecialCheck:
    derived_space = derived(j)
    z_derived = annihilator(j, derived_space)
    return SpecialCheck(
        symmetric_biderivation=verify_biderivation(j, None, d, SYMMETRIC).passed,
        vanishes_on_derived_pairs=all(
            not any(d.evaluate(u, v)) for u, v in product(derived_space.basis, repeat=2)
        ),
        derived_values_annihilate=all(
            z_derived.contains(d.evaluate(j.basis_vector(x), b))
            for x in range(j.dim)
            for b in derived_space.basis
        ),
    )
