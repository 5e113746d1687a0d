"""
The reduction chain for symmetric biderivations satisfying
d(w, u o v) = w . d(u, v) on J -> J.

While the center is nonzero the algebra is replaced by J / Z(J), where the
induced map d -> d-bar is injective up to trivial biderivations. With zero
center a perfect algebra ends the chain (every such d is gamma(x o y));
otherwise the algebra is replaced by J', where d -> d' is injective up to
special biderivations.

The direct solver stays the reference: every stage records its own
solution space dimension, and the report compares the input's dimension
with the one rebuilt from the stage kernels and the terminal count.
"""
from __future__ import annotations

from typing import Iterable

from ...internal.console import status
from ...internal.errors import InputError, VerificationFailure
from ...internal.settings import DEFAULT_REDUCTION_DEPTH
from ..algebras.models import JordanAlgebra
from ..algebras.operations import (
    QuotientAlgebra,
    Subalgebra,
    center,
    derived,
    quotient,
    subalgebra,
    verify_jordan,
)
from ..linalg.fields import FieldSpec
from ..linalg.matrices import Subspace
from .models import (
    SYMMETRIC_CONDITION1,
    BilinearMap,
    CrossCheck,
    ReductionReport,
    ReductionStage,
    SolutionSpace,
    StageAction,
)
from .solver import biderivation_space, centroid_space
from .special import special_biderivation_space, trivial_biderivation_space


def _check_endomorphic(j: JordanAlgebra, d: BilinearMap) -> None:
    if d.source_dim != j.dim or d.target_dim != j.dim:
        raise InputError(
            f"expected a bilinear map {j.dim}x{j.dim} -> {j.dim}, got "
            f"{d.source_dim}x{d.source_dim} -> {d.target_dim}"
        )


def induced_quotient_biderivation(
    j: JordanAlgebra, d: BilinearMap, q: QuotientAlgebra | None = None
) -> BilinearMap:
    """
    d-bar(x + Z, y + Z) = d(x, y) + Z on J / Z(J). Needs d(Z(J), J) inside Z(J).
    """
    _check_endomorphic(j, d)
    if q is None:
        q = quotient(j, center(j))
    z = q.basis.subspace
    for r, b in enumerate(z.basis):
        for x in range(j.dim):
            if not z.contains(d.evaluate(b, j.basis_vector(x))):
                raise VerificationFailure(
                    "d(Z(J), J) inside Z(J)",
                    witness=(r, x),
                    detail="the map cannot be a symmetric biderivation",
                )
    free = q.basis.free_columns
    return BilinearMap(
        field=j.field,
        source_dim=len(free),
        target_dim=len(free),
        tensor=tuple(
            tuple(q.basis.coordinates(d.tensor[f][g]) for g in free) for f in free
        ),
    )


def restricted_biderivation(
    j: JordanAlgebra, d: BilinearMap, sub: Subalgebra | None = None
) -> BilinearMap:
    """
    d' = d restricted to J' x J', in the echelon coordinates of J'.
    """
    _check_endomorphic(j, d)
    if sub is None:
        sub = subalgebra(j, derived(j))
    s = sub.subspace
    tensor = []
    for r, u in enumerate(s.basis):
        row = []
        for t, v in enumerate(s.basis):
            value = d.evaluate(u, v)
            if not s.contains(value):
                raise VerificationFailure("values in J'", witness=(r, t))
            row.append(s.coordinates(value))
        tensor.append(tuple(row))
    return BilinearMap(
        field=j.field, source_dim=s.dim, target_dim=s.dim, tensor=tuple(tensor)
    )


def _rank(field: FieldSpec, ambient_dim: int, maps: Iterable[BilinearMap]) -> int:
    return Subspace.span(field, ambient_dim, (d.flat() for d in maps)).dim


def _overlap(space: SolutionSpace, other: SolutionSpace) -> int:
    return space.full_subspace().intersection(other.full_subspace()).dim


def _same_algebra(a: JordanAlgebra, b: JordanAlgebra) -> bool:
    return a.dim == b.dim and a.table == b.table


def reduction_pipeline(
    j: JordanAlgebra, max_depth: int = DEFAULT_REDUCTION_DEPTH, quiet: bool = True
) -> ReductionReport:
    if max_depth < 1:
        raise InputError(f"max_depth must be at least 1, got {max_depth}")

    stages: list[ReductionStage] = []
    terminal_space = None
    complete = False
    current = j
    space = biderivation_space(current, flags=SYMMETRIC_CONDITION1)

    for index in range(max_depth):
        z = center(current)
        derived_space = derived(current)
        perfect = derived_space.dim == current.dim
        stage = ReductionStage(
            index=index,
            algebra=current,
            jordan=verify_jordan(current).passed,
            dim=current.dim,
            center_dim=z.dim,
            perfect=perfect,
            direct_dim=space.dim,
            action=StageAction.DEPTH_LIMIT,
        )
        status(
            f"stage {index}: dim {current.dim}, center {z.dim}, "
            f"{'perfect' if perfect else 'not perfect'}, space {space.dim}",
            quiet,
        )

        if current.dim == 0:
            stages.append(stage.model_copy(update={"action": StageAction.TERMINATE_ZERO}))
            terminal_space = space
            complete = True
            break
        if z.is_zero and perfect:
            terminal_space = centroid_space(current, condition2=True)
            stages.append(
                stage.model_copy(
                    update={
                        "action": StageAction.TERMINATE_CENTROID,
                        "centroid_dim": terminal_space.dim,
                    }
                )
            )
            complete = True
            break
        if index == max_depth - 1:
            stages.append(stage)
            break

        if not z.is_zero:
            action = StageAction.QUOTIENT_BY_CENTER
            q = quotient(current, z)
            following = q.algebra
            images = [induced_quotient_biderivation(current, d, q) for d in space.bilinear_maps()]
            expected = _overlap(space, trivial_biderivation_space(current))
        else:
            action = StageAction.RESTRICT_TO_DERIVED
            sub = subalgebra(current, derived_space)
            following = sub.algebra
            images = [restricted_biderivation(current, d, sub) for d in space.bilinear_maps()]
            expected = _overlap(space, special_biderivation_space(current))

        if _same_algebra(current, following):
            stages.append(stage.model_copy(update={"action": StageAction.TERMINATE_FIXED_POINT}))
            terminal_space = space
            complete = True
            break

        next_space = biderivation_space(following, flags=SYMMETRIC_CONDITION1)
        rank = _rank(current.field, following.dim**3, images)
        stages.append(
            stage.model_copy(
                update={
                    "action": action,
                    "kernel_dim": space.dim - rank,
                    "expected_kernel_dim": expected,
                    "image_rank": rank,
                    "next_direct_dim": next_space.dim,
                }
            )
        )
        current = following
        space = next_space

    last = stages[-1]
    match last.action:
        case StageAction.TERMINATE_CENTROID:
            terminal_count = last.centroid_dim or 0
        case StageAction.TERMINATE_ZERO:
            terminal_count = 0
        case _:
            terminal_count = last.direct_dim
    reconstructed = terminal_count + sum(s.kernel_dim or 0 for s in stages)
    return ReductionReport(
        algebra_name=j.name,
        stages=tuple(stages),
        complete=complete,
        terminal_space=terminal_space,
        cross_check=CrossCheck(
            direct_dim=stages[0].direct_dim,
            reconstructed_dim=reconstructed,
            kernels_agree=all(s.kernel_agrees is not False for s in stages),
        ),
    )
