"""
Triple homomorphisms J1 -> J2 from a non-perfect source.

Every triple hom sends J1'' into J2'' and restricts to a triple hom
J1'' -> J2''. Two triple homs with the same restriction differ by a special
triple hom, and a perfect source has none but zero. So the search moves to
J1'' -> J2'' until the source is perfect or zero.

Over a prime field each stage is enumerated and the restriction step is
checked on every map found.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations

from ...internal.console import status
from ...internal.errors import InputError
from ...internal.settings import DEFAULT_REDUCTION_DEPTH
from ..algebras.models import JordanAlgebra
from ..algebras.operations import is_perfect, second_derived, subalgebra
from ..linalg.fields import FieldKind
from ..linalg.maps import LinearMap
from .analysis import is_special_triple_hom, is_triple_hom, restrict_second_derived
from .enumerate import enumerate_triple_homs
from .models import TripleReductionReport, TripleReductionStage, TripleStageAction


def _restriction_counts(
    j1: JordanAlgebra,
    j2: JordanAlgebra,
    homs: list[LinearMap],
    next_source: JordanAlgebra,
    next_target: JordanAlgebra,
    next_homs: list[LinearMap],
) -> dict[str, int | bool]:
    classes: dict[LinearMap, list[LinearMap]] = defaultdict(list)
    for f in homs:
        classes[restrict_second_derived(j1, j2, f).f].append(f)
    restrictions_triple = all(
        is_triple_hom(next_source, next_target, r).holds for r in classes
    )
    differ_by_special = all(
        is_triple_hom(j1, j2, d).holds and is_special_triple_hom(j1, j2, d)
        for members in classes.values()
        for d in (f1.subtract(f2) for f1, f2 in combinations(members, 2))
    )
    return {
        "restriction_classes": len(classes),
        "restrictions_triple": restrictions_triple,
        "classes_differ_by_special": differ_by_special,
        "extendable": sum(g in classes for g in next_homs),
    }


def triple_hom_reduction(
    j1: JordanAlgebra,
    j2: JordanAlgebra,
    max_depth: int = DEFAULT_REDUCTION_DEPTH,
    budget: int | None = None,
    workers: int = 1,
    quiet: bool = True,
) -> TripleReductionReport:
    if max_depth < 1:
        raise InputError(f"max_depth must be at least 1, got {max_depth}")
    if j1.field != j2.field:
        raise InputError("source and target must share one field")
    enumerated = j1.field.kind == FieldKind.PRIME

    def find(source: JordanAlgebra, target: JordanAlgebra) -> list[LinearMap] | None:
        if not enumerated:
            return None
        found = enumerate_triple_homs(source, target, budget=budget, workers=workers, quiet=quiet)
        return [h.f for h in found]

    stages: list[TripleReductionStage] = []
    complete = False
    source, target = j1, j2
    homs = find(source, target)

    for index in range(max_depth):
        source_second = second_derived(source)
        target_second = second_derived(target)
        perfect = is_perfect(source)
        stage = TripleReductionStage(
            index=index,
            source=source,
            target=target,
            source_perfect=perfect,
            source_second_dim=source_second.dim,
            target_second_dim=target_second.dim,
            action=TripleStageAction.DEPTH_LIMIT,
        )
        if homs is not None:
            stage = stage.model_copy(
                update={
                    "triple_homs": len(homs),
                    "special_homs": sum(is_special_triple_hom(source, target, f) for f in homs),
                }
            )
        status(
            f"stage {index}: {source.dim} -> {target.dim}, "
            f"J1'' {source_second.dim}, J2'' {target_second.dim}",
            quiet,
        )

        if source.dim == 0 or source_second.is_zero:
            stages.append(stage.model_copy(update={"action": TripleStageAction.TERMINATE_ZERO}))
            complete = True
            break
        if perfect:
            stages.append(stage.model_copy(update={"action": TripleStageAction.TERMINATE_PERFECT}))
            complete = True
            break
        if index == max_depth - 1:
            stages.append(stage)
            break

        next_source = subalgebra(source, source_second).algebra
        next_target = subalgebra(target, target_second).algebra
        next_homs = find(next_source, next_target)
        update: dict = {"action": TripleStageAction.RESTRICT_TO_SECOND_DERIVED}
        if homs is not None and next_homs is not None:
            update.update(
                _restriction_counts(source, target, homs, next_source, next_target, next_homs)
            )
        stages.append(stage.model_copy(update=update))
        source, target, homs = next_source, next_target, next_homs

    return TripleReductionReport(
        source_name=j1.name,
        target_name=j2.name,
        field_label=j1.field.label,
        enumerated=enumerated,
        stages=tuple(stages),
        complete=complete,
    )
