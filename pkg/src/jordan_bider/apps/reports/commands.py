"""
What each CLI command computes, as a ReportFile. The typer layer only
parses options and writes bytes.
"""
from __future__ import annotations

from pathlib import Path

from ...internal.errors import VerificationFailure
from ..algebras.models import JordanAlgebra
from ..algebras.operations import analyze_algebra, verify_jordan
from ..biderivations.correspondence import check_correspondence_hypotheses, correspondence_check
from ..biderivations.models import BiderivationFlags
from ..biderivations.reduction import reduction_pipeline
from ..biderivations.solver import biderivation_space, centroid_space, derivation_space
from ..modules.models import JModule, regular_module
from ..modules.verify import verify_module
from ..triples.analysis import delta_f, triple_hom_report
from ..triples.enumerate import sweep_triple_homs
from ..triples.reduction import triple_hom_reduction
from .claims import analysis_claims, bider_claims, reduction_claims, triple_claims
from .files import BilinearMapFile, MapFile, parse_algebra, parse_map, parse_module
from .render import ReportFile, build_report


def load_jordan(path: Path, allow_non_jordan: bool) -> JordanAlgebra:
    """
    Analysis commands refuse tables that fail the Jordan identity unless asked not to.
    """
    j = parse_algebra(path)
    if not allow_non_jordan:
        check = verify_jordan(j)
        if not check.passed:
            raise VerificationFailure(
                "Jordan identity" if check.commutative else "commutative",
                witness=check.witness,
                detail=f"{path} fails the Jordan axioms; pass --allow-non-jordan to analyse it anyway",
            )
    return j


def load_module(path: Path | None, j: JordanAlgebra) -> JModule:
    if path is None:
        return regular_module(j)
    module = parse_module(path, j)
    check = verify_module(j, module)
    if not check.passed:
        raise VerificationFailure(check.failed or "module axioms", witness=check.witness)
    return module


def verify_command(path: Path, module_path: Path | None = None) -> ReportFile:
    j = parse_algebra(path)
    check = verify_jordan(j)
    summary = {
        "dim": j.dim,
        "field": j.field.label,
        "commutative": check.commutative,
        "jordan_identity": check.jordan_identity,
        "witness": list(check.witness) if check.witness else None,
    }
    details = {"jordan": check.model_dump(mode="json")}
    if module_path is not None:
        module_check = verify_module(j, parse_module(module_path, j))
        summary["module"] = module_check.passed
        details["module"] = module_check.model_dump(mode="json")
    return build_report(
        "verify", {"algebra": path, "module": module_path}, summary, details
    )


def analyze_command(path: Path, allow_non_jordan: bool = False) -> ReportFile:
    j = load_jordan(path, allow_non_jordan)
    report = analyze_algebra(j).model_copy(
        update={
            "derivation_dim": derivation_space(j).dim,
            "centroid_dim": centroid_space(j).dim,
        }
    )
    summary = {
        "dim": report.dim,
        "field": report.field_label,
        "jordan": report.check.passed,
        "center_dim": report.center.dim,
        "derived_dim": report.derived.dim,
        "second_derived_dim": report.second_derived.dim,
        "perfect": report.perfect,
        "unital": report.unital,
        "derivation_dim": report.derivation_dim,
        "centroid_dim": report.centroid_dim,
    }
    return build_report(
        "analyze",
        {"algebra": path},
        summary,
        report,
        analysis_claims(j, report),
    )


def bider_command(
    path: Path,
    flags: BiderivationFlags,
    module_path: Path | None = None,
    centroid: bool = False,
    allow_non_jordan: bool = False,
) -> ReportFile:
    j = load_jordan(path, allow_non_jordan)
    module = load_module(module_path, j)
    space = biderivation_space(j, module, flags)
    summary = {
        "flags": flags.label,
        "module_dim": module.dim,
        "dimension": space.dim,
    }
    details = {
        "space": space.model_dump(mode="json"),
        "maps": [BilinearMapFile.from_bilinear(d).model_dump(mode="json") for d in space.bilinear_maps()],
    }
    if centroid:
        check_correspondence_hypotheses(j, module)
        correspondence = correspondence_check(j, module)
        summary.update(
            {
                "centroid_dim": correspondence.centroid_dim,
                "dims_equal": correspondence.dims_equal,
                "round_trip": correspondence.round_trip,
                "reverse_round_trip": correspondence.reverse_round_trip,
                "well_defined": correspondence.well_defined,
            }
        )
        details["correspondence"] = correspondence.model_dump(mode="json")
    return build_report(
        "bider",
        {
            "algebra": path,
            "module": module_path,
            "symmetric": flags.symmetric,
            "skew": flags.skew,
            "condition1": flags.condition1,
            "centroid": centroid,
        },
        summary,
        details,
        bider_claims(j, flags, module_path is None, space),
    )


def reduce_command(
    path: Path, max_depth: int, allow_non_jordan: bool = False, quiet: bool = True
) -> ReportFile:
    j = load_jordan(path, allow_non_jordan)
    report = reduction_pipeline(j, max_depth=max_depth, quiet=quiet)
    summary = {
        "stages": len(report.stages),
        "actions": [str(s.action) for s in report.stages],
        "complete": report.complete,
        "direct_dim": report.cross_check.direct_dim,
        "reconstructed_dim": report.cross_check.reconstructed_dim,
        "kernels_agree": report.cross_check.kernels_agree,
        "cross_check": report.cross_check.agree,
        "lifts_surjectively": [s.lifts_surjectively for s in report.stages],
    }
    return build_report(
        "reduce",
        {"algebra": path, "max_depth": max_depth},
        summary,
        report,
        reduction_claims(j, report),
    )


def triple_check_command(
    map_path: Path,
    source_path: Path,
    target_path: Path,
    with_delta: bool = False,
    allow_non_jordan: bool = False,
) -> ReportFile:
    j1 = load_jordan(source_path, allow_non_jordan)
    j2 = load_jordan(target_path, allow_non_jordan)
    f = parse_map(map_path, j1.field)
    report = triple_hom_report(j1, j2, f)
    summary = {
        "is_triple": report.is_triple,
        "witness": list(report.witness) if report.witness else None,
        "ann_zero": report.ann_zero,
        "source_perfect": report.source_perfect,
        "sign": str(report.sign.sign),
        "is_hom": report.is_hom,
        "special": report.special,
        "squared_identity": report.squared_identity,
        "hypotheses_hold": report.hypotheses_hold,
        "sign_matches_hom": report.sign_matches_hom,
        "counterexample": report.counterexample,
    }
    details = report.model_dump(mode="json")
    if with_delta:
        details["delta_f"] = MapFile.from_map(delta_f(j1, j2, f)).model_dump(mode="json")
    return build_report(
        "triple-check",
        {"map": map_path, "source": source_path, "target": target_path},
        summary,
        details,
        triple_claims(j1, j2, f, report),
    )


def triple_enumerate_command(
    source_path: Path,
    target_path: Path,
    budget: int | None = None,
    workers: int = 1,
    allow_non_jordan: bool = False,
    quiet: bool = True,
) -> ReportFile:
    j1 = load_jordan(source_path, allow_non_jordan)
    j2 = load_jordan(target_path, allow_non_jordan)
    sweep = sweep_triple_homs(j1, j2, budget=budget, workers=workers, quiet=quiet)
    summary = {
        "field": sweep.field_label,
        "total": sweep.total,
        "meeting_hypotheses": sweep.meeting_hypotheses,
        "signs": sweep.signs.model_dump(mode="json"),
        "signs_under_hypotheses": sweep.signs_under_hypotheses.model_dump(mode="json"),
        "homomorphisms": sweep.homomorphisms,
        "counterexamples": len(sweep.counterexamples),
        "sign_matches_hom": sweep.sign_matches_hom,
        "squared_identity_holds": sweep.squared_identity_holds,
        "special_only_zero": sweep.special_only_zero,
        "images_in_second_derived": sweep.images_in_second_derived,
        "differences_triple": sweep.differences_triple,
    }
    details = {
        "maps": [MapFile.from_map(f).matrix for f in sweep.maps],
        "counterexamples": [MapFile.from_map(f).matrix for f in sweep.counterexamples],
        "restriction_classes": sweep.restriction_classes,
    }
    return build_report(
        "triple-enumerate",
        {"source": source_path, "target": target_path, "budget": budget},
        summary,
        details,
    )


def triple_reduce_command(
    source_path: Path,
    target_path: Path,
    max_depth: int,
    budget: int | None = None,
    workers: int = 1,
    allow_non_jordan: bool = False,
    quiet: bool = True,
) -> ReportFile:
    j1 = load_jordan(source_path, allow_non_jordan)
    j2 = load_jordan(target_path, allow_non_jordan)
    report = triple_hom_reduction(
        j1, j2, max_depth=max_depth, budget=budget, workers=workers, quiet=quiet
    )
    summary = {
        "field": report.field_label,
        "stages": len(report.stages),
        "actions": [str(s.action) for s in report.stages],
        "dims": [[s.source.dim, s.target.dim] for s in report.stages],
        "complete": report.complete,
        "enumerated": report.enumerated,
        "triple_homs": [s.triple_homs for s in report.stages],
        "consistent": report.consistent,
    }
    return build_report(
        "triple-reduce",
        {"source": source_path, "target": target_path, "max_depth": max_depth, "budget": budget},
        summary,
        report,
    )
