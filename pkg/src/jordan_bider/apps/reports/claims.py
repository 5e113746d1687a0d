"""
Published values for the named catalog algebras, set beside what was
computed. A claim is only attached when the input carries the catalog
name, and its verdict is always computed.
"""
from __future__ import annotations

from typing import Any

from ...helpers.data.models import ProjectBaseModel, StrEnum
from ..algebras.catalog import (
    DIAGONAL_SPIN,
    PERFECT_COMMUTATIVE,
    SUM_TABLE_LITERAL,
    SUM_TABLE_OFFDIAG,
    perfect_commutative_associative,
)
from ..algebras.models import AlgebraReport, JordanAlgebra
from ..algebras.operations import center, find_unit, is_perfect, jordanize_associative, quotient
from ..biderivations.correspondence import derivation_product_report
from ..biderivations.models import (
    SYMMETRIC_CONDITION1,
    BiderivationFlags,
    ReductionReport,
    SolutionSpace,
)
from ..linalg.maps import LinearMap
from ..triples.models import TripleHomReport

SUM_TABLES = (SUM_TABLE_LITERAL, SUM_TABLE_OFFDIAG)


class Verdict(StrEnum):
    MATCH: str
    MISMATCH: str


def claim_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class Claim(ProjectBaseModel):
    source: str
    statement: str
    claimed: str
    computed: str
    verdict: Verdict

    @classmethod
    def compare(cls, source: str, statement: str, claimed: Any, computed: Any) -> Claim:
        claimed_text = claim_text(claimed)
        computed_text = claim_text(computed)
        return cls(
            source=source,
            statement=statement,
            claimed=claimed_text,
            computed=computed_text,
            verdict=Verdict.MATCH if claimed_text == computed_text else Verdict.MISMATCH,
        )


def analysis_claims(j: JordanAlgebra, report: AlgebraReport) -> list[Claim]:
    name = j.name
    claims = []
    if name == PERFECT_COMMUTATIVE:
        claims.append(Claim.compare(name, "perfect", True, report.perfect))
        claims.append(Claim.compare(name, "center dimension", 0, report.center.dim))
        associative = perfect_commutative_associative(j.field)
        if jordanize_associative(associative).table == j.table:
            products = derivation_product_report(associative)
            claims.append(
                Claim.compare(
                    name,
                    "every derivation satisfies D(xy)D(z) = zD(x)D(y)",
                    True,
                    products.all_satisfy_product_rule,
                )
            )
    elif name in SUM_TABLES:
        claims.append(Claim.compare(name, "Jordan algebra", True, report.check.passed))
        claims.append(Claim.compare(name, "center dimension", 1, report.center.dim))
        q = quotient(j, report.center)
        claims.append(Claim.compare(name, "quotient by the center is perfect", True, is_perfect(q.algebra)))
        claims.append(
            Claim.compare(name, "quotient by the center has zero center", 0, center(q.algebra).dim)
        )
    return claims


def bider_claims(
    j: JordanAlgebra, flags: BiderivationFlags, regular: bool, space: SolutionSpace
) -> list[Claim]:
    """
    Unital algebras with zero center carry no nonzero symmetric
    biderivation satisfying condition (1).
    """
    if not regular or flags != SYMMETRIC_CONDITION1:
        return []
    if find_unit(j) is None or not center(j).is_zero:
        return []
    return [
        Claim.compare(
            j.name or "input",
            "unital with zero center: symmetric condition-(1) space dimension",
            0,
            space.dim,
        )
    ]


def reduction_claims(j: JordanAlgebra, report: ReductionReport) -> list[Claim]:
    if j.name not in SUM_TABLES:
        return []
    first = report.stages[0]
    return [
        Claim.compare(j.name, "center dimension", 1, first.center_dim),
        Claim.compare(j.name, "first step", "quotient_by_center", first.action),
    ]


def negated_unit_map(j: JordanAlgebra) -> LinearMap:
    """
    f(1) = -1 and f(u_i) = u_i on a spin factor with the unit first.
    """
    field = j.field
    images = [field.unit_vector(j.dim, i) for i in range(j.dim)]
    images[0] = tuple(-a for a in images[0])
    return LinearMap(field=field, source_dim=j.dim, target_dim=j.dim, images=tuple(images))


def triple_claims(
    j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap, report: TripleHomReport
) -> list[Claim]:
    if j1.name != DIAGONAL_SPIN or j1 != j2:
        return []
    name = j1.name
    if f == negated_unit_map(j1):
        return [
            Claim.compare(name, "f(1) = -1 is a triple homomorphism", True, report.is_triple),
            Claim.compare(name, "Ann_f is zero", True, report.ann_zero),
            Claim.compare(name, "sign", "minus", report.sign.sign),
            Claim.compare(name, "homomorphism", False, report.is_hom),
        ]
    if f == LinearMap.identity(j1.field, j1.dim):
        return [
            Claim.compare(name, "sign of the identity", "plus", report.sign.sign),
            Claim.compare(name, "identity is a homomorphism", True, report.is_hom),
        ]
    return []
