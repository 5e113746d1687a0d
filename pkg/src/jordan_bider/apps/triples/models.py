from __future__ import annotations

from typing import NamedTuple

from pydantic import model_validator

from ...helpers.data.models import ExactModel, ProjectBaseModel, StrEnum, Vector
from ..algebras.models import JordanAlgebra
from ..linalg.maps import LinearMap
from ..linalg.matrices import Subspace


class TripleHom(ExactModel):
    """
    A linear map f : J1 -> J2 together with both algebras.
    """

    source: JordanAlgebra
    target: JordanAlgebra
    f: LinearMap

    @model_validator(mode="after")
    def check_shape(self):
        if (self.f.source_dim, self.f.target_dim) != (self.source.dim, self.target.dim):
            raise ValueError(
                f"map is {self.f.source_dim} -> {self.f.target_dim}, "
                f"algebras have dimensions {self.source.dim} and {self.target.dim}"
            )
        return self


class TripleCheck(NamedTuple):
    holds: bool
    witness: tuple[int, int, int] | None = None


class Sign(StrEnum):
    PLUS: str
    MINUS: str
    ZERO: str
    MIXED: str


class SignClassification(ExactModel):
    """
    Global sign of f(x^2) against f(x)^2 as a formal identity.

    ``plus_witness`` is a vector with f(x^2) != f(x)^2 and ``minus_witness``
    one with f(x^2) != -f(x)^2; ``pointwise_witness`` fails both at once
    and is only found when the searched vectors contain one.
    """

    sign: Sign
    basis_signs: tuple[Sign, ...]
    plus_witness: Vector | None = None
    minus_witness: Vector | None = None
    pointwise_witness: Vector | None = None


class Restriction(ExactModel):
    """
    f restricted to the span of J1'' in the echelon coordinates of the
    spans of J1'' and J2''.
    """

    source_space: Subspace
    target_space: Subspace
    f: LinearMap


class TripleHomReport(ExactModel):
    source_name: str | None = None
    target_name: str | None = None
    is_triple: bool
    witness: tuple[int, int, int] | None = None
    ann_f: Subspace
    source_perfect: bool
    sign: SignClassification
    is_hom: bool
    special: bool
    squared_identity: bool | None = None
    delta_f: LinearMap | None = None
    delta_f_well_defined: bool | None = None

    @property
    def ann_zero(self) -> bool:
        return self.ann_f.is_zero

    @property
    def hypotheses_hold(self) -> bool:
        return self.source_perfect and self.ann_zero

    @property
    def sign_matches_hom(self) -> bool:
        return self.is_hom == (self.sign.sign in (Sign.PLUS, Sign.ZERO))

    @property
    def counterexample(self) -> bool:
        """
        A triple hom meeting both hypotheses whose sign is not global.
        """
        return self.is_triple and self.hypotheses_hold and self.sign.sign == Sign.MIXED


class SignCounts(ProjectBaseModel):
    plus: int = 0
    minus: int = 0
    zero: int = 0
    mixed: int = 0


class SweepReport(ExactModel):
    source_name: str | None = None
    target_name: str | None = None
    field_label: str
    source_perfect: bool
    total: int
    maps: tuple[LinearMap, ...]
    meeting_hypotheses: int
    signs: SignCounts
    signs_under_hypotheses: SignCounts
    homomorphisms: int
    counterexamples: tuple[LinearMap, ...]
    sign_matches_hom: bool
    squared_identity_holds: bool
    # triple homs from a perfect source that vanish on J1'' are all zero
    special_only_zero: bool | None = None
    # every map sends J1'' into J2''
    images_in_second_derived: bool
    # maps agreeing on J1'' differ by a triple hom, which is then special
    differences_triple: bool
    restriction_classes: int


class TripleStageAction(StrEnum):
    RESTRICT_TO_SECOND_DERIVED: str
    TERMINATE_PERFECT: str
    TERMINATE_ZERO: str
    DEPTH_LIMIT: str


class TripleReductionStage(ExactModel):
    """
    One pair (J1, J2) in the chain J1 -> J2, J1'' -> J2'', ...

    The counts are filled in only over a prime field, where every stage is
    enumerated. ``extendable`` counts the next stage's triple homs that are
    restrictions of a triple hom at this stage.
    """

    index: int
    source: JordanAlgebra
    target: JordanAlgebra
    source_perfect: bool
    source_second_dim: int
    target_second_dim: int
    action: TripleStageAction
    triple_homs: int | None = None
    special_homs: int | None = None
    restriction_classes: int | None = None
    restrictions_triple: bool | None = None
    classes_differ_by_special: bool | None = None
    extendable: int | None = None


class TripleReductionReport(ExactModel):
    source_name: str | None = None
    target_name: str | None = None
    field_label: str
    enumerated: bool
    stages: tuple[TripleReductionStage, ...]
    complete: bool

    @property
    def consistent(self) -> bool | None:
        if not self.enumerated:
            return None
        return all(
            s.restrictions_triple is not False and s.classes_differ_by_special is not False
            for s in self.stages
        )
