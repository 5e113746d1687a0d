import pytest
from jordan_bider.apps.algebras.catalog import diagonal_spin, perfect_commutative
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.algebras.operations import multiply
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.linalg.maps import LinearMap
from jordan_bider.apps.reports.claims import negated_unit_map
from jordan_bider.apps.triples.analysis import (
    ann_f,
    delta_f,
    delta_f_candidates,
    is_homomorphism,
    is_special_triple_hom,
    is_triple_hom,
    restrict_second_derived,
    sign_classify,
    squared_identity_holds,
    triple_hom_report,
)
from jordan_bider.apps.triples.models import Sign
from jordan_bider.internal.errors import HypothesisFailure, InputError, VerificationFailure


def swap_map(field: FieldSpec) -> LinearMap:
    # 1 <-> u on F1 + Fu
    return LinearMap.from_rows(field, [[0, 1], [1, 0]])


def test_negated_unit_map(spin11: JordanAlgebra, rationals: FieldSpec):
    f = negated_unit_map(spin11)
    report = triple_hom_report(spin11, spin11, f)
    assert report.is_triple
    assert report.ann_zero
    assert report.hypotheses_hold
    assert report.sign.sign == Sign.MINUS
    assert report.sign.basis_signs == (Sign.MINUS, Sign.MINUS, Sign.MINUS)
    assert not report.is_hom
    assert report.sign_matches_hom
    assert report.squared_identity
    assert not report.counterexample
    assert report.delta_f_well_defined
    assert report.delta_f == LinearMap.from_rows(
        rationals, [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    )


def test_delta_f_candidates_agree(spin11: JordanAlgebra):
    f = negated_unit_map(spin11)
    primary, alternative = delta_f_candidates(spin11, spin11, f)
    assert primary == alternative
    assert delta_f(spin11, spin11, f) == primary


def test_identity_is_plus(spin11: JordanAlgebra, rationals: FieldSpec):
    f = LinearMap.identity(rationals, 3)
    report = triple_hom_report(spin11, spin11, f)
    assert report.is_triple
    assert report.sign.sign == Sign.PLUS
    assert report.is_hom
    assert report.delta_f == f


def test_zero_map(spin11: JordanAlgebra, rationals: FieldSpec):
    f = LinearMap.zero(rationals, 3, 3)
    report = triple_hom_report(spin11, spin11, f)
    assert report.is_triple
    assert report.sign.sign == Sign.ZERO
    assert report.ann_f.dim == 3
    assert report.special
    assert report.delta_f is None
    with pytest.raises(HypothesisFailure) as e:
        delta_f(spin11, spin11, f)
    assert e.value.hypothesis == "Ann_f(J2) = 0"


def test_scaled_identity_is_not_triple(spin11: JordanAlgebra, rationals: FieldSpec):
    f = LinearMap.from_rows(rationals, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    check = is_triple_hom(spin11, spin11, f)
    assert not check.holds
    assert check.witness is not None
    with pytest.raises(VerificationFailure):
        delta_f(spin11, spin11, f)
    assert triple_hom_report(spin11, spin11, f).squared_identity is None


def test_swap_has_no_global_sign(rationals: FieldSpec):
    j = diagonal_spin([1])
    f = swap_map(rationals)
    report = triple_hom_report(j, j, f)
    assert report.is_triple
    assert report.hypotheses_hold
    assert report.sign.sign == Sign.MIXED
    assert report.counterexample
    assert not report.is_hom
    assert report.sign_matches_hom
    assert report.squared_identity
    sign = report.sign
    assert sign.plus_witness is not None
    assert sign.minus_witness is not None
    assert sign.pointwise_witness is not None


def test_swap_over_gf5(spin5: JordanAlgebra, gf5: FieldSpec):
    f = swap_map(gf5)
    assert is_triple_hom(spin5, spin5, f).holds
    assert sign_classify(spin5, spin5, f).sign == Sign.MIXED
    assert squared_identity_holds(spin5, spin5, f)


def test_identity_restricts_to_identity(spin11: JordanAlgebra, rationals: FieldSpec):
    f = LinearMap.identity(rationals, 3)
    restriction = restrict_second_derived(spin11, spin11, f)
    assert restriction.source_space.is_full
    assert restriction.f == f
    assert not is_special_triple_hom(spin11, spin11, f)


def test_ann_f_of_a_projection(rationals: FieldSpec):
    j = perfect_commutative()
    # onto e1; e2 and e3 annihilate e1
    f = LinearMap.from_rows(rationals, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert is_homomorphism(j, j, f)
    assert ann_f(j, j, f).dim == 2


def test_shapes_and_fields_are_checked(spin11: JordanAlgebra, gf5: FieldSpec, rationals: FieldSpec):
    with pytest.raises(InputError):
        is_triple_hom(spin11, spin11, LinearMap.identity(rationals, 2))
    with pytest.raises(InputError):
        is_triple_hom(spin11, spin11, LinearMap.identity(gf5, 3))


def test_delta_f_on_products(spin11: JordanAlgebra):
    f = negated_unit_map(spin11)
    delta = delta_f(spin11, spin11, f)
    for i in range(3):
        for k in range(3):
            assert delta.apply(spin11.table[i][k]) == multiply(
                spin11, f.images[i], f.images[k]
            ), f"delta_f(e{i} o e{k}) should equal f(e{i}) o f(e{k})"
