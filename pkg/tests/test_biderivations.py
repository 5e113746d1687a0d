from fractions import Fraction

import pytest
from jordan_bider.apps.algebras.catalog import (
    diagonal_spin,
    idempotent_line,
    matrix_jordan,
    perfect_commutative,
    perfect_commutative_associative,
    spin_factor,
    sum_table_literal,
    sym_matrix_jordan,
    zero_product,
)
from jordan_bider.apps.algebras.models import AssociativeAlgebra, JordanAlgebra
from jordan_bider.apps.biderivations.correspondence import (
    check_correspondence_hypotheses,
    correspondence_check,
    delta_to_gamma,
    derivation_product_report,
    gamma_to_delta,
)
from jordan_bider.apps.biderivations.models import (
    SYMMETRIC_CONDITION1,
    BiderivationFlags,
    BilinearMap,
)
from jordan_bider.apps.biderivations.solver import (
    biderivation_space,
    centroid_space,
    derivation_space,
    verify_biderivation,
    verify_centroid,
    verify_derivation,
)
from jordan_bider.apps.biderivations.special import (
    special_biderivation_space,
    trivial_biderivation_space,
    verify_special,
    verify_trivial,
)
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.linalg.maps import LinearMap
from jordan_bider.apps.modules.models import JModule
from jordan_bider.internal.errors import HypothesisFailure, InputError, VerificationFailure

UNITAL = [
    matrix_jordan(2),
    sym_matrix_jordan(2),
    diagonal_spin([1, 1]),
    spin_factor([[1, 0], [0, -1]]),
    perfect_commutative(),
    idempotent_line(),
]
UNITAL_IDS = [
    "matrix",
    "symmetric",
    "diagonal_spin",
    "spin_factor",
    "perfect_commutative",
    "idempotent_line",
]

FLAG_SETS = [
    BiderivationFlags(),
    BiderivationFlags(symmetric=True),
    BiderivationFlags(skew=True),
    SYMMETRIC_CONDITION1,
]


def truncated_polynomials(field: FieldSpec | None = None) -> AssociativeAlgebra:
    """
    F[t] / (t^3) on 1, t, t^2.
    """
    field = field or FieldSpec.rational()
    table = [
        [[1 if k == i + x else 0 for k in range(3)] for x in range(3)] for i in range(3)
    ]
    return AssociativeAlgebra.from_table(
        field, table, labels=("1", "t", "t2"), name="truncated_polynomials"
    )


@pytest.mark.parametrize("algebra", UNITAL, ids=UNITAL_IDS)
def test_unital_algebras_have_no_condition1_biderivations(algebra: JordanAlgebra):
    space = biderivation_space(algebra, flags=SYMMETRIC_CONDITION1)
    assert space.dim == 0, f"{algebra.name} should have no symmetric condition-1 biderivations"


@pytest.mark.parametrize("algebra", UNITAL, ids=UNITAL_IDS)
def test_perfect_centerless_algebras_have_no_special_biderivations(algebra: JordanAlgebra):
    assert special_biderivation_space(algebra).dim == 0


@pytest.mark.parametrize("flags", FLAG_SETS, ids=lambda f: f.label)
@pytest.mark.parametrize(
    "algebra",
    [diagonal_spin([1, 1]), sum_table_literal(), perfect_commutative()],
    ids=["diagonal_spin", "sum_table_literal", "perfect_commutative"],
)
def test_solved_bases_verify(algebra: JordanAlgebra, flags: BiderivationFlags):
    space = biderivation_space(algebra, flags=flags)
    for d in space.bilinear_maps():
        check = verify_biderivation(algebra, None, d, flags)
        assert check.passed, f"basis map failed {check.failed} at {check.witness}"


def test_zero_product_dimensions():
    j = zero_product(2)
    assert biderivation_space(j).dim == 8
    assert biderivation_space(j, flags=BiderivationFlags(symmetric=True)).dim == 6
    assert biderivation_space(j, flags=BiderivationFlags(skew=True)).dim == 2
    assert trivial_biderivation_space(j).dim == 6
    assert special_biderivation_space(j).dim == 6


def test_trivial_and_special_bases_verify():
    for j in (zero_product(2), sum_table_literal()):
        for d in trivial_biderivation_space(j).bilinear_maps():
            assert verify_trivial(j, d).passed
        for d in special_biderivation_space(j).bilinear_maps():
            assert verify_special(j, d).passed


def test_symmetric_and_skew_together_force_zero():
    flags = BiderivationFlags(symmetric=True, skew=True)
    assert biderivation_space(zero_product(2), flags=flags).dim == 0


def test_verify_biderivation_rejects(rationals: FieldSpec):
    j = idempotent_line()
    d = BilinearMap.from_tensor(rationals, [[[1]]], target_dim=1)
    check = verify_biderivation(j, None, d)
    assert not check.passed
    assert check.failed == "axiom_i"
    assert check.witness == (0, 0, 0)


def test_verify_biderivation_checks_shape(rationals: FieldSpec):
    with pytest.raises(InputError):
        verify_biderivation(idempotent_line(), None, BilinearMap.zero(rationals, 2, 2))


def test_derivations_of_idempotent_line(rationals: FieldSpec):
    j = idempotent_line()
    assert derivation_space(j).dim == 0
    assert not verify_derivation(j, None, LinearMap.identity(rationals, 1)).passed
    assert verify_derivation(j, None, LinearMap.zero(rationals, 1, 1)).passed


def test_centroid_of_diagonal_spin(spin11: JordanAlgebra, rationals: FieldSpec):
    space = centroid_space(spin11)
    assert space.dim == 1, "a simple spin factor has scalar centroid"
    assert verify_centroid(spin11, None, LinearMap.identity(rationals, 3)).passed
    # the unit forces gamma = 0 under condition (2)
    assert centroid_space(spin11, condition2=True).dim == 0


@pytest.mark.parametrize("algebra", UNITAL, ids=UNITAL_IDS)
def test_correspondence_on_perfect_algebras(algebra: JordanAlgebra):
    report = correspondence_check(algebra)
    assert report.hypotheses_hold
    # condition (2) makes gamma vanish on J o J' = J
    assert report.biderivation_dim == report.centroid_dim == 0
    assert report.dims_equal
    assert report.round_trip
    assert report.reverse_round_trip
    assert report.well_defined
    assert report.failed_hypothesis is None


@pytest.mark.parametrize(
    "action",
    [[[[Fraction(1, 2)]]], [[[1, 0], [0, Fraction(1, 2)]]]],
    ids=["peirce_half", "one_plus_half"],
)
def test_correspondence_on_faithful_modules(action):
    j = idempotent_line()
    module = JModule.from_action(j, len(action[0]), action)
    report = correspondence_check(j, module)
    assert report.hypotheses_hold
    assert report.biderivation_dim == report.centroid_dim == 0
    assert report.round_trip
    assert report.reverse_round_trip


def square_zero(field: FieldSpec) -> JordanAlgebra:
    # a o a = b, every other product 0
    return JordanAlgebra.from_table(
        field, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], labels=("a", "b"), name="square_zero"
    )


def test_gamma_to_delta_without_perfect(rationals: FieldSpec):
    j = square_zero(rationals)
    gammas = centroid_space(j, condition2=True).linear_maps()
    # gamma(a) = p a + q b, gamma(b) = p b
    assert len(gammas) == 2
    deltas = [gamma_to_delta(j, None, gamma) for gamma in gammas]
    assert all(verify_biderivation(j, None, d, SYMMETRIC_CONDITION1).passed for d in deltas)
    assert any(any(d.tensor[0][0]) for d in deltas)
    with pytest.raises(HypothesisFailure) as e:
        delta_to_gamma(j, None, deltas[0])
    assert e.value.hypothesis == "perfect"
    assert correspondence_check(j).failed_hypothesis == "perfect"


def test_gamma_to_delta_needs_condition2(rationals: FieldSpec):
    j = idempotent_line()
    with pytest.raises(VerificationFailure) as e:
        gamma_to_delta(j, None, LinearMap.identity(rationals, 1))
    assert e.value.check == "condition2"


def test_delta_to_gamma_needs_perfect(rationals: FieldSpec):
    j = zero_product(2)
    with pytest.raises(HypothesisFailure) as e:
        delta_to_gamma(j, None, BilinearMap.zero(rationals, 2, 2))
    assert e.value.hypothesis == "perfect"


def test_hypotheses_need_faithful_module():
    j = idempotent_line()
    silent = JModule.from_action(j, 1, [[[0]]])
    with pytest.raises(HypothesisFailure) as e:
        check_correspondence_hypotheses(j, silent)
    assert e.value.hypothesis == "Z_M(J) = 0"
    assert correspondence_check(j, silent).failed_hypothesis == "Z_M(J) = 0"


def test_derivation_products_of_truncated_polynomials():
    report = derivation_product_report(truncated_polynomials())
    assert report.derivation_dim == 2
    assert not report.all_satisfy_product_rule
    first, second = report.products
    # t -> t, t^2 -> 2t^2 gives d(t, t) = t^2
    assert not first.product_rule
    assert not first.condition1
    # t -> t^2 gives the zero map
    assert second.biderivation.is_zero
    assert second.product_rule
    assert second.condition1
    for product in report.products:
        assert product.symmetric_biderivation
        assert product.product_rule == product.condition1


def test_derivation_products_of_perfect_commutative():
    report = derivation_product_report(perfect_commutative_associative())
    assert report.derivation_dim == 1
    assert report.all_satisfy_product_rule
    assert report.products[0].biderivation.is_zero


def test_derivation_products_need_associativity(rationals: FieldSpec):
    a = AssociativeAlgebra.from_table(rationals, [[[0, 1], [1, 0]], [[1, 0], [0, 0]]])
    with pytest.raises(VerificationFailure):
        derivation_product_report(a)
