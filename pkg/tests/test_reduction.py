import pytest
from jordan_bider.apps.algebras.catalog import (
    perfect_commutative,
    sum_table_offdiag,
    zero_product,
)
from jordan_bider.apps.algebras.operations import center, quotient
from jordan_bider.apps.biderivations.models import BilinearMap, StageAction
from jordan_bider.apps.biderivations.reduction import (
    induced_quotient_biderivation,
    reduction_pipeline,
    restricted_biderivation,
)
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.internal.errors import InputError, VerificationFailure


def actions(report) -> list[str]:
    return [str(stage.action) for stage in report.stages]


def test_sum_table_offdiag_chain():
    report = reduction_pipeline(sum_table_offdiag())
    assert actions(report) == [
        StageAction.QUOTIENT_BY_CENTER,
        StageAction.RESTRICT_TO_DERIVED,
        StageAction.TERMINATE_CENTROID,
    ]
    assert report.complete
    assert [stage.dim for stage in report.stages] == [3, 2, 1]
    assert not report.stages[0].jordan
    first = report.stages[0]
    assert first.direct_dim == 3
    assert first.kernel_dim == 3
    assert first.expected_kernel_dim == 3
    assert report.stages[-1].centroid_dim == 0
    assert report.cross_check.direct_dim == 3
    assert report.cross_check.reconstructed_dim == 3
    assert report.cross_check.agree


def test_zero_product_chain():
    report = reduction_pipeline(zero_product(2))
    assert actions(report) == [StageAction.QUOTIENT_BY_CENTER, StageAction.TERMINATE_ZERO]
    assert report.stages[0].direct_dim == 6
    assert report.stages[0].kernel_agrees
    assert report.cross_check.agree


def test_perfect_commutative_terminates_at_once():
    report = reduction_pipeline(perfect_commutative())
    assert actions(report) == [StageAction.TERMINATE_CENTROID]
    assert report.stages[0].centroid_dim == 0
    assert report.terminal_space is not None
    assert report.terminal_space.condition2
    assert report.cross_check.agree


def test_depth_limit():
    report = reduction_pipeline(sum_table_offdiag(), max_depth=1)
    assert actions(report) == [StageAction.DEPTH_LIMIT]
    assert not report.complete
    assert report.cross_check.reconstructed_dim == report.cross_check.direct_dim


def test_depth_must_be_positive():
    with pytest.raises(InputError):
        reduction_pipeline(perfect_commutative(), max_depth=0)


def test_induced_map_needs_central_values(rationals: FieldSpec):
    j = sum_table_offdiag()
    tensor = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    # d(x1, x2) = x2 leaves Z(J) = span(x1)
    tensor[0][1] = [0, 1, 0]
    tensor[1][0] = [0, 1, 0]
    d = BilinearMap.from_tensor(rationals, tensor, target_dim=3)
    with pytest.raises(VerificationFailure):
        induced_quotient_biderivation(j, d)


def test_induced_map_drops_the_center(rationals: FieldSpec):
    j = sum_table_offdiag()
    tensor = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    tensor[1][2] = [1, 1, 1]
    tensor[2][1] = [1, 1, 1]
    d = BilinearMap.from_tensor(rationals, tensor, target_dim=3)
    induced = induced_quotient_biderivation(j, d)
    assert induced.source_dim == 2
    assert induced.tensor[0][1] == rationals.vector([1, 1])
    assert induced.tensor[0][0] == rationals.vector([0, 0])


def test_restriction_needs_values_in_derived(rationals: FieldSpec):
    q = quotient(sum_table_offdiag(), center(sum_table_offdiag())).algebra
    d = BilinearMap.from_tensor(rationals, [[[1, 0], [1, 0]], [[1, 0], [1, 0]]], target_dim=2)
    with pytest.raises(VerificationFailure):
        restricted_biderivation(q, d)


def test_stage_maps_check_shape(rationals: FieldSpec):
    with pytest.raises(InputError):
        restricted_biderivation(sum_table_offdiag(), BilinearMap.zero(rationals, 2, 2))
