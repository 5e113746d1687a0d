import pytest
from jordan_bider.apps.algebras.catalog import diagonal_spin, sum_table_literal, zero_product
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.triples.models import TripleStageAction
from jordan_bider.apps.triples.reduction import triple_hom_reduction
from jordan_bider.internal.errors import InputError


def idempotent_plus_null(field: FieldSpec) -> JordanAlgebra:
    # e o e = e, n annihilates everything
    return JordanAlgebra.from_table(
        field, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]], labels=("e", "n"), name="e_plus_n"
    )


class BaseReductionTest:
    actions: list[TripleStageAction]
    complete: bool = True

    def build(self) -> tuple[JordanAlgebra, JordanAlgebra]:
        raise NotImplementedError

    @pytest.fixture
    def report(self):
        j1, j2 = self.build()
        return triple_hom_reduction(j1, j2)

    def test_actions(self, report):
        assert [s.action for s in report.stages] == self.actions

    def test_complete(self, report):
        assert report.complete == self.complete

    def test_indices(self, report):
        assert [s.index for s in report.stages] == list(range(len(self.actions)))


class TestNonPerfectOverGF5(BaseReductionTest):
    actions = [TripleStageAction.RESTRICT_TO_SECOND_DERIVED, TripleStageAction.TERMINATE_PERFECT]

    def build(self):
        j = idempotent_plus_null(FieldSpec.prime(5))
        return j, j

    def test_enumerated(self, report):
        assert report.enumerated
        assert report.consistent

    def test_first_stage(self, report):
        first = report.stages[0]
        assert not first.source_perfect
        assert first.source_second_dim == 1
        assert first.target_second_dim == 1
        # f(e) = c e with c^3 = c, f(n) = s n with s free
        assert first.triple_homs == 15
        assert first.special_homs == 5
        assert first.restriction_classes == 3
        assert first.restrictions_triple
        assert first.classes_differ_by_special
        assert first.extendable == 3

    def test_second_stage_is_the_line(self, report):
        last = report.stages[-1]
        assert last.source.dim == 1
        assert last.source.table[0][0][0] == 1
        assert last.source_perfect
        assert last.triple_homs == 3


class TestSumTableOverQ(BaseReductionTest):
    actions = [TripleStageAction.RESTRICT_TO_SECOND_DERIVED, TripleStageAction.TERMINATE_PERFECT]

    def build(self):
        j = sum_table_literal()
        return j, j

    def test_not_enumerated(self, report):
        assert not report.enumerated
        assert report.consistent is None
        assert all(s.triple_homs is None for s in report.stages)

    def test_second_derived_line(self, report):
        last = report.stages[-1]
        assert last.source.dim == 1
        # s o s = 4 s for s = x1 + x2 + x3
        assert last.source.table[0][0][0] == 4


class TestZeroProduct(BaseReductionTest):
    actions = [TripleStageAction.TERMINATE_ZERO]

    def build(self):
        j = zero_product(2)
        return j, j

    def test_second_derived_zero(self, report):
        assert report.stages[0].source_second_dim == 0


class TestPerfectSource(BaseReductionTest):
    actions = [TripleStageAction.TERMINATE_PERFECT]

    def build(self):
        j = diagonal_spin([1], FieldSpec.prime(5))
        return j, j

    def test_counts(self, report):
        assert report.stages[0].triple_homs == 25


def test_depth_limit(gf5: FieldSpec):
    j = idempotent_plus_null(gf5)
    report = triple_hom_reduction(j, j, max_depth=1)
    assert [s.action for s in report.stages] == [TripleStageAction.DEPTH_LIMIT]
    assert not report.complete


def test_rejects_zero_depth(line5: JordanAlgebra):
    with pytest.raises(InputError):
        triple_hom_reduction(line5, line5, max_depth=0)


def test_rejects_mixed_fields(line5: JordanAlgebra, spin11: JordanAlgebra):
    with pytest.raises(InputError):
        triple_hom_reduction(line5, spin11)
