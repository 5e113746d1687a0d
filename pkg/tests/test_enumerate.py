import pytest
from jordan_bider.apps.algebras.catalog import idempotent_line
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.triples.enumerate import enumerate_triple_homs, sweep_triple_homs
from jordan_bider.internal.errors import BudgetExceeded, InputError
from jordan_bider.internal.settings import Settings


def test_line_to_line(line5: JordanAlgebra):
    homs = enumerate_triple_homs(line5, line5)
    # c = c^3 in GF(5)
    assert [int(h.f.images[0][0]) for h in homs] == [0, 1, 4]


@pytest.mark.parametrize(
    "source, target, expected",
    [("line5", "line5", 3), ("line5", "spin5", 9), ("spin5", "line5", 5), ("spin5", "spin5", 25)],
)
def test_counts(source: str, target: str, expected: int, request: pytest.FixtureRequest):
    j1 = request.getfixturevalue(source)
    j2 = request.getfixturevalue(target)
    assert len(enumerate_triple_homs(j1, j2)) == expected


def test_sweep_spin(spin5: JordanAlgebra):
    report = sweep_triple_homs(spin5, spin5)
    assert report.total == 25
    assert len(report.maps) == 25
    assert report.source_perfect
    assert report.meeting_hypotheses == 16
    assert report.signs_under_hypotheses.model_dump() == {
        "plus": 4,
        "minus": 4,
        "zero": 0,
        "mixed": 8,
    }
    assert report.signs.model_dump() == {"plus": 8, "minus": 8, "zero": 1, "mixed": 8}
    assert report.homomorphisms == 9
    assert len(report.counterexamples) == 8
    assert report.sign_matches_hom
    assert report.squared_identity_holds
    assert report.special_only_zero
    assert report.images_in_second_derived
    assert report.differences_triple
    assert report.restriction_classes == 25


def test_workers_do_not_change_the_result(spin5: JordanAlgebra, line5: JordanAlgebra):
    single = enumerate_triple_homs(spin5, line5, workers=1)
    pooled = enumerate_triple_homs(spin5, line5, workers=2)
    assert [h.f for h in single] == [h.f for h in pooled]


def test_budget(spin5: JordanAlgebra):
    with pytest.raises(BudgetExceeded) as e:
        enumerate_triple_homs(spin5, spin5, budget=10)
    assert e.value.estimate == 625


def test_budget_from_environment(monkeypatch: pytest.MonkeyPatch, spin5: JordanAlgebra):
    monkeypatch.setenv("JORDAN_ENUMERATION_BUDGET", "10")
    configured = Settings()
    assert configured.enumeration_budget == 10
    monkeypatch.setattr("jordan_bider.apps.triples.enumerate.settings", configured)
    with pytest.raises(BudgetExceeded):
        enumerate_triple_homs(spin5, spin5)


def test_needs_one_prime_field(spin11: JordanAlgebra, spin5: JordanAlgebra):
    with pytest.raises(InputError):
        enumerate_triple_homs(spin11, spin11)
    with pytest.raises(InputError):
        enumerate_triple_homs(spin5, idempotent_line(FieldSpec.prime(7)))
