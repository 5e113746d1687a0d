from fractions import Fraction

import pytest
from jordan_bider.apps.algebras.catalog import (
    idempotent_line,
    matrix_jordan,
    perfect_commutative,
    sym_matrix_jordan,
)
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.algebras.operations import annihilator
from jordan_bider.apps.modules.models import (
    JModule,
    regular_module,
    representation_of,
    zero_module,
)
from jordan_bider.apps.modules.verify import verify_module, verify_representation


def line_module(scalar) -> JModule:
    """
    M = F v with u . v = scalar v over J = F u, u o u = u.
    """
    j = idempotent_line()
    return JModule.from_action(j, 1, [[[scalar]]])


@pytest.mark.parametrize(
    "algebra",
    [matrix_jordan(2), sym_matrix_jordan(2), perfect_commutative()],
    ids=["matrix", "symmetric", "perfect_commutative"],
)
def test_regular_modules(algebra: JordanAlgebra):
    m = regular_module(algebra)
    assert verify_module(algebra, m).passed
    assert verify_representation(algebra, representation_of(m)).passed


def test_regular_module_of_spin(spin11: JordanAlgebra):
    assert verify_module(spin11, regular_module(spin11)).passed


@pytest.mark.parametrize("scalar", [0, Fraction(1, 2), 1])
def test_line_actions_that_are_modules(scalar):
    m = line_module(scalar)
    check = verify_module(m.algebra, m)
    assert check.passed, f"u . v = {scalar} v should satisfy the module axioms"


@pytest.mark.parametrize("scalar", [2, -1, Fraction(1, 3)])
def test_line_actions_that_are_not_modules(scalar):
    # the axioms reduce to 2t^3 - 3t^2 + t = 0
    m = line_module(scalar)
    check = verify_module(m.algebra, m)
    assert check.axiom_ii
    assert not check.axiom_iii
    assert check.failed == "axiom_iii"
    assert check.witness == (0, 0, 0)
    rep = verify_representation(m.algebra, representation_of(m))
    assert not rep.passed
    assert rep.failed == "condition_ii"


def test_zero_module():
    j = matrix_jordan(2)
    m = zero_module(j)
    assert m.dim == 0
    assert verify_module(j, m).passed


def test_module_annihilator():
    zero_action = line_module(0)
    assert annihilator(zero_action.algebra, zero_action.algebra.full_space(), zero_action).is_full
    unit_action = line_module(1)
    assert annihilator(unit_action.algebra, unit_action.algebra.full_space(), unit_action).is_zero


def test_action_shape_is_checked():
    j = idempotent_line()
    with pytest.raises(ValueError):
        JModule.from_action(j, 2, [[[1, 0]]])
