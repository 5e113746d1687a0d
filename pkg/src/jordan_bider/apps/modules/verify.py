"""
Exact checks of the module axioms and of the representation conditions.

Both are multilinear in the algebra arguments, so checking all basis
triples decides them. Operators are composed as sympy DomainMatrix.
"""
from __future__ import annotations

from itertools import product
from typing import Any, Sequence

from sympy.polys.matrices import DomainMatrix

from ...helpers.data.models import ProjectBaseModel
from ..algebras.models import JordanAlgebra
from ..linalg.matrices import Matrix
from .models import JModule, Representation


class ModuleCheck(ProjectBaseModel):
    # a . x = x . a holds structurally: one action tensor serves both
    axiom_i: bool = True
    axiom_ii: bool
    axiom_iii: bool
    failed: str | None = None
    witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.axiom_i and self.axiom_ii and self.axiom_iii


class RepresentationCheck(ProjectBaseModel):
    condition_i: bool
    condition_ii: bool
    failed: str | None = None
    witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.condition_i and self.condition_ii


def _dense(m: Matrix) -> DomainMatrix:
    return DomainMatrix([list(row) for row in m.rows], (m.n_rows, m.n_cols), m.field.domain)


def _equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    return (a - b).is_zero_matrix


def _combine(
    coefficients: Sequence[Any], operators: Sequence[DomainMatrix], zero: DomainMatrix
) -> DomainMatrix:
    total = zero
    for c, op in zip(coefficients, operators):
        if c:
            total = total + op * c
    return total


class _OperatorTable:
    """
    Operators for basis vectors together with the ones for basis products.
    """

    def __init__(self, j: JordanAlgebra, operators: list[DomainMatrix], dim: int):
        self.algebra = j
        n = j.dim
        self.zero = DomainMatrix.zeros((dim, dim), j.field.domain).to_dense()
        self.basis = operators
        # T_{e_b o e_c}
        self.of_product = [
            [_combine(j.table[b][c], operators, self.zero) for c in range(n)]
            for b in range(n)
        ]
        # T_{(e_a o e_c) o e_b}
        self.of_triple = {}
        for a, c, b in product(range(n), repeat=3):
            ac = j.table[a][c]
            coefficients = [j.field.zero] * n
            for t, value in enumerate(ac):
                if value:
                    for k, d in enumerate(j.table[t][b]):
                        if d:
                            coefficients[k] += value * d
            self.of_triple[(a, c, b)] = _combine(coefficients, operators, self.zero)


def verify_module(j: JordanAlgebra, m: JModule) -> ModuleCheck:
    """
    With T_a(x) = x . a:
      (ii)  sum_cyc T_{b o c} T_a = sum_cyc T_a T_{b o c}
      (iii) T_c T_b T_a + T_a T_b T_c + T_{(a o c) o b} = sum_cyc T_{b o c} T_a
    """
    if m.dim == 0 or j.dim == 0:
        return ModuleCheck(axiom_ii=True, axiom_iii=True)
    operators = [
        _dense(m.action_matrix(j.basis_vector(a))) for a in range(j.dim)
    ]
    table = _OperatorTable(j, operators, m.dim)
    T = table.basis
    P = table.of_product
    n = j.dim

    axiom_ii = True
    axiom_iii = True
    failed = None
    witness = None
    for a, b, c in product(range(n), repeat=3):
        cyclic_left = P[b][c] * T[a] + P[c][a] * T[b] + P[a][b] * T[c]
        if axiom_ii:
            cyclic_right = T[a] * P[b][c] + T[b] * P[c][a] + T[c] * P[a][b]
            if not _equal(cyclic_left, cyclic_right):
                axiom_ii = False
                failed = failed or "axiom_ii"
                witness = witness or (a, b, c)
        if axiom_iii:
            lhs = T[c] * T[b] * T[a] + T[a] * T[b] * T[c] + table.of_triple[(a, c, b)]
            if not _equal(lhs, cyclic_left):
                axiom_iii = False
                failed = failed or "axiom_iii"
                witness = witness or (a, b, c)
        if not axiom_ii and not axiom_iii:
            break
    return ModuleCheck(
        axiom_ii=axiom_ii, axiom_iii=axiom_iii, failed=failed, witness=witness
    )


def verify_representation(j: JordanAlgebra, s: Representation) -> RepresentationCheck:
    """
      (i)  [S_a S_{b o c}] + [S_b S_{c o a}] + [S_c S_{a o b}] = 0
      (ii) S_a S_b S_c + S_c S_b S_a + S_{(a o c) o b}
             = S_a S_{b o c} + S_b S_{c o a} + S_c S_{a o b}
    where [AB] = AB - BA.
    """
    if s.dim == 0 or j.dim == 0:
        return RepresentationCheck(condition_i=True, condition_ii=True)
    operators = [_dense(m) for m in s.matrices]
    table = _OperatorTable(j, operators, s.dim)
    S = table.basis
    P = table.of_product
    n = j.dim

    condition_i = True
    condition_ii = True
    failed = None
    witness = None
    for a, b, c in product(range(n), repeat=3):
        right_products = S[a] * P[b][c] + S[b] * P[c][a] + S[c] * P[a][b]
        if condition_i:
            left_products = P[b][c] * S[a] + P[c][a] * S[b] + P[a][b] * S[c]
            if not _equal(right_products, left_products):
                condition_i = False
                failed = failed or "condition_i"
                witness = witness or (a, b, c)
        if condition_ii:
            lhs = S[a] * S[b] * S[c] + S[c] * S[b] * S[a] + table.of_triple[(a, c, b)]
            if not _equal(lhs, right_products):
                condition_ii = False
                failed = failed or "condition_ii"
                witness = witness or (a, b, c)
        if not condition_i and not condition_ii:
            break
    return RepresentationCheck(
        condition_i=condition_i, condition_ii=condition_ii, failed=failed, witness=witness
    )
