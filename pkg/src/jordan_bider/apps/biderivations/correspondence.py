"""
Passing between symmetric biderivations satisfying d(w, u o v) = w . d(u, v)
and centroid elements gamma satisfying

    z . gamma(x o y) = x . gamma(y o z) + y . gamma(x o z),

via d(x, y) = gamma(x o y). The direction d -> gamma needs J perfect and
Z_M(J) = 0; both are checked and refused by name.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, product

from ...helpers.data.models import ExactModel, ProjectBaseModel
from ...internal.errors import HypothesisFailure, VerificationFailure
from ..algebras.models import AssociativeAlgebra, JordanAlgebra
from ..algebras.operations import (
    ProductDecomposer,
    annihilator,
    assoc_multiply,
    associativity_witness,
    commutativity_witness,
    is_perfect,
    jordanize_associative,
)
from ..linalg.maps import LinearMap
from ..linalg.vectors import add, combination
from ..modules.models import JModule
from .models import SYMMETRIC_CONDITION1, BiderivationFlags, BilinearMap
from .solver import (
    biderivation_space,
    centroid_space,
    derivation_space,
    resolve_module,
    verify_biderivation,
    verify_centroid,
)


def gamma_to_delta(j: JordanAlgebra, m: JModule | None, gamma: LinearMap) -> BilinearMap:
    module = resolve_module(j, m)
    check = verify_centroid(j, module, gamma, condition2=True)
    if not check.passed:
        raise VerificationFailure(check.failed or "centroid", witness=check.witness)
    n = j.dim
    return BilinearMap(
        field=j.field,
        source_dim=n,
        target_dim=module.dim,
        tensor=tuple(
            tuple(gamma.apply(j.table[x][y]) for y in range(n)) for x in range(n)
        ),
    )


def check_correspondence_hypotheses(j: JordanAlgebra, module: JModule) -> None:
    if not is_perfect(j):
        raise HypothesisFailure("perfect", "J' is a proper subspace of J")
    z = annihilator(j, j.full_space(), module)
    if not z.is_zero:
        raise HypothesisFailure("Z_M(J) = 0", f"Z_M(J) has dimension {z.dim}")


def delta_to_gamma(
    j: JordanAlgebra,
    m: JModule | None,
    d: BilinearMap,
    alternative: bool = False,
) -> LinearMap:
    """
    gamma(e_k) = sum lambda_ij d(e_i, e_j) for a decomposition
    e_k = sum lambda_ij e_i o e_j. With ``alternative`` a second
    decomposition is used wherever the products are dependent.
    """
    module = resolve_module(j, m)
    check_correspondence_hypotheses(j, module)
    check = verify_biderivation(j, module, d, SYMMETRIC_CONDITION1)
    if not check.passed:
        raise VerificationFailure(check.failed or "biderivation", witness=check.witness)

    n = j.dim
    decomposer = ProductDecomposer(j)
    decompositions = decomposer.decompose_all([j.basis_vector(k) for k in range(n)])
    if alternative:
        decompositions = [decomposer.alternative(v) for v in decompositions]
    values = [d.tensor[i][x] for i in range(n) for x in range(n)]
    return LinearMap(
        field=j.field,
        source_dim=n,
        target_dim=module.dim,
        images=tuple(
            combination(coefficients, values, j.field.zero, module.dim)
            for coefficients in decompositions
        ),
    )


class CorrespondenceReport(ProjectBaseModel):
    perfect: bool
    module_center_zero: bool
    biderivation_dim: int
    centroid_dim: int
    round_trip: bool | None = None
    reverse_round_trip: bool | None = None
    well_defined: bool | None = None
    failed_hypothesis: str | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return self.perfect and self.module_center_zero

    @property
    def dims_equal(self) -> bool:
        return self.biderivation_dim == self.centroid_dim


def correspondence_check(j: JordanAlgebra, m: JModule | None = None) -> CorrespondenceReport:
    """
    Both solution spaces, and under the hypotheses the two constructions
    applied to every basis element in both directions.
    """
    module = resolve_module(j, m)
    bider = biderivation_space(j, module, SYMMETRIC_CONDITION1)
    cent = centroid_space(j, module, condition2=True)
    perfect = is_perfect(j)
    center_zero = annihilator(j, j.full_space(), module).is_zero
    report = CorrespondenceReport(
        perfect=perfect,
        module_center_zero=center_zero,
        biderivation_dim=bider.dim,
        centroid_dim=cent.dim,
    )
    if not perfect:
        return report.model_copy(update={"failed_hypothesis": "perfect"})
    if not center_zero:
        return report.model_copy(update={"failed_hypothesis": "Z_M(J) = 0"})

    round_trip = True
    well_defined = True
    for d in bider.bilinear_maps():
        gamma = delta_to_gamma(j, module, d)
        if gamma_to_delta(j, module, gamma) != d:
            round_trip = False
        if delta_to_gamma(j, module, d, alternative=True) != gamma:
            well_defined = False
    reverse = all(
        delta_to_gamma(j, module, gamma_to_delta(j, module, gamma)) == gamma
        for gamma in cent.linear_maps()
    )
    return report.model_copy(
        update={
            "round_trip": round_trip,
            "reverse_round_trip": reverse,
            "well_defined": well_defined,
        }
    )


def _associative_derivation_witness(a: AssociativeAlgebra, d: LinearMap) -> tuple[int, int] | None:
    # D(e_x e_y) = D(e_x) e_y + e_x D(e_y)
    for x, y in product(range(a.dim), repeat=2):
        lhs = d.apply(a.table[x][y])
        rhs = add(
            assoc_multiply(a, d.images[x], a.basis_vector(y)),
            assoc_multiply(a, a.basis_vector(x), d.images[y]),
        )
        if lhs != rhs:
            return (x, y)
    return None


def _check_commutative_associative(a: AssociativeAlgebra) -> None:
    witness = commutativity_witness(a.table)
    if witness is not None:
        raise VerificationFailure("commutative", witness=witness)
    witness = associativity_witness(a)
    if witness is not None:
        raise VerificationFailure("associativity", witness=witness)


def biderivation_from_derivation(a: AssociativeAlgebra, d: LinearMap) -> BilinearMap:
    """
    delta(x, y) = D(x) D(y) for a derivation D of a commutative associative algebra.
    """
    _check_commutative_associative(a)
    witness = _associative_derivation_witness(a, d)
    if witness is not None:
        raise VerificationFailure("derivation", witness=witness)
    n = a.dim
    return BilinearMap(
        field=a.field,
        source_dim=n,
        target_dim=n,
        tensor=tuple(
            tuple(assoc_multiply(a, d.images[x], d.images[y]) for y in range(n))
            for x in range(n)
        ),
    )


class DerivationProduct(ExactModel):
    derivation: LinearMap
    biderivation: BilinearMap
    symmetric_biderivation: bool
    product_rule: bool
    condition1: bool


class DerivationProductReport(ExactModel):
    algebra_name: str | None = None
    derivation_dim: int
    products: tuple[DerivationProduct, ...]
    # D(xy)D(z) = z D(x)D(y) for every D in the span, checked in polarized form
    all_satisfy_product_rule: bool


def _product_rule_pair(a: AssociativeAlgebra, d1: LinearMap, d2: LinearMap) -> bool:
    """
    Polarization of D(xy)D(z) = z D(x)D(y) at (d1, d2); for d1 = d2 it is
    twice the identity itself.
    """
    for x, y, z in product(range(a.dim), repeat=3):
        xy = a.table[x][y]
        lhs = add(
            assoc_multiply(a, d1.apply(xy), d2.images[z]),
            assoc_multiply(a, d2.apply(xy), d1.images[z]),
        )
        cross = add(
            assoc_multiply(a, d1.images[x], d2.images[y]),
            assoc_multiply(a, d2.images[x], d1.images[y]),
        )
        rhs = assoc_multiply(a, a.basis_vector(z), cross)
        if lhs != rhs:
            return False
    return True


def derivation_product_report(a: AssociativeAlgebra) -> DerivationProductReport:
    _check_commutative_associative(a)
    j = jordanize_associative(a)
    derivations = derivation_space(j).linear_maps()
    products = []
    for d in derivations:
        # commutative, so derivations of A and of A+ coincide
        delta = biderivation_from_derivation(a, d)
        products.append(
            DerivationProduct(
                derivation=d,
                biderivation=delta,
                symmetric_biderivation=verify_biderivation(
                    j, None, delta, BiderivationFlags(symmetric=True)
                ).passed,
                product_rule=_product_rule_pair(a, d, d),
                condition1=verify_biderivation(j, None, delta, SYMMETRIC_CONDITION1).passed,
            )
        )
    return DerivationProductReport(
        algebra_name=a.name,
        derivation_dim=len(derivations),
        products=tuple(products),
        all_satisfy_product_rule=all(
            _product_rule_pair(a, d1, d2)
            for d1, d2 in combinations_with_replacement(derivations, 2)
        ),
    )
