"""
Checks on linear maps f : J1 -> J2 with f((x o y) o z) = (f(x) o f(y)) o f(z).

All identities below are multilinear after polarization, so they are
decided on basis vectors and never by sampling.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Any, Sequence

from ...helpers.data.models import Vector
from ...internal.errors import HypothesisFailure, InputError, VerificationFailure
from ..algebras.models import JordanAlgebra
from ..algebras.operations import (
    ProductDecomposer,
    annihilator,
    is_perfect,
    multiply,
    second_derived,
)
from ..linalg.maps import LinearMap
from ..linalg.matrices import Subspace
from ..linalg.vectors import add, combination, sub
from .models import (
    Restriction,
    Sign,
    SignClassification,
    TripleCheck,
    TripleHomReport,
)


def _check_shape(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> None:
    if (f.source_dim, f.target_dim) != (j1.dim, j2.dim):
        raise InputError(
            f"map is {f.source_dim} -> {f.target_dim}, algebras have dimensions {j1.dim} and {j2.dim}"
        )
    if f.field != j1.field or f.field != j2.field:
        raise InputError("map and algebras must share one field")


def _image_products(j2: JordanAlgebra, f: LinearMap) -> list[list[Vector]]:
    # f(e_i) o f(e_j)
    n = f.source_dim
    return [[multiply(j2, f.images[i], f.images[k]) for k in range(n)] for i in range(n)]


def is_triple_hom(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> TripleCheck:
    _check_shape(j1, j2, f)
    n = j1.dim
    images = _image_products(j2, f)
    for x, y, z in product(range(n), repeat=3):
        lhs = f.apply(multiply(j1, j1.table[x][y], j1.basis_vector(z)))
        rhs = multiply(j2, images[x][y], f.images[z])
        if lhs != rhs:
            return TripleCheck(holds=False, witness=(x, y, z))
    return TripleCheck(holds=True)


def ann_f(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> Subspace:
    """
    {a in J2 | a o f(x) = 0 for all x in J1}.
    """
    _check_shape(j1, j2, f)
    return annihilator(j2, f.image())


def _check_delta_hypotheses(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> None:
    check = is_triple_hom(j1, j2, f)
    if not check.holds:
        raise VerificationFailure("triple homomorphism", witness=check.witness)
    if not is_perfect(j1):
        raise HypothesisFailure("perfect", "the source is not spanned by its products")
    annihilator_f = ann_f(j1, j2, f)
    if not annihilator_f.is_zero:
        raise HypothesisFailure("Ann_f(J2) = 0", f"Ann_f(J2) has dimension {annihilator_f.dim}")


def delta_f_candidates(
    j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap
) -> tuple[LinearMap, LinearMap]:
    """
    delta_f(e_k) = sum lambda_ij f(e_i) o f(e_j) for e_k = sum lambda_ij e_i o e_j,
    built from the primary and from the alternative decomposition.
    """
    _check_delta_hypotheses(j1, j2, f)
    n = j1.dim
    decomposer = ProductDecomposer(j1)
    primary = decomposer.decompose_all([j1.basis_vector(k) for k in range(n)])
    alternative = [decomposer.alternative(v) for v in primary]
    images = [v for row in _image_products(j2, f) for v in row]

    def assemble(decompositions: Sequence[Vector]) -> LinearMap:
        return LinearMap(
            field=j1.field,
            source_dim=n,
            target_dim=j2.dim,
            images=tuple(
                combination(coefficients, images, j1.field.zero, j2.dim)
                for coefficients in decompositions
            ),
        )

    return assemble(primary), assemble(alternative)


def delta_f(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> LinearMap:
    primary, alternative = delta_f_candidates(j1, j2, f)
    if primary != alternative:
        raise VerificationFailure("delta_f independent of the decomposition")
    return primary


def _square_defect(
    j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap, x: Sequence[Any], sign: int
) -> Vector:
    # f(x o x) - sign * f(x) o f(x)
    fx = f.apply(x)
    square = multiply(j2, fx, fx)
    image = f.apply(multiply(j1, x, x))
    return sub(image, square) if sign > 0 else add(image, square)


def sign_classify(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> SignClassification:
    """
    Plus iff f(e_i o e_j) = f(e_i) o f(e_j) for all i <= j, which is the
    polarization of f(x^2) = f(x)^2; Minus likewise with the sign flipped.
    """
    _check_shape(j1, j2, f)
    n = j1.dim
    images = _image_products(j2, f)
    plus = True
    minus = True
    for i, k in combinations_with_replacement(range(n), 2):
        value = f.apply(j1.table[i][k])
        if value != images[i][k]:
            plus = False
        if any(add(value, images[i][k])):
            minus = False

    def basis_sign(x: Vector) -> Sign:
        plus_ok = not any(_square_defect(j1, j2, f, x, 1))
        minus_ok = not any(_square_defect(j1, j2, f, x, -1))
        if plus_ok and minus_ok:
            return Sign.ZERO
        if plus_ok:
            return Sign.PLUS
        if minus_ok:
            return Sign.MINUS
        return Sign.MIXED

    basis_signs = tuple(basis_sign(j1.basis_vector(i)) for i in range(n))
    if plus and minus:
        sign = Sign.ZERO
    elif plus:
        sign = Sign.PLUS
    elif minus:
        sign = Sign.MINUS
    else:
        sign = Sign.MIXED

    plus_witness = minus_witness = pointwise_witness = None
    if sign == Sign.MIXED:
        # e_i, then e_i + e_k and e_i - e_k for i < k
        candidates = [j1.basis_vector(i) for i in range(n)]
        for i, k in combinations(range(n), 2):
            candidates.append(add(j1.basis_vector(i), j1.basis_vector(k)))
            candidates.append(sub(j1.basis_vector(i), j1.basis_vector(k)))
        for x in candidates:
            plus_fails = any(_square_defect(j1, j2, f, x, 1))
            minus_fails = any(_square_defect(j1, j2, f, x, -1))
            if plus_fails and plus_witness is None:
                plus_witness = x
            if minus_fails and minus_witness is None:
                minus_witness = x
            if plus_fails and minus_fails and pointwise_witness is None:
                pointwise_witness = x
    return SignClassification(
        sign=sign,
        basis_signs=basis_signs,
        plus_witness=plus_witness,
        minus_witness=minus_witness,
        pointwise_witness=pointwise_witness,
    )


def is_homomorphism(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> bool:
    _check_shape(j1, j2, f)
    images = _image_products(j2, f)
    return all(
        f.apply(j1.table[i][k]) == images[i][k]
        for i, k in product(range(j1.dim), repeat=2)
    )


def squared_identity_holds(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> bool:
    """
    (f(x^2))^2 = (f(x) o f(x))^2 as a formal quartic identity.

    With a_ij = f(e_i o e_j) and b_ij = f(e_i) o f(e_j), the coefficient of
    x_p x_q x_r x_s on each side is the sum of a_ij o a_kl (resp. b_ij o b_kl)
    over the distinct orderings (i, j, k, l) of {p, q, r, s}.
    """
    _check_shape(j1, j2, f)
    n = j1.dim
    a = [[f.apply(j1.table[i][k]) for k in range(n)] for i in range(n)]
    b = _image_products(j2, f)
    zero = j2.field.zero_vector(j2.dim)
    for indices in combinations_with_replacement(range(n), 4):
        left = zero
        right = zero
        for i, k, l, m in set(permutations(indices)):
            left = add(left, multiply(j2, a[i][k], a[l][m]))
            right = add(right, multiply(j2, b[i][k], b[l][m]))
        if left != right:
            return False
    return True


def restrict_second_derived(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> Restriction:
    check = is_triple_hom(j1, j2, f)
    if not check.holds:
        raise VerificationFailure("triple homomorphism", witness=check.witness)
    source = second_derived(j1)
    target = second_derived(j2)
    images = []
    for r, b in enumerate(source.basis):
        value = f.apply(b)
        if not target.contains(value):
            raise VerificationFailure("f(J1'') inside J2''", witness=(r,))
        images.append(target.coordinates(value))
    return Restriction(
        source_space=source,
        target_space=target,
        f=LinearMap(
            field=j1.field,
            source_dim=source.dim,
            target_dim=target.dim,
            images=tuple(images),
        ),
    )


def is_special_triple_hom(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> bool:
    """
    f vanishes on the span of J1''.
    """
    _check_shape(j1, j2, f)
    return all(not any(f.apply(b)) for b in second_derived(j1).basis)


def triple_hom_report(j1: JordanAlgebra, j2: JordanAlgebra, f: LinearMap) -> TripleHomReport:
    check = is_triple_hom(j1, j2, f)
    annihilator_f = ann_f(j1, j2, f)
    perfect = is_perfect(j1)
    delta = None
    well_defined = None
    if check.holds and perfect and annihilator_f.is_zero:
        primary, alternative = delta_f_candidates(j1, j2, f)
        well_defined = primary == alternative
        delta = primary
    return TripleHomReport(
        source_name=j1.name,
        target_name=j2.name,
        is_triple=check.holds,
        witness=check.witness,
        ann_f=annihilator_f,
        source_perfect=perfect,
        sign=sign_classify(j1, j2, f),
        is_hom=is_homomorphism(j1, j2, f),
        special=is_special_triple_hom(j1, j2, f),
        squared_identity=squared_identity_holds(j1, j2, f) if check.holds else None,
        delta_f=delta,
        delta_f_well_defined=well_defined,
    )
