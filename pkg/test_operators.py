from fractions import Fraction

import pytest
from numpy.testing import assert_allclose
from scipy import special

from hypertype.errors import InvalidOperator, IrregularPoint, UnknownFactorization
from hypertype.families import Family, FamilyParams
from hypertype.operators import (
    INFINITY, ClassTag, HTOperator, balanced_form, canonical_data, classify, commutation_relations, factorizations,
    indices, reflection_reduction, schrodinger_potential, shift_conjugate, verify_commutation, verify_factorization,
)

F = Fraction

EXACT_LIE = {
    Family.HYP2F1: (F(1, 3), F(-2, 7), F(3, 5)),
    Family.HYP1F1: (F(2, 9), F(5, 4)),
    Family.HYP2F0: (F(-1, 6), F(3, 11)),
    Family.HYP0F1: (F(4, 7),),
    Family.GEGENBAUER: (F(2, 5), F(-1, 3)),
    Family.HERMITE: (F(7, 10),),
}

CATALOG_SIZES = {
    Family.HYP2F1: 12,
    Family.HYP1F1: 6,
    Family.HYP2F0: 6,
    Family.HYP0F1: 2,
    Family.GEGENBAUER: 8,
    Family.HERMITE: 4,
}


def test_operator_validation():
    with pytest.raises(InvalidOperator):
        HTOperator.of([0], [1], 1)
    with pytest.raises(InvalidOperator):
        HTOperator.of([0, 0, 0, 1], [1], 1)
    with pytest.raises(InvalidOperator):
        HTOperator.of([1], [0, 0, 1], 1)


def test_classify_gauss_operator():
    a, b, c = F(1, 2), F(1, 3), F(5, 3)
    op = HTOperator.of([0, 1, -1], [c, -(a + b + 1)], -a * b)
    cls = classify(op)
    assert cls.tag is ClassTag.HYPERGEOMETRIC_2F1
    assert cls.family is Family.HYP2F1
    assert set(cls.params.classical[:2]) == {a, b}
    assert cls.params.classical[2] == c
    assert cls.operator() == op


@pytest.mark.parametrize('family', list(Family))
def test_family_operators_classify_to_themselves(family):
    params = FamilyParams.from_lie(family, *EXACT_LIE[family])
    op = HTOperator.for_family(params)
    cls = classify(op)
    assert cls.family is family
    assert cls.operator() == op


def test_classify_after_affine_change():
    # 1F1 operator pulled back by z = 3w + 2 and scaled
    op = HTOperator.of([-6, 3], [F(1, 2), -1], F(-1, 4))
    cls = classify(op)
    assert cls.tag is ClassTag.CONFLUENT_1F1
    assert cls.operator() == op


@pytest.mark.parametrize('sigma, tau, eta, tag', [
    ([0, 0, 1], [0, 3], 2, ClassTag.EULER2),
    ([0, 1], [F(1, 2)], 0, ClassTag.EULER_DERIV),
    ([1], [2], 3, ClassTag.CONST_COEFF),
    ([0, 1], [F(1, 2)], 1, ClassTag.ZERO_F1),
    ([0, 0, 1], [-1, 1], -1, ClassTag.TWO_F0),
    ([1, 0, -1], [0, -4], -2, ClassTag.GEGENBAUER),
    ([1], [0, -2], 5, ClassTag.HERMITE),
])
def test_classification_tags(sigma, tau, eta, tag):
    op = HTOperator.of(sigma, tau, eta)
    cls = classify(op)
    assert cls.tag is tag
    assert cls.operator() == op
    assert cls.to_dict()['tag'] == tag.value


def test_canonical_data_of_gauss_operator():
    a, b, c = F(1, 2), F(1, 3), F(5, 3)
    op = HTOperator.of([0, 1, -1], [c, -(a + b + 1)], -a * b)
    data = canonical_data(op)
    # kappa = tau - sigma'
    assert data.kappa.coeffs == (c - 1, -(a + b + 1) + 2)
    assert data.lam == -a * b - F(1, 2) * (-(a + b - 1))
    assert 'z^alpha' in str(data.weight)


def test_balanced_and_schrodinger_forms():
    params = FamilyParams.from_lie(Family.HERMITE, F(7, 10))
    op = HTOperator.for_family(params)
    assert str(balanced_form(op)).startswith('d (')
    potential = schrodinger_potential(op)
    # Hermite: V = z^2 + 2 lam
    assert potential(F(0)) == 2 * F(7, 10)
    assert potential(F(1)) == 1 + 2 * F(7, 10)


def test_indices_of_gauss_operator():
    a, b, c = F(1, 2), F(1, 3), F(5, 3)
    op = HTOperator.of([0, 1, -1], [c, -(a + b + 1)], -a * b)
    at_zero = indices(op, F(0))
    assert {at_zero.index1, at_zero.index2} == {0, 1 - c}
    at_one = indices(op, F(1))
    assert {at_one.index1, at_one.index2} == {0, c - a - b}
    at_infinity = indices(op, INFINITY)
    assert {at_infinity.index1, at_infinity.index2} == {a, b}
    assert not at_infinity.degenerate
    assert indices(op, F(1, 2)).degenerate


def test_degenerate_and_irregular_points():
    op = HTOperator.of([0, 1, -1], [2, -3], -1)
    assert indices(op, F(0)).degenerate
    hermite = HTOperator.for_family(FamilyParams.from_lie(Family.HERMITE, F(1, 3)))
    with pytest.raises(IrregularPoint):
        indices(hermite, INFINITY)
    two_f0 = HTOperator.for_family(FamilyParams.from_lie(Family.HYP2F0, F(1, 3), F(1, 5)))
    with pytest.raises(IrregularPoint):
        indices(two_f0, F(0))


@pytest.mark.parametrize('family', list(Family))
def test_factorizations_hold_exactly(family):
    params = FamilyParams.from_lie(family, *EXACT_LIE[family])
    assert len(factorizations(params)) == CATALOG_SIZES[family]
    for i in range(1, CATALOG_SIZES[family] + 1):
        assert verify_factorization(params, i).is_zero(), f"{family.value} factorization {i}"


def test_factorization_of_classified_operator():
    op = HTOperator.of([0, 1], [F(3, 2), -1], F(-1, 3))
    assert verify_factorization(op, 1).is_zero()
    with pytest.raises(UnknownFactorization):
        verify_factorization(op, 99)
    with pytest.raises(UnknownFactorization):
        verify_factorization(HTOperator.of([0, 0, 1], [0, 3], 2), 1)


@pytest.mark.parametrize('family', list(Family))
def test_commutation_relations_hold_exactly(family):
    params = FamilyParams.from_lie(family, *EXACT_LIE[family])
    labels = commutation_relations(family)
    assert len(labels) == CATALOG_SIZES[family]
    for i in range(1, len(labels) + 1):
        assert verify_commutation(family, i, params).is_zero(), f"{family.value} commutation {i}"


def test_commutation_rejects_foreign_parameters():
    params = FamilyParams.from_lie(Family.HERMITE, F(1, 2))
    with pytest.raises(UnknownFactorization):
        verify_commutation(Family.HYP0F1, 1, params)


def test_reflection_reduction_indices():
    op = HTOperator.for_family(FamilyParams.from_lie(Family.GEGENBAUER, F(2, 5), F(-1, 3)))
    reduced = reflection_reduction(op)
    assert set(reduced.even.indices(F(0))) == {0, F(1, 2)}
    assert set(reduced.odd.indices(F(0))) == {0, F(-1, 2)}


def kummer_m(a, c, u):
    """M(a; c; u) and its first two derivatives."""
    return (special.hyp1f1(a, c, u),
            a / c * special.hyp1f1(a + 1, c + 1, u),
            a * (a + 1) / (c * (c + 1)) * special.hyp1f1(a + 2, c + 2, u))


def test_reflection_reduction_of_hermite():
    a = F(3, 10)
    reduced = reflection_reduction(HTOperator.for_family(FamilyParams.from_classical(Family.HERMITE, a)))
    u = 0.7
    # even solutions M(a/2; 1/2; z^2), odd ones z M((a+1)/2; 3/2; z^2)
    even = reduced.even.apply(u, *kummer_m(float(a) / 2, 0.5, u))
    odd = reduced.odd.apply(u, *kummer_m((float(a) + 1) / 2, 1.5, u))
    assert_allclose([even, odd], [0, 0], atol=1e-12)


def test_reflection_reduction_needs_an_invariant_operator():
    with pytest.raises(InvalidOperator):
        reflection_reduction(HTOperator.of([0, 1, -1], [2, -3], -1))


def test_shift_conjugate_moves_the_indices():
    a, b, c = F(1, 2), F(1, 3), F(5, 3)
    op = HTOperator.of([0, 1, -1], [c, -(a + b + 1)], -a * b)
    theta = F(1, 4)
    assert set(shift_conjugate(op, F(0), theta).indices(F(0))) == {theta, theta + 1 - c}
    assert set(shift_conjugate(op, F(1), theta).indices(F(1))) == {theta, theta + c - a - b}


def test_shift_conjugate_annihilates_the_shifted_solution():
    a, b, c = 0.5, 1 / 3, 5 / 3
    op = HTOperator.of([0, 1, -1], [c, -(a + b + 1)], -a * b)
    theta, z = 0.25, 0.4
    f = special.hyp2f1(a, b, c, z)
    df = a * b / c * special.hyp2f1(a + 1, b + 1, c + 1, z)
    d2f = a * (a + 1) * b * (b + 1) / (c * (c + 1)) * special.hyp2f1(a + 2, b + 2, c + 2, z)
    # g = z^theta f
    p = z ** theta
    g = p * f
    dg = p * (df + theta / z * f)
    d2g = p * (d2f + 2 * theta / z * df + theta * (theta - 1) / z ** 2 * f)
    assert abs(shift_conjugate(op, 0, theta).apply(z, g, dg, d2g)) < 1e-12
