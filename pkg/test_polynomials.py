from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from hypertype.errors import DegenerateNormalization, OutOfDomain, UsageError
from hypertype.polynomials import (
    GENERATING_FUNCTIONS, PARAM_NAMES, PolyFamily, chebyshev_closed_form, classical_recurrences,
    cross_family_identities, expected_degree, explicit_series, family_polynomial, generating_function,
    generating_function_check, limit_check, ode_residual, rodrigues_data, rodriguez, special_values,
    symmetry_identities, to_fraction, vanishing_region, verify_recurrence,
)

THIRD, TWO_FIFTHS = Fraction(1, 3), Fraction(2, 5)


def generic_params(family):
    return (THIRD, TWO_FIFTHS)[:len(PARAM_NAMES[family])]


# rationals with denominator 3 are never integers or half-integers
thirds = st.integers(-12, 12).filter(lambda k: k % 3).map(lambda k: Fraction(k, 3))


@pytest.mark.parametrize('family, params, n, coefficients', [
    ('hermite', (), 3, ['0', '-2', '0', '4/3']),
    ('legendre', (), 2, ['-1/2', '0', '3/2']),
    ('chebyshev1', (), 3, ['0', '-3', '0', '4']),
    ('chebyshev2', (), 2, ['-1', '0', '4']),
    ('laguerre', (0,), 2, ['1', '-2', '1/2']),
    ('jacobi', (THIRD, TWO_FIFTHS), 1, ['4/3', '-41/15']),
    ('bessel', (THIRD,), 1, ['1', '-7/3']),
])
def test_known_polynomials(family, params, n, coefficients):
    data = family_polynomial(family, params, n).to_dict()
    assert data['coefficients'] == coefficients
    assert data['degree'] == len(coefficients) - 1


def test_negative_degree_is_zero():
    assert family_polynomial('hermite', (), -1).degree == -1


@settings(max_examples=30, deadline=None)
@given(family=st.sampled_from(list(PolyFamily)), a=thirds, b=thirds, n=st.integers(0, 6))
def test_rodriguez_matches_equation_and_explicit_sum(family, a, b, n):
    params = (a, b)[:len(PARAM_NAMES[family])]
    P = family_polynomial(family, params, n)
    assert ode_residual(family, params, n).is_zero()
    assert (P.poly - explicit_series(family, params, n)).is_zero()
    assert P.degree in expected_degree(family, params, n)
    for name, pair in special_values(family, params, n).items():
        assert pair['expected'] == pair['actual'], name


@pytest.mark.parametrize('alpha', range(-4, 3))
@pytest.mark.parametrize('beta', range(-4, 3))
def test_jacobi_degree_rule_at_integer_parameters(alpha, beta):
    for n in range(7):
        assert family_polynomial('jacobi', (alpha, beta), n).degree in expected_degree(
            PolyFamily.JACOBI, (alpha, beta), n)


def test_gegenbauer2_normalization_can_degenerate():
    with pytest.raises(DegenerateNormalization):
        family_polynomial('gegenbauer2', (-2,), 2)


@pytest.mark.parametrize('n', range(6))
@pytest.mark.parametrize('kind, family', [(1, 'chebyshev1'), (2, 'chebyshev2')])
def test_chebyshev_closed_form(kind, family, n):
    value = complex(family_polynomial(family, (), n)(0.3))
    assert_allclose(value, chebyshev_closed_form(kind, n, 0.3), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize('entry', GENERATING_FUNCTIONS, ids=lambda g: g.id)
def test_generating_functions(entry):
    check = generating_function_check(entry.id, generic_params(entry.family), 8, THIRD, t=0.05)
    assert check.mismatch == 0
    assert check.partial_sum_error < 1e-8
    assert check.to_dict()['mismatch'] == '0'


def test_generating_function_domain():
    with pytest.raises(UsageError):
        generating_function('fibonacci')
    with pytest.raises(OutOfDomain):
        generating_function_check('legendre', (), 5, THIRD, t=1.5)


DEGENERATE_PARAMS = {
    'jacobi-degenerate-alpha': (2, THIRD),
    'jacobi-degenerate-beta': (THIRD, 2),
    'jacobi-degenerate-both': (2, 1),
    'laguerre-degenerate': (2,),
    'gegenbauer-degenerate': (1,),
}


@pytest.mark.parametrize('identity', cross_family_identities(), ids=lambda i: i.id)
def test_cross_family_identities(identity):
    params = DEGENERATE_PARAMS.get(identity.id, generic_params(identity.family))
    for n in range(5):
        assert cross_family_identities(identity.id, params, n) == 0


@pytest.mark.parametrize('identity', symmetry_identities(), ids=lambda i: i.id)
def test_symmetry_identities(identity):
    for n in range(5):
        assert symmetry_identities(identity.id, generic_params(identity.family), n) == 0


def test_unknown_identity():
    with pytest.raises(UsageError):
        cross_family_identities('hermite-chebyshev', (), 2)


RECURRENCE_COUNTS = {
    PolyFamily.JACOBI: 14,
    PolyFamily.LAGUERRE: 6,
    PolyFamily.BESSEL: 8,
    PolyFamily.GEGENBAUER2: 8,
    PolyFamily.HERMITE: 4,
}


@pytest.mark.parametrize('family, count', RECURRENCE_COUNTS.items())
def test_recurrences(family, count):
    catalog = classical_recurrences(family)
    assert len(catalog) == count
    params = generic_params(family)
    for rec in catalog:
        for n in range(6):
            assert verify_recurrence(family, rec.index, params, n) == 0, (rec.label, n)


def test_additional_recurrences_are_flagged():
    flags = [rec.additional for rec in classical_recurrences(PolyFamily.JACOBI)]
    assert flags == [False] * 12 + [True] * 2
    assert classical_recurrences(PolyFamily.LEGENDRE) == ()


@pytest.mark.parametrize('family, params', [
    (PolyFamily.JACOBI, (THIRD, TWO_FIFTHS)),
    (PolyFamily.LAGUERRE, (THIRD,)),
])
def test_polynomials_as_series_limits(family, params):
    assert limit_check(family, params, 3, 0.3).residual < 1e-4


def test_to_fraction():
    assert to_fraction('3/7') == Fraction(3, 7)
    assert to_fraction(0.25) == Fraction(1, 4)
    with pytest.raises(UsageError):
        to_fraction(1 + 2j)
    with pytest.raises(UsageError):
        to_fraction('pi')


def test_rodriguez_is_proportional_to_the_family_polynomial():
    sigma, weight = rodrigues_data(PolyFamily.LEGENDRE)
    raw = rodriguez(sigma, weight, 3)
    legendre = family_polynomial(PolyFamily.LEGENDRE, (), 3).poly
    assert raw.degree == legendre.degree == 3
    ratio = raw[3] / legendre[3]
    assert all(raw[k] == ratio * legendre[k] for k in range(4))
    with pytest.raises(UsageError):
        rodriguez(sigma, weight, -1)


@pytest.mark.parametrize('family, params, n, expected', [
    (PolyFamily.JACOBI, (-1, -2), 2, True),
    (PolyFamily.JACOBI, (1, 2), 2, False),
    (PolyFamily.JACOBI, (THIRD, -2), 2, False),
    (PolyFamily.LAGUERRE, (-3,), 2, False),
])
def test_vanishing_region(family, params, n, expected):
    assert vanishing_region(family, params, n) is expected
    if expected:
        assert family_polynomial(family, params, n).poly.is_zero()
