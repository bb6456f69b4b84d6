import math

import pytest
from numpy.testing import assert_allclose
from scipy import special

from hypertype.families import Family, FamilyParams
from hypertype.series import SolutionKind, hyp0f1, hyp1f1, hyp2f0, standard_solution


def p0f1(c):
    return FamilyParams.from_classical(Family.HYP0F1, c)


def p1f1(a, c):
    return FamilyParams.from_classical(Family.HYP1F1, a, c)


@pytest.mark.parametrize('nu, x', [(0.0, 1.3), (0.35, 2.7), (1.6, 0.4), (3.0, 5.5)])
def test_modified_bessel_i(nu, x):
    value = (x / 2) ** nu / special.gamma(nu + 1) * hyp0f1(p0f1(nu + 1), x * x / 4).value
    assert_allclose(value, special.iv(nu, x), rtol=1e-12)


@pytest.mark.parametrize('nu, x', [(0.0, 1.3), (0.35, 2.7), (1.6, 0.4), (2.5, 6.1)])
def test_bessel_j(nu, x):
    value = (x / 2) ** nu / special.gamma(nu + 1) * hyp0f1(p0f1(nu + 1), -x * x / 4).value
    assert_allclose(value, special.jv(nu, x), rtol=1e-10)


@pytest.mark.parametrize('alpha, z', [(0.5, 1.7), (0.3, 2.5), (1.2, 6.0), (0.0, 9.0)])
def test_macdonald_k_from_the_solution_at_infinity(alpha, z):
    params = FamilyParams.from_lie(Family.HYP0F1, alpha)
    tilde = standard_solution(SolutionKind.HYP0F1_TILDE_AT_INF, params, z).value
    expected = 2 / math.sqrt(math.pi) * z ** (-alpha / 2) * special.kv(alpha, 2 * math.sqrt(z))
    assert_allclose(tilde, expected, rtol=1e-9)


@pytest.mark.parametrize('a, c, x', [(0.4, 1.3, 2.0), (0.7, 0.45, 3.5), (1.3, 2.2, 8.0)])
def test_tricomi_u_from_the_solution_at_plus_infinity(a, c, x):
    value = standard_solution(SolutionKind.HYP1F1_AT_PLUS_INF, p1f1(a, c), x).value
    assert_allclose(value, special.hyperu(a, c, x), rtol=1e-9)


@pytest.mark.parametrize('a, c, x', [(0.4, 1.3, 2.0), (0.7, 0.45, 3.5), (-0.6, 1.7, 1.2)])
def test_tricomi_u_from_two_kummer_series(a, c, x):
    first = special.gamma(1 - c) / special.gamma(a - c + 1) * hyp1f1(p1f1(a, c), x).value
    second = special.gamma(c - 1) / special.gamma(a) * x ** (1 - c) * hyp1f1(p1f1(a - c + 1, 2 - c), x).value
    assert_allclose(first + second, special.hyperu(a, c, x), rtol=1e-10)


@pytest.mark.parametrize('n, b, x', [(1, 0.3, 2.0), (3, 1.4, 0.7), (4, -0.5, 5.0)])
def test_tricomi_u_polynomial_cases_from_2f0(n, b, x):
    # U(-n, b, x) = x^n 2F0(-n, 1 - n - b; -1/x)
    params = FamilyParams.from_classical(Family.HYP2F0, -n, 1 - n - b)
    value = x ** n * hyp2f0(params, -1 / x).value
    assert_allclose(value, special.hyperu(-n, b, x), rtol=1e-12)


@pytest.mark.parametrize('m', [0, 1, 2])
@pytest.mark.parametrize('nu, x', [(2.3, 0.35), (1.0, -0.6), (4.7, 0.9)])
def test_ferrers_functions_from_the_gegenbauer_solution_at_one(m, nu, x):
    # alpha = m, lambda = nu + 1/2 gives F(m - nu, m + nu + 1; m + 1; (1 - x)/2)
    params = FamilyParams.from_lie(Family.GEGENBAUER, m, nu + 0.5)
    value = standard_solution(SolutionKind.GEGENBAUER_AT1_INDEX0, params, x).value
    scale = ((-1) ** m * special.gamma(nu + m + 1) / (2 ** m * math.factorial(m) * special.gamma(nu - m + 1))
             * (1 - x * x) ** (m / 2))
    assert_allclose(scale * value, special.lpmv(m, nu, x), rtol=1e-10, atol=1e-13)
