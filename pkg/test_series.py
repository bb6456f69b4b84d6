import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import special

from hypertype.errors import OutOfDomain, PoleError, UsageError
from hypertype.families import Family, FamilyParams
from hypertype.numeric_core import Status, pochhammer
from hypertype.series import (
    Normalization, SolutionKind, euler_transforms, gegenbauer_even, gegenbauer_odd, gegenbauer_solution, hermite_even,
    hermite_limit_residual, hermite_odd, hyp0f1, hyp1f1, hyp2f0, hyp2f1, normalization_factor, standard_solution,
)


def p2f1(a, b, c):
    return FamilyParams.from_classical(Family.HYP2F1, a, b, c)


def test_two_log_two():
    result = hyp2f1(p2f1(1, 1, 2), 0.5)
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, 2 * math.log(2), rtol=1e-12)


def test_equal_parameters_reduce_to_a_power(rng):
    for _ in range(10):
        a, b = rng.uniform(-2, 2), rng.uniform(0.2, 3)
        z = 0.8 * rng.uniform(0, 1) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        assert_allclose(hyp2f1(p2f1(a, b, b), z).value, (1 - z) ** -a, rtol=1e-11)


def test_zero_f1_hyperbolic_cases():
    z = 0.83
    cosh = hyp0f1(FamilyParams.from_classical(Family.HYP0F1, 0.5), z).value
    sinh = hyp0f1(FamilyParams.from_classical(Family.HYP0F1, 1.5), z).value
    assert_allclose(cosh, math.cosh(2 * math.sqrt(z)), rtol=1e-12)
    assert_allclose(sinh, math.sinh(2 * math.sqrt(z)) / (2 * math.sqrt(z)), rtol=1e-12)


@pytest.mark.parametrize('a, b, c, z', [
    (0.3, 0.7, 1.9, 0.45),
    (-1.2, 2.5, 3.1, -0.8),
    (1.5, 0.25, 0.6, 0.9),
])
def test_hyp2f1_matches_scipy(a, b, c, z):
    assert_allclose(hyp2f1(p2f1(a, b, c), z).value.real, special.hyp2f1(a, b, c, z), rtol=1e-10)


def test_hyp1f1_and_hyp0f1_match_scipy():
    params = FamilyParams.from_classical(Family.HYP1F1, 0.7, 1.9)
    assert_allclose(hyp1f1(params, 2.3).value.real, special.hyp1f1(0.7, 1.9, 2.3), rtol=1e-11)
    params = FamilyParams.from_classical(Family.HYP0F1, 2.2)
    assert_allclose(hyp0f1(params, -3.5).value.real, special.hyp0f1(2.2, -3.5), rtol=1e-11)


def test_hyp2f1_derivative():
    a, b, c, z = 0.3, 0.7, 1.9, 0.2 + 0.3j
    result = hyp2f1(p2f1(a, b, c), z, derivatives=2)
    shifted = hyp2f1(p2f1(a + 1, b + 1, c + 1), z).value
    assert_allclose(result.derivatives[0], a * b / c * shifted, rtol=1e-11)
    assert len(result.derivatives) == 2


def test_hyp2f1_domain():
    with pytest.raises(OutOfDomain):
        hyp2f1(p2f1(0.3, 0.4, 1.2), 1.2)
    with pytest.raises(PoleError):
        hyp2f1(p2f1(0.3, 0.4, -1), 0.5)


def test_bold_at_nonpositive_c():
    a, b, z = 0.3, 0.4, 0.35
    bold = hyp2f1(p2f1(a, b, -1), z, Normalization.BOLD).value
    expected = pochhammer(a, 2) * pochhammer(b, 2) / 2 * z ** 2 * hyp2f1(p2f1(a + 2, b + 2, 3), z).value
    assert_allclose(bold, expected, rtol=1e-13)


def test_bold_is_accurate_when_the_sum_is_small():
    # 1/Gamma(14) scales the sum down to about 1e-10
    a, b, c, z = 13.3, 0.7, 14, 0.15
    result = hyp2f1(p2f1(a, b, c), z, Normalization.BOLD)
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, special.hyp2f1(a, b, c, z) / special.gamma(c), rtol=1e-13)
    assert result.terms_used > 10


def test_bold_i_normalization():
    a, b, c, z = 0.3, 0.7, 1.9, 0.4
    plain = hyp2f1(p2f1(a, b, c), z).value
    bold_i = hyp2f1(p2f1(a, b, c), z, Normalization.BOLD_I).value
    assert_allclose(bold_i, special.gamma(a) * special.gamma(c - a) / special.gamma(c) * plain, rtol=1e-11)
    assert_allclose(normalization_factor(Family.HYP2F1, p2f1(a, b, c), Normalization.BOLD_I),
                    special.gamma(a) * special.gamma(c - a) / special.gamma(c), rtol=1e-12)
    with pytest.raises(UsageError):
        hyp2f1(p2f1(a, b, c), z, Normalization.BOLD_II)


def test_hyp2f0_terminating():
    b, z = 0.7, 1.3
    result = hyp2f0(FamilyParams.from_classical(Family.HYP2F0, -2, Fraction(7, 10)), z)
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, 1 - 2 * b * z + b * (b + 1) * z * z, rtol=1e-13)


def test_hyp2f0_asymptotic_agrees_with_laplace_integral():
    params = FamilyParams.from_classical(Family.HYP2F0, 0.4, 0.7)
    z = -0.05 + 0.01j
    asymptotic = hyp2f0(params, z, method='asymptotic')
    assert asymptotic.status is Status.OPTIMALLY_TRUNCATED
    laplace = hyp2f0(params, z, method='quadrature')
    assert abs(asymptotic.value - laplace.value) < 1e-6
    bold_i = hyp2f0(params, z, Normalization.BOLD_I, method='quadrature')
    assert_allclose(bold_i.value, special.gamma(0.7) * laplace.value, rtol=1e-10)


def test_parity_solutions_at_zero():
    params = FamilyParams.from_lie(Family.HERMITE, 0.23)
    even = hermite_even(params, 0, derivatives=1)
    odd = hermite_odd(params, 0, derivatives=1)
    assert even.value == 1 and even.derivatives[0] == 0
    assert odd.value == 0 and odd.derivatives[0] == 2


def test_hermite_even_polynomial_case():
    params = FamilyParams.from_classical(Family.HERMITE, -2)
    assert_allclose(hermite_even(params, 0.7).value, 1 - 2 * 0.49, atol=1e-14)


def test_parity_solutions_are_plain_only():
    params = FamilyParams.from_lie(Family.HERMITE, 0.23)
    with pytest.raises(UsageError):
        standard_solution(SolutionKind.HERMITE_EVEN, params, 0.3, Normalization.BOLD_I)


def test_solution_kind_parsing():
    assert SolutionKind.parse('At1Index0') is SolutionKind.HYP2F1_AT1_INDEX0
    assert SolutionKind.parse('1f1:atplusinf') is SolutionKind.HYP1F1_AT_PLUS_INF
    assert SolutionKind.parse('Even', Family.HERMITE) is SolutionKind.HERMITE_EVEN
    assert str(SolutionKind.GEGENBAUER_AT_INF_B) == 'gegenbauer:AtInfB'
    assert len(SolutionKind.for_family(Family.HYP2F1)) == 6
    with pytest.raises(UsageError):
        SolutionKind.parse('AtTwo')
    assert Normalization.parse('boldi') is Normalization.BOLD_I
    with pytest.raises(UsageError):
        Normalization.parse('Fancy')


def test_standard_solution_continues_outside_the_disc():
    a, b, c = 0.3, 0.7, 1.9
    value = standard_solution(SolutionKind.HYP2F1_AT0_INDEX0, p2f1(a, b, c), -3.0).value
    assert_allclose(value.real, special.hyp2f1(a, b, c, -3.0), rtol=1e-10)


def test_euler_transforms_agree():
    values = [result.value for _, result in euler_transforms(p2f1(0.3, 0.7, 1.9), 0.3 + 0.2j)]
    assert len(values) == 4
    assert_allclose(values, [values[0]] * 4, rtol=1e-11)


def test_gegenbauer_solution_is_one_at_one():
    params = FamilyParams.from_lie(Family.GEGENBAUER, 0.29, 0.41)
    assert_allclose(gegenbauer_solution(params, 1).value, 1)


def test_hermite_at_plus_infinity_leading_behaviour():
    params = FamilyParams.from_classical(Family.HERMITE, 0.3)
    z = 30.0
    value = standard_solution(SolutionKind.HERMITE_AT_PLUS_INF, params, z).value
    assert abs(value * z ** 0.3 - 1) < 1e-3


def test_hermite_limit_of_gegenbauer():
    small = hermite_limit_residual(0.23, 1e2, 0.4 + 0.2j)
    large = hermite_limit_residual(0.23, 1e4, 0.4 + 0.2j)
    assert large < 1e-3
    assert large < small
    assert np.isfinite(small)


def test_hyp2f0_is_even_in_alpha():
    z = -0.3 + 0.2j
    plus = hyp2f0(FamilyParams.from_lie(Family.HYP2F0, 0.1, 0.3), z, method='quadrature')
    minus = hyp2f0(FamilyParams.from_lie(Family.HYP2F0, 0.1, -0.3), z, method='quadrature')
    assert_allclose(minus.value, plus.value, rtol=1e-9)


@pytest.mark.parametrize('solution', [gegenbauer_even, gegenbauer_odd])
def test_gegenbauer_parity_solutions_solve_the_equation(solution):
    a, b = 0.4, -0.7
    z = 0.3 + 0.2j
    result = solution(FamilyParams.from_classical(Family.GEGENBAUER, a, b), z, derivatives=2)
    f, df, d2f = (result.value,) + result.derivatives
    residual = (1 - z * z) * d2f - (a + b + 1) * z * df - a * b * f
    assert abs(residual) < 1e-12
    at_zero = solution(FamilyParams.from_classical(Family.GEGENBAUER, a, b), 0, derivatives=1)
    assert (at_zero.value, at_zero.derivatives[0]) == ((1, 0) if solution is gegenbauer_even else (0, 2))


@pytest.mark.parametrize('alpha', [-0.88, 0.0, 0.45, 0.88])
def test_tilde_0f1_follows_its_asymptotic_expansion(alpha):
    z = 400.0
    params = FamilyParams.from_lie(Family.HYP0F1, alpha)
    value = standard_solution(SolutionKind.HYP0F1_TILDE_AT_INF, params, z).value
    scaled = value * math.exp(2 * math.sqrt(z)) * z ** (alpha / 2 + 0.25)
    # 1 + (4a^2 - 1)/(8x) + (4a^2 - 1)(4a^2 - 9)/(2 (8x)^2) with x = 2 sqrt z
    m, x8 = 4 * alpha * alpha, 16 * math.sqrt(z)
    assert abs(scaled - (1 + (m - 1) / x8 + (m - 1) * (m - 9) / (2 * x8 * x8))) < 1e-5
