import cmath
import math

import pytest
from numpy.testing import assert_allclose
from scipy import special

from hypertype.contour import (
    BranchedIntegrand, BypassArc, ExpFactor, LineSegment, Ray, boundary_term, integrate, parse_contour, power,
)
from hypertype.errors import DomainError, NonIntegrableEndpoint, ParseError, TruncationError
from hypertype.numeric_core import Status

HANKEL = ']-inf, 0^+, -inf['


def kinds(contour):
    return [type(s) for s in contour.segments]


def test_segment():
    contour = parse_contour('[0, 1]')
    assert kinds(contour) == [LineSegment]
    assert contour.start == 0 and contour.end == 1


def test_half_line():
    contour = parse_contour('[1, inf[')
    assert kinds(contour) == [Ray]
    assert contour.start == 1
    assert contour.end is None


def test_hankel_contour():
    contour = parse_contour(HANKEL)
    assert kinds(contour) == [Ray, BypassArc, Ray]
    assert contour.segments[0].incoming
    assert contour.arcs[0].is_loop


def test_loops_and_kidneys():
    assert kinds(parse_contour('[0^-]')) == [BypassArc]
    assert parse_contour('[0^-]').arcs[0].orientation == -1
    assert kinds(parse_contour('[(0-0)^+]')) == [LineSegment, BypassArc, LineSegment]


def test_group_bypass_uses_anchors():
    contour = parse_contour('[1, (z,0)^+, 1]', anchors={'z': 0.5j})
    assert kinds(contour) == [LineSegment, BypassArc, LineSegment]
    arc = contour.arcs[0]
    assert abs(arc.center - 0.25j) < 1e-15
    assert arc.radius > 0.25


@pytest.mark.parametrize('text, position', [
    ('0, 1', 0),
    ('[0, z]', 4),
    ('[0, inf, 1]', 4),
])
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_contour(text)
    assert info.value.position == position


def test_unbalanced_parenthesis():
    with pytest.raises(ParseError):
        parse_contour('[0, (1, 2^+]')


def test_loop_around_a_simple_pole():
    f = BranchedIntegrand(powers=(power(0, -1),))
    for scale in (0.5, 1.0, 2.0):
        result = integrate(f, parse_contour('[0^+]', radius_scale=scale))
        assert_allclose(result.value, 2j * math.pi, atol=1e-10)


def test_gamma_integral_with_graded_endpoint():
    f = BranchedIntegrand(powers=(power(0, -0.3),), exps=(ExpFactor(-1),))
    result = integrate(f, parse_contour('[0, inf['))
    assert_allclose(result.value, special.gamma(0.7), rtol=1e-9)


def test_beta_integral():
    f = BranchedIntegrand(powers=(power(0, -0.4), power(1, 0.4, scale=-1)))
    result = integrate(f, parse_contour('[0, 1]'))
    assert_allclose(result.value, special.beta(0.6, 1.4), rtol=1e-9)


def test_strong_singularity_at_an_upper_endpoint():
    # int_2^5 (t-2)^-0.2 (5-t)^-0.85 dt = 3^-0.05 B(0.8, 0.15)
    f = BranchedIntegrand(powers=(power(2, -0.2), power(5, -0.85, scale=-1)))
    result = integrate(f, parse_contour('[2, 5]'))
    assert_allclose(result.value, 3 ** -0.05 * special.beta(0.8, 0.15), rtol=1e-9)


def test_strong_singularity_at_the_end_of_an_incoming_ray():
    # int_-inf^-1 (-1-t)^-0.8 (-t)^-0.7 dt = B(0.5, 0.2)
    f = BranchedIntegrand(powers=(power(-1, -0.8, scale=-1), power(0, -0.7, scale=-1)))
    result = integrate(f, parse_contour(']-inf, -1]'))
    assert_allclose(result.value, special.beta(0.5, 0.2), rtol=1e-9)


@pytest.mark.parametrize('e', [-0.7, -0.6, -0.55])
def test_slowly_decaying_algebraic_tail(e):
    # int_1^inf (t-1)^-0.5 t^e dt = B(-0.5 - e, 0.5)
    f = BranchedIntegrand(powers=(power(1, -0.5), power(0, e)))
    result = integrate(f, parse_contour('[1, inf['))
    assert result.status is Status.CONVERGED
    assert_allclose(result.value, special.beta(-0.5 - e, 0.5), rtol=1e-9)


def test_hankel_integral():
    f = BranchedIntegrand(powers=(power(0, -0.6),), exps=(ExpFactor(1),))
    result = integrate(f, parse_contour(HANKEL))
    assert_allclose(result.value, 2j * math.pi / special.gamma(0.6), rtol=1e-9)


def test_non_integrable_endpoint():
    f = BranchedIntegrand(powers=(power(0, -1.5),))
    with pytest.raises(NonIntegrableEndpoint):
        integrate(f, parse_contour('[0, 1]'))


def test_ray_without_decay():
    f = BranchedIntegrand(powers=(power(0, 0.5),))
    with pytest.raises(TruncationError):
        integrate(f, parse_contour('[1, inf['))


def test_path_through_a_branch_point():
    f = BranchedIntegrand(powers=(power(0, -0.5),))
    with pytest.raises(DomainError):
        integrate(f, parse_contour('[-1, 1]'))


def test_boundary_terms():
    witness = BranchedIntegrand(powers=(power(0, 0.4),), exps=(ExpFactor(1),))
    assert boundary_term(witness, parse_contour(HANKEL)) == 0
    growing = BranchedIntegrand(powers=(power(0, 0.4),))
    assert cmath.isinf(boundary_term(growing, parse_contour('[1, inf[')))
