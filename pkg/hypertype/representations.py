"""
Integral representations of the hypertype functions, checked by quadrature.

Every entry pairs a contour and a branched integrand with the closed value
the integral equals. verify_representation() integrates along the contour
and compares; loops carry the factor 1/(2 pi i).

Example Usage:
    from hypertype.representations import verify_representation
    check = verify_representation('1f1-euler', {'a': 0.6, 'c': 1.7}, 0.4)
    check.residual          # below 1e-8
"""
import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .config import get_settings
from .contour import BranchedIntegrand, ExpFactor, PowerFactor, boundary_term, integrate, parse_contour, power
from .errors import ParameterConstraintViolated, UsageError
from .families import Family, FamilyParams
from .numeric_core import Status, format_complex, gamma, is_exact_integer, pochhammer, rgamma
from .polynomials import GENERATING_FUNCTIONS, PARAM_NAMES, normalize_params, to_fraction
from .series import Normalization, SolutionKind, hyp0f1, hyp1f1, hyp2f0, hyp2f1, standard_solution

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class Representation:
    id: str
    group: str
    formula: str
    contour: str
    names: tuple
    integrand: Callable
    rhs: Callable
    loop: bool = False
    constraints: tuple = ()
    witness: Callable = None
    singularities: Callable = None
    default: tuple = ({}, 0.5)
    sample: Callable = None

    def to_dict(self):
        return {
            'id': self.id,
            'group': self.group,
            'formula': self.formula,
            'contour': self.contour,
            'parameters': list(self.names),
        }


@dataclass(frozen=True)
class RepresentationCheck:
    rep_id: str
    params: dict
    z: complex
    lhs: complex
    rhs: complex
    residual: float
    quad_error: float = 0.0
    contour: str = ''
    status: Status = Status.CONVERGED

    @property
    def converged(self):
        return self.status is not Status.FAILED

    @property
    def checked_residual(self):
        """The residual, or inf when the integral did not converge."""
        return self.residual if self.converged else math.inf

    def passed(self, tol):
        return self.converged and self.residual <= tol

    def to_dict(self):
        return {
            'rep_id': self.rep_id,
            'params': {k: str(v) for k, v in self.params.items()},
            'z': format_complex(self.z),
            'contour': self.contour,
            'lhs': format_complex(self.lhs),
            'rhs': format_complex(self.rhs),
            'residual': self.residual,
            'quad_error': self.quad_error,
            'status': self.status.value,
        }


def _re(x):
    return complex(x).real


def _c(x):
    return complex(x)


def _exp(coef, power_=1, point=0):
    return ExpFactor(complex(coef), power_, complex(point))


def _integrand(*factors, constant=1, extra=None):
    powers = tuple(f for f in factors if isinstance(f, PowerFactor))
    exps = tuple(f for f in factors if isinstance(f, ExpFactor))
    return BranchedIntegrand(powers, exps, complex(constant), extra)


def _off_ray(z, start, angle=0.0):
    """True when z is off the ray start + e^{i angle} [0, inf)."""
    w = (complex(z) - start) * cmath.exp(-1j * angle)
    return not (w.imag == 0 and w.real >= 0)


def _integer(x):
    return is_exact_integer(x)


def _uniform(rng, lo, hi):
    return float(rng.uniform(lo, hi))


def _z_sample(rng, real, imag=(0.0, 0.0)):
    return complex(_uniform(rng, *real), _uniform(rng, *imag) if imag[1] > imag[0] else 0.0)


# ---------------------------------------------------------------------------
# Gamma and Beta

def _beta(u, v):
    return gamma(u) * gamma(v) * rgamma(u + v)


GAMMA_REPRESENTATIONS = (
    Representation(
        'beta-b0', 'gamma', 'int_0^1 t^(u-1) (1-t)^(v-1) dt = B(u, v)', '[0, 1]', ('u', 'v'),
        lambda p, z: _integrand(power(0, _c(p['u']) - 1), power(1, _c(p['v']) - 1, -1)),
        lambda p, z, tol: _beta(_c(p['u']), _c(p['v'])),
        constraints=(('Re u > 0', lambda p, z: _re(p['u']) > 0), ('Re v > 0', lambda p, z: _re(p['v']) > 0)),
        default=({'u': 0.7, 'v': 1.4}, 0),
        sample=lambda rng: ({'u': _uniform(rng, 0.3, 3), 'v': _uniform(rng, 0.3, 3)}, 0),
    ),
    Representation(
        'beta-b1', 'gamma', 'int_1^inf t^(u-1) (t-1)^(v-1) dt = Gamma(1-u-v) Gamma(v) / Gamma(1-u)',
        '[1, inf[', ('u', 'v'),
        lambda p, z: _integrand(power(0, _c(p['u']) - 1), power(1, _c(p['v']) - 1)),
        lambda p, z, tol: gamma(1 - _c(p['u']) - _c(p['v'])) * gamma(_c(p['v'])) * rgamma(1 - _c(p['u'])),
        constraints=(('Re v > 0', lambda p, z: _re(p['v']) > 0),
                     ('Re(u + v) < 1', lambda p, z: _re(p['u']) + _re(p['v']) < 1)),
        default=({'u': -0.8, 'v': 0.6}, 0),
        sample=lambda rng: _sample_b1(rng),
    ),
    Representation(
        'beta-b2', 'gamma', '1/(2 pi i) int t^(u-1) (1-t)^(v-1) dt = Gamma(1-u-v) / (Gamma(1-u) Gamma(1-v))',
        ']-inf, 0^+, -inf[', ('u', 'v'),
        lambda p, z: _integrand(power(0, _c(p['u']) - 1), power(1, _c(p['v']) - 1, -1)),
        lambda p, z, tol: gamma(1 - _c(p['u']) - _c(p['v'])) * rgamma(1 - _c(p['u'])) * rgamma(1 - _c(p['v'])),
        loop=True,
        constraints=(('Re(u + v) < 1', lambda p, z: _re(p['u']) + _re(p['v']) < 1),),
        default=({'u': 0.3, 'v': 0.25}, 0),
        sample=lambda rng: _sample_b2(rng),
    ),
    Representation(
        'beta-put', 'gamma',
        '1/(2 pi i) int t^(u-1) (1-t)^(v-1) dt = e^(i pi u) Gamma(v) / (Gamma(1-u) Gamma(u+v))',
        ']1, 0^+, 1]', ('u', 'v'),
        lambda p, z: _integrand(power(0, _c(p['u']) - 1), power(1, _c(p['v']) - 1, -1)),
        lambda p, z, tol: (cmath.exp(1j * math.pi * _c(p['u'])) * gamma(_c(p['v']))
                           * rgamma(1 - _c(p['u'])) * rgamma(_c(p['u']) + _c(p['v']))),
        loop=True,
        constraints=(('Re v > 0', lambda p, z: _re(p['v']) > 0),),
        default=({'u': -0.4, 'v': 1.3}, 0),
        sample=lambda rng: ({'u': _uniform(rng, -2.5, 2.5), 'v': _uniform(rng, 0.3, 2.5)}, 0),
    ),
    Representation(
        'hankel', 'gamma', '1/(2 pi i) int e^t t^(z-1) dt = 1 / Gamma(1-z)', '[-inf, 0^+, -inf[', (),
        lambda p, z: _integrand(_exp(1), power(0, _c(z) - 1)),
        lambda p, z, tol: rgamma(1 - _c(z)),
        loop=True,
        default=({}, 0.35),
        sample=lambda rng: ({}, _z_sample(rng, (-2.5, 2.5), (-1, 1))),
    ),
    Representation(
        'sqrt-pi-1', 'gamma', 'int_-1^1 (1-s^2)^(u-1) ds = Gamma(u) sqrt(pi) / Gamma(u+1/2)', '[-1, 1]', ('u',),
        lambda p, z: _integrand(PowerFactor(_c(p['u']) - 1, (1 + 0j, -1 + 0j), (), -1 + 0j)),
        lambda p, z, tol: gamma(_c(p['u'])) * SQRT_PI * rgamma(_c(p['u']) + 0.5),
        constraints=(('Re u > 0', lambda p, z: _re(p['u']) > 0),),
        default=({'u': 0.6}, 0),
        sample=lambda rng: ({'u': _uniform(rng, 0.3, 3)}, 0),
    ),
    Representation(
        'sqrt-pi-2', 'gamma',
        'int_1^inf (s^2-1)^(u-1) ds = Gamma(u) sqrt(pi) / (2 cos(pi u) Gamma(u+1/2))', '[1, inf[', ('u',),
        lambda p, z: _integrand(PowerFactor(_c(p['u']) - 1, (1 + 0j, -1 + 0j))),
        lambda p, z, tol: (gamma(_c(p['u'])) * SQRT_PI * rgamma(_c(p['u']) + 0.5)
                           / (2 * cmath.cos(math.pi * _c(p['u'])))),
        constraints=(('0 < Re u < 1/2', lambda p, z: 0 < _re(p['u']) < 0.5),),
        default=({'u': 0.3}, 0),
        sample=lambda rng: ({'u': _uniform(rng, 0.15, 0.4)}, 0),
    ),
)


def _sample_b1(rng):
    v = _uniform(rng, 0.3, 1.5)
    return {'u': _uniform(rng, -2.0, 0.7 - v), 'v': v}, 0


def _sample_b2(rng):
    u = _uniform(rng, -1.5, 0.9)
    return {'u': u, 'v': _uniform(rng, -1.5, 0.7 - u)}, 0


def gamma_identity_checks(tol=None):
    """Every Gamma and Beta representation at its default point."""
    return [verify_representation(rep.id, rep.default[0], rep.default[1], tol=tol)
            for rep in GAMMA_REPRESENTATIONS]


# ---------------------------------------------------------------------------
# the six families

def _p2f1(p):
    return FamilyParams.from_classical(Family.HYP2F1, _c(p['a']), _c(p['b']), _c(p['c']))


def _euler_2f1(p, z, sign=1):
    """t^(b-c) (t-1)^(c-a-1) (t-z)^(-b), each base multiplied by `sign`."""
    a, b, c = _c(p['a']), _c(p['b']), _c(p['c'])
    return (power(0, b - c, sign), power(1, c - a - 1, sign), power(z, -b, sign))


def _euler_witness_2f1(p, z, sign=1):
    a, b, c = _c(p['a']), _c(p['b']), _c(p['c'])
    return _integrand(power(0, b - c + 1, sign), power(1, c - a, sign), power(z, -b - 1, sign))


def _rhs_2f1_at0_alpha(p, z, tol):
    a, b, c = _c(p['a']), _c(p['b']), _c(p['c'])
    shifted = FamilyParams.from_classical(Family.HYP2F1, 1 + b - c, 1 + a - c, 2 - c)
    inner = standard_solution(SolutionKind.HYP2F1_AT0_INDEX0, shifted, z, Normalization.BOLD_I, tol=tol)
    return cmath.exp((1 - c) * cmath.log(complex(z))) * inner.value


def _rhs_2f1_at1(p, z, tol):
    a, b, c = _c(p['a']), _c(p['b']), _c(p['c'])
    swapped = FamilyParams.from_classical(Family.HYP2F1, a, b, 1 + a + b - c)
    return standard_solution(SolutionKind.HYP2F1_AT0_INDEX0, swapped, 1 - complex(z), Normalization.BOLD_I,
                             tol=tol).value


def _sample_2f1(rng, z_real=(-0.7, 0.7)):
    a = _uniform(rng, 0.3, 1.8)
    return ({'a': a, 'b': _uniform(rng, -0.9, 1.5), 'c': a + _uniform(rng, 0.3, 1.5)},
            _z_sample(rng, z_real, (-0.3, 0.3)))


def _sample_2f1_at0(rng):
    b = _uniform(rng, -0.9, 0.7)
    return ({'a': _uniform(rng, -1.0, 1.5), 'b': b, 'c': b + _uniform(rng, -0.6, 0.7)},
            _z_sample(rng, (0.1, 0.8), (-0.3, 0.3)))


def _sample_2f1_at1(rng):
    b = _uniform(rng, -0.6, 1.2)
    return ({'a': _uniform(rng, 0.3, 1.5), 'b': b, 'c': b + _uniform(rng, -0.6, 0.6)},
            _z_sample(rng, (0.2, 1.6), (-0.3, 0.3)))


def _rhs_2f1_degenerate(p, z, tol):
    a, b, m = _c(p['a']), _c(p['b']), int(round(_re(p['m'])))
    shifted = FamilyParams.from_classical(Family.HYP2F1, a + m, b, 1 + m)
    return pochhammer(a, m) * hyp2f1(shifted, z, Normalization.BOLD, tol=tol).value


HYP2F1_REPRESENTATIONS = (
    Representation(
        '2f1-euler', '2f1', 'int_1^inf t^(b-c) (t-1)^(c-a-1) (t-z)^(-b) dt = F^I(a, b; c; z)', '[1, inf[',
        ('a', 'b', 'c'),
        lambda p, z: _integrand(*_euler_2f1(p, z)),
        lambda p, z, tol: standard_solution(SolutionKind.HYP2F1_AT0_INDEX0, _p2f1(p), z, Normalization.BOLD_I,
                                            tol=tol).value,
        constraints=(('Re a > 0', lambda p, z: _re(p['a']) > 0),
                     ('Re(c - a) > 0', lambda p, z: _re(p['c']) - _re(p['a']) > 0),
                     ('z off [1, inf)', lambda p, z: _off_ray(z, 1))),
        witness=_euler_witness_2f1,
        default=({'a': 0.5, 'b': 0.3, 'c': 1.6}, 0.4),
        sample=_sample_2f1,
    ),
    Representation(
        '2f1-loop', '2f1',
        '1/(2 pi i) int (-t)^(b-c) (1-t)^(c-a-1) (z-t)^(-b) dt = -sin(pi a)/pi F^I(a, b; c; z)',
        '[1, (z,0)^+, 1]', ('a', 'b', 'c'),
        lambda p, z: _integrand(*_euler_2f1(p, z, -1)),
        lambda p, z, tol: (-gamma(_c(p['c']) - _c(p['a'])) * rgamma(1 - _c(p['a']))
                           * hyp2f1(_p2f1(p), z, Normalization.BOLD, tol=tol).value),
        loop=True,
        constraints=(('Re(c - a) > 0', lambda p, z: _re(p['c']) - _re(p['a']) > 0),
                     ('|z| < 1', lambda p, z: abs(complex(z)) < 1)),
        witness=lambda p, z: _euler_witness_2f1(p, z, -1),
        default=({'a': 1.3, 'b': 0.4, 'c': 2.1}, 0.3),
        sample=lambda rng: _sample_2f1(rng, (-0.6, 0.6)),
    ),
    Representation(
        '2f1-at0-alpha', '2f1',
        'int_0^z t^(b-c) (1-t)^(c-a-1) (z-t)^(-b) dt = z^(1-c) F^I(1+b-c, 1+a-c; 2-c; z)', '[0, z]',
        ('a', 'b', 'c'),
        lambda p, z: _integrand(power(0, _c(p['b']) - _c(p['c'])), power(1, _c(p['c']) - _c(p['a']) - 1, -1),
                                power(z, -_c(p['b']), -1)),
        _rhs_2f1_at0_alpha,
        constraints=(('Re(1 + b - c) > 0', lambda p, z: 1 + _re(p['b']) - _re(p['c']) > 0),
                     ('Re b < 1', lambda p, z: _re(p['b']) < 1),
                     ('z off (-inf, 0] and [1, inf)',
                      lambda p, z: _off_ray(z, 0, math.pi) and _off_ray(z, 1))),
        default=({'a': 0.4, 'b': 0.3, 'c': 0.8}, 0.5),
        sample=_sample_2f1_at0,
    ),
    Representation(
        '2f1-at1', '2f1',
        'int_-inf^0 (-t)^(b-c) (1-t)^(c-a-1) (z-t)^(-b) dt = F^I(a, b; 1+a+b-c; 1-z)', ']-inf, 0]',
        ('a', 'b', 'c'),
        lambda p, z: _integrand(*_euler_2f1(p, z, -1)),
        _rhs_2f1_at1,
        constraints=(('Re a > 0', lambda p, z: _re(p['a']) > 0),
                     ('Re(1 + b - c) > 0', lambda p, z: 1 + _re(p['b']) - _re(p['c']) > 0),
                     ('z off (-inf, 0]', lambda p, z: _off_ray(z, 0, math.pi))),
        witness=lambda p, z: _euler_witness_2f1(p, z, -1),
        default=({'a': 0.7, 'b': 0.4, 'c': 1.1}, 0.6),
        sample=_sample_2f1_at1,
    ),
    Representation(
        '2f1-degenerate', '2f1',
        '1/(2 pi i) int (1-t)^(-a) (1-z/t)^(-b) t^(-m-1) dt = (a)_m Bold F(a+m, b; 1+m; z)', '[(0,z)^+]',
        ('a', 'b', 'm'),
        lambda p, z: _integrand(power(1, -_c(p['a']), -1),
                                PowerFactor(-_c(p['b']), (complex(z),), (0j,)),
                                power(0, -int(round(_re(p['m']))) - 1)),
        _rhs_2f1_degenerate,
        loop=True,
        constraints=(('m an integer', lambda p, z: _integer(p['m'])),
                     ('|z| < 1', lambda p, z: abs(complex(z)) < 1)),
        witness=lambda p, z: _integrand(power(1, 1 - _c(p['a']), -1),
                                        PowerFactor(-_c(p['b']), (complex(z),), (0j,)),
                                        power(0, -int(round(_re(p['m']))))),
        default=({'a': 0.4, 'b': 0.7, 'm': 2}, 0.3),
        sample=lambda rng: ({'a': _uniform(rng, -1.5, 1.5), 'b': _uniform(rng, -1.5, 1.5),
                             'm': int(rng.integers(-2, 4))}, _z_sample(rng, (-0.5, 0.5), (-0.3, 0.3))),
    ),
)


def _p1f1(p):
    return FamilyParams.from_classical(Family.HYP1F1, _c(p['a']), _c(p['c']))


def _sample_1f1(rng):
    a = _uniform(rng, 0.3, 2.0)
    return {'a': a, 'c': a + _uniform(rng, 0.3, 1.5)}, _z_sample(rng, (-1.5, 1.5), (-0.5, 0.5))


def _m(p):
    return int(round(_re(p['m'])))


HYP1F1_REPRESENTATIONS = (
    Representation(
        '1f1-euler', '1f1', 'int_1^inf e^(z/t) t^(-c) (t-1)^(c-a-1) dt = F^I(a; c; z)', '[1, inf[', ('a', 'c'),
        lambda p, z: _integrand(_exp(z, -1), power(0, -_c(p['c'])), power(1, _c(p['c']) - _c(p['a']) - 1)),
        lambda p, z, tol: hyp1f1(_p1f1(p), z, Normalization.BOLD_I, tol=tol).value,
        constraints=(('Re a > 0', lambda p, z: _re(p['a']) > 0),
                     ('Re(c - a) > 0', lambda p, z: _re(p['c']) - _re(p['a']) > 0)),
        witness=lambda p, z: _integrand(_exp(z, -1), power(0, -_c(p['c'])), power(1, _c(p['c']) - _c(p['a']))),
        default=({'a': 0.6, 'c': 1.7}, 0.4),
        sample=_sample_1f1,
    ),
    Representation(
        '1f1-loop', '1f1',
        '1/(2 pi i) int e^(z/t) (-t)^(-c) (1-t)^(c-a-1) dt = -sin(pi a)/pi F^I(a; c; z)', '[1, 0^+, 1]',
        ('a', 'c'),
        lambda p, z: _integrand(_exp(z, -1), power(0, -_c(p['c']), -1),
                                power(1, _c(p['c']) - _c(p['a']) - 1, -1)),
        lambda p, z, tol: (-gamma(_c(p['c']) - _c(p['a'])) * rgamma(1 - _c(p['a']))
                           * hyp1f1(_p1f1(p), z, Normalization.BOLD, tol=tol).value),
        loop=True,
        constraints=(('Re(c - a) > 0', lambda p, z: _re(p['c']) - _re(p['a']) > 0),
                     ('|z| <= 1', lambda p, z: abs(complex(z)) <= 1)),
        witness=lambda p, z: _integrand(_exp(z, -1), power(0, -_c(p['c']), -1),
                                        power(1, _c(p['c']) - _c(p['a']), -1)),
        default=({'a': 1.4, 'c': 2.3}, 0.5),
        sample=lambda rng: ({'a': (a := _uniform(rng, -1.5, 2.5)), 'c': a + _uniform(rng, 0.3, 1.5)},
                            _z_sample(rng, (-0.8, 0.8), (-0.4, 0.4))),
    ),
    Representation(
        '1f1-hankel', '1f1', '1/(2 pi i) int t^(a-c) e^t (t-z)^(-a) dt = Bold F(a; c; z)',
        ']-inf, (0,z)^+, -inf[', ('a', 'c'),
        lambda p, z: _integrand(power(0, _c(p['a']) - _c(p['c'])), _exp(1), power(z, -_c(p['a']))),
        lambda p, z, tol: hyp1f1(_p1f1(p), z, Normalization.BOLD, tol=tol).value,
        loop=True,
        witness=lambda p, z: _integrand(power(0, _c(p['a']) - _c(p['c']) + 1), _exp(1), power(z, -_c(p['a']) - 1)),
        default=({'a': 0.8, 'c': 2.5}, 0.7),
        sample=lambda rng: ({'a': _uniform(rng, -1.5, 2.0), 'c': _uniform(rng, -1.0, 3.0)},
                            _z_sample(rng, (-1.0, 1.0), (-0.5, 0.5))),
    ),
    Representation(
        '1f1-degenerate-1', '1f1', '1/(2 pi i) int e^t (1-z/t)^(-a) t^(-m-1) dt = Bold F(a; 1+m; z)',
        '[(z,0)^+]', ('a', 'm'),
        lambda p, z: _integrand(_exp(1), PowerFactor(-_c(p['a']), (complex(z),), (0j,)), power(0, -_m(p) - 1)),
        lambda p, z, tol: hyp1f1(FamilyParams.from_classical(Family.HYP1F1, _c(p['a']), 1 + _m(p)), z,
                                 Normalization.BOLD, tol=tol).value,
        loop=True,
        constraints=(('m an integer', lambda p, z: _integer(p['m'])),),
        witness=lambda p, z: _integrand(_exp(1), PowerFactor(-_c(p['a']), (complex(z),), (0j,)), power(0, -_m(p))),
        default=({'a': 0.6, 'm': 1}, 0.8),
        sample=lambda rng: ({'a': _uniform(rng, -1.5, 2.0), 'm': int(rng.integers(-2, 4))},
                            _z_sample(rng, (-1.0, 1.0), (-0.5, 0.5))),
    ),
    Representation(
        '1f1-degenerate-2', '1f1',
        '1/(2 pi i) int e^(z/t) (1-t)^(-a) t^(-m-1) dt = (a)_m Bold F(a+m; 1+m; z)', '[0^+]', ('a', 'm'),
        lambda p, z: _integrand(_exp(z, -1), power(1, -_c(p['a']), -1), power(0, -_m(p) - 1)),
        lambda p, z, tol: pochhammer(_c(p['a']), _m(p)) * hyp1f1(
            FamilyParams.from_classical(Family.HYP1F1, _c(p['a']) + _m(p), 1 + _m(p)), z,
            Normalization.BOLD, tol=tol).value,
        loop=True,
        constraints=(('m an integer', lambda p, z: _integer(p['m'])),
                     ('|z| <= 1', lambda p, z: abs(complex(z)) <= 1)),
        witness=lambda p, z: _integrand(_exp(z, -1), power(1, 1 - _c(p['a']), -1), power(0, -_m(p))),
        default=({'a': 0.6, 'm': 2}, 0.5),
        sample=lambda rng: ({'a': _uniform(rng, -1.5, 2.0), 'm': int(rng.integers(-2, 4))},
                            _z_sample(rng, (-0.8, 0.8), (-0.3, 0.3))),
    ),
)


HYP2F0_REPRESENTATIONS = (
    Representation(
        '2f0-laplace', '2f0', 'int_0^inf e^(-1/t) t^(b-a-1) (t-z)^(-b) dt = Gamma(a) F(a, b; -; z)', '[0, inf[',
        ('a', 'b'),
        lambda p, z: _integrand(_exp(-1, -1), power(0, _c(p['b']) - _c(p['a']) - 1), power(z, -_c(p['b']))),
        lambda p, z, tol: gamma(_c(p['a'])) * hyp2f0(
            FamilyParams.from_classical(Family.HYP2F0, _c(p['a']), _c(p['b'])), z, tol=tol).value,
        constraints=(('Re a > 0', lambda p, z: _re(p['a']) > 0),
                     ('z off [0, inf)', lambda p, z: _off_ray(z, 0))),
        witness=lambda p, z: _integrand(_exp(-1, -1), power(0, _c(p['b']) - _c(p['a']) + 1),
                                        power(z, -_c(p['b']) - 1)),
        default=({'a': 0.7, 'b': 1.2}, -0.5),
        sample=lambda rng: ({'a': _uniform(rng, 0.3, 2.0), 'b': _uniform(rng, -1.0, 2.0)},
                            _z_sample(rng, (-2.0, -0.1), (-0.5, 0.5))),
    ),
)


def _p0f1(p):
    return FamilyParams.from_classical(Family.HYP0F1, _c(p['c']))


HYP0F1_REPRESENTATIONS = (
    Representation(
        '0f1-schlafli', '0f1', '1/(2 pi i) int e^t e^(z/t) t^(-c) dt = Bold F(c; z)', ']-inf, 0^+, -inf[', ('c',),
        lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_c(p['c']))),
        lambda p, z, tol: hyp0f1(_p0f1(p), z, Normalization.BOLD, tol=tol).value,
        loop=True,
        constraints=(('Re z > 0', lambda p, z: complex(z).real > 0),),
        witness=lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_c(p['c']))),
        default=({'c': 1.3}, 0.6),
        sample=lambda rng: ({'c': _uniform(rng, -1.5, 3.0)}, _z_sample(rng, (0.1, 1.0), (-0.5, 0.5))),
    ),
    Representation(
        '0f1-poisson', '0f1',
        'int_-1^1 (1-t^2)^(c-3/2) e^(2t sqrt z) dt = Gamma(c-1/2) sqrt(pi) Bold F(c; z)', '[-1, 1]', ('c',),
        lambda p, z: _integrand(PowerFactor(_c(p['c']) - 1.5, (1 + 0j, -1 + 0j), (), -1 + 0j),
                                _exp(2 * cmath.sqrt(complex(z)))),
        lambda p, z, tol: gamma(_c(p['c']) - 0.5) * SQRT_PI * hyp0f1(_p0f1(p), z, Normalization.BOLD, tol=tol).value,
        constraints=(('Re c > 1/2', lambda p, z: _re(p['c']) > 0.5),),
        witness=lambda p, z: _integrand(PowerFactor(_c(p['c']) - 0.5, (1 + 0j, -1 + 0j), (), -1 + 0j),
                                        _exp(2 * cmath.sqrt(complex(z)))),
        default=({'c': 1.8}, 0.5),
        sample=lambda rng: ({'c': _uniform(rng, 0.6, 3.0)}, _z_sample(rng, (-2.0, 2.0), (-1.0, 1.0))),
    ),
    Representation(
        '0f1-tilde', '0f1', 'int_-inf^0 e^t e^(z/t) (-t)^(-c) dt = sqrt(pi) tilde F(c; z)', ']-inf, 0]', ('c',),
        lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_c(p['c']), -1)),
        lambda p, z, tol: SQRT_PI * standard_solution(SolutionKind.HYP0F1_TILDE_AT_INF, _p0f1(p), z, tol=tol).value,
        constraints=(('Re z > 0', lambda p, z: complex(z).real > 0),),
        witness=lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_c(p['c']), -1)),
        default=({'c': 1.5}, 2.0),
        sample=lambda rng: ({'c': _uniform(rng, -1.0, 2.5)}, _z_sample(rng, (1.0, 4.0), (-0.5, 0.5))),
    ),
    Representation(
        '0f1-bessel', '0f1', '1/(2 pi i) int e^(t + z/t) t^(-m-1) dt = Bold F(1+m; z)', '[0^+]', ('m',),
        lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_m(p) - 1)),
        lambda p, z, tol: hyp0f1(FamilyParams.from_classical(Family.HYP0F1, 1 + _m(p)), z,
                                 Normalization.BOLD, tol=tol).value,
        loop=True,
        constraints=(('m an integer', lambda p, z: _integer(p['m'])),),
        witness=lambda p, z: _integrand(_exp(1), _exp(z, -1), power(0, -_m(p))),
        default=({'m': 1}, 0.7),
        sample=lambda rng: ({'m': int(rng.integers(-2, 4))}, _z_sample(rng, (-1.0, 1.0), (-0.5, 0.5))),
    ),
)


def _pgeg(p):
    return FamilyParams.from_lie(Family.GEGENBAUER, _c(p['alpha']), _c(p['lam']))


def _ka2a_roots(z):
    r = cmath.sqrt(complex(z) ** 2 - 1)
    return (-complex(z) + r, -complex(z) - r)


def _sample_gegenbauer(rng, z_real):
    alpha = _uniform(rng, 0.0, 1.5)
    return ({'alpha': alpha, 'lam': _uniform(rng, -0.35, alpha + 0.3)},
            _z_sample(rng, z_real, (-0.3, 0.3)))


GEGENBAUER_REPRESENTATIONS = (
    Representation(
        'gegenbauer-ka1a', 'gegenbauer',
        'int_-inf^-1 (t^2-1)^(lam-1/2) (z-t)^(-1/2-alpha-lam) dt = S^I_{alpha,lam}(z)', ']-inf, -1]',
        ('alpha', 'lam'),
        lambda p, z: _integrand(PowerFactor(_c(p['lam']) - 0.5, (1 + 0j, -1 + 0j)),
                                power(z, -0.5 - _c(p['alpha']) - _c(p['lam']), -1)),
        lambda p, z, tol: standard_solution(SolutionKind.GEGENBAUER_AT1_INDEX0, _pgeg(p), z, Normalization.BOLD_I,
                                            tol=tol).value,
        constraints=(('Re lam > -1/2', lambda p, z: _re(p['lam']) > -0.5),
                     ('Re alpha + 1/2 > Re lam', lambda p, z: _re(p['alpha']) + 0.5 > _re(p['lam'])),
                     ('z off (-inf, -1]', lambda p, z: _off_ray(z, -1, math.pi))),
        witness=lambda p, z: _integrand(PowerFactor(_c(p['lam']) + 0.5, (1 + 0j, -1 + 0j)),
                                        power(z, -1.5 - _c(p['alpha']) - _c(p['lam']), -1)),
        default=({'alpha': 0.7, 'lam': 0.3}, 0.4),
        sample=lambda rng: _sample_gegenbauer(rng, (-0.5, 1.5)),
    ),
    Representation(
        'gegenbauer-ka2a', 'gegenbauer',
        'int_0^inf (t^2+2tz+1)^(-alpha-1/2) t^(alpha+lam-1/2) dt = S^II_{alpha,lam}(z)', '[0, inf[',
        ('alpha', 'lam'),
        lambda p, z: _integrand(PowerFactor(-_c(p['alpha']) - 0.5, _ka2a_roots(z)),
                                power(0, _c(p['alpha']) + _c(p['lam']) - 0.5)),
        lambda p, z, tol: standard_solution(SolutionKind.GEGENBAUER_AT1_INDEX0, _pgeg(p), z, Normalization.BOLD_II,
                                            tol=tol).value,
        constraints=(('Re alpha + 1/2 > |Re lam|', lambda p, z: _re(p['alpha']) + 0.5 > abs(_re(p['lam']))),
                     ('z off (-inf, -1]', lambda p, z: _off_ray(z, -1, math.pi))),
        default=({'alpha': 0.8, 'lam': 0.2}, 0.3),
        sample=lambda rng: ({'alpha': (alpha := _uniform(rng, 0.0, 1.5)),
                             'lam': _uniform(rng, -alpha - 0.3, alpha + 0.3)},
                            _z_sample(rng, (-0.6, 1.5), (-0.3, 0.3))),
    ),
)


HERMITE_REPRESENTATIONS = (
    Representation(
        'hermite-laplace', 'hermite', 'int_0^inf e^(-t^2-2tz) t^(lam-1/2) dt = S^I_lam(z)', '[0, inf[', ('lam',),
        lambda p, z: _integrand(_exp(-1, 2), _exp(-2 * complex(z)), power(0, _c(p['lam']) - 0.5)),
        lambda p, z, tol: standard_solution(SolutionKind.HERMITE_AT_PLUS_INF,
                                            FamilyParams.from_lie(Family.HERMITE, _c(p['lam'])), z,
                                            Normalization.BOLD_I, tol=tol).value,
        constraints=(('Re lam > -1/2', lambda p, z: _re(p['lam']) > -0.5),
                     ('z off (-inf, 0]', lambda p, z: _off_ray(z, 0, math.pi))),
        witness=lambda p, z: _integrand(_exp(-1, 2), _exp(-2 * complex(z)), power(0, _c(p['lam']) + 0.5)),
        default=({'lam': 0.4}, 1.5),
        sample=lambda rng: ({'lam': _uniform(rng, -0.3, 2.0)}, _z_sample(rng, (0.8, 3.0), (-0.5, 0.5))),
    ),
)


# ---------------------------------------------------------------------------
# polynomials as Cauchy coefficients of their generating functions

# parameters at which the n-th coefficient of a generating function is the
# family polynomial P^{params}_n (times 2^n for gegenbauer1)
_COEFFICIENT_SHIFTS = {
    'gegenbauer1': lambda p, n: (-p[0] - n,),
    'laguerre-1': lambda p, n: (p[0] + n,),
    'jacobi-1': lambda p, n: (p[0] + n, p[1] + n),
    'jacobi-2': lambda p, n: (p[0] + n, p[1]),
    'jacobi-3': lambda p, n: (p[0], p[1] + n),
    'bessel-1': lambda p, n: (p[0] + n,),
    'bessel-2': lambda p, n: (p[0] + 2 * n,),
}


def _shifted(entry, p, n):
    values = normalize_params(entry.family, [p[name] for name in PARAM_NAMES[entry.family]])
    shift = _COEFFICIENT_SHIFTS.get(entry.id)
    return shift(values, n) if shift else values


def _loop_n(p):
    return int(round(_re(p['n'])))


def _loop_representation(entry):
    names = PARAM_NAMES[entry.family] + ('n',)

    def integrand(p, z):
        n = _loop_n(p)
        gp = _shifted(entry, p, n)
        zf = float(to_fraction(z))
        return _integrand(power(0, -n - 1), extra=lambda t: entry.value(gp, zf, t))

    def rhs(p, z, tol):
        n = _loop_n(p)
        return complex(entry.coefficient(_shifted(entry, p, n), to_fraction(z), n))

    def singularities(p, z):
        gp = _shifted(entry, p, _loop_n(p))
        points = []
        for coeffs in entry.singular(gp, to_fraction(z)):
            points.extend(complex(r) for r in np.roots([complex(c) for c in reversed(coeffs)]))
        return points

    defaults = {name: Fraction(1, 3) for name in PARAM_NAMES[entry.family]}
    defaults['n'] = max(3, entry.start)
    return Representation(
        f'loop-{entry.id}', 'polynomial', f'1/(2 pi i) int [{entry.formula}] t^(-n-1) dt', '[0^+]', names,
        integrand, rhs, loop=True,
        constraints=(('n an integer >= start', lambda p, z: _integer(p['n']) and _loop_n(p) >= entry.start),
                     ('z real', lambda p, z: complex(z).imag == 0)),
        singularities=singularities,
        default=(defaults, Fraction(1, 4)),
        sample=lambda rng: ({**{name: Fraction(int(rng.integers(-6, 7)), 4) for name in PARAM_NAMES[entry.family]},
                             'n': int(rng.integers(max(1, entry.start), 6))},
                            Fraction(int(rng.integers(-3, 4)), 5)),
    )


POLYNOMIAL_REPRESENTATIONS = tuple(_loop_representation(entry) for entry in GENERATING_FUNCTIONS)

REPRESENTATIONS = (GAMMA_REPRESENTATIONS + HYP2F1_REPRESENTATIONS + HYP1F1_REPRESENTATIONS
                   + HYP2F0_REPRESENTATIONS + HYP0F1_REPRESENTATIONS + GEGENBAUER_REPRESENTATIONS
                   + HERMITE_REPRESENTATIONS + POLYNOMIAL_REPRESENTATIONS)

_BY_ID = {rep.id: rep for rep in REPRESENTATIONS}


def representation(rep_id):
    try:
        return _BY_ID[rep_id]
    except KeyError:
        raise UsageError(f"Unknown representation {rep_id!r}; try one of {', '.join(list(_BY_ID)[:8])}, ...") from None


def list_representations(group=None):
    return [rep for rep in REPRESENTATIONS if group is None or rep.group == group]


def _bind(rep, params):
    params = dict(params or {})
    unknown = set(params) - set(rep.names)
    if unknown:
        raise UsageError(f"{rep.id} has no parameter(s) {', '.join(sorted(unknown))}; it takes {', '.join(rep.names)}")
    missing = [n for n in rep.names if n not in params]
    if missing:
        raise UsageError(f"{rep.id} needs {', '.join(missing)}")
    return params


def check_constraints(rep, params, z):
    failed = [text for text, holds in rep.constraints if not holds(params, z)]
    if failed:
        raise ParameterConstraintViolated(f"{rep.id} requires {'; '.join(failed)}")


def _contour(rep, params, z, contour, radius_scale):
    integrand = rep.integrand(params, z)
    points = integrand.singular_points()
    if rep.singularities is not None:
        points = points + list(rep.singularities(params, z))
    gamma_ = parse_contour(contour or rep.contour, anchors={'z': complex(z)}, singularities=points,
                           radius_scale=radius_scale)
    return integrand, gamma_


def evaluate_representation(rep_id, params, z=0, tol=None, contour=None, radius_scale=1.0):
    """The integral side of a representation, with 1/(2 pi i) applied to loops."""
    rep = representation(rep_id)
    params = _bind(rep, params)
    check_constraints(rep, params, z)
    integrand, gamma_ = _contour(rep, params, z, contour, radius_scale)
    result = integrate(integrand, gamma_, tol)
    if rep.loop:
        result = result.scaled(1 / (2j * math.pi))
    return result


def verify_representation(rep_id, params, z=0, tol=None, contour=None, radius_scale=1.0):
    """
    Integrate a representation and compare it with its closed side.

    The residual is |lhs - rhs| / max(1, |rhs|).

    Raises:
        ParameterConstraintViolated: the parameters are outside the validity region
        UsageError: unknown id or parameter names
    """
    rep = representation(rep_id)
    params = _bind(rep, params)
    tol = get_settings().tol if tol is None else tol
    result = evaluate_representation(rep_id, params, z, tol, contour, radius_scale)
    rhs = complex(rep.rhs(params, z, tol))
    residual = abs(result.value - rhs) / max(1.0, abs(rhs))
    logger.info("representation %s at %s, z=%s: residual %.3g", rep_id, params, z, residual)
    if result.status is Status.FAILED:
        logger.warning("representation %s: the quadrature did not converge (error %.3g)", rep_id,
                       result.err_estimate)
    return RepresentationCheck(rep_id, params, complex(z), result.value, rhs, residual, result.err_estimate,
                               contour or rep.contour, result.status)


def representation_boundary_term(rep_id, params, z=0, contour=None):
    """The witness difference across the contour; zero on admissible contours."""
    rep = representation(rep_id)
    if rep.witness is None:
        raise UsageError(f"{rep_id} has no boundary witness")
    params = _bind(rep, params)
    _, gamma_ = _contour(rep, params, z, contour, 1.0)
    return boundary_term(rep.witness(params, z), gamma_)


def radius_independence(rep_id, params, z=0, tol=None, factor=0.5):
    """|I(r) - I(factor r)| for the default bypass radii of a loop contour."""
    first = evaluate_representation(rep_id, params, z, tol)
    second = evaluate_representation(rep_id, params, z, tol, radius_scale=factor)
    return abs(first.value - second.value)


def sample_representation(rep, rng, attempts=50):
    """Admissible random (params, z) for `rep`."""
    if rep.sample is None:
        return rep.default
    for _ in range(attempts):
        params, z = rep.sample(rng)
        if all(holds(params, z) for _, holds in rep.constraints):
            return params, z
    return rep.default
