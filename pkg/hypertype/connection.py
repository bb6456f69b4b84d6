"""
Connection formulas and the degenerate (integer index difference) case.

A connection formula writes a standard solution living at 1, at infinity or
at the ends of the real line as c1 * basis1 + c2 * basis2, the basis being
the two solutions at 0 (basic families) or the even and odd solutions
(Gegenbauer, Hermite). Every side is evaluated by series in its own domain,
so the check point has to lie where all three are available.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters, OutOfDomain, UsageError
from .expressions import Expression, IDENTITY_MAP, InnerWhippleMap, PowerFactor, Prefactor
from .families import HALF, Family, FamilyParams
from .numeric_core import format_complex, nearest_integer, pochhammer, rgamma
from .series import (
    Normalization, SolutionKind, evaluate_expression, generalized_series, gegenbauer_even, gegenbauer_odd,
    hermite_even, hermite_odd, solution_expression, standard_solution,
)

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
QUARTER = Fraction(1, 4)
POLE_DISTANCE = 1e-6

K = SolutionKind


@dataclass(frozen=True)
class ConnectionCoefficients:
    family: Family
    lhs: SolutionKind
    lhs_label: str
    basis: tuple
    coefficients: tuple

    def to_dict(self):
        return {
            'family': self.family.value,
            'lhs': str(self.lhs),
            'lhs_expression': self.lhs_label,
            'basis': list(self.basis),
            'coefficients': [format_complex(c) for c in self.coefficients],
        }


@dataclass(frozen=True)
class ConnectionCheck:
    lhs: complex
    rhs: complex
    residual: float

    def passed(self, tol):
        return self.residual <= tol

    def to_dict(self):
        return {'lhs': format_complex(self.lhs), 'rhs': format_complex(self.rhs), 'residual': self.residual}


def _pi_over_sin(x, what):
    """pi / sin(pi x), refusing x within POLE_DISTANCE of an integer."""
    k, gap = nearest_integer(x)
    if gap < POLE_DISTANCE:
        raise DegenerateParameters(f"{what}: sin(pi*{x}) vanishes (nearest integer {k})")
    return math.pi / cmath.sin(math.pi * complex(x))


def _rg(*args):
    out = 1 + 0j
    for x in args:
        out *= rgamma(x)
    return out


# ---------------------------------------------------------------------------
# coefficient tables

_BASIS_2F1 = ('F_{a,b,m}(z)', 'z^{-a} F_{-a,b,-m}(z)')
_BASIS_2F1_MINUS = ('F_{a,b,m}(z)', '(-z)^{-a} F_{-a,b,-m}(z)')


def _coefficients_2f1(kind, params):
    alpha, beta, mu = params.lie
    neg = _pi_over_sin(-alpha, 'alpha')
    pos = _pi_over_sin(alpha, 'alpha')
    g = lambda x: x * HALF  # noqa: E731
    table = {
        K.HYP2F1_AT1_INDEX0: (
            neg * _rg(g(1 - alpha + beta - mu), g(1 - alpha + beta + mu)),
            pos * _rg(g(1 + alpha + beta - mu), g(1 + alpha + beta + mu)), _BASIS_2F1),
        K.HYP2F1_AT1_INDEX_BETA: (
            neg * _rg(g(1 - alpha - beta + mu), g(1 - alpha - beta - mu)),
            pos * _rg(g(1 + alpha - beta + mu), g(1 + alpha - beta - mu)), _BASIS_2F1),
        K.HYP2F1_AT_INF_A: (
            neg * _rg(g(1 - alpha - beta - mu), g(1 - alpha + beta - mu)),
            pos * _rg(g(1 + alpha + beta - mu), g(1 + alpha - beta - mu)), _BASIS_2F1_MINUS),
        K.HYP2F1_AT_INF_B: (
            neg * _rg(g(1 - alpha - beta + mu), g(1 - alpha + beta + mu)),
            pos * _rg(g(1 + alpha + beta + mu), g(1 + alpha - beta + mu)), _BASIS_2F1_MINUS),
    }
    return table[kind]


def _coefficients_1f1(kind, params):
    theta, alpha = params.lie
    neg = _pi_over_sin(-alpha, 'alpha')
    pos = _pi_over_sin(alpha, 'alpha')
    if kind is K.HYP1F1_AT_PLUS_INF:
        return (neg * rgamma((1 + theta - alpha) * HALF), pos * rgamma((1 + theta + alpha) * HALF),
                ('F_{t,a}(z)', 'z^{-a} F_{t,-a}(z)'))
    return (neg * rgamma((1 - theta - alpha) * HALF), pos * rgamma((1 - theta + alpha) * HALF),
            ('F_{t,a}(z)', '(-z)^{-a} F_{t,-a}(z)'))


def _coefficients_0f1(kind, params):
    (alpha,) = params.lie
    root = SQRT_PI / math.pi
    return (root * _pi_over_sin(-alpha, 'alpha'), root * _pi_over_sin(alpha, 'alpha'),
            ('F_a(z)', 'z^{-a} F_{-a}(z)'))


def _coefficients_gegenbauer(kind, params):
    alpha, lam = params.lie
    a2, l2 = alpha * HALF, lam * HALF
    q3, q1 = 3 * QUARTER, QUARTER
    table = {
        K.GEGENBAUER_AT1_INDEX0: (
            SQRT_PI * _rg(q3 + a2 - l2, q3 + a2 + l2), -SQRT_PI * _rg(q1 + a2 - l2, q1 + a2 + l2)),
        K.GEGENBAUER_AT1_INDEX_ALPHA: (
            SQRT_PI * _rg(q3 - a2 + l2, q3 - a2 - l2), -SQRT_PI * _rg(q1 - a2 + l2, q1 - a2 - l2)),
        K.GEGENBAUER_AT_INF_A: (
            SQRT_PI * _rg(q3 + a2 - l2, q3 - a2 - l2), 1j * SQRT_PI * _rg(q1 + a2 - l2, q1 - a2 - l2)),
        K.GEGENBAUER_AT_INF_B: (
            SQRT_PI * _rg(q3 + l2 - a2, q3 + l2 + a2), 1j * SQRT_PI * _rg(q1 + l2 - a2, q1 + l2 + a2)),
    }
    c1, c2 = table[kind]
    return c1, c2, ('S+_{a,l}(z)', 'S-_{a,l}(z)')


def _coefficients_hermite(kind, params):
    (lam,) = params.lie
    if kind is K.HERMITE_AT_PLUS_INF:
        c1, c2 = SQRT_PI * rgamma((2 * lam + 3) * QUARTER), -SQRT_PI * rgamma((2 * lam + 1) * QUARTER)
    else:
        c1, c2 = SQRT_PI * rgamma((3 - 2 * lam) * QUARTER), 1j * SQRT_PI * rgamma((1 - 2 * lam) * QUARTER)
    return c1, c2, ('S+_l(z)', 'S-_l(z)')


_COEFFICIENTS = {
    Family.HYP2F1: _coefficients_2f1,
    Family.HYP1F1: _coefficients_1f1,
    Family.HYP0F1: _coefficients_0f1,
    Family.GEGENBAUER: _coefficients_gegenbauer,
    Family.HERMITE: _coefficients_hermite,
}

CONNECTION_KINDS = (
    K.HYP2F1_AT1_INDEX0, K.HYP2F1_AT1_INDEX_BETA, K.HYP2F1_AT_INF_A, K.HYP2F1_AT_INF_B,
    K.HYP1F1_AT_PLUS_INF, K.HYP1F1_AT_MINUS_INF,
    K.HYP0F1_TILDE_AT_INF,
    K.GEGENBAUER_AT1_INDEX0, K.GEGENBAUER_AT1_INDEX_ALPHA, K.GEGENBAUER_AT_INF_A, K.GEGENBAUER_AT_INF_B,
    K.HERMITE_AT_PLUS_INF, K.HERMITE_AT_PLUS_I_INF,
)


# ---------------------------------------------------------------------------
# left-hand sides

def _gegenbauer_lhs(kind, params):
    """The Gegenbauer left-hand sides as expressions in bold S of transformed parameters."""
    alpha, lam = params.lie
    g = lambda *lie: FamilyParams.from_lie(Family.GEGENBAUER, *lie)  # noqa: E731

    def both_ends(exponent):
        return Prefactor(powers=(PowerFactor(-1, 1, exponent), PowerFactor(1, -1, exponent)))

    if kind is K.GEGENBAUER_AT1_INDEX0:
        return Expression(Prefactor(), params, IDENTITY_MAP, K.GEGENBAUER_AT1_INDEX0, 'S_{a,l}(z)')
    if kind is K.GEGENBAUER_AT1_INDEX_ALPHA:
        return Expression(both_ends(-alpha), g(-alpha, -lam), IDENTITY_MAP, K.GEGENBAUER_AT1_INDEX0,
                          '(1-z^2)^{-a} S_{-a,-l}(z)')
    if kind is K.GEGENBAUER_AT_INF_A:
        return Expression(both_ends(-QUARTER - alpha * HALF + lam * HALF), g(-lam, -alpha), InnerWhippleMap(),
                          K.GEGENBAUER_AT1_INDEX0, '(1-z^2)^{-1/4-a/2+l/2} S_{-l,-a}(-iz/sqrt(1-z^2))')
    return Expression(both_ends(-QUARTER - alpha * HALF - lam * HALF), g(lam, alpha), InnerWhippleMap(),
                      K.GEGENBAUER_AT1_INDEX0, '(1-z^2)^{-1/4-a/2-l/2} S_{l,a}(-iz/sqrt(1-z^2))')


def lhs_expression_label(kind, params):
    if kind.family is Family.GEGENBAUER:
        return _gegenbauer_lhs(kind, params).label
    return solution_expression(kind, params).label


def _lhs_value(kind, params, z, tol):
    family = kind.family
    if family is Family.GEGENBAUER:
        return evaluate_expression(_gegenbauer_lhs(kind, params), z, Normalization.BOLD, tol=tol)
    norm = Normalization.BOLD if family is Family.HYP2F1 else Normalization.PLAIN
    return standard_solution(kind, params, z, norm, tol=tol)


_BASIS_KINDS = {
    Family.HYP2F1: (K.HYP2F1_AT0_INDEX0, K.HYP2F1_AT0_INDEX_ALPHA),
    Family.HYP1F1: (K.HYP1F1_AT0_INDEX0, K.HYP1F1_AT0_INDEX_ALPHA),
    Family.HYP0F1: (K.HYP0F1_AT0_INDEX0, K.HYP0F1_AT0_INDEX_ALPHA),
}

# left-hand sides whose second basis element carries (-z)^{-alpha}
_MINUS_Z_BASIS = (K.HYP2F1_AT_INF_A, K.HYP2F1_AT_INF_B, K.HYP1F1_AT_MINUS_INF)


def _basis_values(kind, params, z, tol):
    family = kind.family
    z = complex(z)
    if family is Family.GEGENBAUER:
        return gegenbauer_even(params, z, tol=tol), gegenbauer_odd(params, z, tol=tol)
    if family is Family.HERMITE:
        return hermite_even(params, z, tol=tol), hermite_odd(params, z, tol=tol)

    first, second = _BASIS_KINDS[family]
    basis1 = evaluate_expression(solution_expression(first, params), z, Normalization.BOLD, tol=tol)
    expr = solution_expression(second, params)
    if kind in _MINUS_Z_BASIS:
        alpha = params.alpha
        expr = Expression(Prefactor(powers=(PowerFactor(-1, 0, -alpha),)), expr.params, expr.point_map,
                          label=expr.label.replace('z^', '(-z)^'))
    basis2 = evaluate_expression(expr, z, Normalization.BOLD, tol=tol)
    return basis1, basis2


# ---------------------------------------------------------------------------
# public operations

def connection_coeffs(lhs, params):
    """
    The two coefficients of the connection formula for the standard solution `lhs`.

    Raises:
        DegenerateParameters: a sin(pi alpha) denominator vanishes
        UsageError: `lhs` has no connection formula
    """
    if lhs not in CONNECTION_KINDS:
        raise UsageError(f"{lhs} has no connection formula; choose one of "
                         + ', '.join(str(k) for k in CONNECTION_KINDS))
    if params.family is not lhs.family:
        raise UsageError(f"{lhs} does not take {params.family.value} parameters")
    c1, c2, basis = _COEFFICIENTS[lhs.family](lhs, params)
    return ConnectionCoefficients(lhs.family, lhs, lhs_expression_label(lhs, params), basis, (complex(c1), complex(c2)))


def verify_connection(lhs, params, z, tol=None):
    """
    |LHS - c1 basis1 - c2 basis2| / max(1, |LHS|) at z.

    Raises:
        OutOfDomain: z is outside the domain of one of the three series
        DegenerateParameters: see connection_coeffs
    """
    coeffs = connection_coeffs(lhs, params)
    left = _lhs_value(lhs, params, z, tol)
    b1, b2 = _basis_values(lhs, params, z, tol)
    c1, c2 = coeffs.coefficients
    right = c1 * b1.value + c2 * b2.value
    residual = abs(left.value - right) / max(1.0, abs(left.value))
    logger.debug("connection %s at %s, z=%s: residual %.3g", lhs, params, z, residual)
    return ConnectionCheck(left.value, right, residual)


# ---------------------------------------------------------------------------
# 0F1: the tilde function and its continuations around 0 as a basis

def continued_tilde_0f1(params, z, turns, tol=None):
    """tilde F_alpha(e^{2 pi i turns} z), continued through the basis at 0."""
    coeffs = connection_coeffs(K.HYP0F1_TILDE_AT_INF, params)
    b1, b2 = _basis_values(K.HYP0F1_TILDE_AT_INF, params, z, tol)
    (alpha,) = params.lie
    c1, c2 = coeffs.coefficients
    return c1 * b1.value + c2 * cmath.exp(-2j * math.pi * turns * complex(alpha)) * b2.value


def alternative_basis_residuals(params, z, tol=None):
    """
    Residuals of the four expressions of F_alpha and z^{-alpha} F_{-alpha} in the
    basis tilde F(z), tilde F(e^{-+2 pi i} z):

        F_a       = (e^{i pi(a+1/2)} ~F(z) - e^{-i pi(a-1/2)} ~F(e^{-2 pi i} z)) / (2 sqrt pi)
                  = (e^{i pi(a+1/2)} ~F(e^{2 pi i} z) - e^{-i pi(a-1/2)} ~F(z)) / (2 sqrt pi)
        z^-a F_-a = e^{-i pi(a-1/2)} (~F(z) - ~F(e^{-2 pi i} z)) / (2 sqrt pi)
                  = e^{i pi(a+1/2)} (~F(e^{2 pi i} z) - ~F(z)) / (2 sqrt pi)
    """
    (alpha,) = params.lie
    alpha = complex(alpha)
    tilde = standard_solution(K.HYP0F1_TILDE_AT_INF, params, z, tol=tol).value
    minus = continued_tilde_0f1(params, z, -1, tol)
    plus = continued_tilde_0f1(params, z, 1, tol)
    b1, b2 = _basis_values(K.HYP0F1_TILDE_AT_INF, params, z, tol)
    up = cmath.exp(1j * math.pi * (alpha + 0.5))
    down = cmath.exp(-1j * math.pi * (alpha - 0.5))
    scale = 1 / (2 * SQRT_PI)
    candidates = {
        'F(z) from ~F(z), ~F(e^{-2pi i}z)': (b1.value, scale * (up * tilde - down * minus)),
        'F(z) from ~F(e^{2pi i}z), ~F(z)': (b1.value, scale * (up * plus - down * tilde)),
        'z^-a F_-a(z) from ~F(z), ~F(e^{-2pi i}z)': (b2.value, scale * down * (tilde - minus)),
        'z^-a F_-a(z) from ~F(e^{2pi i}z), ~F(z)': (b2.value, scale * up * (plus - tilde)),
    }
    return {label: abs(lhs - rhs) / max(1.0, abs(lhs)) for label, (lhs, rhs) in candidates.items()}


# ---------------------------------------------------------------------------
# degenerate case

@dataclass(frozen=True)
class DegenerateCheck:
    value: object
    partner: complex
    residual: float

    def to_dict(self):
        out = self.value.to_dict()
        out.update({'partner': format_complex(self.partner), 'residual': self.residual})
        return out


def _integer_index(params, index=None):
    x = params.lie[0] if index is None else params.lie[index]
    k, gap = nearest_integer(x)
    if gap != 0:
        raise UsageError(f"the degenerate case needs an integer alpha, got {x}")
    return k


def degenerate_value(family, params, z, tol=None):
    """
    The bold series F(...; 1+m; z), summed from n = max(0, -m), and the check of

        (a-m)_m (b-m)_m F(a,b;1+m;z) = z^{-m} F(a-m,b-m;1-m;z)      (2F1)
        (a-m)_m F(a;1+m;z) = z^{-m} F(a-m;1-m;z)                    (1F1)
        F(1+m;z) = z^{-m} F(1-m;z)                                  (0F1)

    Returns:
        DegenerateCheck: the series value, the right-hand side and their relative difference
    """
    if params.family is not family or family not in (Family.HYP2F1, Family.HYP1F1, Family.HYP0F1):
        raise UsageError("the degenerate identities exist for 2f1, 1f1 and 0f1")
    m = _integer_index(params, index=-1 if family is Family.HYP1F1 else 0)
    upper = params.classical[:-1]
    value = generalized_series(upper, (1 + m,), z, regularized=True, tol=tol)
    factor = 1
    for a in upper:
        factor *= pochhammer(complex(a) - m, m)
    partner = generalized_series(tuple(complex(a) - m for a in upper), (1 - m,), z, regularized=True, tol=tol)
    lhs = factor * value.value
    rhs = complex(z) ** (-m) * partner.value
    residual = abs(lhs - rhs) / max(1.0, abs(rhs))
    return DegenerateCheck(value, rhs, residual)


def _generating_terms(family, exponents, t, m, z, tol):
    z = complex(z)
    if family is Family.HYP0F1:
        return t ** m * generalized_series((), (1 + m,), z, regularized=True, tol=tol).value
    if family is Family.HYP1F1:
        (a,) = exponents
        return t ** m * generalized_series((a,), (1 + m,), z, regularized=True, tol=tol).value
    a, b = exponents
    return t ** m * pochhammer(a, m) * generalized_series((a + m, b), (1 + m,), z, regularized=True, tol=tol).value


def degenerate_generating_series(family, exponents, t, z, terms=25, tol=None):
    """
    lhs - sum_{|m| <= terms} t^m (...)_m F_m(z) for the generating functions

        (1-t)^{-a} (1-z/t)^{-b} = sum t^m (a)_m F(a+m, b; 1+m; z)   (2F1, |z| < |t| < 1)
        e^t (1-z/t)^{-a}        = sum t^m F(a; 1+m; z)             (1F1)
        e^{t + z/t}             = sum t^m F(1+m; z)                (0F1)

    where F is the bold series. `exponents` is (a, b), (a,) or ().
    """
    t = complex(t)
    z = complex(z)
    if t == 0:
        raise OutOfDomain("the generating series needs t != 0")
    exponents = tuple(complex(e) for e in exponents)
    if family is Family.HYP2F1:
        if not abs(z) < abs(t) < 1:
            raise OutOfDomain(f"the 2f1 generating series needs |z| < |t| < 1, got |z|={abs(z):.3g}, |t|={abs(t):.3g}")
        a, b = exponents
        lhs = (1 - t) ** (-a) * (1 - z / t) ** (-b)
    elif family is Family.HYP1F1:
        if abs(z) >= abs(t):
            raise OutOfDomain("the 1f1 generating series needs |z| < |t|")
        (a,) = exponents
        lhs = cmath.exp(t) * (1 - z / t) ** (-a)
    elif family is Family.HYP0F1:
        lhs = cmath.exp(t + z / t)
    else:
        raise UsageError("generating series exist for 2f1, 1f1 and 0f1")
    total = sum(_generating_terms(family, exponents, t, m, z, tol) for m in range(-terms, terms + 1))
    return lhs - total
