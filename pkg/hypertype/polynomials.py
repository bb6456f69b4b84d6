"""
Hypergeometric-type polynomials with exact rational coefficients.

Every family is produced by one Rodriguez-type engine,

    P_n(z) = (1/n!) rho(z)^-1 d^n (rho(z) sigma(z)^n),

where sigma = c * prod (z - p)^m and rho = prod (z - p)^a * exp(E) with
E' = numerator / z^depth. Differentiation runs on the formal algebra of
terms L(z) * prod (z - p)^(e_p - k_p) * exp(E), so non-integer exponents
and the essential singularity of the Bessel weight never leave exact
arithmetic. The families are Jacobi R (on [0, 1]), Laguerre L, Bessel B,
Gegenbauer C^I and C^II, Legendre P, Chebyshev T and U, and Hermite H.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DegenerateNormalization, DegenerateParameters, InvalidOperator, OutOfDomain, UsageError
from .families import HALF, Family, FamilyParams
from .numeric_core import pochhammer, pow_principal
from .operators import DiffOp
from .poly import ONE, Z, Poly
from .series import Normalization, hyp1f1, hyp2f1

logger = logging.getLogger(__name__)


class PolyFamily(Enum):
    JACOBI = 'jacobi'
    LAGUERRE = 'laguerre'
    BESSEL = 'bessel'
    GEGENBAUER1 = 'gegenbauer1'
    GEGENBAUER2 = 'gegenbauer2'
    LEGENDRE = 'legendre'
    CHEBYSHEV1 = 'chebyshev1'
    CHEBYSHEV2 = 'chebyshev2'
    HERMITE = 'hermite'

    @classmethod
    def parse(cls, name):
        for member in cls:
            if member.value == str(name).lower():
                return member
        raise UsageError(f"Unknown polynomial family {name!r}; expected one of {', '.join(m.value for m in cls)}")


PARAM_NAMES = {
    PolyFamily.JACOBI: ('alpha', 'beta'),
    PolyFamily.LAGUERRE: ('alpha',),
    PolyFamily.BESSEL: ('theta',),
    PolyFamily.GEGENBAUER1: ('alpha',),
    PolyFamily.GEGENBAUER2: ('alpha',),
    PolyFamily.LEGENDRE: (),
    PolyFamily.CHEBYSHEV1: (),
    PolyFamily.CHEBYSHEV2: (),
    PolyFamily.HERMITE: (),
}

# the C^I parameter behind each member of the Gegenbauer group
_GEGENBAUER_ALPHA = {
    PolyFamily.LEGENDRE: Fraction(0),
    PolyFamily.CHEBYSHEV1: -HALF,
    PolyFamily.CHEBYSHEV2: HALF,
}


def to_fraction(x):
    """Exact rational value of an int, Fraction, decimal string or real float."""
    if isinstance(x, bool):
        raise UsageError(f"{x!r} is not a number")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, complex):
        if x.imag != 0:
            raise UsageError(f"polynomial parameters must be rational, got {x}")
        x = x.real
    if isinstance(x, float):
        if not math.isfinite(x):
            raise UsageError(f"polynomial parameters must be finite, got {x}")
        return Fraction(repr(x))
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{x!r} is not a rational number") from None


def normalize_params(family, values):
    values = tuple(values)
    names = PARAM_NAMES[family]
    if len(values) != len(names):
        raise UsageError(f"{family.value} takes parameters ({', '.join(names)}), got {len(values)} values")
    return tuple(to_fraction(v) for v in values)


def _factorial(n):
    return Fraction(math.factorial(n))


def _linear(point):
    return Poly((-point, 1))


# ---------------------------------------------------------------------------
# the Rodriguez engine

@dataclass(frozen=True)
class Sigma:
    """constant * prod (z - point) ** multiplicity."""
    constant: Fraction
    factors: tuple

    def poly(self):
        out = Poly.const(self.constant)
        for point, multiplicity in self.factors:
            out = out * _linear(point) ** multiplicity
        return out


@dataclass(frozen=True)
class Weight:
    """prod (z - point) ** exponent * exp(E), with E' = numerator / z ** depth."""
    powers: tuple
    numerator: Poly = Poly()
    depth: int = 0


def rodriguez(sigma, weight, n):
    """
    Expand (1/n!) rho^-1 d^n (rho sigma^n) exactly.

    The weight's power points must be roots of sigma, and when the
    exponential carries a pole (depth > 0) it must sit at a root z = 0.

    Returns:
        Poly: the polynomial P_n
    """
    if n < 0:
        raise UsageError(f"polynomial degree index must be >= 0, got {n}")
    points = [p for p, _ in sigma.factors]
    multiplicity = dict(sigma.factors)
    exponents = dict(weight.powers)
    if any(p not in multiplicity for p in exponents):
        raise InvalidOperator("weight exponents must sit at roots of sigma")
    if weight.depth and 0 not in multiplicity:
        raise InvalidOperator("the exponential factor of the weight needs a root of sigma at 0")
    start = [exponents.get(p, 0) + n * multiplicity[p] for p in points]
    pole = points.index(0) if weight.depth else None

    terms = {(0,) * len(points): ONE}
    for _ in range(n):
        nxt = {}

        def add(key, value):
            nxt[key] = nxt.get(key, Poly()) + value

        for key, body in terms.items():
            add(key, body.deriv())
            for i in range(len(points)):
                c = start[i] - key[i]
                if c != 0:
                    add(key[:i] + (key[i] + 1,) + key[i + 1:], body * c)
            if not weight.numerator.is_zero():
                shifted = key
                if pole is not None:
                    shifted = key[:pole] + (key[pole] + weight.depth,) + key[pole + 1:]
                add(shifted, body * weight.numerator)
        terms = {k: v for k, v in nxt.items() if not v.is_zero()}

    total = Poly()
    for key, body in terms.items():
        for i, p in enumerate(points):
            power = n * multiplicity[p] - key[i]
            if power < 0:
                raise InvalidOperator(f"sigma^n does not absorb the pole of order {-power} at {p}")
            body = body * _linear(p) ** power
        total = total + body
    logger.debug("rodriguez n=%d: %d terms, degree %d", n, len(terms), total.degree)
    return total * Fraction(sigma.constant) ** n / math.factorial(n)


def rodrigues_data(family, params=()):
    """(sigma, weight) of a family at exact parameters."""
    p = normalize_params(family, params)
    if family is PolyFamily.JACOBI:
        alpha, beta = p
        return Sigma(Fraction(-1), ((0, 1), (1, 1))), Weight(((0, alpha), (1, beta)))
    if family is PolyFamily.LAGUERRE:
        (alpha,) = p
        return Sigma(Fraction(1), ((0, 1),)), Weight(((0, alpha),), Poly.const(-1))
    if family is PolyFamily.BESSEL:
        (theta,) = p
        return Sigma(Fraction(-1), ((0, 2),)), Weight(((0, theta),), Poly.const(-1), 2)
    if family is PolyFamily.HERMITE:
        return Sigma(Fraction(-1), ()), Weight((), Poly((0, -2)))
    alpha = p[0] if p else _GEGENBAUER_ALPHA[family]
    return Sigma(HALF, ((1, 1), (-1, 1))), Weight(((1, alpha), (-1, alpha)))


def _scale(family, p, n):
    if family is PolyFamily.GEGENBAUER2:
        (alpha,) = p
        den = pochhammer(alpha + 1, n)
        if den == 0:
            raise DegenerateNormalization(f"C^II is undefined: (alpha+1)_{n} = 0 at alpha={alpha}")
        return pochhammer(2 * alpha + 1, n) / den
    if family is PolyFamily.CHEBYSHEV1:
        return _factorial(n) / pochhammer(HALF, n)
    if family is PolyFamily.CHEBYSHEV2:
        return _factorial(n + 1) / pochhammer(3 * HALF, n)
    return Fraction(1)


@dataclass(frozen=True)
class PolynomialCoeffs:
    family: PolyFamily
    params: tuple
    n: int
    poly: Poly

    @property
    def coefficients(self):
        return self.poly.coeffs

    @property
    def degree(self):
        return self.poly.degree

    def __call__(self, z):
        return self.poly(z)

    def to_dict(self):
        return {
            'family': self.family.value,
            'params': {k: str(v) for k, v in zip(PARAM_NAMES[self.family], self.params)},
            'n': self.n,
            'degree': self.degree,
            'coefficients': self.poly.to_list(),
        }


@lru_cache(maxsize=4096)
def _family_poly(family, params, n):
    sigma, weight = rodrigues_data(family, params)
    scale = _scale(family, params, n)
    return rodriguez(sigma, weight, n) * scale


def family_polynomial(family, params, n):
    """
    The n-th polynomial of `family` at exact parameters.

    A negative n gives the zero polynomial, which is what the recurrences
    produce when they step below degree 0.

    Raises:
        DegenerateNormalization: C^II with (alpha+1)_n = 0
    """
    if isinstance(family, str):
        family = PolyFamily.parse(family)
    params = normalize_params(family, params)
    n = int(n)
    poly = Poly() if n < 0 else _family_poly(family, params, n)
    return PolynomialCoeffs(family, params, n, poly)


def _P(family, params, n):
    return family_polynomial(family, params, n).poly


# ---------------------------------------------------------------------------
# the differential equation and the degree rule

def kappa(sigma, weight):
    """kappa = sigma rho'/rho, a polynomial for every family weight."""
    s = sigma.poly()
    total = Poly()
    for point, exponent in weight.powers:
        q, r = divmod(s, _linear(point))
        if not r.is_zero():
            raise InvalidOperator(f"sigma does not vanish at the weight point {point}")
        total = total + q * exponent
    if not weight.numerator.is_zero():
        q, r = divmod(s * weight.numerator, Poly.monomial(weight.depth))
        if not r.is_zero():
            raise InvalidOperator("sigma rho'/rho is not a polynomial")
        total = total + q
    return total


def eigenvalue(sigma_poly, kappa_poly, n):
    """-n(n+1) sigma''/2 - n kappa'."""
    return -Fraction(n * (n + 1), 2) * sigma_poly.deriv(2)[0] - n * kappa_poly.deriv()[0]


def ode_residual(family, params, n):
    """sigma P'' + (sigma' + kappa) P' + eigenvalue * P; zero exactly."""
    sigma, weight = rodrigues_data(family, params)
    s, k = sigma.poly(), kappa(sigma, weight)
    P = _P(family, params, n)
    return s * P.deriv(2) + (s.deriv() + k) * P.deriv() + P * eigenvalue(s, k, n)


def expected_degree(family, params, n):
    """
    The degrees the degree rule allows for P_n; -1 stands for P_n = 0.

    With m = -2 kappa'/sigma'' - 1 a positive integer and (m+1)/2 <= n <= m
    the degree drops to m - n, or the polynomial vanishes. When
    sigma'' = kappa' = 0 it is 0; otherwise n.
    """
    sigma, weight = rodrigues_data(family, params)
    s2 = sigma.poly().deriv(2)[0]
    k1 = kappa(sigma, weight).deriv()[0]
    if s2 == 0 and k1 == 0:
        return frozenset({0})
    if s2 != 0:
        m = Fraction(-2 * k1, 1) / s2 - 1
        if m.denominator == 1 and m > 0 and Fraction(m + 1, 2) <= n <= m:
            return frozenset({int(m) - n, -1})
    return frozenset({n})


# ---------------------------------------------------------------------------
# explicit sums

def _jacobi_sum(alpha, beta, n):
    top = 1 + alpha + beta + n
    return Poly(
        pochhammer(1 + alpha + j, n - j) * pochhammer(top, j) * (-1) ** j / (_factorial(j) * _factorial(n - j))
        for j in range(n + 1)
    )


def _laguerre_sum(alpha, n):
    return Poly(pochhammer(1 + alpha + j, n - j) * (-1) ** j / (_factorial(j) * _factorial(n - j))
                for j in range(n + 1))


def _bessel_sum(theta, n):
    return Poly(pochhammer(Fraction(-n), j) * pochhammer(n + theta + 1, j) / (_factorial(n) * _factorial(j))
                for j in range(n + 1))


def _gegenbauer2_sum(alpha, n):
    out = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = ((-1) ** k * pochhammer(alpha + HALF, n - k) * 2 ** (n - 2 * k)
                          / (_factorial(k) * _factorial(n - 2 * k)))
    return Poly(out)


def _hermite_sum(n):
    out = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = Fraction((-1) ** k * 2 ** (n - 2 * k)) / (_factorial(k) * _factorial(n - 2 * k))
    return Poly(out)


def _chebyshev_sum(kind, n):
    # cos(n phi) and sin((n+1) phi)/sin(phi) expanded in z = cos(phi)
    total = Poly()
    square = Z * Z - 1
    for k in range(n // 2 + 1):
        weight = math.comb(n, 2 * k) if kind == 1 else math.comb(n + 1, 2 * k + 1)
        total = total + Z ** (n - 2 * k) * square ** k * weight
    return total


def explicit_series(family, params, n):
    """The hypergeometric sum of P_n, computed independently of the Rodriguez engine."""
    p = normalize_params(family, params)
    if family is PolyFamily.JACOBI:
        return _jacobi_sum(p[0], p[1], n)
    if family is PolyFamily.LAGUERRE:
        return _laguerre_sum(p[0], n)
    if family is PolyFamily.BESSEL:
        return _bessel_sum(p[0], n)
    if family is PolyFamily.GEGENBAUER1:
        return _jacobi_sum(p[0], p[0], n).compose(Poly((HALF, -HALF)))
    if family is PolyFamily.GEGENBAUER2:
        return _gegenbauer2_sum(p[0], n)
    if family is PolyFamily.LEGENDRE:
        return _gegenbauer2_sum(Fraction(0), n)
    if family is PolyFamily.CHEBYSHEV1:
        return _chebyshev_sum(1, n)
    if family is PolyFamily.CHEBYSHEV2:
        return _chebyshev_sum(2, n)
    return _hermite_sum(n)


def chebyshev_expansion(kind, n):
    """T_n (kind 1) or U_n (kind 2) from the binomial expansion of (z + i sqrt(1-z^2))^n."""
    if kind not in (1, 2):
        raise UsageError(f"Chebyshev polynomials come in kinds 1 and 2, not {kind}")
    return _chebyshev_sum(kind, n)


def chebyshev_closed_form(kind, n, z):
    """cos(n phi) or sin((n+1) phi)/sin(phi) at z = cos(phi)."""
    if kind not in (1, 2):
        raise UsageError(f"Chebyshev polynomials come in kinds 1 and 2, not {kind}")
    z = complex(z)
    phi = cmath.acos(z)
    if kind == 1:
        return cmath.cos(n * phi)
    s = cmath.sin(phi)
    if abs(s) < 1e-12:
        # z = +-1
        return complex((n + 1) * (1 if z.real > 0 else (-1) ** n))
    return cmath.sin((n + 1) * phi) / s


# ---------------------------------------------------------------------------
# special values and vanishing

def vanishing_region(family, params, n):
    """True when the parameters lie where P_n is identically zero."""
    p = normalize_params(family, params)
    if family is PolyFamily.JACOBI:
        alpha, beta = p
        if alpha.denominator != 1 or beta.denominator != 1:
            return False
        return 0 <= alpha + n and 0 <= beta + n and 0 <= -alpha - beta - n - 1
    if family is PolyFamily.GEGENBAUER1:
        (alpha,) = p
        return alpha.denominator == 1 and -n <= alpha <= Fraction(-n - 1, 2)
    if family is PolyFamily.GEGENBAUER2:
        (alpha,) = p
        return alpha.denominator == 2 and Fraction(-n, 2) <= alpha <= -HALF
    return False


def special_values(family, params, n):
    """
    Closed forms of P(0), P(+-1), P'(0) and the leading coefficient, each
    paired with the value read off the exact polynomial.

    Returns:
        dict: name -> {'expected': Fraction, 'actual': Fraction}
    """
    p = normalize_params(family, params)
    fact = _factorial(n)
    sign = (-1) ** n
    m = n // 2
    expected = {}
    if family is PolyFamily.JACOBI:
        alpha, beta = p
        expected['at_0'] = pochhammer(alpha + 1, n) / fact
        expected['at_1'] = sign * pochhammer(beta + 1, n) / fact
        expected['leading'] = sign * pochhammer(alpha + beta + n + 1, n) / fact
    elif family is PolyFamily.LAGUERRE:
        expected['at_0'] = pochhammer(p[0] + 1, n) / fact
        expected['leading'] = sign / fact
    elif family is PolyFamily.BESSEL:
        expected['at_0'] = 1 / fact
        expected['leading'] = sign * pochhammer(n + p[0] + 1, n) / fact
    elif family is PolyFamily.GEGENBAUER1:
        (alpha,) = p
        expected['at_1'] = pochhammer(alpha + 1, n) / fact
        expected['at_minus_1'] = sign * expected['at_1']
        expected['leading'] = pochhammer(2 * alpha + n + 1, n) / (fact * 2 ** n)
    elif family in (PolyFamily.GEGENBAUER2, PolyFamily.LEGENDRE):
        alpha = p[0] if p else Fraction(0)
        expected['at_1'] = pochhammer(2 * alpha + 1, n) / fact
        expected['at_minus_1'] = sign * expected['at_1']
        expected['leading'] = 2 ** n * pochhammer(alpha + HALF, n) / fact
        if n % 2 == 0:
            expected['at_0'] = (-1) ** m * pochhammer(alpha + HALF, m) / _factorial(m)
        else:
            expected['derivative_at_0'] = (-1) ** m * 2 * pochhammer(alpha + HALF, m + 1) / _factorial(m)
    elif family is PolyFamily.CHEBYSHEV1:
        expected['at_1'] = Fraction(1)
        expected['at_minus_1'] = Fraction(sign)
        expected['leading'] = Fraction(2) ** (n - 1) if n else Fraction(1)
    elif family is PolyFamily.CHEBYSHEV2:
        expected['at_1'] = Fraction(n + 1)
        expected['at_minus_1'] = Fraction(sign * (n + 1))
        expected['leading'] = Fraction(2 ** n)
    else:
        expected['leading'] = 2 ** n / fact
        if n % 2 == 0:
            expected['at_0'] = (-1) ** m / _factorial(m)
        else:
            expected['derivative_at_0'] = (-1) ** m * 2 / _factorial(m)

    P = _P(family, p, n)
    if vanishing_region(family, p, n):
        expected = {k: Fraction(0) for k in expected}
    actual = {
        'at_0': P(Fraction(0)),
        'at_1': P(Fraction(1)),
        'at_minus_1': P(Fraction(-1)),
        'derivative_at_0': P.deriv()(Fraction(0)),
        'leading': P[n],
    }
    return {k: {'expected': Fraction(v), 'actual': Fraction(actual[k])} for k, v in expected.items()}


# ---------------------------------------------------------------------------
# generating functions, expanded exactly as truncated power series in t

def _t(coeffs, N):
    out = [Fraction(c) for c in coeffs[:N + 1]]
    return out + [Fraction(0)] * (N + 1 - len(out))


def _t_mul(f, g):
    N = len(f) - 1
    return [sum((f[j] * g[k - j] for j in range(k + 1)), Fraction(0)) for k in range(N + 1)]


def _t_pow(f, s):
    """f ** s for f(0) = 1, by g_k = (1/k) sum_j ((s+1) j - k) f_j g_{k-j}."""
    if f[0] != 1:
        raise ValueError("series power needs f(0) = 1")
    N = len(f) - 1
    g = [Fraction(1)] + [Fraction(0)] * N
    for k in range(1, N + 1):
        g[k] = Fraction(sum(((s + 1) * j - k) * f[j] * g[k - j] for j in range(1, k + 1)), k)
    return g


def _t_exp(u):
    if u[0] != 0:
        raise ValueError("series exponential needs u(0) = 0")
    N = len(u) - 1
    e = [Fraction(1)] + [Fraction(0)] * N
    for k in range(1, N + 1):
        e[k] = Fraction(sum(j * u[j] * e[k - j] for j in range(1, k + 1)), k)
    return e


def _t_log(f):
    if f[0] != 1:
        raise ValueError("series logarithm needs f(0) = 1")
    N = len(f) - 1
    out = [Fraction(0)] * (N + 1)
    for k in range(1, N + 1):
        out[k] = f[k] - Fraction(sum((j * out[j] * f[k - j] for j in range(1, k)), Fraction(0)), k)
    return out


def _gf_jacobi4(p, z, N):
    alpha, beta = p
    r = _t_pow(_t([1, 4 * z - 2, 1], N), HALF)
    left = [(1 + r[0]) / 2] + [(r[k] - (1 if k == 1 else 0)) / 2 for k in range(1, N + 1)]
    right = [(1 + r[0]) / 2] + [(r[k] + (1 if k == 1 else 0)) / 2 for k in range(1, N + 1)]
    return _t_mul(_t_mul(_t_pow(r, -1), _t_pow(left, -alpha)), _t_pow(right, -beta))


def _gf_bessel3(p, z, N):
    (theta,) = p
    r = _t_pow(_t([1, 4 * z], N), HALF)
    half_up = [(1 + r[0]) / 2] + [r[k] / 2 for k in range(1, N + 1)]
    inner = _t_mul(_t([0, 1], N), _t_pow(half_up, -1))
    return _t_mul(_t_mul(_t_pow(r, -1), _t_pow(half_up, -theta)), _t_exp(inner))


def _v_jacobi4(p, z, t):
    alpha, beta = p
    r = cmath.sqrt(1 + (4 * z - 2) * t + t * t)
    return pow_principal((1 + r - t) / 2, -alpha) * pow_principal((1 + r + t) / 2, -beta) / r


def _v_bessel3(p, z, t):
    (theta,) = p
    r = cmath.sqrt(1 + 4 * z * t)
    return pow_principal((1 + r) / 2, -theta) * cmath.exp(2 * t / (1 + r)) / r


@dataclass(frozen=True)
class GeneratingFunction:
    """
    sum_k coefficient(p, z, k) t^k = function(t), with `series` its exact
    Taylor expansion and `singular` the t-polynomials whose zeros bound the
    disc of convergence.
    """
    id: str
    family: PolyFamily
    formula: str
    series: object
    coefficient: object
    value: object
    singular: object
    start: int = 0

    def to_dict(self):
        return {'id': self.id, 'family': self.family.value, 'formula': self.formula}


_J, _L, _B = PolyFamily.JACOBI, PolyFamily.LAGUERRE, PolyFamily.BESSEL
_G1, _G2, _H = PolyFamily.GEGENBAUER1, PolyFamily.GEGENBAUER2, PolyFamily.HERMITE


def _quadratic(p, z):
    return [[1, -2 * z, 1]]


GENERATING_FUNCTIONS = (
    GeneratingFunction(
        'hermite', _H, 'exp(2tz - t^2) = sum H_k(z) t^k',
        lambda p, z, N: _t_exp(_t([0, 2 * z, -1], N)),
        lambda p, z, k: _P(_H, (), k)(z),
        lambda p, z, t: cmath.exp(2 * t * z - t * t),
        lambda p, z: []),
    GeneratingFunction(
        'legendre', PolyFamily.LEGENDRE, '(1 - 2zt + t^2)^(-1/2) = sum P_k(z) t^k',
        lambda p, z, N: _t_pow(_t([1, -2 * z, 1], N), -HALF),
        lambda p, z, k: _P(PolyFamily.LEGENDRE, (), k)(z),
        lambda p, z, t: pow_principal(1 - 2 * z * t + t * t, -0.5),
        _quadratic),
    GeneratingFunction(
        'gegenbauer2', _G2, '(1 - 2zt + t^2)^(-alpha-1/2) = sum C^II,alpha_k(z) t^k',
        lambda p, z, N: _t_pow(_t([1, -2 * z, 1], N), -p[0] - HALF),
        lambda p, z, k: _P(_G2, p, k)(z),
        lambda p, z, t: pow_principal(1 - 2 * z * t + t * t, -float(p[0]) - 0.5),
        _quadratic),
    GeneratingFunction(
        'gegenbauer1', _G1, '(1 + 2tz + t^2 (z^2-1))^(-alpha) = sum 2^k C^I,-alpha-k_k(z) t^k',
        lambda p, z, N: _t_pow(_t([1, 2 * z, z * z - 1], N), -p[0]),
        lambda p, z, k: 2 ** k * _P(_G1, (-p[0] - k,), k)(z),
        lambda p, z, t: pow_principal(1 + 2 * t * z + t * t * (z * z - 1), -float(p[0])),
        lambda p, z: [[1, 2 * z, z * z - 1]]),
    GeneratingFunction(
        'chebyshev1', PolyFamily.CHEBYSHEV1, '(1 - zt)/(1 - 2zt + t^2) = sum T_k(z) t^k',
        lambda p, z, N: _t_mul(_t([1, -z], N), _t_pow(_t([1, -2 * z, 1], N), -1)),
        lambda p, z, k: _P(PolyFamily.CHEBYSHEV1, (), k)(z),
        lambda p, z, t: (1 - z * t) / (1 - 2 * z * t + t * t),
        _quadratic),
    GeneratingFunction(
        'chebyshev1-log', PolyFamily.CHEBYSHEV1, '-1/2 log(1 - 2zt + t^2) = sum T_k(z) t^k / k',
        lambda p, z, N: [-c / 2 for c in _t_log(_t([1, -2 * z, 1], N))],
        lambda p, z, k: _P(PolyFamily.CHEBYSHEV1, (), k)(z) / k,
        lambda p, z, t: -0.5 * cmath.log(1 - 2 * z * t + t * t),
        _quadratic, start=1),
    GeneratingFunction(
        'chebyshev2', PolyFamily.CHEBYSHEV2, '1/(1 - 2zt + t^2) = sum U_k(z) t^k',
        lambda p, z, N: _t_pow(_t([1, -2 * z, 1], N), -1),
        lambda p, z, k: _P(PolyFamily.CHEBYSHEV2, (), k)(z),
        lambda p, z, t: 1 / (1 - 2 * z * t + t * t),
        _quadratic),
    GeneratingFunction(
        'laguerre-1', _L, 'exp(-tz) (1+t)^alpha = sum L^(alpha-k)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_exp(_t([0, -z], N)), _t_pow(_t([1, 1], N), p[0])),
        lambda p, z, k: _P(_L, (p[0] - k,), k)(z),
        lambda p, z, t: cmath.exp(-t * z) * pow_principal(1 + t, float(p[0])),
        lambda p, z: [[1, 1]]),
    GeneratingFunction(
        'laguerre-2', _L, '(1-t)^(-alpha-1) exp(tz/(t-1)) = sum L^alpha_k(z) t^k',
        lambda p, z, N: _t_mul(_t_pow(_t([1, -1], N), -p[0] - 1),
                               _t_exp(_t_mul(_t([0, -z], N), _t_pow(_t([1, -1], N), -1)))),
        lambda p, z, k: _P(_L, p, k)(z),
        lambda p, z, t: pow_principal(1 - t, -float(p[0]) - 1) * cmath.exp(t * z / (t - 1)),
        lambda p, z: [[1, -1]]),
    GeneratingFunction(
        'jacobi-1', _J, '(1 + t(1-z))^alpha (1 - tz)^beta = sum R^(alpha-k,beta-k)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_pow(_t([1, 1 - z], N), p[0]), _t_pow(_t([1, -z], N), p[1])),
        lambda p, z, k: _P(_J, (p[0] - k, p[1] - k), k)(z),
        lambda p, z, t: pow_principal(1 + t * (1 - z), float(p[0])) * pow_principal(1 - t * z, float(p[1])),
        lambda p, z: [[1, 1 - z], [1, -z]]),
    GeneratingFunction(
        'jacobi-2', _J, '(1 + zt)^(-1-alpha-beta) (1+t)^alpha = sum R^(alpha-k,beta)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_pow(_t([1, z], N), -1 - p[0] - p[1]), _t_pow(_t([1, 1], N), p[0])),
        lambda p, z, k: _P(_J, (p[0] - k, p[1]), k)(z),
        lambda p, z, t: pow_principal(1 + z * t, -1 - float(p[0] + p[1])) * pow_principal(1 + t, float(p[0])),
        lambda p, z: [[1, z], [1, 1]]),
    GeneratingFunction(
        'jacobi-3', _J, '(1 + (z-1)t)^(-1-alpha-beta) (1-t)^beta = sum R^(alpha,beta-k)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_pow(_t([1, z - 1], N), -1 - p[0] - p[1]), _t_pow(_t([1, -1], N), p[1])),
        lambda p, z, k: _P(_J, (p[0], p[1] - k), k)(z),
        lambda p, z, t: pow_principal(1 + (z - 1) * t, -1 - float(p[0] + p[1])) * pow_principal(1 - t, float(p[1])),
        lambda p, z: [[1, z - 1], [1, -1]]),
    GeneratingFunction(
        'jacobi-4', _J, 'r^-1 ((1+r-t)/2)^(-alpha) ((1+r+t)/2)^(-beta) = sum R^(alpha,beta)_k(z) t^k, '
                        'r = sqrt(1 + (4z-2)t + t^2)',
        _gf_jacobi4,
        lambda p, z, k: _P(_J, p, k)(z),
        lambda p, z, t: _v_jacobi4((float(p[0]), float(p[1])), z, t),
        lambda p, z: [[1, 4 * z - 2, 1]]),
    GeneratingFunction(
        'bessel-1', _B, 'exp(t) (1 + tz)^(-theta-1) = sum B^(theta-k)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_exp(_t([0, 1], N)), _t_pow(_t([1, z], N), -p[0] - 1)),
        lambda p, z, k: _P(_B, (p[0] - k,), k)(z),
        lambda p, z, t: cmath.exp(t) * pow_principal(1 + t * z, -float(p[0]) - 1),
        lambda p, z: [[1, z]]),
    GeneratingFunction(
        'bessel-2', _B, '(1 - tz)^theta exp(t/(1 - tz)) = sum B^(theta-2k)_k(z) t^k',
        lambda p, z, N: _t_mul(_t_pow(_t([1, -z], N), p[0]),
                               _t_exp(_t_mul(_t([0, 1], N), _t_pow(_t([1, -z], N), -1)))),
        lambda p, z, k: _P(_B, (p[0] - 2 * k,), k)(z),
        lambda p, z, t: pow_principal(1 - t * z, float(p[0])) * cmath.exp(t / (1 - t * z)),
        lambda p, z: [[1, -z]]),
    GeneratingFunction(
        'bessel-3', _B, 'r^-1 ((1+r)/2)^(-theta) exp(2t/(1+r)) = sum B^theta_k(z) t^k, r = sqrt(1 + 4zt)',
        _gf_bessel3,
        lambda p, z, k: _P(_B, p, k)(z),
        lambda p, z, t: _v_bessel3((float(p[0]),), z, t),
        lambda p, z: [[1, 4 * z]]),
)

_GENERATING_BY_ID = {g.id: g for g in GENERATING_FUNCTIONS}


def generating_function(gen_id):
    try:
        return _GENERATING_BY_ID[gen_id]
    except KeyError:
        raise UsageError(f"Unknown generating function {gen_id!r}; expected one of "
                         f"{', '.join(_GENERATING_BY_ID)}") from None


def convergence_radius(gen_id, params, z):
    """Distance from t = 0 to the nearest zero of the singular factors."""
    entry = generating_function(gen_id)
    p = normalize_params(entry.family, params)
    radius = math.inf
    for coeffs in entry.singular(p, to_fraction(z)):
        roots = np.roots([complex(c) for c in reversed(coeffs)])
        if len(roots):
            radius = min(radius, float(np.min(np.abs(roots))))
    return radius


@dataclass(frozen=True)
class GeneratingCheck:
    id: str
    mismatch: Fraction
    n_max: int
    partial_sum_error: float = None

    def to_dict(self):
        out = {'id': self.id, 'n_max': self.n_max, 'mismatch': str(self.mismatch)}
        if self.partial_sum_error is not None:
            out['partial_sum_error'] = self.partial_sum_error
        return out


def generating_function_check(gen_id, params, n_max, z, t=None):
    """
    Compare the exact Taylor coefficients of a generating function at the
    rational point z with the family polynomials there.

    When t is given, the closed form at t is also compared with the partial
    sum up to t^n_max; t must lie inside the disc of convergence.

    Raises:
        OutOfDomain: |t| is not below the radius of convergence
    """
    entry = generating_function(gen_id)
    p = normalize_params(entry.family, params)
    z = to_fraction(z)
    series = entry.series(p, z, n_max)
    coefficients = [Fraction(0)] * entry.start + [Fraction(entry.coefficient(p, z, k))
                                                  for k in range(entry.start, n_max + 1)]
    mismatch = max(abs(a - b) for a, b in zip(series, coefficients))
    error = None
    if t is not None:
        radius = convergence_radius(gen_id, p, z)
        if abs(t) >= radius:
            raise OutOfDomain(f"|t| = {abs(t):.6g} is outside the disc of convergence (radius {radius:.6g})")
        partial = sum(complex(c) * complex(t) ** k for k, c in enumerate(coefficients))
        error = abs(entry.value(p, float(z), complex(t)) - partial)
    logger.debug("generating function %s: mismatch %s up to t^%d", gen_id, mismatch, n_max)
    return GeneratingCheck(gen_id, mismatch, n_max, error)


# ---------------------------------------------------------------------------
# identities between families and symmetries of one family

def substitute(P, num, den, n):
    """den^n * P(num/den) as a polynomial, for deg P <= n."""
    num, den = Poly(num), Poly(den)
    total = Poly()
    for k, c in enumerate(P.coeffs):
        total = total + num ** k * den ** (n - k) * c
    return total


def residual(lhs, rhs):
    """Largest coefficient of lhs - rhs; zero when the identity holds."""
    return Fraction((lhs - rhs).max_abs_coeff())


@dataclass(frozen=True)
class PolynomialIdentity:
    id: str
    family: PolyFamily
    formula: str
    build: object

    def sides(self, params, n):
        return self.build(normalize_params(self.family, params), int(n))

    def to_dict(self):
        return {'id': self.id, 'family': self.family.value, 'formula': self.formula}


def _natural(x, what):
    if x.denominator != 1 or x < 0:
        raise UsageError(f"{what} must be a nonnegative integer, got {x}")
    return int(x)


def _hermite_laguerre(m, odd):
    if odd:
        factor = Fraction((-1) ** m * 2 ** (2 * m + 1) * math.factorial(m), math.factorial(2 * m + 1))
        return _P(_H, (), 2 * m + 1), _P(_L, (HALF,), m).compose(Z * Z) * Z * factor
    factor = Fraction((-1) ** m * 4 ** m * math.factorial(m), math.factorial(2 * m))
    return _P(_H, (), 2 * m), _P(_L, (-HALF,), m).compose(Z * Z) * factor


def _hermite_bessel(m, odd):
    if odd:
        factor = Fraction(2 ** (2 * m + 1) * math.factorial(m), math.factorial(2 * m + 1))
        inner = substitute(_P(_B, (-2 * m - 3 * HALF,), m), -ONE, Z * Z, m)
        return _P(_H, (), 2 * m + 1), inner * Z * factor
    factor = Fraction(4 ** m * math.factorial(m), math.factorial(2 * m))
    return _P(_H, (), 2 * m), substitute(_P(_B, (-2 * m - HALF,), m), -ONE, Z * Z, m) * factor


def _gegenbauer2_jacobi(alpha, m, odd):
    if odd:
        factor = (-1) ** m * pochhammer(alpha + HALF, m + 1) / pochhammer(3 * HALF, m)
        return _P(_G2, (alpha,), 2 * m + 1), _P(_J, (HALF, alpha), m).compose(Z * Z) * Z * (2 * factor)
    factor = (-1) ** m * pochhammer(alpha + HALF, m) / pochhammer(HALF, m)
    return _P(_G2, (alpha,), 2 * m), _P(_J, (-HALF, alpha), m).compose(Z * Z) * factor


def _jacobi_degenerate_alpha(p, n):
    alpha, beta = p
    k = _natural(alpha, 'alpha')
    lhs = (-Z) ** k * _P(_J, p, n) * pochhammer(beta + n + 1, k)
    return lhs, _P(_J, (-alpha, beta), n + k) * pochhammer(Fraction(n + 1), k)


def _jacobi_degenerate_beta(p, n):
    alpha, beta = p
    k = _natural(beta, 'beta')
    lhs = (1 - Z) ** k * _P(_J, p, n) * pochhammer(alpha + n + 1, k)
    return lhs, _P(_J, (alpha, -beta), n + k) * pochhammer(Fraction(n + 1), k)


def _jacobi_degenerate_both(p, n):
    alpha, beta = p
    a, b = _natural(alpha, 'alpha'), _natural(beta, 'beta')
    lhs = (-Z) ** a * (1 - Z) ** b * _P(_J, p, n)
    return lhs, _P(_J, (-alpha, -beta), n + a + b)


def _laguerre_degenerate(p, n):
    (alpha,) = p
    k = _natural(alpha, 'alpha')
    return (-Z) ** k * _P(_L, p, n), _P(_L, (-alpha,), n + k) * pochhammer(Fraction(n + 1), k)


def _gegenbauer_degenerate(p, n):
    (alpha,) = p
    k = _natural(alpha, 'alpha')
    return (Z * Z - 1) ** k * _P(_G1, p, n), _P(_G1, (-alpha,), n + 2 * k) * 4 ** k


CROSS_FAMILY_IDENTITIES = (
    PolynomialIdentity(
        'laguerre-bessel', _L, 'L^alpha_n(z) = (-z)^n B^(-2n-alpha-1)_n(-1/z)',
        lambda p, n: (_P(_L, p, n), substitute(_P(_B, (-2 * n - p[0] - 1,), n), ONE, -Z, n))),
    PolynomialIdentity(
        'bessel-laguerre', _B, 'B^theta_n(z) = z^n L^(-theta-2n-1)_n(-1/z)',
        lambda p, n: (_P(_B, p, n), substitute(_P(_L, (-p[0] - 2 * n - 1,), n), -ONE, Z, n))),
    PolynomialIdentity(
        'gegenbauer-jacobi-1', _G1, 'C^I,alpha_n(z) = R^(alpha,alpha)_n((1-z)/2)',
        lambda p, n: (_P(_G1, p, n), _P(_J, (p[0], p[0]), n).compose(Poly((HALF, -HALF))))),
    PolynomialIdentity(
        'gegenbauer-jacobi-2', _G1, 'C^I,alpha_n(z) = (-1)^n R^(alpha,alpha)_n((1+z)/2)',
        lambda p, n: (_P(_G1, p, n), _P(_J, (p[0], p[0]), n).compose(Poly((HALF, HALF))) * (-1) ** n)),
    PolynomialIdentity(
        'gegenbauer-jacobi-3', _G1, 'C^I,alpha_n(z) = ((1+z)/2)^n R^(alpha,-2alpha-2n-1)_n((z-1)/(z+1))',
        lambda p, n: (_P(_G1, p, n),
                      substitute(_P(_J, (p[0], -2 * p[0] - 2 * n - 1), n), Z - 1, Z + 1, n) / 2 ** n)),
    PolynomialIdentity(
        'gegenbauer-jacobi-4', _G1, 'C^I,alpha_n(z) = (-(1+z)/2)^n R^(-2alpha-2n-1,alpha)_n(2/(1+z))',
        lambda p, n: (_P(_G1, p, n),
                      substitute(_P(_J, (-2 * p[0] - 2 * n - 1, p[0]), n), 2 * ONE, Z + 1, n)
                      * Fraction((-1) ** n, 2 ** n))),
    PolynomialIdentity(
        'hermite-laguerre-even', _H, 'H_2m(z) = (-1)^m 4^m m!/(2m)! L^(-1/2)_m(z^2)',
        lambda p, m: _hermite_laguerre(m, odd=False)),
    PolynomialIdentity(
        'hermite-laguerre-odd', _H, 'H_2m+1(z) = (-1)^m 2^(2m+1) m!/(2m+1)! z L^(1/2)_m(z^2)',
        lambda p, m: _hermite_laguerre(m, odd=True)),
    PolynomialIdentity(
        'hermite-bessel-even', _H, 'H_2m(z) = 4^m m!/(2m)! z^2m B^(-2m-1/2)_m(-1/z^2)',
        lambda p, m: _hermite_bessel(m, odd=False)),
    PolynomialIdentity(
        'hermite-bessel-odd', _H, 'H_2m+1(z) = 2^(2m+1) m!/(2m+1)! z^(2m+1) B^(-2m-3/2)_m(-1/z^2)',
        lambda p, m: _hermite_bessel(m, odd=True)),
    PolynomialIdentity(
        'gegenbauer2-jacobi-even', _G2, 'C^II,alpha_2m(z) = (-1)^m (alpha+1/2)_m/(1/2)_m R^(-1/2,alpha)_m(z^2)',
        lambda p, m: _gegenbauer2_jacobi(p[0], m, odd=False)),
    PolynomialIdentity(
        'gegenbauer2-jacobi-odd', _G2,
        'C^II,alpha_2m+1(z) = (-1)^m (alpha+1/2)_(m+1)/(3/2)_m 2z R^(1/2,alpha)_m(z^2)',
        lambda p, m: _gegenbauer2_jacobi(p[0], m, odd=True)),
    PolynomialIdentity(
        'jacobi-degenerate-alpha', _J, '(beta+n+1)_alpha (-z)^alpha R^(alpha,beta)_n = (n+1)_alpha R^(-alpha,beta)_(n+alpha)',
        _jacobi_degenerate_alpha),
    PolynomialIdentity(
        'jacobi-degenerate-beta', _J, '(alpha+n+1)_beta (1-z)^beta R^(alpha,beta)_n = (n+1)_beta R^(alpha,-beta)_(n+beta)',
        _jacobi_degenerate_beta),
    PolynomialIdentity(
        'jacobi-degenerate-both', _J, '(-z)^alpha (1-z)^beta R^(alpha,beta)_n = R^(-alpha,-beta)_(n+alpha+beta)',
        _jacobi_degenerate_both),
    PolynomialIdentity(
        'laguerre-degenerate', _L, '(-z)^alpha L^alpha_n = (n+1)_alpha L^(-alpha)_(n+alpha)',
        _laguerre_degenerate),
    PolynomialIdentity(
        'gegenbauer-degenerate', _G1, '(z^2-1)^alpha C^I,alpha_n = 4^alpha C^I,-alpha_(n+2alpha)',
        _gegenbauer_degenerate),
)


def _jacobi_inverted(p, n, first, num, den, sign):
    alpha, beta = p
    far = -1 - alpha - beta - 2 * n
    target = {'alpha': (alpha, far), 'beta': (beta, far), 'far-beta': (far, beta), 'far-alpha': (far, alpha)}[first]
    return _P(_J, p, n), substitute(_P(_J, target, n), num, den, n) * sign ** n


POLYNOMIAL_SYMMETRIES = (
    PolynomialIdentity(
        'jacobi-1', _J, 'R^(alpha,beta)_n(z) = (1-z)^n R^(alpha,-1-alpha-beta-2n)_n(z/(z-1))',
        lambda p, n: _jacobi_inverted(p, n, 'alpha', Z, Z - 1, -1)),
    PolynomialIdentity(
        'jacobi-2', _J, 'R^(alpha,beta)_n(z) = (-1)^n R^(beta,alpha)_n(1-z)',
        lambda p, n: (_P(_J, p, n), _P(_J, (p[1], p[0]), n).compose(1 - Z) * (-1) ** n)),
    PolynomialIdentity(
        'jacobi-3', _J, 'R^(alpha,beta)_n(z) = (-z)^n R^(beta,-1-alpha-beta-2n)_n((z-1)/z)',
        lambda p, n: _jacobi_inverted(p, n, 'beta', Z - 1, Z, -1)),
    PolynomialIdentity(
        'jacobi-4', _J, 'R^(alpha,beta)_n(z) = z^n R^(-1-alpha-beta-2n,beta)_n(1/z)',
        lambda p, n: _jacobi_inverted(p, n, 'far-beta', ONE, Z, 1)),
    PolynomialIdentity(
        'jacobi-5', _J, 'R^(alpha,beta)_n(z) = (z-1)^n R^(-1-alpha-beta-2n,alpha)_n(1/(1-z))',
        lambda p, n: _jacobi_inverted(p, n, 'far-alpha', -ONE, Z - 1, 1)),
    PolynomialIdentity(
        'gegenbauer1-parity', _G1, 'C^I,alpha_n(z) = (-1)^n C^I,alpha_n(-z)',
        lambda p, n: (_P(_G1, p, n), _P(_G1, p, n).compose(-Z) * (-1) ** n)),
    PolynomialIdentity(
        'gegenbauer2-parity', _G2, 'C^II,alpha_n(z) = (-1)^n C^II,alpha_n(-z)',
        lambda p, n: (_P(_G2, p, n), _P(_G2, p, n).compose(-Z) * (-1) ** n)),
    PolynomialIdentity(
        'hermite-parity', _H, 'H_n(z) = (-1)^n H_n(-z)',
        lambda p, n: (_P(_H, (), n), _P(_H, (), n).compose(-Z) * (-1) ** n)),
    PolynomialIdentity(
        'laguerre-inversion', _L, 'L^alpha_n(z) = (-z)^n B^(-2n-alpha-1)_n(-1/z)',
        CROSS_FAMILY_IDENTITIES[0].build),
    PolynomialIdentity(
        'bessel-inversion', _B, 'B^theta_n(z) = z^n L^(-theta-2n-1)_n(-1/z)',
        CROSS_FAMILY_IDENTITIES[1].build),
)


def _find(catalog, identity_id, what):
    for entry in catalog:
        if entry.id == identity_id:
            return entry
    raise UsageError(f"Unknown {what} {identity_id!r}; expected one of {', '.join(e.id for e in catalog)}")


def cross_family_identities(identity_id=None, params=(), n=0):
    """
    The catalog when called without an id; otherwise the exact residual of
    one identity. For the Hermite and C^II parity splits n is m, the half
    degree.
    """
    if identity_id is None:
        return CROSS_FAMILY_IDENTITIES
    lhs, rhs = _find(CROSS_FAMILY_IDENTITIES, identity_id, 'identity').sides(params, n)
    return residual(lhs, rhs)


def symmetry_identities(identity_id=None, params=(), n=0):
    if identity_id is None:
        return POLYNOMIAL_SYMMETRIES
    lhs, rhs = _find(POLYNOMIAL_SYMMETRIES, identity_id, 'symmetry').sides(params, n)
    return residual(lhs, rhs)


# ---------------------------------------------------------------------------
# recurrences: L P_(p, n) = k P_(p', n') with first-order L

@dataclass(frozen=True)
class PolynomialRecurrence:
    family: PolyFamily
    index: int
    label: str
    build: object
    coefficient: object
    target: object
    additional: bool = False

    def operator(self, params, n):
        return self.build(normalize_params(self.family, params), n)

    def to_dict(self):
        return {'family': self.family.value, 'index': self.index, 'operator': self.label,
                'additional': self.additional}


def _op(p, q):
    return DiffOp.first_order(Poly(p) if isinstance(p, Poly) else Poly.const(p),
                              Poly(q) if isinstance(q, Poly) else Poly.const(q))


_ZZ = Z - Z * Z          # z(1-z)
_SQ = Z * Z


def _over(value, den, what):
    if den == 0:
        raise DegenerateParameters(f"{what}: the recurrence coefficient divides by zero")
    return value / den


def _jacobi_recurrences():
    def s(p):
        return p[0] + p[1]
    return [
        ('d', lambda p, n: _op(1, 0), lambda p, n: -(s(p) + n + 1),
         lambda p, n: ((p[0] + 1, p[1] + 1), n - 1)),
        ('z(1-z)d - alpha(z-1) - beta z', lambda p, n: _op(_ZZ, -p[0] * (Z - 1) - p[1] * Z),
         lambda p, n: Fraction(n + 1), lambda p, n: ((p[0] - 1, p[1] - 1), n + 1)),
        ('(1-z)d - beta', lambda p, n: _op(1 - Z, -p[1]), lambda p, n: -(p[1] + n),
         lambda p, n: ((p[0] + 1, p[1] - 1), n)),
        ('zd + alpha', lambda p, n: _op(Z, p[0]), lambda p, n: p[0] + n,
         lambda p, n: ((p[0] - 1, p[1] + 1), n)),
        ('zd - n', lambda p, n: _op(Z, -n), lambda p, n: -(p[0] + n),
         lambda p, n: ((p[0], p[1] + 1), n - 1)),
        ('z(1-z)d + 1 + alpha + n - (1+alpha+beta+n)z', lambda p, n: _op(_ZZ, 1 + p[0] + n - (1 + s(p) + n) * Z),
         lambda p, n: Fraction(n + 1), lambda p, n: ((p[0], p[1] - 1), n + 1)),
        ('zd + 1 + alpha + beta + n', lambda p, n: _op(Z, 1 + s(p) + n), lambda p, n: 1 + s(p) + n,
         lambda p, n: ((p[0], p[1] + 1), n)),
        ('z(1-z)d - n - beta + nz', lambda p, n: _op(_ZZ, -n - p[1] + n * Z), lambda p, n: -(p[1] + n),
         lambda p, n: ((p[0], p[1] - 1), n)),
        ('(z-1)d - n', lambda p, n: _op(Z - 1, -n), lambda p, n: p[1] + n,
         lambda p, n: ((p[0] + 1, p[1]), n - 1)),
        ('z(1-z)d + alpha - (1+alpha+beta+n)z', lambda p, n: _op(_ZZ, p[0] - (1 + s(p) + n) * Z),
         lambda p, n: Fraction(n + 1), lambda p, n: ((p[0] - 1, p[1]), n + 1)),
        ('(z-1)d + 1 + alpha + beta + n', lambda p, n: _op(Z - 1, 1 + s(p) + n), lambda p, n: 1 + s(p) + n,
         lambda p, n: ((p[0] + 1, p[1]), n)),
        ('z(1-z)d + alpha + nz', lambda p, n: _op(_ZZ, p[0] + n * Z), lambda p, n: p[0] + n,
         lambda p, n: ((p[0] - 1, p[1]), n)),
        ('(2n+alpha+beta+2)z(1-z)d + (n+alpha+beta+1)(n+alpha+1 - (2n+alpha+beta+2)z)',
         lambda p, n: _op(_ZZ * (2 * n + s(p) + 2), (n + s(p) + 1) * ((n + p[0] + 1) - (2 * n + s(p) + 2) * Z)),
         lambda p, n: (n + s(p) + 1) * (n + 1), lambda p, n: (p, n + 1)),
        ('-(2n+alpha+beta)z(1-z)d + n(n+beta - (2n+alpha+beta)z)',
         lambda p, n: _op(_ZZ * -(2 * n + s(p)), n * ((n + p[1]) - (2 * n + s(p)) * Z)),
         lambda p, n: (n + p[0]) * (n + p[1]), lambda p, n: (p, n - 1)),
    ]


def _laguerre_recurrences():
    return [
        ('d', lambda p, n: _op(1, 0), lambda p, n: Fraction(-1), lambda p, n: ((p[0] + 1,), n - 1)),
        ('zd + alpha - z', lambda p, n: _op(Z, p[0] - Z), lambda p, n: Fraction(n + 1),
         lambda p, n: ((p[0] - 1,), n + 1)),
        ('zd + alpha', lambda p, n: _op(Z, p[0]), lambda p, n: p[0] + n, lambda p, n: ((p[0] - 1,), n)),
        ('d - 1', lambda p, n: _op(1, -1), lambda p, n: Fraction(-1), lambda p, n: ((p[0] + 1,), n)),
        ('zd - n', lambda p, n: _op(Z, -n), lambda p, n: -(n + p[0]), lambda p, n: (p, n - 1)),
        ('zd + n + alpha + 1 - z', lambda p, n: _op(Z, n + p[0] + 1 - Z), lambda p, n: Fraction(n + 1),
         lambda p, n: (p, n + 1)),
    ]


def _bessel_recurrences():
    return [
        ('zd + n + theta + 1', lambda p, n: _op(Z, n + p[0] + 1), lambda p, n: n + p[0] + 1,
         lambda p, n: ((p[0] + 1,), n)),
        ('z^2 d - 1 - nz', lambda p, n: _op(_SQ, -1 - n * Z), lambda p, n: Fraction(-1),
         lambda p, n: ((p[0] - 1,), n)),
        ('zd - n', lambda p, n: _op(Z, -n), lambda p, n: Fraction(-1), lambda p, n: ((p[0] + 1,), n - 1)),
        ('z^2 d - 1 + (n+theta+1)z', lambda p, n: _op(_SQ, -1 + (n + p[0] + 1) * Z),
         lambda p, n: Fraction(-(n + 1)), lambda p, n: ((p[0] - 1,), n + 1)),
        ('d', lambda p, n: _op(1, 0), lambda p, n: -(n + p[0] + 1), lambda p, n: ((p[0] + 2,), n - 1)),
        ('z^2 d - 1 + theta z', lambda p, n: _op(_SQ, -1 + p[0] * Z), lambda p, n: Fraction(-(n + 1)),
         lambda p, n: ((p[0] - 2,), n + 1)),
        ('(2n+theta+2)z^2 d + (2n+theta+2)(n+theta+1)z - (n+theta+1)',
         lambda p, n: _op(_SQ * (2 * n + p[0] + 2), (2 * n + p[0] + 2) * (n + p[0] + 1) * Z - (n + p[0] + 1)),
         lambda p, n: -(n + 1) * (n + p[0] + 1), lambda p, n: (p, n + 1)),
        ('-(2n+theta)z^2 d + (2n+theta)nz + n',
         lambda p, n: _op(_SQ * -(2 * n + p[0]), (2 * n + p[0]) * n * Z + n),
         lambda p, n: Fraction(1), lambda p, n: (p, n - 1)),
    ]


def _gegenbauer2_recurrences():
    one_minus_sq = 1 - _SQ
    cubic = Z - Z * _SQ
    return [
        ('d', lambda p, n: _op(1, 0), lambda p, n: 2 * p[0] + 1, lambda p, n: ((p[0] + 1,), n - 1)),
        ('(1-z^2)d - 2 alpha z', lambda p, n: _op(one_minus_sq, -2 * p[0] * Z),
         lambda p, n: _over(-(n + 1) * (n + 2 * p[0]), 2 * p[0] - 1, 'C^II'),
         lambda p, n: ((p[0] - 1,), n + 1)),
        ('(1-z^2)d - (n+2alpha+1)z', lambda p, n: _op(one_minus_sq, -(n + 2 * p[0] + 1) * Z),
         lambda p, n: Fraction(-(n + 1)), lambda p, n: (p, n + 1)),
        ('(1-z^2)d + nz', lambda p, n: _op(one_minus_sq, n * Z), lambda p, n: n + 2 * p[0],
         lambda p, n: (p, n - 1)),
        ('zd - n', lambda p, n: _op(Z, -n), lambda p, n: 2 * p[0] + 1, lambda p, n: ((p[0] + 1,), n - 2)),
        ('z(1-z^2)d + 1 + n - (n+2alpha+1)z^2', lambda p, n: _op(cubic, 1 + n - (n + 2 * p[0] + 1) * _SQ),
         lambda p, n: _over(Fraction(-(n + 1) * (n + 2)), 2 * p[0] - 1, 'C^II'),
         lambda p, n: ((p[0] - 1,), n + 2)),
        ('zd + n + 2alpha + 1', lambda p, n: _op(Z, n + 2 * p[0] + 1), lambda p, n: 2 * p[0] + 1,
         lambda p, n: ((p[0] + 1,), n)),
        ('z(1-z^2)d - n - 2alpha + nz^2', lambda p, n: _op(cubic, -n - 2 * p[0] + n * _SQ),
         lambda p, n: _over(-(2 * p[0] + n - 1) * (2 * p[0] + n), 2 * p[0] - 1, 'C^II'),
         lambda p, n: ((p[0] - 1,), n)),
    ]


def _hermite_recurrences():
    return [
        ('d', lambda p, n: _op(1, 0), lambda p, n: Fraction(2), lambda p, n: ((), n - 1)),
        ('d - 2z', lambda p, n: _op(1, -2 * Z), lambda p, n: Fraction(-(n + 1)), lambda p, n: ((), n + 1)),
        ('zd - n', lambda p, n: _op(Z, -n), lambda p, n: Fraction(2), lambda p, n: ((), n - 2)),
        ('zd + n + 1 - 2z^2', lambda p, n: _op(Z, n + 1 - 2 * _SQ),
         lambda p, n: Fraction(-(n + 1) * (n + 2), 2), lambda p, n: ((), n + 2)),
    ]


# families whose lists end with two additional (same-parameter) relations
_RECURRENCE_SOURCES = {
    PolyFamily.JACOBI: (_jacobi_recurrences, 12),
    PolyFamily.LAGUERRE: (_laguerre_recurrences, 6),
    PolyFamily.BESSEL: (_bessel_recurrences, 6),
    PolyFamily.GEGENBAUER2: (_gegenbauer2_recurrences, 8),
    PolyFamily.HERMITE: (_hermite_recurrences, 4),
}


@lru_cache(maxsize=None)
def classical_recurrences(family):
    """The recurrence catalog of a family, numbered from 1; empty for families without one."""
    if isinstance(family, str):
        family = PolyFamily.parse(family)
    if family not in _RECURRENCE_SOURCES:
        return ()
    source, basic = _RECURRENCE_SOURCES[family]
    return tuple(
        PolynomialRecurrence(family, i + 1, label, build, coefficient, target, additional=i >= basic)
        for i, (label, build, coefficient, target) in enumerate(source())
    )


def apply_operator(op, P):
    """The polynomial sum_k c_k(z) P^(k)(z)."""
    total = Poly()
    for k, c in enumerate(op.coeffs):
        total = total + c * P.deriv(k)
    return total


def recurrence_sides(family, index, params, n):
    catalog = classical_recurrences(family)
    if not 1 <= index <= len(catalog):
        raise UsageError(f"{family.value} has recurrences 1..{len(catalog)}, not {index}")
    entry = catalog[index - 1]
    p = normalize_params(family, params)
    lhs = apply_operator(entry.build(p, n), _P(family, p, n))
    target, m = entry.target(p, n)
    return lhs, _P(family, target, m) * entry.coefficient(p, n)


def verify_recurrence(family, index, params, n):
    """Exact residual of recurrence `index` applied to P_n."""
    lhs, rhs = recurrence_sides(family, index, params, n)
    return residual(lhs, rhs)


# ---------------------------------------------------------------------------
# polynomials as limits of the regularized series

@dataclass(frozen=True)
class LimitCheck:
    limit: complex
    exact: complex
    residual: float

    def to_dict(self):
        return {'limit': str(self.limit), 'exact': str(self.exact), 'residual': self.residual}


def limit_check(family, params, n, z, eps=1e-6, tol=None):
    """
    Compare P_n(z) with (-1)^(n+1) (nu - n) F^I at nu = n + eps, where F^I
    is the 2F1 (Jacobi) or 1F1 (Laguerre) function with a = -nu, c = 1 + alpha.
    """
    p = normalize_params(family, params)
    nu = n + eps
    if family is PolyFamily.JACOBI:
        alpha, beta = (float(x) for x in p)
        fp = FamilyParams.from_classical(Family.HYP2F1, -nu, 1 + alpha + beta + nu, 1 + alpha)
        f = hyp2f1(fp, z, Normalization.BOLD_I, tol=tol)
    elif family is PolyFamily.LAGUERRE:
        alpha = float(p[0])
        fp = FamilyParams.from_classical(Family.HYP1F1, -nu, 1 + alpha)
        f = hyp1f1(fp, z, Normalization.BOLD_I, tol=tol)
    else:
        raise UsageError(f"no limit definition is catalogued for {family.value}")
    limit = (-1) ** (n + 1) * eps * f.value
    exact = complex(_P(family, p, n)(complex(z)))
    return LimitCheck(limit, exact, abs(limit - exact) / max(1.0, abs(exact)))
