"""
Numeric core: principal branches, Gamma and Pochhammer, and the two series
kernels every family evaluator is built on.

All functions are pure. Complex results are returned as Python complex;
pochhammer keeps exact types (int, Fraction) when it is given them.
"""
import cmath
import logging
import math
import re
import warnings
from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from scipy import integrate, special

from .config import get_settings
from .errors import BranchCutError, DegenerateParameters, DivisionError, DomainError, ParseError, PoleError

logger = logging.getLogger(__name__)

DEGENERACY_WINDOW = 1e-9
# floor for the relative stopping test of a partial sum that is exactly zero
TINY = 1e-300


class Status(Enum):
    CONVERGED = 'Converged'
    OPTIMALLY_TRUNCATED = 'OptimallyTruncated'
    FAILED = 'Failed'


@dataclass(frozen=True)
class SeriesResult:
    """A summed value with its error estimate.

    `derivatives` holds f', f'', ... when the kernel was asked for them.
    """
    value: complex
    err_estimate: float
    terms_used: int
    status: Status
    derivatives: tuple = ()

    @property
    def converged(self):
        return self.status is Status.CONVERGED

    def scaled(self, factor):
        factor = complex(factor)
        return replace(
            self,
            value=self.value * factor,
            err_estimate=self.err_estimate * abs(factor),
            derivatives=tuple(d * factor for d in self.derivatives),
        )

    def to_dict(self):
        return {
            'value': format_complex(self.value),
            'err_estimate': repr(float(self.err_estimate)),
            'terms_used': self.terms_used,
            'status': self.status.value,
        }


def format_complex(value):
    """Render a complex number as the 17-digit `a+bi` literal the CLI accepts."""
    value = complex(value)
    re_part = f"{value.real:.17g}"
    if value.imag == 0:
        return re_part
    sign = '+' if value.imag >= 0 or math.isnan(value.imag) else '-'
    return f"{re_part}{sign}{abs(value.imag):.17g}i"


_REAL = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')
_RATIONAL = re.compile(r'^[+-]?\d+/\d+$')


def _real_part(text, whole):
    if not _REAL.match(text):
        raise ParseError(f"not a number: {whole!r}")
    return float(text)


def parse_complex(text):
    """
    Read an `a+bi` literal: `1.5`, `-2i`, `i`, `0.3-1e-2i`, `1/3`.

    Integers and `p/q` rationals come back exact (int, Fraction) so that
    polynomial parameters stay rational; everything else is float or complex.
    """
    raw = str(text).strip()
    if not raw:
        raise ParseError("empty number", 0)
    if _RATIONAL.match(raw):
        value = Fraction(raw)
        return value.numerator if value.denominator == 1 else value
    if not raw.endswith('i'):
        value = _real_part(raw, raw)
        return int(value) if re.match(r'^[+-]?\d+$', raw) else value
    body = raw[:-1]
    split = None
    for k in range(len(body) - 1, 0, -1):
        if body[k] in '+-' and body[k - 1] not in 'eE':
            split = k
            break
    re_text, im_text = (body[:split], body[split:]) if split is not None else ('', body)
    if im_text in ('', '+'):
        im = 1.0
    elif im_text == '-':
        im = -1.0
    else:
        im = _real_part(im_text, raw)
    real = _real_part(re_text, raw) if re_text else 0.0
    return complex(real, im)


def combine(results, value):
    """Merge the error bookkeeping of several results into one for `value`."""
    status = Status.CONVERGED
    for r in results:
        if r.status is Status.FAILED:
            status = Status.FAILED
            break
        if r.status is Status.OPTIMALLY_TRUNCATED:
            status = Status.OPTIMALLY_TRUNCATED
    return SeriesResult(
        value=complex(value),
        err_estimate=sum(r.err_estimate for r in results),
        terms_used=sum(r.terms_used for r in results),
        status=status,
    )


# ---------------------------------------------------------------------------
# integer detection

def is_exact_integer(x):
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    c = complex(x)
    return c.imag == 0 and float(c.real).is_integer()


def nearest_integer(x):
    """Return (k, gap): the nearest integer k to x and |x - k|."""
    if isinstance(x, (int, Fraction)):
        k = round(x)
        return int(k), abs(float(x - k))
    c = complex(x)
    k = round(c.real)
    return int(k), abs(c - k)


def require_not_nonpositive_integer(x, what):
    """Raise PoleError at x in {0, -1, ...}, DegenerateParameters within the window."""
    k, gap = nearest_integer(x)
    if k > 0:
        return
    if is_exact_integer(x):
        raise PoleError(f"{what}={x} is a nonpositive integer")
    if gap < DEGENERACY_WINDOW:
        raise DegenerateParameters(f"{what}={x} is within {DEGENERACY_WINDOW:g} of the pole at {k}")


def require_not_integer(x, what):
    """Raise DegenerateParameters when x is (within the window of) an integer."""
    k, gap = nearest_integer(x)
    if is_exact_integer(x) or gap < DEGENERACY_WINDOW:
        raise DegenerateParameters(f"{what}={x} is an integer (nearest {k})")


# ---------------------------------------------------------------------------
# principal branches

def log_principal(z):
    """Principal logarithm with Im in (-pi, pi]; the negative axis maps to +pi."""
    z = complex(z)
    if z == 0:
        raise DomainError("logarithm of zero")
    if z.imag == 0 and z.real < 0:
        return complex(math.log(-z.real), math.pi)
    return cmath.log(z)


def pow_principal(z, mu):
    """exp(mu * log z) on the principal branch; integer exponents are computed directly."""
    if is_exact_integer(mu):
        n = int(round(complex(mu).real))
        z = complex(z)
        if z == 0 and n < 0:
            raise PoleError("negative integer power of zero")
        return z ** n
    z = complex(z)
    mu = complex(mu)
    if z.imag == 0 and z.real <= 0:
        raise BranchCutError(f"{z} lies on the cut (-inf, 0] for the non-integer exponent {mu}")
    return cmath.exp(mu * cmath.log(z))


# ---------------------------------------------------------------------------
# Gamma and Pochhammer

def gamma(z):
    """Euler's Gamma function on the complex plane minus the poles {0, -1, ...}."""
    if is_exact_integer(z):
        n = int(round(complex(z).real))
        if n <= 0:
            raise PoleError(f"Gamma has a pole at {n}")
        if n <= 171:
            return complex(math.factorial(n - 1))
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and float(z.real).is_integer():
        raise PoleError(f"Gamma has a pole at {z}")
    if z.imag == 0:
        return complex(special.gamma(z.real))
    return complex(special.gamma(z))


def rgamma(z):
    """1/Gamma(z), entire: zero at the nonpositive integers."""
    if is_exact_integer(z) and round(complex(z).real) <= 0:
        return 0j
    z = complex(z)
    if z.imag == 0:
        return complex(special.rgamma(z.real))
    return complex(special.rgamma(z))


def _one_like(a):
    if isinstance(a, (int, Fraction)) and not isinstance(a, bool):
        return Fraction(1)
    return 1


def pochhammer(a, n):
    """(a)_n for integer n, including negative n: (a)_{-k} = 1/((a-1)...(a-k))."""
    n = int(n)
    if n >= 0:
        result = _one_like(a)
        for k in range(n):
            result *= a + k
        return result
    denominator = _one_like(a)
    for k in range(1, -n + 1):
        factor = a - k
        if factor == 0:
            raise DivisionError(f"({a})_{n} divides by zero")
        denominator *= factor
    return _one_like(a) / denominator




# ---------------------------------------------------------------------------
# series kernels

def _finite(value):
    return math.isfinite(value.real) and math.isfinite(value.imag)


def _falling(n, k):
    result = 1
    for i in range(k):
        result *= n - i
    return result


def sum_power_series(coeff_ratio, z, tol=None, max_terms=None, leading=1, start=0,
                     derivatives=0, ratio_bound=None):
    """
    Sum  sum_{n >= start} c_n z^n  from c_start = leading and c_{n+1} = c_n * coeff_ratio(n).

    The tail is bounded by |last term| * q / (1 - q) once |ratio * z| has stayed
    below 1 for three consecutive terms, q being the largest of those three
    (and at least `ratio_bound` when the caller knows the limiting ratio).

    Args:
        coeff_ratio (callable): n -> c_{n+1} / c_n
        z (complex): evaluation point
        tol (float): tolerance on the tail bound relative to the partial sum
        max_terms (int): hard cap on the number of terms
        leading (complex): c_start
        start (int): index of the first nonzero coefficient
        derivatives (int): also return this many termwise derivatives
        ratio_bound (float): known limit of |c_{n+1} z / c_n|

    Returns:
        SeriesResult: Converged or Failed
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    max_terms = settings.max_terms if max_terms is None else max_terms
    z = complex(z)
    coeff = complex(leading)
    totals = [0j] * (derivatives + 1)

    if coeff == 0:
        return SeriesResult(0j, 0.0, 0, Status.CONVERGED, tuple(totals[1:]))

    if z == 0:
        # only c_0 .. c_derivatives contribute
        n = start
        while n <= derivatives:
            totals[n] = coeff * math.factorial(n)
            coeff = coeff * complex(coeff_ratio(n))
            n += 1
        return SeriesResult(totals[0], 0.0, 1, Status.CONVERGED, tuple(totals[1:]))

    recent = deque(maxlen=3)
    n = start
    terms = 0
    tail = math.inf
    while terms < max_terms:
        magnitude = 0.0
        for k in range(derivatives + 1):
            if n >= k:
                term = coeff * _falling(n, k) * z ** (n - k)
                totals[k] += term
                magnitude = max(magnitude, abs(term))
        terms += 1

        next_coeff = coeff * complex(coeff_ratio(n))
        if next_coeff == 0:
            logger.debug("power series terminated after %d terms", terms)
            return SeriesResult(totals[0], 0.0, terms, Status.CONVERGED, tuple(totals[1:]))
        if not (_finite(next_coeff) and all(_finite(t) for t in totals)):
            break

        ratio = abs(next_coeff / coeff * z)
        if derivatives:
            ratio *= (n + 1) / max(n + 1 - derivatives, 1)
        if ratio < 1:
            recent.append(ratio)
        else:
            recent.clear()
        if len(recent) == 3:
            q = max(recent)
            if ratio_bound is not None:
                q = max(q, ratio_bound)
            if q < 1:
                tail = magnitude * q / (1 - q)
                if tail <= tol * max(max(abs(t) for t in totals), TINY):
                    logger.debug("power series converged: %d terms, tail %.3g", terms, tail)
                    return SeriesResult(totals[0], tail, terms, Status.CONVERGED, tuple(totals[1:]))
        coeff = next_coeff
        n += 1

    logger.warning("power series failed at z=%s after %d terms", z, terms)
    err = tail if math.isfinite(tail) else abs(coeff * z ** n) if _finite(coeff) else math.inf
    return SeriesResult(totals[0], err, terms, Status.FAILED, tuple(totals[1:]))


def sum_asymptotic_series(term_ratio, z, max_terms=None, leading=1):
    """
    Optimally truncated sum of t_0 = leading, t_{n+1} = t_n * term_ratio(n) * z.

    Terms are added until the next one is no smaller than the current one; the
    smallest term is left out and its magnitude is the error estimate. A series
    that terminates (a zero term) is exact and reported Converged.
    """
    settings = get_settings()
    max_terms = settings.max_terms if max_terms is None else max_terms
    z = complex(z)
    term = complex(leading)
    total = term
    n = 0
    while n < max_terms:
        next_term = term * complex(term_ratio(n)) * z
        if next_term == 0:
            return SeriesResult(total, 0.0, n + 1, Status.CONVERGED)
        if abs(next_term) >= abs(term) and n > 0:
            # term is the smallest one: drop it
            total -= term
            return SeriesResult(total, abs(term), n, Status.OPTIMALLY_TRUNCATED)
        if abs(next_term) >= abs(term):
            return SeriesResult(total, abs(next_term), n + 1, Status.OPTIMALLY_TRUNCATED)
        total += next_term
        term = next_term
        n += 1
    return SeriesResult(total, abs(term), n + 1, Status.OPTIMALLY_TRUNCATED)


# ---------------------------------------------------------------------------
# quadrature

def quad_complex(func, lower, upper, tol=None, limit=None, points=None):
    """
    Integrate a complex-valued function of a real variable with QUADPACK.

    Real and imaginary parts are integrated separately; the returned error is
    the sum of the two absolute error estimates. `points` are interior break
    points and are ignored on infinite intervals.

    Returns:
        tuple: (complex value, float error estimate)
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    limit = settings.quad_limit if limit is None else limit
    options = {'epsabs': tol, 'epsrel': 1e-12, 'limit': limit}
    if points and math.isfinite(lower) and math.isfinite(upper):
        options['points'] = points

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', integrate.IntegrationWarning)
        re_value, re_err = integrate.quad(lambda t: complex(func(t)).real, lower, upper, **options)
        im_value, im_err = integrate.quad(lambda t: complex(func(t)).imag, lower, upper, **options)
    for w in caught:
        logger.debug("quadrature on [%s, %s]: %s", lower, upper, w.message)
    logger.debug("quadrature on [%s, %s]: error estimate %.3g", lower, upper, re_err + im_err)
    return complex(re_value, im_value), re_err + im_err
