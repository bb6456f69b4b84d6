"""
Series evaluation of the six families.

The convergent kernels (2F1, 1F1, 0F1) and the asymptotic 2F0 kernel all go
through numeric_core's summation routines; every standard solution is a
closed Expression (prefactor times a kernel at a mapped argument) evaluated
here with its first two derivatives when asked.

Example Usage:
    from hypertype.families import Family, FamilyParams
    from hypertype.series import hyp2f1, standard_solution, SolutionKind

    p = FamilyParams.from_classical(Family.HYP2F1, 1, 1, 2)
    hyp2f1(p, 0.5).value                  # 2 log 2
    standard_solution(SolutionKind.HYP2F1_AT1_INDEX0, p, 0.9)
"""
import cmath
import logging
import math
from enum import Enum

from .config import get_settings
from .errors import (
    BranchCutError, DegenerateNormalization, DegenerateParameters, DomainError, OutOfDomain,
    ParameterConstraintViolated, PoleError, UsageError,
)
from .expressions import (
    ExpTerm, Expression, IDENTITY_MAP, IDENTITY_PREFACTOR, MobiusMap, PowerFactor, PowerMap, Prefactor, chain,
)
from .families import HALF, Family, FamilyParams
from .numeric_core import (
    DEGENERACY_WINDOW, SeriesResult, Status, gamma, is_exact_integer, nearest_integer, pochhammer,
    quad_complex, require_not_nonpositive_integer, rgamma, sum_asymptotic_series, sum_power_series,
)

logger = logging.getLogger(__name__)

BASIC_FAMILIES = (Family.HYP2F1, Family.HYP1F1, Family.HYP0F1, Family.HYP2F0)
SQRT_PI = math.sqrt(math.pi)


class Normalization(Enum):
    PLAIN = 'Plain'
    BOLD = 'Bold'
    BOLD_I = 'BoldI'
    BOLD_II = 'BoldII'
    BOLD_0 = 'Bold0'

    @classmethod
    def parse(cls, name):
        for member in cls:
            if member.value.lower() == str(name).lower():
                return member
        names = ', '.join(m.value for m in cls)
        raise UsageError(f"Unknown normalization {name!r}; expected one of {names}")


class SolutionKind(Enum):
    HYP2F1_AT0_INDEX0 = (Family.HYP2F1, 'At0Index0')
    HYP2F1_AT0_INDEX_ALPHA = (Family.HYP2F1, 'At0IndexAlpha')
    HYP2F1_AT1_INDEX0 = (Family.HYP2F1, 'At1Index0')
    HYP2F1_AT1_INDEX_BETA = (Family.HYP2F1, 'At1IndexBeta')
    HYP2F1_AT_INF_A = (Family.HYP2F1, 'AtInfA')
    HYP2F1_AT_INF_B = (Family.HYP2F1, 'AtInfB')
    HYP1F1_AT0_INDEX0 = (Family.HYP1F1, 'At0Index0')
    HYP1F1_AT0_INDEX_ALPHA = (Family.HYP1F1, 'At0IndexAlpha')
    HYP1F1_AT_PLUS_INF = (Family.HYP1F1, 'AtPlusInf')
    HYP1F1_AT_MINUS_INF = (Family.HYP1F1, 'AtMinusInf')
    HYP0F1_AT0_INDEX0 = (Family.HYP0F1, 'At0Index0')
    HYP0F1_AT0_INDEX_ALPHA = (Family.HYP0F1, 'At0IndexAlpha')
    HYP0F1_TILDE_AT_INF = (Family.HYP0F1, 'TildeAtInf')
    GEGENBAUER_EVEN = (Family.GEGENBAUER, 'Even')
    GEGENBAUER_ODD = (Family.GEGENBAUER, 'Odd')
    GEGENBAUER_AT1_INDEX0 = (Family.GEGENBAUER, 'At1Index0')
    GEGENBAUER_AT1_INDEX_ALPHA = (Family.GEGENBAUER, 'At1IndexAlpha')
    GEGENBAUER_AT_INF_A = (Family.GEGENBAUER, 'AtInfA')
    GEGENBAUER_AT_INF_B = (Family.GEGENBAUER, 'AtInfB')
    HERMITE_EVEN = (Family.HERMITE, 'Even')
    HERMITE_ODD = (Family.HERMITE, 'Odd')
    HERMITE_AT_PLUS_INF = (Family.HERMITE, 'AtPlusInf')
    HERMITE_AT_PLUS_I_INF = (Family.HERMITE, 'AtPlusIInf')

    @property
    def family(self):
        return self.value[0]

    @property
    def label(self):
        return self.value[1]

    def __str__(self):
        return f"{self.family.value}:{self.label}"

    @classmethod
    def for_family(cls, family):
        return [k for k in cls if k.family is family]

    @classmethod
    def parse(cls, text, family=None):
        """Accept 'family:Label' or a bare label (2F1 unless `family` is given)."""
        text = str(text)
        if ':' in text:
            family_name, label = text.split(':', 1)
            family = Family.parse(family_name)
        else:
            label = text
            family = family or Family.HYP2F1
        for kind in cls.for_family(family):
            if kind.label.lower() == label.lower():
                return kind
        labels = ', '.join(k.label for k in cls.for_family(family))
        raise UsageError(f"Unknown {family.value} solution {label!r}; expected one of {labels}")


# ---------------------------------------------------------------------------
# helpers

def _require_family(params, *families):
    if params.family not in families:
        names = ' or '.join(f.value for f in families)
        raise UsageError(f"expected {names} parameters, got {params.family.value}")


def _complex(values):
    return tuple(complex(v) for v in values)


def _gamma_product(args, what):
    """prod Gamma(x); DegenerateNormalization at a pole."""
    result = 1 + 0j
    for x in args:
        try:
            result *= gamma(x)
        except PoleError as e:
            raise DegenerateNormalization(f"{what}: Gamma({x}) is infinite") from e
        k, gap = nearest_integer(x)
        if k <= 0 and gap < DEGENERACY_WINDOW:
            raise DegenerateNormalization(f"{what}: Gamma({x}) is within {DEGENERACY_WINDOW:g} of a pole")
    return result


def _merge(results, values):
    """One SeriesResult for `values` (value and derivatives) from several kernel results."""
    status = Status.CONVERGED
    for r in results:
        if r.status is Status.FAILED:
            status = Status.FAILED
        elif r.status is Status.OPTIMALLY_TRUNCATED and status is Status.CONVERGED:
            status = Status.OPTIMALLY_TRUNCATED
    return SeriesResult(
        complex(values[0]),
        sum(r.err_estimate for r in results),
        sum(r.terms_used for r in results),
        status,
        tuple(complex(v) for v in values[1:]),
    )


# ---------------------------------------------------------------------------
# kernels

def generalized_series(upper, lower, z, regularized=False, tol=None, max_terms=None, derivatives=0):
    """
    sum (upper)_n / (lower)_n z^n / n!  with at most one lower parameter.

    With `regularized` the sum is divided by Gamma(c); when c is a nonpositive
    integer the first 1 - c terms vanish and the sum starts at n0 = 1 - c with
    leading coefficient (a)_n0 (b)_n0 / (Gamma(c + n0) n0!).
    """
    upper = _complex(upper)
    lower = _complex(lower)
    start = 0
    leading = 1 + 0j
    if regularized:
        for c in lower:
            if is_exact_integer(c) and round(c.real) <= 0:
                start = max(start, 1 - int(round(c.real)))
        for a in upper:
            leading *= pochhammer(a, start)
        for c in lower:
            leading *= rgamma(c + start)
        leading /= math.factorial(start)
    else:
        for c in lower:
            require_not_nonpositive_integer(c, 'c')

    def ratio(n):
        num = 1 + 0j
        for a in upper:
            num *= a + n
        den = complex(n + 1)
        for c in lower:
            den *= c + n
        return num / den

    bound = abs(complex(z)) if len(upper) > len(lower) else 0.0
    return sum_power_series(ratio, z, tol=tol, max_terms=max_terms, leading=leading, start=start,
                            derivatives=derivatives, ratio_bound=bound)


def hyp2f1(params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    """
    Gauss series F(a,b;c;z) for |z| < 1.

    Bold divides by Gamma(c); BoldI multiplies the Bold value by Gamma(a)Gamma(c-a).
    """
    _require_family(params, Family.HYP2F1)
    z = complex(z)
    if abs(z) >= 1:
        raise OutOfDomain(f"the 2F1 series needs |z| < 1, got |z| = {abs(z):.6g}")
    a, b, c = _complex(params.classical)
    if norm is Normalization.PLAIN:
        return generalized_series((a, b), (c,), z, tol=tol, max_terms=max_terms, derivatives=derivatives)
    bold = generalized_series((a, b), (c,), z, regularized=True, tol=tol, max_terms=max_terms,
                              derivatives=derivatives)
    if norm is Normalization.BOLD:
        return bold
    if norm is Normalization.BOLD_I:
        return bold.scaled(_gamma_product((a, c - a), 'F^I'))
    raise UsageError(f"normalization {norm.value} is not defined for 2f1")


def hyp1f1(params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    """Kummer series F(a;c;z), entire in z."""
    _require_family(params, Family.HYP1F1)
    a, c = _complex(params.classical)
    if norm is Normalization.PLAIN:
        return generalized_series((a,), (c,), z, tol=tol, max_terms=max_terms, derivatives=derivatives)
    bold = generalized_series((a,), (c,), z, regularized=True, tol=tol, max_terms=max_terms,
                              derivatives=derivatives)
    if norm is Normalization.BOLD:
        return bold
    if norm is Normalization.BOLD_I:
        return bold.scaled(_gamma_product((a, c - a), 'F^I'))
    raise UsageError(f"normalization {norm.value} is not defined for 1f1")


def hyp0f1(params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    _require_family(params, Family.HYP0F1)
    (c,) = _complex(params.classical)
    if norm is Normalization.PLAIN:
        return generalized_series((), (c,), z, tol=tol, max_terms=max_terms, derivatives=derivatives)
    if norm is Normalization.BOLD:
        return generalized_series((), (c,), z, regularized=True, tol=tol, max_terms=max_terms,
                                  derivatives=derivatives)
    raise UsageError(f"normalization {norm.value} is not defined for 0f1")


def _terminates(x):
    return is_exact_integer(x) and round(complex(x).real) <= 0


def _asymptotic_2f0(a, b, z, max_terms, derivatives):
    # the k-th derivative is (a)_k (b)_k F(a+k, b+k; -; z)
    results = []
    for k in range(derivatives + 1):
        ak, bk = a + k, b + k
        leading = pochhammer(a, k) * pochhammer(b, k)
        results.append(sum_asymptotic_series(lambda n, ak=ak, bk=bk: (ak + n) * (bk + n) / (n + 1), z,
                                             max_terms=max_terms, leading=leading))
    return _merge(results, [r.value for r in results])


def hyp2f0(params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0, method='auto'):
    """
    The 2F0 series  sum (a)_n (b)_n z^n / n!.

    It converges only when a or b is a nonpositive integer; otherwise the sum is
    optimally truncated and the smallest term is the error estimate. With
    method='auto' a truncation error above `tol` falls back to the Laplace
    integral when z is off [0, inf) and Re a > 0 or Re b > 0. BoldI multiplies
    by Gamma(b).
    """
    _require_family(params, Family.HYP2F0)
    if method not in ('auto', 'asymptotic', 'quadrature'):
        raise UsageError(f"unknown 2f0 method {method!r}")
    if norm not in (Normalization.PLAIN, Normalization.BOLD_I):
        raise UsageError(f"normalization {norm.value} is not defined for 2f0")
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    a, b = _complex(params.classical)
    z = complex(z)

    if method == 'quadrature':
        result = hyp2f0_quadrature(params, z, tol=tol, derivatives=derivatives)
    elif _terminates(a) or _terminates(b):
        result = sum_power_series(lambda n: (a + n) * (b + n) / (n + 1), z, tol=0.0, max_terms=max_terms,
                                  derivatives=derivatives)
    else:
        result = _asymptotic_2f0(a, b, z, max_terms, derivatives)
        if method == 'auto' and result.err_estimate > tol and _laplace_admissible(a, b, z):
            logger.debug("2F0 at z=%s: asymptotic error %.3g above tol, using quadrature", z, result.err_estimate)
            result = hyp2f0_quadrature(params, z, tol=tol, derivatives=derivatives)

    if norm is Normalization.BOLD_I:
        result = result.scaled(_gamma_product((b,), 'tilde F^I'))
    return result


def _laplace_admissible(a, b, z):
    on_cut = z.imag == 0 and z.real > 0
    return not on_cut and (a.real > 0 or b.real > 0)


def hyp2f0_quadrature(params, z, norm=Normalization.PLAIN, tol=None, derivatives=0):
    """
    2F0 through  Gamma(b) F(a,b;-;z) = int_0^inf e^{-s} s^{b-1} (1 - z s)^{-a} ds.

    The k-th derivative carries (a)_k s^{b-1+k} (1 - z s)^{-a-k}. Requires z
    off [0, inf); a and b are exchanged when only Re a > 0.
    """
    _require_family(params, Family.HYP2F0)
    a, b = _complex(params.classical)
    z = complex(z)
    if z.imag == 0 and z.real > 0:
        raise OutOfDomain(f"the Laplace integral for 2f0 needs z off [0, inf), got {z}")
    if b.real > 0:
        outer, inner = a, b
    elif a.real > 0:
        outer, inner = b, a
    else:
        raise ParameterConstraintViolated(f"the Laplace integral needs Re a > 0 or Re b > 0 (a={a}, b={b})")

    values = []
    err = 0.0
    for k in range(derivatives + 1):
        def integrand(s, k=k):
            return cmath.exp(-s + (inner - 1 + k) * math.log(s) - (outer + k) * cmath.log(1 - z * s))

        head, head_err = quad_complex(integrand, 0.0, 1.0, tol=tol)
        tail, tail_err = quad_complex(integrand, 1.0, math.inf, tol=tol)
        scale = pochhammer(outer, k) * rgamma(inner)
        values.append(scale * (head + tail))
        err += abs(scale) * (head_err + tail_err)

    settings = get_settings()
    tol = settings.tol if tol is None else tol
    status = Status.CONVERGED if err <= max(tol, 1e-10 * abs(values[0])) else Status.FAILED
    result = SeriesResult(values[0], err, 0, status, tuple(values[1:]))
    if norm is Normalization.BOLD_I:
        result = result.scaled(_gamma_product((b,), 'tilde F^I'))
    return result


# ---------------------------------------------------------------------------
# reflection-invariant families: even and odd solutions through u = z^2

def _even(inner, z, derivatives):
    g = (inner.value,) + inner.derivatives
    values = [g[0]]
    if derivatives >= 1:
        values.append(2 * z * g[1])
    if derivatives >= 2:
        values.append(2 * g[1] + 4 * z * z * g[2])
    return _merge([inner], values)


def _odd(inner, z, derivatives):
    g = (inner.value,) + inner.derivatives
    values = [2 * z * g[0]]
    if derivatives >= 1:
        values.append(2 * g[0] + 4 * z * z * g[1])
    if derivatives >= 2:
        values.append(12 * z * g[1] + 8 * z ** 3 * g[2])
    return _merge([inner], values)


def gegenbauer_even(params, z, tol=None, max_terms=None, derivatives=0):
    """S+ = F(a/2, b/2; 1/2; z^2): S+(0) = 1, S+'(0) = 0."""
    _require_family(params, Family.GEGENBAUER)
    z = complex(z)
    a, b = params.classical
    inner_params = FamilyParams.from_classical(Family.HYP2F1, a * HALF, b * HALF, HALF)
    inner = hyp2f1(inner_params, z * z, tol=tol, max_terms=max_terms, derivatives=derivatives)
    return _even(inner, z, derivatives)


def gegenbauer_odd(params, z, tol=None, max_terms=None, derivatives=0):
    """S- = 2z F((a+1)/2, (b+1)/2; 3/2; z^2): S-(0) = 0, S-'(0) = 2."""
    _require_family(params, Family.GEGENBAUER)
    z = complex(z)
    a, b = params.classical
    inner_params = FamilyParams.from_classical(Family.HYP2F1, (a + 1) * HALF, (b + 1) * HALF, 3 * HALF)
    inner = hyp2f1(inner_params, z * z, tol=tol, max_terms=max_terms, derivatives=derivatives)
    return _odd(inner, z, derivatives)


def hermite_even(params, z, tol=None, max_terms=None, derivatives=0):
    """S+ = F(a/2; 1/2; z^2)."""
    _require_family(params, Family.HERMITE)
    z = complex(z)
    (a,) = params.classical
    inner = hyp1f1(FamilyParams.from_classical(Family.HYP1F1, a * HALF, HALF), z * z,
                   tol=tol, max_terms=max_terms, derivatives=derivatives)
    return _even(inner, z, derivatives)


def hermite_odd(params, z, tol=None, max_terms=None, derivatives=0):
    """S- = 2z F((a+1)/2; 3/2; z^2)."""
    _require_family(params, Family.HERMITE)
    z = complex(z)
    (a,) = params.classical
    inner = hyp1f1(FamilyParams.from_classical(Family.HYP1F1, (a + 1) * HALF, 3 * HALF), z * z,
                   tol=tol, max_terms=max_terms, derivatives=derivatives)
    return _odd(inner, z, derivatives)


_PARITY_KERNELS = {
    SolutionKind.GEGENBAUER_EVEN: gegenbauer_even,
    SolutionKind.GEGENBAUER_ODD: gegenbauer_odd,
    SolutionKind.HERMITE_EVEN: hermite_even,
    SolutionKind.HERMITE_ODD: hermite_odd,
}


# ---------------------------------------------------------------------------
# normalizations

def normalization_factor(family, params, norm):
    """
    The factor N with  norm-variant = N * plain  for `params` of `family`.

    Raises:
        DegenerateNormalization: N is infinite at these parameters
        UsageError: the family has no such normalization
    """
    if params.family is not family:
        raise UsageError(f"parameters belong to {params.family.value}, not {family.value}")
    if norm is Normalization.PLAIN:
        return 1 + 0j
    what = f"{family.value} {norm.value}"

    if family in (Family.HYP2F1, Family.HYP1F1):
        a, c = params.classical[0], params.classical[-1]
        if norm is Normalization.BOLD:
            return rgamma(c)
        if norm is Normalization.BOLD_I:
            return _gamma_product((a, c - a), what) * rgamma(c)
    elif family is Family.HYP0F1:
        if norm is Normalization.BOLD:
            return rgamma(params.c)
    elif family is Family.HYP2F0:
        if norm is Normalization.BOLD_I:
            return _gamma_product((params.b,), what)
    elif family is Family.GEGENBAUER:
        alpha, lam = params.lie
        if norm is Normalization.BOLD:
            return rgamma(alpha + 1)
        if norm is Normalization.BOLD_I:
            return (2 ** complex(-HALF - alpha + lam) * _gamma_product((HALF + alpha - lam, HALF + lam), what)
                    * rgamma(alpha + 1))
        if norm is Normalization.BOLD_II:
            return _gamma_product((HALF + alpha - lam, HALF + alpha + lam), what) * rgamma(2 * alpha + 1)
        if norm is Normalization.BOLD_0:
            return SQRT_PI * _gamma_product((HALF + alpha,), what) * rgamma(alpha + 1)
    else:
        (lam,) = params.lie
        if norm is Normalization.BOLD_I:
            return 2 ** complex(-lam - HALF) * _gamma_product((lam + HALF,), what)
        if norm is Normalization.BOLD_0:
            return complex(SQRT_PI)
    raise UsageError(f"normalization {norm.value} is not defined for {family.value}")


# ---------------------------------------------------------------------------
# standard solutions as expressions

def _p2f1(*lie):
    return FamilyParams.from_lie(Family.HYP2F1, *lie)


def _p2f0(*lie):
    return FamilyParams.from_lie(Family.HYP2F0, *lie)


ONE_MINUS_Z = MobiusMap(-1, 1, 0, 1)
INVERSE = MobiusMap(0, 1, 1, 0)
MINUS_INVERSE = MobiusMap(0, -1, 1, 0)
HALF_ONE_MINUS_Z = MobiusMap(-1, 1, 0, 2)
TWO_OVER_ONE_PLUS_Z = MobiusMap(0, 2, 1, 1)


def _power(scale, point, exponent):
    return Prefactor(powers=(PowerFactor(scale, point, exponent),))


def solution_expression(kind, params):
    """
    The defining expression of a standard solution other than the even and
    odd ones (those are evaluated by their own kernels).
    """
    if kind.family is not params.family:
        raise UsageError(f"{kind} does not take {params.family.value} parameters")
    K = SolutionKind

    if kind.family is Family.HYP2F1:
        alpha, beta, mu = params.lie
        a, b, _ = params.classical
        table = {
            K.HYP2F1_AT0_INDEX0: (IDENTITY_PREFACTOR, _p2f1(alpha, beta, mu), IDENTITY_MAP, 'F_{a,b,m}(z)'),
            K.HYP2F1_AT0_INDEX_ALPHA: (_power(1, 0, -alpha), _p2f1(-alpha, beta, -mu), IDENTITY_MAP,
                                       'z^{-a} F_{-a,b,-m}(z)'),
            K.HYP2F1_AT1_INDEX0: (IDENTITY_PREFACTOR, _p2f1(beta, alpha, mu), ONE_MINUS_Z, 'F_{b,a,m}(1-z)'),
            K.HYP2F1_AT1_INDEX_BETA: (_power(-1, 1, -beta), _p2f1(-beta, alpha, -mu), ONE_MINUS_Z,
                                      '(1-z)^{-b} F_{-b,a,-m}(1-z)'),
            K.HYP2F1_AT_INF_A: (_power(-1, 0, -a), _p2f1(-mu, beta, -alpha), INVERSE,
                                '(-z)^{-(1+a+b-m)/2} F_{-m,b,-a}(1/z)'),
            K.HYP2F1_AT_INF_B: (_power(-1, 0, -b), _p2f1(mu, beta, alpha), INVERSE,
                                '(-z)^{-(1+a+b+m)/2} F_{m,b,a}(1/z)'),
        }
        prefactor, inner, point_map, label = table[kind]
        return Expression(prefactor, inner, point_map, label=label)

    if kind.family is Family.HYP1F1:
        theta, alpha = params.lie
        a, _ = params.classical
        p1f1 = lambda *lie: FamilyParams.from_lie(Family.HYP1F1, *lie)  # noqa: E731
        if kind is K.HYP1F1_AT0_INDEX0:
            return Expression(IDENTITY_PREFACTOR, p1f1(theta, alpha), label='F_{t,a}(z)')
        if kind is K.HYP1F1_AT0_INDEX_ALPHA:
            return Expression(_power(1, 0, -alpha), p1f1(theta, -alpha), label='z^{-a} F_{t,-a}(z)')
        if kind is K.HYP1F1_AT_PLUS_INF:
            return Expression(_power(1, 0, -a), _p2f0(theta, alpha), MINUS_INVERSE,
                              label='z^{-(1+t+a)/2} ~F_{t,a}(-1/z)')
        prefactor = Prefactor(powers=(PowerFactor(-1, 0, (-1 + theta - alpha) * HALF),), exps=(ExpTerm(1, 1),))
        return Expression(prefactor, _p2f0(-theta, alpha), INVERSE,
                          label='e^z (-z)^{(-1+t-a)/2} ~F_{-t,a}(1/z)')

    if kind.family is Family.HYP0F1:
        (alpha,) = params.lie
        if kind is K.HYP0F1_AT0_INDEX0:
            return Expression(IDENTITY_PREFACTOR, FamilyParams.from_lie(Family.HYP0F1, alpha), label='F_a(z)')
        if kind is K.HYP0F1_AT0_INDEX_ALPHA:
            return Expression(_power(1, 0, -alpha), FamilyParams.from_lie(Family.HYP0F1, -alpha),
                              label='z^{-a} F_{-a}(z)')
        prefactor = Prefactor(powers=(PowerFactor(1, 0, -alpha * HALF - HALF * HALF),), exps=(ExpTerm(-2, HALF),))
        return Expression(prefactor, _p2f0(0, 2 * alpha), PowerMap(-0.25, -HALF),
                          label='e^{-2 sqrt z} z^{-a/2-1/4} ~F_{0,2a}(-1/(4 sqrt z))')

    if kind.family is Family.GEGENBAUER:
        alpha, lam = params.lie
        if kind is K.GEGENBAUER_AT1_INDEX0:
            return Expression(IDENTITY_PREFACTOR, _p2f1(alpha, alpha, 2 * lam), HALF_ONE_MINUS_Z,
                              label='F_{a,a,2l}((1-z)/2)')
        if kind is K.GEGENBAUER_AT1_INDEX_ALPHA:
            prefactor = Prefactor(powers=(PowerFactor(-1, 1, -alpha),), constant=2 ** complex(-alpha))
            return Expression(prefactor, _p2f1(-alpha, alpha, 2 * lam), HALF_ONE_MINUS_Z,
                              label='2^{-a} (1-z)^{-a} F_{-a,a,2l}((1-z)/2)')
        if kind is K.GEGENBAUER_AT_INF_A:
            return Expression(_power(1, -1, -HALF - alpha + lam), _p2f1(-2 * lam, alpha, -alpha), TWO_OVER_ONE_PLUS_Z,
                              label='(1+z)^{-1/2-a+l} F_{-2l,a,-a}(2/(1+z))')
        if kind is K.GEGENBAUER_AT_INF_B:
            return Expression(_power(1, -1, -HALF - alpha - lam), _p2f1(2 * lam, alpha, alpha), TWO_OVER_ONE_PLUS_Z,
                              label='(1+z)^{-1/2-a-l} F_{2l,a,a}(2/(1+z))')

    if kind.family is Family.HERMITE:
        (a,) = params.classical
        if kind is K.HERMITE_AT_PLUS_INF:
            inner = FamilyParams.from_classical(Family.HYP2F0, a * HALF, (a + 1) * HALF)
            return Expression(_power(1, 0, -a), inner, PowerMap(-1, -2),
                              label='z^{-l-1/2} ~F(a/2,(a+1)/2;-;-z^-2)')
        if kind is K.HERMITE_AT_PLUS_I_INF:
            a_dual = 1 - a
            inner = FamilyParams.from_classical(Family.HYP2F0, a_dual * HALF, (a_dual + 1) * HALF)
            prefactor = Prefactor(powers=(PowerFactor(-1j, 0, -a_dual),), exps=(ExpTerm(1, 2),))
            return Expression(prefactor, inner, PowerMap(1, -2),
                              label='e^{z^2} (-iz)^{l-1/2} ~F((1/2-l)/2,(3/2-l)/2;-;z^-2)')

    raise UsageError(f"{kind} is evaluated by its series kernel, not by an expression")


def _solution_function_params(kind, params):
    """Parameters of the S-function whose normalization a Gegenbauer/Hermite kind carries."""
    K = SolutionKind
    if kind.family is Family.GEGENBAUER:
        alpha, lam = params.lie
        swapped = {
            K.GEGENBAUER_AT1_INDEX0: (alpha, lam),
            K.GEGENBAUER_AT1_INDEX_ALPHA: (-alpha, -lam),
            K.GEGENBAUER_AT_INF_A: (-lam, -alpha),
            K.GEGENBAUER_AT_INF_B: (lam, alpha),
        }[kind]
        return FamilyParams.from_lie(Family.GEGENBAUER, *swapped)
    (lam,) = params.lie
    return FamilyParams.from_lie(Family.HERMITE, lam if kind is K.HERMITE_AT_PLUS_INF else -lam)


def _kernel(params, w, norm, tol, max_terms, derivatives):
    family = params.family
    if family is Family.HYP2F1:
        return hyp2f1(params, w, norm, tol, max_terms, derivatives)
    if family is Family.HYP1F1:
        return hyp1f1(params, w, norm, tol, max_terms, derivatives)
    if family is Family.HYP0F1:
        return hyp0f1(params, w, norm, tol, max_terms, derivatives)
    if family is Family.HYP2F0:
        return hyp2f0(params, w, norm, tol, max_terms, derivatives)
    raise UsageError(f"{family.value} has no series kernel of its own")


def evaluate_expression(expr, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    """Value (and up to two derivatives) of prefactor(z) * F(w(z))."""
    if derivatives > 2:
        raise UsageError("at most two derivatives are available")
    z = complex(z)
    map_derivs = expr.point_map.derivatives(z)
    if expr.kind is not None:
        inner = standard_solution(expr.kind, expr.params, map_derivs[0], norm, tol, max_terms, derivatives)
    else:
        inner = _kernel(expr.params, map_derivs[0], norm, tol, max_terms, derivatives)
    if derivatives:
        prefactor_derivs = expr.prefactor.derivatives(z)
    else:
        prefactor_derivs = (expr.prefactor(z), 0j, 0j)
    values = chain(prefactor_derivs, (inner.value,) + inner.derivatives, map_derivs, derivatives)
    return SeriesResult(
        complex(values[0]),
        inner.err_estimate * abs(prefactor_derivs[0]),
        inner.terms_used,
        inner.status,
        tuple(complex(v) for v in values[1:]),
    )


def _require_plain_defined(inner, kind):
    """The series of `inner` must have its lower parameter off the nonpositive integers."""
    if inner.family in (Family.HYP2F1, Family.HYP1F1, Family.HYP0F1):
        c = inner.classical[-1]
        k, gap = nearest_integer(c)
        if k <= 0 and (is_exact_integer(c) or gap < DEGENERACY_WINDOW):
            raise DegenerateParameters(f"{kind} is undefined: its series has c={c}")


def _candidates(expressions, z, preferred_radius=0.9):
    """Expressions in the order they are tried: the canonical one when its
    argument is small enough, then increasing |w|."""
    ranked = []
    for i, expr in enumerate(expressions):
        try:
            w = expr.argument(z)
        except (DomainError, ZeroDivisionError):
            continue
        if i == 0 and abs(w) <= preferred_radius:
            ranked.append((-1.0, i, expr))
        else:
            ranked.append((abs(w), i, expr))
    if not ranked:
        raise OutOfDomain(f"no expression of the table can be evaluated at z={z}")
    return [expr for _, _, expr in sorted(ranked, key=lambda item: (item[0], item[1]))]


def _evaluate_basic(kind, expressions, z, norm, tol, max_terms, derivatives):
    canonical = expressions[0]
    error = None
    for expr in _candidates(expressions, z):
        try:
            if expr is canonical and norm is not Normalization.PLAIN:
                return evaluate_expression(expr, z, norm, tol, max_terms, derivatives)
            _require_plain_defined(expr.params, kind)
            result = evaluate_expression(expr, z, Normalization.PLAIN, tol, max_terms, derivatives)
            if norm is not Normalization.PLAIN:
                result = result.scaled(normalization_factor(canonical.params.family, canonical.params, norm))
            return result
        except (BranchCutError, DegenerateParameters, OutOfDomain) as e:
            logger.debug("%s via %s failed at z=%s: %s", kind, expr, z, e)
            error = e
    raise error


def standard_solution(kind, params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    """
    Evaluate the standard solution `kind` at z.

    For the basic families `norm` applies to the series in the defining
    expression; for Gegenbauer and Hermite it applies to the S-function the
    solution is written with. 2F1 solutions are evaluated through whichever
    Kummer-table expression has the smallest argument.

    Raises:
        DegenerateParameters: the defining series does not exist (e.g. alpha
            a positive integer for At0IndexAlpha)
        OutOfDomain: no expression converges at z
    """
    if kind.family is not params.family:
        raise UsageError(f"{kind} does not take {params.family.value} parameters")
    z = complex(z)

    if kind in _PARITY_KERNELS:
        if norm is not Normalization.PLAIN:
            raise UsageError(f"{kind} is only defined in the plain normalization")
        return _PARITY_KERNELS[kind](params, z, tol=tol, max_terms=max_terms, derivatives=derivatives)

    if kind.family is Family.HYP2F1:
        from .symmetry import kummer_expressions
        expressions = [solution_expression(kind, params)] + kummer_expressions(kind, params)[1:]
    else:
        expressions = [solution_expression(kind, params)]
    canonical = expressions[0]

    if kind.family in BASIC_FAMILIES:
        return _evaluate_basic(kind, expressions, z, norm, tol, max_terms, derivatives)

    _require_plain_defined(canonical.params, kind)
    result = evaluate_expression(canonical, z, Normalization.PLAIN, tol, max_terms, derivatives)
    if norm is not Normalization.PLAIN:
        result = result.scaled(normalization_factor(kind.family, _solution_function_params(kind, params), norm))
    return result


def gegenbauer_solution(params, z, norm=Normalization.PLAIN, tol=None, max_terms=None, derivatives=0):
    """S_{alpha,lam}(z) = F_{alpha,alpha,2 lam}((1-z)/2), the solution ~1 at z = 1."""
    return standard_solution(SolutionKind.GEGENBAUER_AT1_INDEX0, params, z, norm, tol, max_terms, derivatives)


def euler_transforms(params, z, tol=None, max_terms=None):
    """
    The four expressions of the 2F1 solution ~1 at 0, evaluated at z:

        F(a,b;c;z) = (1-z)^{c-a-b} F(c-a,c-b;c;z)
                   = (1-z)^{-a} F(a,c-b;c;z/(z-1)) = (1-z)^{-b} F(c-a,b;c;z/(z-1))

    Returns:
        list: (label, SeriesResult) pairs in that order
    """
    _require_family(params, Family.HYP2F1)
    alpha, beta, mu = params.lie
    a, b, _ = params.classical
    pfaff = MobiusMap(1, 0, 1, -1)
    expressions = [
        Expression(IDENTITY_PREFACTOR, params, label='F(a,b;c;z)'),
        Expression(_power(-1, 1, -beta), _p2f1(alpha, -beta, -mu), label='(1-z)^(c-a-b) F(c-a,c-b;c;z)'),
        Expression(_power(-1, 1, -a), _p2f1(alpha, -mu, -beta), pfaff, label='(1-z)^(-a) F(a,c-b;c;z/(z-1))'),
        Expression(_power(-1, 1, -b), _p2f1(alpha, mu, beta), pfaff, label='(1-z)^(-b) F(c-a,b;c;z/(z-1))'),
    ]
    return [(e.label, evaluate_expression(e, z, tol=tol, max_terms=max_terms)) for e in expressions]


def hermite_limit_residual(lam, alpha_large, z, tol=None):
    """
    Residual of the Hermite limit of the Gegenbauer equation.

    With lam_G^2 = (alpha + 1/2)^2 - alpha (2 lam + 1), the Gegenbauer operator
    in w = z / sqrt(alpha), divided by alpha, is the Hermite operator plus
    -(z^2 d^2 + 2 z d) / alpha. Applied to the even Hermite solution it leaves a
    residual that decays like 1 / alpha; that residual is returned.
    """
    from .operators import HTOperator

    alpha = alpha_large
    lam_g = cmath.sqrt((alpha + 0.5) ** 2 - alpha * (2 * lam + 1))
    gegenbauer = HTOperator.for_family(FamilyParams.from_lie(Family.GEGENBAUER, alpha, lam_g))
    hermite = hermite_even(FamilyParams.from_lie(Family.HERMITE, lam), z, tol=tol, derivatives=2)
    f, df, d2f = (hermite.value,) + hermite.derivatives
    root = math.sqrt(alpha)
    w = complex(z) / root
    # g(w) = S(root w): g' = root S', g'' = alpha S''
    residual = gegenbauer.apply(w, f, root * df, alpha * d2f) / alpha
    logger.debug("Hermite limit at alpha=%s: residual %.3g", alpha, abs(residual))
    return abs(residual)
