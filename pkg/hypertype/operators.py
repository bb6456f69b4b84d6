"""
Hypergeometric-type operators  sigma(z) d^2 + tau(z) d + eta.

This module represents such operators exactly (coefficients may be ints,
Fractions, floats or complex numbers), sorts them into the nine classes,
computes their canonical data, balanced and Schroedinger forms and indices,
and holds the catalogs of factorizations and commutation relations of the
six families.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidOperator, IrregularPoint, UnknownFactorization
from .families import HALF, Family, FamilyParams
from .numeric_core import DEGENERACY_WINDOW, is_exact_integer, nearest_integer, pow_principal
from .poly import ONE, Z, Poly

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)
INFINITY = 'inf'
ZERO_TOLERANCE = 1e-12


# ---------------------------------------------------------------------------
# exact-or-float scalar helpers

def is_exact(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def divide(a, b):
    """a / b, staying in Fraction when both are exact."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def vanishes(x, scale=1.0):
    if is_exact(x):
        return x == 0
    return abs(x) <= ZERO_TOLERANCE * max(1.0, abs(scale))


def exact_sqrt(x):
    """Square root that stays rational on rational perfect squares."""
    if is_exact(x):
        x = Fraction(x)
        if x >= 0:
            n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
            if n * n == x.numerator and d * d == x.denominator:
                return Fraction(n, d)
    root = cmath.sqrt(complex(x))
    return root.real if root.imag == 0 else root


def quadratic_roots(b, c):
    """Roots of x^2 + b x + c, larger real part first."""
    r = exact_sqrt(b * b - 4 * c)
    roots = [(-b + r) * HALF, (-b - r) * HALF]
    return tuple(sorted(roots, key=lambda x: (complex(x).real, complex(x).imag), reverse=True))


def is_infinity(point):
    if isinstance(point, str):
        return point.lower() in ('inf', 'infinity', '∞')
    return isinstance(point, float) and math.isinf(point)


# ---------------------------------------------------------------------------
# rational functions and differential operators

class RationalFunction:
    """num / den with polynomial numerator and denominator."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=ONE):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = num, den

    @staticmethod
    def _lift(other):
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __call__(self, z):
        return divide(self.num(z), self.den(z))

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._lift(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def deriv(self):
        return RationalFunction(self.num.deriv() * self.den - self.num * self.den.deriv(), self.den * self.den)

    def is_zero(self):
        return self.num.is_zero()

    def value_at(self, point):
        """Value at `point`, cancelling common factors (z - point) first."""
        num, den = self.num, self.den
        factor = Poly.linear(-point, 1)
        while vanishes(den(point)):
            if not vanishes(num(point)):
                raise ZeroDivisionError(f"pole at {point}")
            num, den = divmod(num, factor)[0], divmod(den, factor)[0]
        return divide(num(point), den(point))

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFunction({self.num!r})"
        return f"RationalFunction({self.num!r} / {self.den!r})"


class DiffOp:
    """Sum of c_k(z) d^k with polynomial coefficients; `@` composes."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        polys = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while polys and polys[-1].is_zero():
            polys.pop()
        self.coeffs = tuple(polys)

    @classmethod
    def d(cls):
        return cls((0, 1))

    @classmethod
    def first_order(cls, p, q):
        """p(z) d + q(z)."""
        return cls((q, p))

    @classmethod
    def mult(cls, m):
        return cls((m,))

    @staticmethod
    def _lift(other):
        return other if isinstance(other, DiffOp) else DiffOp((other,))

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Poly()

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, scalar):
        return DiffOp([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __matmul__(self, other):
        other = self._lift(other)
        out = {}
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            # d^i (b f) = sum_k C(i, k) b^(k) d^(i-k) f
            for j, b in enumerate(other.coeffs):
                for k in range(i + 1):
                    order = i - k + j
                    out[order] = out.get(order, Poly()) + a * b.deriv(k) * math.comb(i, k)
        if not out:
            return DiffOp(())
        return DiffOp([out.get(n, Poly()) for n in range(max(out) + 1)])

    def __eq__(self, other):
        return (self - self._lift(other)).is_zero()

    __hash__ = None

    def evaluate(self, z, derivs):
        """Apply to a function given by its values (f, f', f'', ...) at z."""
        if len(derivs) < len(self.coeffs):
            raise ValueError(f"need {len(self.coeffs)} derivatives, got {len(derivs)}")
        return sum(c(z) * derivs[k] for k, c in enumerate(self.coeffs))

    def __repr__(self):
        parts = [f"({c!r})" + ('' if k == 0 else ' d' if k == 1 else f' d^{k}')
                 for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return "DiffOp(" + (" + ".join(reversed(parts)) or "0") + ")"


# ---------------------------------------------------------------------------
# the operator itself

@dataclass(frozen=True)
class HTOperator:
    sigma: Poly
    tau: Poly
    eta: object

    def __post_init__(self):
        sigma = self.sigma if isinstance(self.sigma, Poly) else Poly(self.sigma)
        tau = self.tau if isinstance(self.tau, Poly) else Poly(self.tau)
        object.__setattr__(self, 'sigma', sigma)
        object.__setattr__(self, 'tau', tau)
        if sigma.is_zero():
            raise InvalidOperator("sigma must not vanish identically")
        if sigma.degree > 2:
            raise InvalidOperator(f"sigma has degree {sigma.degree} > 2")
        if tau.degree > 1:
            raise InvalidOperator(f"tau has degree {tau.degree} > 1")

    @classmethod
    def of(cls, sigma, tau, eta):
        """Build from coefficient lists, lowest degree first."""
        return cls(Poly(sigma), Poly(tau), eta)

    @classmethod
    def for_family(cls, params):
        """The family's operator in its standard form."""
        family = params.family
        if family is Family.HYP2F1:
            a, b, c = params.classical
            return cls(Z - Z * Z, c - (a + b + 1) * Z, -a * b)
        if family is Family.HYP2F0:
            a, b = params.classical
            return cls(Z * Z, -1 + (1 + a + b) * Z, a * b)
        if family is Family.HYP1F1:
            a, c = params.classical
            return cls(Z, c - Z, -a)
        if family is Family.HYP0F1:
            (c,) = params.classical
            return cls(Z, Poly.const(c), -1)
        if family is Family.GEGENBAUER:
            a, b = params.classical
            return cls(1 - Z * Z, -(a + b + 1) * Z, -a * b)
        (a,) = params.classical
        return cls(ONE, -2 * Z, -2 * a)

    def as_diffop(self):
        return DiffOp((self.eta, self.tau, self.sigma))

    def apply(self, z, f, df, d2f):
        return self.sigma(z) * d2f + self.tau(z) * df + self.eta * f

    def to_dict(self):
        return {'sigma': self.sigma.to_list(), 'tau': self.tau.to_list(), 'eta': str(self.eta)}


# ---------------------------------------------------------------------------
# classification

class ClassTag(Enum):
    HYPERGEOMETRIC_2F1 = 'Hypergeometric2F1'
    TWO_F0 = 'TwoF0'
    CONFLUENT_1F1 = 'Confluent1F1'
    ZERO_F1 = 'ZeroF1'
    GEGENBAUER = 'Gegenbauer'
    HERMITE = 'Hermite'
    EULER2 = 'Euler2'
    EULER_DERIV = 'EulerDeriv'
    CONST_COEFF = 'ConstCoeff'


FAMILY_TAGS = {
    Family.HYP2F1: ClassTag.HYPERGEOMETRIC_2F1,
    Family.HYP2F0: ClassTag.TWO_F0,
    Family.HYP1F1: ClassTag.CONFLUENT_1F1,
    Family.HYP0F1: ClassTag.ZERO_F1,
    Family.GEGENBAUER: ClassTag.GEGENBAUER,
    Family.HERMITE: ClassTag.HERMITE,
}
TAG_FAMILIES = {tag: family for family, tag in FAMILY_TAGS.items()}


def elementary_operator(tag, params):
    """Templates of the three classes solvable in elementary functions."""
    if tag is ClassTag.EULER2:
        return HTOperator(Z * Z, params['b'] * Z, params['a'])
    if tag is ClassTag.EULER_DERIV:
        return HTOperator(Z, Poly.const(params['c']), 0)
    return HTOperator(ONE, Poly.const(params['c']), params['a'])


def pullback(template, scale, shift, factor):
    """factor * template with w = (z - shift) / scale substituted, d_w = scale d_z."""
    inv = divide(1, scale)
    inner = Poly.linear(-shift * inv, inv)
    return HTOperator(
        template.sigma.compose(inner) * (factor * scale * scale),
        template.tau.compose(inner) * (factor * scale),
        factor * template.eta,
    )


@dataclass(frozen=True)
class EquationClass:
    """Class of an operator: op = factor * template(params) pulled back by z = scale*w + shift."""
    tag: ClassTag
    scale: object
    shift: object
    factor: object
    params: object

    @property
    def family(self):
        return TAG_FAMILIES.get(self.tag)

    def template(self):
        if self.family is not None:
            return HTOperator.for_family(self.params)
        return elementary_operator(self.tag, self.params)

    def operator(self):
        return pullback(self.template(), self.scale, self.shift, self.factor)

    def to_dict(self):
        if isinstance(self.params, FamilyParams):
            params = self.params.to_dict()
        else:
            params = {k: str(v) for k, v in self.params.items()}
        return {
            'tag': self.tag.value,
            'affine_map': {'scale': str(self.scale), 'shift': str(self.shift)},
            'factor': str(self.factor),
            'params': params,
        }


def _sum_product_roots(total, product):
    """(x, y) with x + y = total and x y = product, x <= y by real part."""
    second, first = quadratic_roots(-total, product)
    return first, second


def _sort_key(x):
    c = complex(x)
    return (c.real, c.imag)


def classify(op):
    """
    Normalize an operator to one of the nine classes by an affine change of
    variable and a constant factor.

    Args:
        op (HTOperator): the operator

    Returns:
        EquationClass: tag, affine map, factor and parameters
    """
    if not isinstance(op, HTOperator):
        raise InvalidOperator("classify expects an HTOperator")
    s0, s1, s2 = op.sigma[0], op.sigma[1], op.sigma[2]
    t0, t1 = op.tau[0], op.tau[1]
    eta = op.eta
    size = max(abs(complex(s0)), abs(complex(s1)), abs(complex(s2)))

    if op.sigma.degree == 2:
        disc = s1 * s1 - 4 * s0 * s2
        if not vanishes(disc, size * size):
            r = exact_sqrt(disc)
            roots = sorted([divide(-s1 + r, 2 * s2), divide(-s1 - r, 2 * s2)], key=_sort_key)
            r1, r2 = roots
            mid = (r1 + r2) * HALF
            total = divide(t1, s2) - 1
            product = divide(eta, s2)
            if vanishes(op.tau(mid), abs(complex(t1)) + abs(complex(t0))):
                a, b = _sum_product_roots(total, product)
                params = FamilyParams.from_classical(Family.GEGENBAUER, a, b)
                result = EquationClass(ClassTag.GEGENBAUER, (r2 - r1) * HALF, mid, -s2, params)
            else:
                d = r2 - r1
                c = divide(-op.tau(r1), s2 * d)
                a, b = _sum_product_roots(total, product)
                params = FamilyParams.from_classical(Family.HYP2F1, a, b, c)
                result = EquationClass(ClassTag.HYPERGEOMETRIC_2F1, d, r1, -s2, params)
        else:
            r = divide(-s1, 2 * s2)
            tau_r = op.tau(r)
            if not vanishes(tau_r, abs(complex(t1)) + abs(complex(t0))):
                k = divide(-tau_r, s2)
                a, b = _sum_product_roots(divide(t1, s2) - 1, divide(eta, s2))
                params = FamilyParams.from_classical(Family.HYP2F0, a, b)
                result = EquationClass(ClassTag.TWO_F0, k, r, s2, params)
            else:
                params = {'a': divide(eta, s2), 'b': divide(t1, s2)}
                result = EquationClass(ClassTag.EULER2, 1, r, s2, params)
    elif op.sigma.degree == 1:
        r = divide(-s0, s1)
        if not vanishes(t1):
            k = divide(-s1, t1)
            params = FamilyParams.from_classical(Family.HYP1F1, divide(eta, t1), divide(op.tau(r), s1))
            result = EquationClass(ClassTag.CONFLUENT_1F1, k, r, -t1, params)
        elif not vanishes(eta):
            k = divide(-s1, eta)
            params = FamilyParams.from_classical(Family.HYP0F1, divide(t0, s1))
            result = EquationClass(ClassTag.ZERO_F1, k, r, -eta, params)
        else:
            result = EquationClass(ClassTag.EULER_DERIV, 1, r, s1, {'c': divide(t0, s1)})
    else:
        if not vanishes(t1):
            k = exact_sqrt(divide(-2 * s0, t1))
            params = FamilyParams.from_classical(Family.HERMITE, divide(eta, t1))
            result = EquationClass(ClassTag.HERMITE, k, divide(-t0, t1), divide(s0, k * k), params)
        else:
            params = {'a': divide(eta, s0), 'c': divide(t0, s0)}
            result = EquationClass(ClassTag.CONST_COEFF, 1, 0, s0, params)

    logger.debug("classified %s as %s", op, result.tag.value)
    return result


# ---------------------------------------------------------------------------
# canonical data

WEIGHT_LABELS = {
    Family.HYP2F1: 'z^alpha (1-z)^beta',
    Family.HYP1F1: 'z^alpha e^(-z)',
    Family.HYP2F0: 'z^theta e^(1/z)',
    Family.HYP0F1: 'z^alpha',
    Family.GEGENBAUER: '(z^2-1)^alpha',
    Family.HERMITE: 'e^(-z^2)',
}


@dataclass(frozen=True)
class WeightDescriptor:
    """rho(z) = prod (z - p)^e * exp(exponent(z)), up to a constant factor."""
    kind: str
    powers: tuple
    exponent: RationalFunction

    def __call__(self, z):
        value = cmath.exp(self.exponent(z))
        for point, e in self.powers:
            value *= pow_principal(z - point, e)
        return value

    def log_derivative(self, z):
        return sum(divide(e, z - point) for point, e in self.powers) + self.exponent.deriv()(z)

    def __str__(self):
        if self.kind != 'generic':
            return self.kind
        parts = [f"(z-{p})^{e}" for p, e in self.powers]
        parts.append(f"exp({self.exponent!r})")
        return ' '.join(parts)


@dataclass(frozen=True)
class CanonicalData:
    kappa: Poly
    lam: object
    weight: WeightDescriptor


def _weight(op, kappa):
    sigma = op.sigma
    s0, s1, s2 = sigma[0], sigma[1], sigma[2]
    if sigma.degree == 2:
        disc = s1 * s1 - 4 * s0 * s2
        if not vanishes(disc, max(abs(complex(c)) for c in sigma.coeffs) ** 2):
            r = exact_sqrt(disc)
            roots = sorted([divide(-s1 + r, 2 * s2), divide(-s1 - r, 2 * s2)], key=_sort_key)
            powers = tuple((p, divide(kappa(p), sigma.deriv()(p))) for p in roots)
            return powers, RationalFunction(Poly())
        r = divide(-s1, 2 * s2)
        powers = ((r, divide(kappa[1], s2)),)
        return powers, RationalFunction(Poly.const(divide(-kappa(r), s2)), Poly.linear(-r, 1))
    if sigma.degree == 1:
        r = divide(-s0, s1)
        powers = ((r, divide(kappa(r), s1)),)
        return powers, RationalFunction(Poly.linear(0, divide(kappa[1], s1)))
    return (), RationalFunction(Poly((0, divide(kappa[0], s0), divide(kappa[1], 2 * s0))))


def canonical_data(op):
    """kappa = tau - sigma', lambda = eta - kappa'/2 and the natural weight."""
    kappa = op.tau - op.sigma.deriv()
    lam = op.eta - kappa[1] * HALF
    powers, exponent = _weight(op, kappa)
    kind = 'generic'
    cls = classify(op)
    if cls.family is not None and cls.operator() == op and pullback(cls.template(), 1, 0, 1) == op:
        kind = WEIGHT_LABELS[cls.family]
    return CanonicalData(kappa, lam, WeightDescriptor(kind, powers, exponent))


@dataclass(frozen=True)
class BalancedForm:
    """d sigma d + potential, the operator conjugated by rho^(1/2)."""
    sigma: Poly
    potential: RationalFunction

    def __str__(self):
        return f"d ({self.sigma!r}) d + {self.potential!r}"


def balanced_form(op):
    data = canonical_data(op)
    sigma = op.sigma
    numerator = -data.kappa * data.kappa + sigma * (4 * data.lam)
    return BalancedForm(sigma, RationalFunction(numerator, sigma * 4))


def schrodinger_potential(op):
    """V with d^2 - V the Schroedinger form; V = N / (4 sigma^2)."""
    data = canonical_data(op)
    s = op.sigma
    ds = s.deriv()
    numerator = 2 * s * s.deriv(2) - ds * ds + data.kappa * data.kappa - s * (4 * data.lam)
    return RationalFunction(numerator, s * s * 4)


# ---------------------------------------------------------------------------
# indices

@dataclass(frozen=True)
class IndicialData:
    point: object
    index1: object
    index2: object
    degenerate: bool
    b0: object
    c0: object

    def to_dict(self):
        return {k: str(getattr(self, k)) for k in ('point', 'index1', 'index2', 'degenerate', 'b0', 'c0')}


def _integer_gap(x):
    if is_exact_integer(x):
        return True
    _, gap = nearest_integer(x)
    return gap < DEGENERACY_WINDOW


def indices(op, point):
    """
    Indices of op at a finite point or at infinity.

    Raises:
        IrregularPoint: when the point is not a regular singular point
    """
    sigma, tau, eta = op.sigma, op.tau, op.eta
    if is_infinity(point):
        # zf'' coefficients after w = 1/z: lim z tau / sigma, lim z^2 eta / sigma
        if (not tau.is_zero() and tau.degree + 1 > sigma.degree) or (eta != 0 and sigma.degree < 2):
            raise IrregularPoint("infinity is not a regular singular point")
        b0 = divide(tau[sigma.degree - 1], sigma.leading()) if sigma.degree >= 1 else 0
        c0 = divide(eta, sigma.leading()) if sigma.degree == 2 else 0
        first, second = quadratic_roots(1 - b0, c0)
        return IndicialData(INFINITY, first, second, _integer_gap(first - second), b0, c0)

    s_val = sigma(point)
    if not vanishes(s_val):
        return IndicialData(point, 1, 0, True, 0, 0)
    ds = sigma.deriv()(point)
    if not vanishes(ds):
        b0 = divide(tau(point), ds)
        c0 = 0
    else:
        if not vanishes(tau(point)):
            raise IrregularPoint(f"{point} is an irregular singular point")
        b0 = divide(tau[1], sigma[2])
        c0 = divide(eta, sigma[2])
    first, second = quadratic_roots(b0 - 1, c0)
    return IndicialData(point, first, second, _integer_gap(first - second), b0, c0)


# ---------------------------------------------------------------------------
# operators with rational coefficients: reflection reduction and index shift

@dataclass(frozen=True)
class RationalOperator:
    """second(z) d^2 + first(z) d + zeroth(z) with rational coefficients."""
    second: RationalFunction
    first: RationalFunction
    zeroth: RationalFunction

    def indices(self, point):
        shift = RationalFunction(Poly.linear(-point, 1))
        try:
            b0 = (shift * self.first / self.second).value_at(point)
            c0 = (shift * shift * self.zeroth / self.second).value_at(point)
        except ZeroDivisionError:
            raise IrregularPoint(f"{point} is not a regular singular point") from None
        return quadratic_roots(b0 - 1, c0)

    def apply(self, z, f, df, d2f):
        return self.second(z) * d2f + self.first(z) * df + self.zeroth(z) * f


@dataclass(frozen=True)
class ReflectionReduction:
    """Operators in u = z^2 for even solutions g(z^2) and odd ones z g(z^2)."""
    even: RationalOperator
    odd: RationalOperator


def reflection_reduction(op):
    """Reduce a reflection invariant operator (sigma even, tau odd) to u = z^2."""
    sigma, tau = op.sigma, op.tau
    if not vanishes(sigma[1]) or not vanishes(tau[0]):
        raise InvalidOperator("operator is not invariant under z -> -z")
    sigma_u = Poly((sigma[0], sigma[2]))
    pi = RationalFunction(Poly.const(tau[1]), sigma_u)
    rho = RationalFunction(Poly.const(op.eta), sigma_u)
    u = RationalFunction(Z)
    one = RationalFunction(ONE)
    even = RationalOperator(
        one,
        RationalFunction(Poly.const(HALF), Z) + pi * HALF,
        rho / (u * 4),
    )
    odd = RationalOperator(
        one,
        RationalFunction(Poly.const(Fraction(3, 2)), Z) + pi * HALF,
        (pi + rho) / (u * 4),
    )
    return ReflectionReduction(even, odd)


def shift_conjugate(op, point, theta):
    """(z - point)^theta op (z - point)^(-theta); its indices at `point` are op's plus theta."""
    base = Poly.linear(-point, 1)
    sigma = RationalFunction(op.sigma)
    tau = RationalFunction(op.tau)
    first = tau - RationalFunction(op.sigma * (2 * theta), base)
    zeroth = (RationalFunction(Poly.const(op.eta))
              - RationalFunction(op.tau * theta, base)
              + RationalFunction(op.sigma * (theta * (theta + 1)), base * base))
    return RationalOperator(sigma, first, zeroth)


# ---------------------------------------------------------------------------
# factorizations  m * Op = left @ right + constant

@dataclass(frozen=True)
class Factorization:
    multiplier: Poly
    left: DiffOp
    right: DiffOp
    constant: object

    def expand(self):
        return self.left @ self.right + self.constant


@dataclass(frozen=True)
class Commutation:
    """operator @ (m Op_p) = (m Op_{p+shift}) @ operator."""
    multiplier: Poly
    operator: DiffOp
    shift: tuple


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    multiplier: str
    shift: tuple = ()


D = DiffOp.d()


def _first(p, q):
    return DiffOp.first_order(p, q)


def _factorizations_2f1(alpha, beta, mu):
    s = alpha + beta
    P = Z - Z * Z
    out = [
        Factorization(ONE, _first(P, (1 + alpha) * (1 - Z) - (1 + beta) * Z), D,
                      -QUARTER * (s + mu + 1) * (s - mu + 1)),
        Factorization(ONE, D, _first(P, alpha * (1 - Z) - beta * Z),
                      -QUARTER * (s + mu - 1) * (s - mu - 1)),
        Factorization(ONE, _first(1 - Z, -beta - 1), _first(Z, alpha),
                      -QUARTER * (1 - alpha + beta - mu) * (1 - alpha + beta + mu)),
        Factorization(ONE, _first(Z, alpha + 1), _first(1 - Z, -beta),
                      -QUARTER * (1 + alpha - beta - mu) * (1 + alpha - beta + mu)),
    ]
    for m in (mu, -mu):
        out += [
            Factorization(Z, _first(Z, HALF * (s + m - 1)),
                          _first(P, HALF * (s - m + 1) * (1 - Z) - beta),
                          -QUARTER * (s + m - 1) * (alpha - beta - m + 1)),
            Factorization(Z, _first(P, HALF * (s - m + 1) * (1 - Z) - beta - 1),
                          _first(Z, HALF * (s + m + 1)),
                          -QUARTER * (s + m + 1) * (alpha - beta - m - 1)),
        ]
    for m in (mu, -mu):
        out += [
            Factorization(Z - 1, _first(Z - 1, HALF * (s + m - 1)),
                          _first(P, HALF * (-s + m - 1) * Z + alpha),
                          QUARTER * (s + m - 1) * (beta - alpha - m + 1)),
            Factorization(Z - 1, _first(P, HALF * (-s + m - 1) * Z + alpha + 1),
                          _first(Z - 1, HALF * (s + m + 1)),
                          QUARTER * (s + m + 1) * (beta - alpha - m - 1)),
        ]
    return out


def _factorizations_1f1(theta, alpha):
    return [
        Factorization(ONE, _first(Z, 1 + alpha - Z), D, -HALF * (theta + alpha + 1)),
        Factorization(ONE, D, _first(Z, alpha - Z), -HALF * (theta + alpha - 1)),
        Factorization(ONE, _first(Z, 1 + alpha), _first(ONE, -1), HALF * (-theta + alpha + 1)),
        Factorization(ONE, _first(ONE, -1), _first(Z, alpha), HALF * (-theta + alpha - 1)),
        Factorization(Z, _first(Z, HALF * (theta + alpha - 1)), _first(Z, HALF * (-theta + alpha + 1) - Z),
                      -QUARTER * (theta + alpha - 1) * (-theta + alpha + 1)),
        Factorization(Z, _first(Z, HALF * (-theta + alpha - 1) - Z), _first(Z, HALF * (theta + alpha + 1)),
                      -QUARTER * (theta + alpha + 1) * (-theta + alpha - 1)),
    ]


def _factorizations_2f0(theta, alpha):
    a, b = HALF * (1 + alpha + theta), HALF * (1 - alpha + theta)
    Z2 = Z * Z
    return [
        Factorization(ONE, _first(Z2, -1 + (2 + theta) * Z), D, a * b),
        Factorization(ONE, D, _first(Z2, -1 + theta * Z), (a - 1) * (b - 1)),
        Factorization(Z, _first(Z2, b * Z - 1), _first(Z, a), a),
        Factorization(Z, _first(Z, a - 1), _first(Z2, b * Z - 1), a - 1),
        Factorization(Z, _first(Z2, a * Z - 1), _first(Z, b), b),
        Factorization(Z, _first(Z, b - 1), _first(Z2, a * Z - 1), b - 1),
    ]


def _factorizations_0f1(alpha):
    return [
        Factorization(ONE, _first(Z, alpha + 1), D, -1),
        Factorization(ONE, D, _first(Z, alpha), -1),
    ]


def _factorizations_gegenbauer(alpha, lam):
    S = 1 - Z * Z
    out = [
        Factorization(ONE, _first(S, -2 * (1 + alpha) * Z), D, (alpha + lam + HALF) * (lam - alpha - HALF)),
        Factorization(ONE, D, _first(S, -2 * alpha * Z), (alpha + lam - HALF) * (lam - alpha + HALF)),
    ]
    for l in (lam, -lam):
        out.append(Factorization(S, _first(S, (-alpha + l + HALF) * Z), _first(S, -(alpha + l + HALF) * Z),
                                 (alpha + l + HALF) * (l - alpha + HALF)))
    for l in (lam, -lam):
        out += [
            Factorization(Z * Z, _first(Z * S, -(alpha + l + Fraction(3, 2)) + (-alpha + l - HALF) * Z * Z),
                          _first(Z, alpha + l + HALF),
                          (alpha + l + HALF) * (alpha + l + Fraction(3, 2))),
            Factorization(Z * Z, _first(Z, alpha + l - Fraction(3, 2)),
                          _first(Z * S, -(alpha + l - HALF) + (-alpha + l - HALF) * Z * Z),
                          (alpha + l - Fraction(3, 2)) * (alpha + l - HALF)),
        ]
    return out


def _factorizations_hermite(lam):
    return [
        Factorization(ONE, _first(ONE, -2 * Z), D, -2 * lam - 1),
        Factorization(ONE, D, _first(ONE, -2 * Z), -2 * lam + 1),
        Factorization(Z * Z, _first(Z, lam - Fraction(3, 2)), _first(Z, -lam + HALF - 2 * Z * Z),
                      (lam - Fraction(3, 2)) * (lam - HALF)),
        Factorization(Z * Z, _first(Z, -lam - Fraction(3, 2) - 2 * Z * Z), _first(Z, lam + HALF),
                      (lam + HALF) * (lam + Fraction(3, 2))),
    ]


_FACTORIZATION_BUILDERS = {
    Family.HYP2F1: _factorizations_2f1,
    Family.HYP1F1: _factorizations_1f1,
    Family.HYP2F0: _factorizations_2f0,
    Family.HYP0F1: _factorizations_0f1,
    Family.GEGENBAUER: _factorizations_gegenbauer,
    Family.HERMITE: _factorizations_hermite,
}

FACTORIZATION_LABELS = {
    Family.HYP2F1: (
        CatalogEntry('(z(1-z)d + (1+alpha)(1-z) - (1+beta)z) d - (s+mu+1)(s-mu+1)/4', '1'),
        CatalogEntry('d (z(1-z)d + alpha(1-z) - beta z) - (s+mu-1)(s-mu-1)/4', '1'),
        CatalogEntry('((1-z)d - beta - 1)(z d + alpha) - (1-alpha+beta-mu)(1-alpha+beta+mu)/4', '1'),
        CatalogEntry('(z d + alpha + 1)((1-z)d - beta) - (1+alpha-beta-mu)(1+alpha-beta+mu)/4', '1'),
        CatalogEntry('(z d + (s+mu-1)/2)(z(1-z)d + (1-z)(s-mu+1)/2 - beta) - (s+mu-1)(alpha-beta-mu+1)/4', 'z'),
        CatalogEntry('(z(1-z)d + (1-z)(s-mu+1)/2 - beta - 1)(z d + (s+mu+1)/2) - (s+mu+1)(alpha-beta-mu-1)/4', 'z'),
        CatalogEntry('(z d + (s-mu-1)/2)(z(1-z)d + (1-z)(s+mu+1)/2 - beta) - (s-mu-1)(alpha-beta+mu+1)/4', 'z'),
        CatalogEntry('(z(1-z)d + (1-z)(s+mu+1)/2 - beta - 1)(z d + (s-mu+1)/2) - (s-mu+1)(alpha-beta+mu-1)/4', 'z'),
        CatalogEntry('((z-1)d + (s+mu-1)/2)(z(1-z)d + z(-s+mu-1)/2 + alpha) + (s+mu-1)(beta-alpha-mu+1)/4', 'z-1'),
        CatalogEntry('(z(1-z)d + z(-s+mu-1)/2 + alpha + 1)((z-1)d + (s+mu+1)/2) + (s+mu+1)(beta-alpha-mu-1)/4', 'z-1'),
        CatalogEntry('((z-1)d + (s-mu-1)/2)(z(1-z)d + z(-s-mu-1)/2 + alpha) + (s-mu-1)(beta-alpha+mu+1)/4', 'z-1'),
        CatalogEntry('(z(1-z)d + z(-s-mu-1)/2 + alpha + 1)((z-1)d + (s-mu+1)/2) + (s-mu+1)(beta-alpha+mu-1)/4', 'z-1'),
    ),
    Family.HYP1F1: (
        CatalogEntry('(z d + 1 + alpha - z) d - (theta+alpha+1)/2', '1'),
        CatalogEntry('d (z d + alpha - z) - (theta+alpha-1)/2', '1'),
        CatalogEntry('(z d + 1 + alpha)(d - 1) + (-theta+alpha+1)/2', '1'),
        CatalogEntry('(d - 1)(z d + alpha) + (-theta+alpha-1)/2', '1'),
        CatalogEntry('(z d + (theta+alpha-1)/2)(z d + (-theta+alpha+1)/2 - z) - (theta+alpha-1)(-theta+alpha+1)/4', 'z'),
        CatalogEntry('(z d + (-theta+alpha-1)/2 - z)(z d + (theta+alpha+1)/2) - (theta+alpha+1)(-theta+alpha-1)/4', 'z'),
    ),
    Family.HYP2F0: (
        CatalogEntry('(z^2 d - 1 + (2+theta)z) d + a b', '1'),
        CatalogEntry('d (z^2 d - 1 + theta z) + (a-1)(b-1)', '1'),
        CatalogEntry('(z^2 d + b z - 1)(z d + a) + a', 'z'),
        CatalogEntry('(z d + a - 1)(z^2 d + b z - 1) + a - 1', 'z'),
        CatalogEntry('(z^2 d + a z - 1)(z d + b) + b', 'z'),
        CatalogEntry('(z d + b - 1)(z^2 d + a z - 1) + b - 1', 'z'),
    ),
    Family.HYP0F1: (
        CatalogEntry('(z d + alpha + 1) d - 1', '1'),
        CatalogEntry('d (z d + alpha) - 1', '1'),
    ),
    Family.GEGENBAUER: (
        CatalogEntry('((1-z^2)d - 2(1+alpha)z) d + (alpha+lam+1/2)(lam-alpha-1/2)', '1'),
        CatalogEntry('d ((1-z^2)d - 2 alpha z) + (alpha+lam-1/2)(lam-alpha+1/2)', '1'),
        CatalogEntry('((1-z^2)d + (-alpha+lam+1/2)z)((1-z^2)d - (alpha+lam+1/2)z) + (alpha+lam+1/2)(lam-alpha+1/2)', '1-z^2'),
        CatalogEntry('((1-z^2)d + (-alpha-lam+1/2)z)((1-z^2)d - (alpha-lam+1/2)z) + (alpha-lam+1/2)(-lam-alpha+1/2)', '1-z^2'),
        CatalogEntry('(z(1-z^2)d - alpha-lam-3/2 + (-alpha+lam-1/2)z^2)(z d + alpha+lam+1/2) + (alpha+lam+1/2)(alpha+lam+3/2)', 'z^2'),
        CatalogEntry('(z d + alpha+lam-3/2)(z(1-z^2)d - alpha-lam+1/2 + (-alpha+lam-1/2)z^2) + (alpha+lam-3/2)(alpha+lam-1/2)', 'z^2'),
        CatalogEntry('(z(1-z^2)d - alpha+lam-3/2 + (-alpha-lam-1/2)z^2)(z d + alpha-lam+1/2) + (alpha-lam+1/2)(alpha-lam+3/2)', 'z^2'),
        CatalogEntry('(z d + alpha-lam-3/2)(z(1-z^2)d - alpha+lam+1/2 + (-alpha-lam-1/2)z^2) + (alpha-lam-3/2)(alpha-lam-1/2)', 'z^2'),
    ),
    Family.HERMITE: (
        CatalogEntry('(d - 2z) d - 2 lam - 1', '1'),
        CatalogEntry('d (d - 2z) - 2 lam + 1', '1'),
        CatalogEntry('(z d + lam - 3/2)(z d - lam + 1/2 - 2z^2) + (lam-3/2)(lam-1/2)', 'z^2'),
        CatalogEntry('(z d - lam - 3/2 - 2z^2)(z d + lam + 1/2) + (lam+1/2)(lam+3/2)', 'z^2'),
    ),
}


def factorizations(params):
    """All catalogued factorizations of the family operator at `params`."""
    return _FACTORIZATION_BUILDERS[params.family](*params.lie)


def _target_params(target):
    if isinstance(target, FamilyParams):
        return target
    cls = classify(target)
    if cls.family is None:
        raise UnknownFactorization(f"{cls.tag.value} operators have no factorization catalog")
    return cls.params


def verify_factorization(target, factorization_id):
    """
    Residual m * Op - (left @ right + constant) of one catalogued factorization.

    Args:
        target (HTOperator | FamilyParams): the operator; an HTOperator is
            first normalized by classify()
        factorization_id (int): 1-based position in the family catalog

    Returns:
        DiffOp: the residual, zero when the factorization holds
    """
    params = _target_params(target)
    catalog = factorizations(params)
    if not isinstance(factorization_id, int) or not 1 <= factorization_id <= len(catalog):
        raise UnknownFactorization(
            f"{params.family.value} has factorizations 1..{len(catalog)}, not {factorization_id!r}")
    fact = catalog[factorization_id - 1]
    op = HTOperator.for_family(params).as_diffop()
    return DiffOp.mult(fact.multiplier) @ op - fact.expand()


# ---------------------------------------------------------------------------
# commutation relations  L @ (m Op_p) = (m Op_{p+s}) @ L

def _commutations_2f1(alpha, beta, mu):
    s = alpha + beta
    P = Z - Z * Z
    return [
        Commutation(ONE, D, (1, 1, 0)),
        Commutation(ONE, _first(P, alpha * (1 - Z) - beta * Z), (-1, -1, 0)),
        Commutation(ONE, _first(1 - Z, -beta), (1, -1, 0)),
        Commutation(ONE, _first(Z, alpha), (-1, 1, 0)),
        Commutation(Z, _first(Z, HALF * (s + mu + 1)), (0, 1, 1)),
        Commutation(Z, _first(P, HALF * (s - mu + 1) * (1 - Z) - beta), (0, -1, -1)),
        Commutation(Z, _first(Z, HALF * (s - mu + 1)), (0, 1, -1)),
        Commutation(Z, _first(P, HALF * (s + mu + 1) * (1 - Z) - beta), (0, -1, 1)),
        Commutation(Z - 1, _first(Z - 1, HALF * (s + mu + 1)), (1, 0, 1)),
        Commutation(Z - 1, _first(P, alpha - HALF * (s - mu + 1) * Z), (-1, 0, -1)),
        Commutation(Z - 1, _first(Z - 1, HALF * (s - mu + 1)), (1, 0, -1)),
        Commutation(Z - 1, _first(P, alpha - HALF * (s + mu + 1) * Z), (-1, 0, 1)),
    ]


def _commutations_1f1(theta, alpha):
    return [
        Commutation(ONE, D, (1, 1)),
        Commutation(ONE, _first(Z, alpha - Z), (-1, -1)),
        Commutation(ONE, _first(Z, alpha), (1, -1)),
        Commutation(ONE, _first(ONE, -1), (-1, 1)),
        Commutation(Z, _first(Z, HALF * (theta + alpha + 1)), (2, 0)),
        Commutation(Z, _first(Z, HALF * (-theta + alpha + 1) - Z), (-2, 0)),
    ]


def _commutations_2f0(theta, alpha):
    a, b = HALF * (1 + alpha + theta), HALF * (1 - alpha + theta)
    Z2 = Z * Z
    return [
        Commutation(Z, _first(Z, a), (1, 1)),
        Commutation(Z, _first(Z2, b * Z - 1), (-1, -1)),
        Commutation(Z, _first(Z, b), (1, -1)),
        Commutation(Z, _first(Z2, a * Z - 1), (-1, 1)),
        Commutation(ONE, D, (2, 0)),
        Commutation(ONE, _first(Z2, theta * Z - 1), (-2, 0)),
    ]


def _commutations_0f1(alpha):
    return [
        Commutation(ONE, D, (1,)),
        Commutation(ONE, _first(Z, alpha), (-1,)),
    ]


def _commutations_gegenbauer(alpha, lam):
    S = 1 - Z * Z
    Z2 = Z * Z
    return [
        Commutation(ONE, D, (1, 0)),
        Commutation(ONE, _first(S, -2 * alpha * Z), (-1, 0)),
        Commutation(S, _first(S, -(alpha + lam + HALF) * Z), (0, 1)),
        Commutation(S, _first(S, -(alpha - lam + HALF) * Z), (0, -1)),
        Commutation(Z2, _first(Z, alpha - lam + HALF), (1, -1)),
        Commutation(Z2, _first(Z * S, (HALF - alpha + lam) - (HALF + alpha + lam) * Z2), (-1, 1)),
        Commutation(Z2, _first(Z, alpha + lam + HALF), (1, 1)),
        Commutation(Z2, _first(Z * S, (HALF - alpha - lam) - (HALF + alpha - lam) * Z2), (-1, -1)),
    ]


def _commutations_hermite(lam):
    return [
        Commutation(ONE, D, (1,)),
        Commutation(ONE, _first(ONE, -2 * Z), (-1,)),
        Commutation(Z * Z, _first(Z, HALF - lam - 2 * Z * Z), (-2,)),
        Commutation(Z * Z, _first(Z, HALF + lam), (2,)),
    ]


_COMMUTATION_BUILDERS = {
    Family.HYP2F1: _commutations_2f1,
    Family.HYP1F1: _commutations_1f1,
    Family.HYP2F0: _commutations_2f0,
    Family.HYP0F1: _commutations_0f1,
    Family.GEGENBAUER: _commutations_gegenbauer,
    Family.HERMITE: _commutations_hermite,
}

COMMUTATION_LABELS = {
    Family.HYP2F1: (
        CatalogEntry('d', '1', (1, 1, 0)),
        CatalogEntry('z(1-z)d + alpha(1-z) - beta z', '1', (-1, -1, 0)),
        CatalogEntry('(1-z)d - beta', '1', (1, -1, 0)),
        CatalogEntry('z d + alpha', '1', (-1, 1, 0)),
        CatalogEntry('z d + (s+mu+1)/2', 'z', (0, 1, 1)),
        CatalogEntry('z(1-z)d + (1-z)(s-mu+1)/2 - beta', 'z', (0, -1, -1)),
        CatalogEntry('z d + (s-mu+1)/2', 'z', (0, 1, -1)),
        CatalogEntry('z(1-z)d + (1-z)(s+mu+1)/2 - beta', 'z', (0, -1, 1)),
        CatalogEntry('(z-1)d + (s+mu+1)/2', 'z-1', (1, 0, 1)),
        CatalogEntry('z(1-z)d + alpha - z(s-mu+1)/2', 'z-1', (-1, 0, -1)),
        CatalogEntry('(z-1)d + (s-mu+1)/2', 'z-1', (1, 0, -1)),
        CatalogEntry('z(1-z)d + alpha - z(s+mu+1)/2', 'z-1', (-1, 0, 1)),
    ),
    Family.HYP1F1: (
        CatalogEntry('d', '1', (1, 1)),
        CatalogEntry('z d + alpha - z', '1', (-1, -1)),
        CatalogEntry('z d + alpha', '1', (1, -1)),
        CatalogEntry('d - 1', '1', (-1, 1)),
        CatalogEntry('z d + (theta+alpha+1)/2', 'z', (2, 0)),
        CatalogEntry('z d + (-theta+alpha+1)/2 - z', 'z', (-2, 0)),
    ),
    Family.HYP2F0: (
        CatalogEntry('z d + a', 'z', (1, 1)),
        CatalogEntry('z^2 d - 1 + b z', 'z', (-1, -1)),
        CatalogEntry('z d + b', 'z', (1, -1)),
        CatalogEntry('z^2 d - 1 + a z', 'z', (-1, 1)),
        CatalogEntry('d', '1', (2, 0)),
        CatalogEntry('z^2 d - 1 + theta z', '1', (-2, 0)),
    ),
    Family.HYP0F1: (
        CatalogEntry('d', '1', (1,)),
        CatalogEntry('z d + alpha', '1', (-1,)),
    ),
    Family.GEGENBAUER: (
        CatalogEntry('d', '1', (1, 0)),
        CatalogEntry('(1-z^2)d - 2 alpha z', '1', (-1, 0)),
        CatalogEntry('(1-z^2)d - (alpha+lam+1/2)z', '1-z^2', (0, 1)),
        CatalogEntry('(1-z^2)d - (alpha-lam+1/2)z', '1-z^2', (0, -1)),
        CatalogEntry('z d + alpha - lam + 1/2', 'z^2', (1, -1)),
        CatalogEntry('z(1-z^2)d + (1/2-alpha+lam) - (1/2+alpha+lam)z^2', 'z^2', (-1, 1)),
        CatalogEntry('z d + alpha + lam + 1/2', 'z^2', (1, 1)),
        CatalogEntry('z(1-z^2)d + (1/2-alpha-lam) - (1/2+alpha-lam)z^2', 'z^2', (-1, -1)),
    ),
    Family.HERMITE: (
        CatalogEntry('d', '1', (1,)),
        CatalogEntry('d - 2z', '1', (-1,)),
        CatalogEntry('z d + 1/2 - lam - 2z^2', 'z^2', (-2,)),
        CatalogEntry('z d + 1/2 + lam', 'z^2', (2,)),
    ),
}


def commutation_relations(family):
    """Labels, multipliers and shifts of the family's commutation catalog."""
    return COMMUTATION_LABELS[family]


def commutations(params):
    """The commutation catalog evaluated at `params`."""
    return _COMMUTATION_BUILDERS[params.family](*params.lie)


def verify_commutation(family, index, params):
    """
    Residual L @ (m Op_p) - (m Op_{p+s}) @ L for the 1-based catalog entry `index`.
    """
    if params.family is not family:
        raise UnknownFactorization(f"parameters belong to {params.family.value}, not {family.value}")
    catalog = commutations(params)
    if not 1 <= index <= len(catalog):
        raise UnknownFactorization(f"{family.value} has commutation relations 1..{len(catalog)}, not {index}")
    entry = catalog[index - 1]
    m = DiffOp.mult(entry.multiplier)
    source = m @ HTOperator.for_family(params).as_diffop()
    target = m @ HTOperator.for_family(params.shifted(entry.shift)).as_diffop()
    return entry.operator @ source - target @ entry.operator
