"""
Closed expressions  prefactor(z) * F_p(w(z))  for standard solutions.

A prefactor is a constant times powers (s (z - p))^e on the principal branch
times exp(sum c z^q). The point map w is a homography, a scaled power or the
Whipple map z / sqrt(z^2 - 1). Everything here carries first and second
derivatives so that evaluated expressions can be substituted into operators.
"""
import cmath
from dataclasses import dataclass, field

from .numeric_core import pow_principal


@dataclass(frozen=True)
class PowerFactor:
    """(scale * (z - point)) ** exponent, principal branch."""
    scale: complex
    point: complex
    exponent: complex

    def __call__(self, z):
        return pow_principal(self.scale * (z - self.point), self.exponent)

    def log_derivatives(self, z):
        if self.exponent == 0:
            return 0j, 0j
        u = z - self.point
        return self.exponent / u, -self.exponent / (u * u)


@dataclass(frozen=True)
class ExpTerm:
    """coef * z ** power inside an exponential."""
    coef: complex
    power: complex

    def derivatives(self, z):
        c, q = self.coef, self.power
        d1 = c * q * pow_principal(z, q - 1) if q != 0 else 0j
        d2 = c * q * (q - 1) * pow_principal(z, q - 2) if q not in (0, 1) else 0j
        return c * pow_principal(z, q), d1, d2


@dataclass(frozen=True)
class Prefactor:
    powers: tuple = ()
    exps: tuple = ()
    constant: complex = 1

    def __call__(self, z):
        z = complex(z)
        value = complex(self.constant)
        for f in self.powers:
            value *= f(z)
        return value * cmath.exp(sum((t.derivatives(z)[0] for t in self.exps), 0j))

    def derivatives(self, z):
        """(P, P', P'') at z."""
        z = complex(z)
        value = complex(self.constant)
        log_d, log_d2 = 0j, 0j
        for f in self.powers:
            value *= f(z)
            d1, d2 = f.log_derivatives(z)
            log_d += d1
            log_d2 += d2
        exponent = 0j
        for term in self.exps:
            q0, q1, q2 = term.derivatives(z)
            exponent += q0
            log_d += q1
            log_d2 += q2
        value *= cmath.exp(exponent)
        return value, value * log_d, value * (log_d * log_d + log_d2)

    def times(self, other):
        return Prefactor(self.powers + other.powers, self.exps + other.exps, self.constant * other.constant)


IDENTITY_PREFACTOR = Prefactor()


def _compact(x):
    x = complex(x)
    if x.imag == 0 and float(x.real).is_integer():
        return int(x.real)
    return x


@dataclass(frozen=True)
class MobiusMap:
    """w = (a z + b) / (c z + d)."""
    a: complex
    b: complex
    c: complex
    d: complex

    def __call__(self, z):
        return self.derivatives(z)[0]

    def derivatives(self, z):
        den = self.c * z + self.d
        det = self.a * self.d - self.b * self.c
        return ((self.a * z + self.b) / den, det / den ** 2, -2 * self.c * det / den ** 3)

    def compose(self, inner):
        """self o inner."""
        return MobiusMap(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        ).normalized()

    def inverse(self):
        return MobiusMap(self.d, -self.b, -self.c, self.a).normalized()

    def image(self, point):
        """Image of a point of the Riemann sphere; None stands for infinity."""
        if point is None:
            return None if self.c == 0 else self.a / self.c
        den = self.c * point + self.d
        if den == 0:
            return None
        return (self.a * point + self.b) / den

    def normalized(self):
        # fix the overall sign so equal maps compare equal
        for x in (self.a, self.b, self.c, self.d):
            if x != 0:
                x = complex(x)
                if x.real < 0 or (x.real == 0 and x.imag < 0):
                    return MobiusMap(-self.a, -self.b, -self.c, -self.d)
                return self
        return self

    def __str__(self):
        names = {
            (1, 0, 0, 1): 'z', (-1, 1, 0, 1): '1-z', (0, 1, 1, 0): '1/z',
            (1, 0, 1, -1): 'z/(z-1)', (0, 1, -1, 1): '1/(1-z)', (1, -1, 1, 0): '(z-1)/z',
            (-1, 0, 0, 1): '-z', (-1, 1, 0, 2): '(1-z)/2', (0, 2, 1, 1): '2/(1+z)',
        }
        key = tuple(_compact(x) for x in (self.a, self.b, self.c, self.d))
        return names.get(key, f"({self.a}z+{self.b})/({self.c}z+{self.d})")


IDENTITY_MAP = MobiusMap(1, 0, 0, 1)


@dataclass(frozen=True)
class PowerMap:
    """w = scale * z ** power (principal branch)."""
    scale: complex
    power: complex

    def __call__(self, z):
        return self.derivatives(z)[0]

    def derivatives(self, z):
        s, q = self.scale, self.power
        return (s * pow_principal(z, q),
                s * q * pow_principal(z, q - 1),
                s * q * (q - 1) * pow_principal(z, q - 2))

    def __str__(self):
        return f"{self.scale}*z^{self.power}"


@dataclass(frozen=True)
class WhippleMap:
    """w = sign * z / sqrt(z^2 - 1) with the principal square root."""
    sign: int = 1

    def __call__(self, z):
        return self.derivatives(z)[0]

    def derivatives(self, z):
        r = cmath.sqrt(z * z - 1)
        s = self.sign
        return (s * z / r, -s / r ** 3, 3 * s * z / r ** 5)

    def __str__(self):
        return ('' if self.sign > 0 else '-') + 'z/sqrt(z^2-1)'


@dataclass(frozen=True)
class InnerWhippleMap:
    """w = -i z / sqrt(1 - z^2): the Whipple map continued from the interval (-1, 1)."""

    def __call__(self, z):
        return self.derivatives(z)[0]

    def derivatives(self, z):
        r = cmath.sqrt(1 - z * z)
        return (-1j * z / r, -1j / r ** 3, -3j * z / r ** 5)

    def __str__(self):
        return '-iz/sqrt(1-z^2)'


@dataclass(frozen=True)
class Expression:
    """prefactor(z) * F_params(point_map(z)).

    F is the series solution ~1 at 0 of the basic family of `params`, or the
    standard solution `kind` when one is given.
    """
    prefactor: Prefactor
    params: object
    point_map: object = IDENTITY_MAP
    kind: object = None
    label: str = field(default='', compare=False)

    def argument(self, z):
        return self.point_map(z)

    def __str__(self):
        return self.label or f"{self.prefactor} * {self.params}({self.point_map})"


def chain(prefactor_derivs, inner_derivs, map_derivs, order):
    """Derivatives of P(z) * G(w(z)) up to `order` (at most 2)."""
    p0, p1, p2 = prefactor_derivs
    g = tuple(inner_derivs) + (0j,) * (3 - len(inner_derivs))
    w0, w1, w2 = map_derivs
    value = p0 * g[0]
    out = [value]
    if order >= 1:
        out.append(p1 * g[0] + p0 * g[1] * w1)
    if order >= 2:
        out.append(p2 * g[0] + 2 * p1 * g[1] * w1 + p0 * (g[2] * w1 * w1 + g[1] * w2))
    return tuple(out)
