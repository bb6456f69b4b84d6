"""
Dense univariate polynomials with exact coefficients.

A polynomial is stored as a tuple of coefficients, lowest degree first;
trailing zeros are stripped. Coefficients may be int, Fraction or complex,
so the same code serves the exact polynomial families and the operator
algebra evaluated at sample parameters.
"""
from fractions import Fraction


def _normalize(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        self.coeffs = _normalize(coeffs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def z(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, power, coeff=1):
        return cls((0,) * power + (coeff,))

    @classmethod
    def linear(cls, c0, c1):
        return cls((c0, c1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _lift(other):
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Poly):
            raise TypeError("use divmod for polynomial division")
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return Poly(c / scalar for c in self.coeffs)

    def __pow__(self, n):
        result = Poly.const(1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [0] * max(len(remainder) - len(other.coeffs) + 1, 0)
        lead = other.leading()
        if isinstance(lead, int):
            lead = Fraction(lead)
        for shift in range(len(quotient) - 1, -1, -1):
            c = remainder[shift + len(other.coeffs) - 1] / lead
            quotient[shift] = c
            for j, b in enumerate(other.coeffs):
                remainder[shift + j] -= c * b
        return Poly(quotient), Poly(remainder)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation -------------------------------------------

    def deriv(self, order=1):
        coeffs = self.coeffs
        for _ in range(order):
            coeffs = tuple(k * c for k, c in enumerate(coeffs))[1:]
        return Poly(coeffs)

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def compose(self, inner):
        """self(inner(z))."""
        inner = self._lift(inner)
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def reciprocal(self, n, scale=1):
        """z^n * self(scale / z), valid when deg self <= n."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        out = [0] * (n + 1)
        for k, c in enumerate(self.coeffs):
            out[n - k] = c * scale ** k
        return Poly(out)

    def map_coeffs(self, func):
        return Poly(func(c) for c in self.coeffs)

    def max_abs_coeff(self):
        return max((abs(c) for c in self.coeffs), default=0)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if k == 0 else f"{c}*z" if k == 1 else f"{c}*z^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def to_list(self):
        return [str(c) for c in self.coeffs]


Z = Poly.z()
ONE = Poly.const(1)
