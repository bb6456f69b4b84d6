"""
The six function families and their two parameter systems.

Each family is indexed either by its classical parameters (a, b, c, ...),
which appear in the series coefficients, or by its Lie-algebraic parameters
(alpha, beta, mu, theta, lam), which are index differences at the singular
points. FamilyParams stores the Lie parameters and derives the classical
ones on demand, so the two never drift apart.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import UsageError

HALF = Fraction(1, 2)


class Family(Enum):
    HYP2F1 = '2f1'
    HYP1F1 = '1f1'
    HYP2F0 = '2f0'
    HYP0F1 = '0f1'
    GEGENBAUER = 'gegenbauer'
    HERMITE = 'hermite'

    @classmethod
    def parse(cls, name):
        try:
            return cls(str(name).lower())
        except ValueError:
            names = ', '.join(f.value for f in cls)
            raise UsageError(f"Unknown family {name!r}; expected one of {names}") from None


CLASSICAL_NAMES = {
    Family.HYP2F1: ('a', 'b', 'c'),
    Family.HYP1F1: ('a', 'c'),
    Family.HYP2F0: ('a', 'b'),
    Family.HYP0F1: ('c',),
    Family.GEGENBAUER: ('a', 'b'),
    Family.HERMITE: ('a',),
}

LIE_NAMES = {
    Family.HYP2F1: ('alpha', 'beta', 'mu'),
    Family.HYP1F1: ('theta', 'alpha'),
    Family.HYP2F0: ('theta', 'alpha'),
    Family.HYP0F1: ('alpha',),
    Family.GEGENBAUER: ('alpha', 'lam'),
    Family.HERMITE: ('lam',),
}


def _lie_from_classical(family, values):
    if family is Family.HYP2F1:
        a, b, c = values
        return (c - 1, a + b - c, b - a)
    if family is Family.HYP1F1:
        a, c = values
        return (2 * a - c, c - 1)
    if family is Family.HYP2F0:
        a, b = values
        return (a + b - 1, a - b)
    if family is Family.HYP0F1:
        (c,) = values
        return (c - 1,)
    if family is Family.GEGENBAUER:
        a, b = values
        return ((a + b - 1) * HALF, (b - a) * HALF)
    (a,) = values
    return (a - HALF,)


def _classical_from_lie(family, values):
    if family is Family.HYP2F1:
        alpha, beta, mu = values
        return ((1 + alpha + beta - mu) * HALF, (1 + alpha + beta + mu) * HALF, 1 + alpha)
    if family is Family.HYP1F1:
        theta, alpha = values
        return ((1 + alpha + theta) * HALF, 1 + alpha)
    if family is Family.HYP2F0:
        theta, alpha = values
        return ((1 + alpha + theta) * HALF, (1 - alpha + theta) * HALF)
    if family is Family.HYP0F1:
        (alpha,) = values
        return (1 + alpha,)
    if family is Family.GEGENBAUER:
        alpha, lam = values
        return (HALF + alpha - lam, HALF + alpha + lam)
    (lam,) = values
    return (lam + HALF,)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of one family; `lie` is the stored representation.

    Both parameter systems are readable by name, e.g. ``p.a`` or ``p.alpha``.
    """
    family: Family
    lie: tuple

    def __post_init__(self):
        expected = len(LIE_NAMES[self.family])
        if len(self.lie) != expected:
            raise UsageError(f"{self.family.value} takes {expected} parameters, got {len(self.lie)}")

    @classmethod
    def from_lie(cls, family, *values):
        return cls(family, tuple(values))

    @classmethod
    def from_classical(cls, family, *values):
        if len(values) != len(CLASSICAL_NAMES[family]):
            raise UsageError(f"{family.value} takes classical parameters {CLASSICAL_NAMES[family]}")
        return cls(family, _lie_from_classical(family, tuple(values)))

    @classmethod
    def from_mapping(cls, family, mapping):
        """Build from name=value bindings in either parameter system (not mixed)."""
        names = set(mapping)
        classical, lie = CLASSICAL_NAMES[family], LIE_NAMES[family]
        if names == set(classical):
            return cls.from_classical(family, *(mapping[n] for n in classical))
        if names == set(lie):
            return cls.from_lie(family, *(mapping[n] for n in lie))
        raise UsageError(
            f"{family.value} expects {', '.join(classical)} or {', '.join(lie)}; got {', '.join(sorted(names)) or 'nothing'}"
        )

    @property
    def classical(self):
        return _classical_from_lie(self.family, self.lie)

    def shifted(self, deltas):
        """Lie parameters moved by the integer vector `deltas`."""
        return FamilyParams(self.family, tuple(p + d for p, d in zip(self.lie, deltas)))

    def with_lie(self, values):
        return FamilyParams(self.family, tuple(values))

    def __getattr__(self, name):
        if name.startswith('_'):
            raise AttributeError(name)
        family = object.__getattribute__(self, 'family')
        if name in LIE_NAMES[family]:
            return self.lie[LIE_NAMES[family].index(name)]
        if name in CLASSICAL_NAMES[family]:
            return self.classical[CLASSICAL_NAMES[family].index(name)]
        raise AttributeError(f"{family.value} has no parameter {name!r}")

    def to_dict(self):
        return {
            'family': self.family.value,
            'lie': {n: str(v) for n, v in zip(LIE_NAMES[self.family], self.lie)},
            'classical': {n: str(v) for n, v in zip(CLASSICAL_NAMES[self.family], self.classical)},
        }

    def __str__(self):
        inner = ', '.join(f"{n}={v}" for n, v in zip(LIE_NAMES[self.family], self.lie))
        return f"{self.family.value}({inner})"
