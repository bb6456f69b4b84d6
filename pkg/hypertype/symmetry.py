"""
Discrete symmetry groups of the six families.

A group element is a signed permutation of the Lie parameters together with a
point map w(z) and a prefactor P(z): whenever F solves the equation with the
permuted parameters in the variable w, P(z) F(w(z)) solves the original one.
Prefactor exponents are linear forms in the Lie parameters, so an element can
be printed symbolically and bound to numbers later.

The 2F1 group is the 48 signed permutations of (alpha, beta, mu); its orbit of
the solution ~1 at 0 is Kummer's table of 24 expressions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .errors import UsageError
from .expressions import ExpTerm, Expression, MobiusMap, PowerFactor, PowerMap, Prefactor, WhippleMap
from .families import LIE_NAMES, Family
from .operators import HTOperator
from .series import SolutionKind, evaluate_expression

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


# ---------------------------------------------------------------------------
# exponents linear in the Lie parameters

@dataclass(frozen=True)
class LinearForm:
    constant: Fraction
    coeffs: tuple

    @classmethod
    def variable(cls, index, size, coeff=1):
        coeffs = [Fraction(0)] * size
        coeffs[index] = Fraction(coeff)
        return cls(Fraction(0), tuple(coeffs))

    @classmethod
    def const(cls, value, size):
        return cls(Fraction(value), (Fraction(0),) * size)

    def __call__(self, lie):
        total = self.constant
        for c, v in zip(self.coeffs, lie):
            if c:
                total = total + c * v
        return total

    def __add__(self, other):
        if not isinstance(other, LinearForm):
            return LinearForm(self.constant + Fraction(other), self.coeffs)
        return LinearForm(self.constant + other.constant, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-self.constant, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return LinearForm(self.constant * scalar, tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return self.constant == 0 and not any(self.coeffs)

    def render(self, names):
        parts = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            parts.append(f"{sign}{name}" if mag == 1 else f"{sign}{mag}*{name}")
        if self.constant or not parts:
            c = self.constant
            parts.insert(0, f"{'-' if c < 0 else '+'}{abs(c)}")
        text = ''.join(parts)
        return text[1:] if text.startswith('+') else text


@dataclass(frozen=True)
class PowerTerm:
    """(scale (z - point)) ** exponent with a symbolic exponent."""
    scale: complex
    point: complex
    exponent: LinearForm

    def render(self, names):
        base = {(1, 0): 'z', (-1, 0): '(-z)', (-1, 1): '(1-z)', (1, 1): '(z-1)', (1, -1): '(1+z)'}.get(
            (self.scale, self.point), f"({self.scale}(z-{self.point}))")
        return f"{base}^({self.exponent.render(names)})"


# ---------------------------------------------------------------------------
# group elements

@dataclass(frozen=True)
class SymmetryElement:
    family: Family
    param_map: tuple
    point_map: object
    powers: tuple = ()
    exps: tuple = ()
    label: str = ''

    def apply(self, params):
        """Parameters of the equation F must solve: new[j] = sign_j * old[index_j]."""
        if params.family is not self.family:
            raise UsageError(f"{self.family.value} symmetry applied to {params.family.value} parameters")
        lie = params.lie
        return params.with_lie(tuple(lie[index] if sign > 0 else -lie[index] for index, sign in self.param_map))

    def prefactor(self, params):
        lie = params.lie
        powers = tuple(PowerFactor(t.scale, t.point, t.exponent(lie)) for t in self.powers if not t.exponent.is_zero())
        return Prefactor(powers=powers, exps=self.exps)

    def is_identity(self):
        return (all(index == j and sign > 0 for j, (index, sign) in enumerate(self.param_map))
                and all(t.exponent.is_zero() for t in self.powers) and not self.exps
                and _same_map(self.point_map, _IDENTITY, self.family))

    def describe(self):
        names = LIE_NAMES[self.family]
        new = ', '.join(('' if sign > 0 else '-') + names[index] for index, sign in self.param_map)
        factors = [t.render(names) for t in self.powers if not t.exponent.is_zero()]
        factors += [f"exp({t.coef}*z^{t.power})" for t in self.exps]
        return {
            'label': self.label,
            'point_map': str(self.point_map),
            'prefactor': ' * '.join(factors) or '1',
            'params': f"({new})",
        }

    def __str__(self):
        d = self.describe()
        return f"w={d['point_map']}: {d['prefactor']} F_{d['params']}(w)"


_IDENTITY = MobiusMap(1, 0, 0, 1)

SAMPLE_POINTS = {
    Family.HYP2F1: (0.3 + 0.2j, 2.5 + 0.7j, -1.3 + 0.4j),
    Family.GEGENBAUER: (1.5, 2.0, 3.5),
}
DEFAULT_SAMPLE_POINTS = (0.4 + 0.3j, -1.1 + 0.6j, 0.7 - 0.9j)


def _samples(family):
    return SAMPLE_POINTS.get(family, DEFAULT_SAMPLE_POINTS)


def _same_map(f, g, family):
    return all(abs(complex(f(z)) - complex(g(z))) < 1e-9 * max(1.0, abs(complex(g(z)))) for z in _samples(family))


class _Composite:
    def __init__(self, outer, inner):
        self.outer, self.inner = outer, inner

    def __call__(self, z):
        return self.outer(self.inner(z))


# ---------------------------------------------------------------------------
# 2F1: signed permutations of (alpha, beta, mu) at the points (0, 1, inf)

# pi -> w with w(point[pi[j]]) = point[j]
HOMOGRAPHIES = {
    (0, 1, 2): MobiusMap(1, 0, 0, 1),
    (1, 0, 2): MobiusMap(-1, 1, 0, 1),
    (2, 1, 0): MobiusMap(0, 1, 1, 0),
    (1, 2, 0): MobiusMap(1, -1, 1, 0),
    (2, 0, 1): MobiusMap(0, 1, -1, 1),
    (0, 2, 1): MobiusMap(1, 0, 1, -1),
}


def _shifts_2f1(perm, signs):
    """Prefactor exponents (k0, k1) at z = 0 and z = 1."""
    old = [LinearForm.variable(i, 3) for i in range(3)]
    new = [s * old[i] for i, s in zip(perm, signs)]
    shifts = []
    for point in (0, 1):
        j = perm.index(point)
        if j == 2:
            # this point goes to infinity
            shifts.append(-HALF * (1 + new[0] + new[1] + old[point]))
        elif signs[j] > 0:
            shifts.append(LinearForm.const(0, 3))
        else:
            shifts.append(-old[point])
    return shifts


def _elements_2f1():
    elements = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            k0, k1 = _shifts_2f1(perm, signs)
            expansion_point = perm[0]
            # the branch of each factor is taken positive near the expansion point
            scale0 = -1 if expansion_point == 2 else 1
            powers = (PowerTerm(scale0, 0, k0), PowerTerm(-1, 1, k1))
            elements.append(SymmetryElement(
                Family.HYP2F1, tuple(zip(perm, signs)), HOMOGRAPHIES[perm], powers,
                label=f"w={HOMOGRAPHIES[perm]}",
            ))
    return elements


# ---------------------------------------------------------------------------
# the other families

def _elements_1f1():
    theta, alpha = (LinearForm.variable(i, 2) for i in range(2))
    minus_z = MobiusMap(-1, 0, 0, 1)
    return [
        SymmetryElement(Family.HYP1F1, ((0, 1), (1, 1)), _IDENTITY, label='identity'),
        SymmetryElement(Family.HYP1F1, ((0, 1), (1, -1)), _IDENTITY, (PowerTerm(1, 0, -alpha),),
                        label='index at 0'),
        SymmetryElement(Family.HYP1F1, ((0, -1), (1, 1)), minus_z, (), (ExpTerm(1, 1),), label='Kummer'),
        SymmetryElement(Family.HYP1F1, ((0, -1), (1, -1)), minus_z, (PowerTerm(-1, 0, -alpha),), (ExpTerm(1, 1),),
                        label='Kummer with index at 0'),
    ]


def _elements_2f0():
    theta = LinearForm.variable(0, 2)
    minus_z = MobiusMap(-1, 0, 0, 1)
    reflected = ((PowerTerm(1, 0, -theta),), (ExpTerm(-1, -1),))
    return [
        SymmetryElement(Family.HYP2F0, ((0, 1), (1, 1)), _IDENTITY, label='identity'),
        SymmetryElement(Family.HYP2F0, ((0, 1), (1, -1)), _IDENTITY, label='a <-> b'),
        SymmetryElement(Family.HYP2F0, ((0, -1), (1, 1)), minus_z, *reflected, label='reflection'),
        SymmetryElement(Family.HYP2F0, ((0, -1), (1, -1)), minus_z, *reflected, label='reflection, a <-> b'),
    ]


def _elements_0f1():
    alpha = LinearForm.variable(0, 1)
    return [
        SymmetryElement(Family.HYP0F1, ((0, 1),), _IDENTITY, label='identity'),
        SymmetryElement(Family.HYP0F1, ((0, -1),), _IDENTITY, (PowerTerm(1, 0, -alpha),), label='index at 0'),
    ]


def _elements_gegenbauer():
    # the point map's sign is the product of the parameter signs: -z goes with
    # a single flip, and the Whipple map swaps alpha and lambda
    alpha, lam = (LinearForm.variable(i, 2) for i in range(2))
    minus_z = MobiusMap(-1, 0, 0, 1)
    elements = []
    for s1, s2 in product((1, -1), repeat=2):
        powers = () if s1 > 0 else (PowerTerm(-1, 1, -alpha), PowerTerm(1, -1, -alpha))
        point_map = _IDENTITY if s1 * s2 > 0 else minus_z
        elements.append(SymmetryElement(Family.GEGENBAUER, ((0, s1), (1, s2)), point_map, powers,
                                        label='w=z' if s1 * s2 > 0 else 'w=-z'))
    for s1, s2 in product((1, -1), repeat=2):
        exponent = -QUARTER - HALF * (alpha + s1 * lam)
        powers = (PowerTerm(1, 1, exponent), PowerTerm(1, -1, exponent))
        elements.append(SymmetryElement(Family.GEGENBAUER, ((1, s1), (0, s2)), WhippleMap(s1 * s2), powers,
                                        label='Whipple'))
    return elements

def _elements_hermite():
    return [
        SymmetryElement(Family.HERMITE, ((0, 1),), _IDENTITY, label='identity'),
        SymmetryElement(Family.HERMITE, ((0, -1),), PowerMap(1j, 1), (), (ExpTerm(1, 2),), label='w=iz'),
        SymmetryElement(Family.HERMITE, ((0, 1),), MobiusMap(-1, 0, 0, 1), label='w=-z'),
        SymmetryElement(Family.HERMITE, ((0, -1),), PowerMap(-1j, 1), (), (ExpTerm(1, 2),), label='w=-iz'),
    ]


_BUILDERS = {
    Family.HYP2F1: _elements_2f1,
    Family.HYP1F1: _elements_1f1,
    Family.HYP2F0: _elements_2f0,
    Family.HYP0F1: _elements_0f1,
    Family.GEGENBAUER: _elements_gegenbauer,
    Family.HERMITE: _elements_hermite,
}


@dataclass(frozen=True)
class SymmetryGroup:
    family: Family
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    def identity(self):
        return next(e for e in self.elements if e.is_identity())

    def find(self, param_map, point_map=None):
        """The element with this parameter action (and point map, when several share it)."""
        for e in self.elements:
            if tuple(param_map) == e.param_map and (point_map is None or _same_map(e.point_map, point_map, self.family)):
                return e
        return None

    def compose(self, first, second):
        """The element acting as `first` followed by `second`."""
        param_map = tuple((first.param_map[index][0], first.param_map[index][1] * sign)
                          for index, sign in second.param_map)
        return self.find(param_map, _Composite(second.point_map, first.point_map))

    def inverse(self, element):
        identity = self.identity()
        for e in self.elements:
            if self.compose(element, e) is identity:
                return e
        return None

    def composition_table(self):
        """Indices of first∘second for every pair; None marks a product outside the group."""
        index = {id(e): i for i, e in enumerate(self.elements)}
        table = []
        for first in self.elements:
            row = []
            for second in self.elements:
                product_ = self.compose(first, second)
                row.append(None if product_ is None else index[id(product_)])
            table.append(row)
        return table

    def to_dict(self):
        return {
            'family': self.family.value,
            'order': self.order,
            'elements': [e.describe() for e in self.elements],
        }


@lru_cache(maxsize=None)
def enumerate_group(family):
    group = SymmetryGroup(family, tuple(_BUILDERS[family]()))
    logger.debug("symmetry group of %s has %d elements", family.value, group.order)
    return group


def apply(element, params):
    return element.apply(params)


BASE_KINDS = {
    Family.GEGENBAUER: SolutionKind.GEGENBAUER_AT1_INDEX0,
    Family.HERMITE: SolutionKind.HERMITE_EVEN,
}


def transform_solution(element, params, base_kind=None):
    """
    Descriptor P(z) * F_{mapped}(w(z)) of a solution for `params`.

    F is the family's series solution at 0 (for Gegenbauer the solution ~1 at
    z = 1, for Hermite the even one) unless `base_kind` names another.
    """
    mapped = element.apply(params)
    kind = base_kind or BASE_KINDS.get(element.family)
    return Expression(element.prefactor(params), mapped, element.point_map, kind=kind, label=str(element))


def solution_residual(element, params, z, base_kind=None, tol=None):
    """|Op_params applied to the transformed solution| at z, relative to its terms."""
    expr = transform_solution(element, params, base_kind)
    result = evaluate_expression(expr, z, tol=tol, derivatives=2)
    f, df, d2f = (result.value,) + result.derivatives
    op = HTOperator.for_family(params)
    z = complex(z)
    terms = (op.sigma(z) * d2f, op.tau(z) * df, op.eta * f)
    scale = max(abs(t) for t in terms) or 1.0
    return abs(sum(terms)) / scale


def verify_conjugation(element, params, points=None):
    """
    Check  P^{-1} Op_params(z) P = c(z) Op_mapped(w, d_w)  at sample points.

    Both sides are reduced to coefficient triples in z; c(z) is the ratio of
    the second-order coefficients. Returns (max relative residual, factors c).
    """
    points = points or _samples(element.family)
    op = HTOperator.for_family(params)
    mapped = HTOperator.for_family(element.apply(params))
    prefactor = element.prefactor(params)
    worst, factors = 0.0, []
    for z in points:
        z = complex(z)
        p0, p1, p2 = prefactor.derivatives(z)
        log_d, second = p1 / p0, p2 / p0
        s, t = op.sigma(z), op.tau(z)
        lhs = (s, t + 2 * s * log_d, op.eta + t * log_d + s * second)
        w, w1, w2 = element.point_map.derivatives(z)
        ms, mt = mapped.sigma(w), mapped.tau(w)
        rhs = (ms / w1 ** 2, mt / w1 - ms * w2 / w1 ** 3, complex(mapped.eta))
        factor = lhs[0] / rhs[0]
        scale = max(abs(x) for x in lhs) or 1.0
        worst = max(worst, max(abs(lhs[k] - factor * rhs[k]) for k in (1, 2)) / scale)
        factors.append(factor)
    return worst, factors


def compose_descriptors(first, second, params, z):
    """
    Apply `first` and then `second` at z: returns (P1(z) P2(w1(z)), w2(w1(z)), final params).
    """
    z = complex(z)
    mid_params = first.apply(params)
    w1 = first.point_map(z)
    value = first.prefactor(params)(z) * second.prefactor(mid_params)(w1)
    return value, second.point_map(w1), second.apply(mid_params)


# ---------------------------------------------------------------------------
# Kummer's table

_CANONICAL_SHIFTS = {
    SolutionKind.HYP2F1_AT0_INDEX0: ((0, 1, 2), 'zero', 'zero'),
    SolutionKind.HYP2F1_AT0_INDEX_ALPHA: ((0, 1, 2), 'alpha', 'zero'),
    SolutionKind.HYP2F1_AT1_INDEX0: ((1, 0, 2), 'zero', 'zero'),
    SolutionKind.HYP2F1_AT1_INDEX_BETA: ((1, 0, 2), 'zero', 'beta'),
    SolutionKind.HYP2F1_AT_INF_A: ((2, 1, 0), 'a', 'zero'),
    SolutionKind.HYP2F1_AT_INF_B: ((2, 1, 0), 'b', 'zero'),
}


def _forms():
    alpha, beta, mu = (LinearForm.variable(i, 3) for i in range(3))
    return {
        'zero': LinearForm.const(0, 3),
        'alpha': -alpha,
        'beta': -beta,
        'a': -HALF * (1 + alpha + beta - mu),
        'b': -HALF * (1 + alpha + beta + mu),
    }


def _classify(element):
    """The 2F1 standard solution an orbit element represents."""
    forms = _forms()
    perm = tuple(index for index, _ in element.param_map)
    k0, k1 = (t.exponent for t in element.powers)
    point = perm[0]
    if point == 0:
        return SolutionKind.HYP2F1_AT0_INDEX0 if k0.is_zero() else SolutionKind.HYP2F1_AT0_INDEX_ALPHA
    if point == 1:
        return SolutionKind.HYP2F1_AT1_INDEX0 if k1.is_zero() else SolutionKind.HYP2F1_AT1_INDEX_BETA
    total = k0 + k1
    if total == forms['a']:
        return SolutionKind.HYP2F1_AT_INF_A
    if total == forms['b']:
        return SolutionKind.HYP2F1_AT_INF_B
    raise AssertionError(f"unclassified orbit element {element}")


@lru_cache(maxsize=1)
def _kummer_rows():
    forms = _forms()
    rows = {kind: [] for kind in _CANONICAL_SHIFTS}
    seen = set()
    for element in enumerate_group(Family.HYP2F1).elements:
        perm = tuple(index for index, _ in element.param_map)
        k0, k1 = (t.exponent for t in element.powers)
        key = (perm, k0, k1)
        if key in seen:
            # the same expression with the sign of mu flipped inside F
            continue
        seen.add(key)
        rows[_classify(element)].append(element)

    for kind, (perm, s0, s1) in _CANONICAL_SHIFTS.items():
        def canonical_first(e, perm=perm, s0=s0, s1=s1):
            e_perm = tuple(index for index, _ in e.param_map)
            k0, k1 = (t.exponent for t in e.powers)
            is_canonical = e_perm == perm and k0 == forms[s0] and k1 == forms[s1]
            return (not is_canonical, list(HOMOGRAPHIES).index(e_perm), str(e))
        rows[kind].sort(key=canonical_first)
    return rows


def kummer_table(kind):
    """
    The four expressions of the 2F1 standard solution `kind`, canonical one first.

    Returns:
        list: SymmetryElements; `transform_solution(e, params)` evaluates each
    """
    if kind.family is not Family.HYP2F1:
        raise UsageError(f"Kummer's table lists 2f1 solutions, not {kind}")
    return list(_kummer_rows()[kind])


def kummer_expressions(kind, params):
    """The four expressions of `kind` bound to `params`."""
    return [transform_solution(e, params) for e in kummer_table(kind)]


# ---------------------------------------------------------------------------
# Gegenbauer: the square of (1, inf+, -1, inf-) and Whipple's map

SQUARE_VERTICES = {(0, 1): '1', (1, 1): 'inf+', (0, -1): '-1', (1, -1): 'inf-'}


def square_action(element):
    """Permutation of the vertices (1, inf+, -1, inf-) induced by a Gegenbauer element."""
    if element.family is not Family.GEGENBAUER:
        raise UsageError("the square action is defined for gegenbauer elements")
    action = {}
    for j, (index, sign) in enumerate(element.param_map):
        for s in (1, -1):
            action[SQUARE_VERTICES[(index, s)]] = SQUARE_VERTICES[(j, s * sign)]
    return action


# points for each relation: the solution ~1 at z = 1 is summed at every
# intermediate argument, and the disc stays clear of the principal cuts
TAU_SQUARED_POINTS = (1.6 + 0.12j, 1.55 + 0.1j, 1.65 + 0.14j)
TAU_EPSILON_POINTS = (-1.6 + 0.12j, -1.55 + 0.1j, -1.65 + 0.14j)


def _chain_value(elements, params, z):
    """P(z) F(w(z)) for the elements applied in turn, F the solution ~1 at z = 1."""
    value, w = 1 + 0j, complex(z)
    for element in elements:
        value *= element.prefactor(params)(w)
        w = element.point_map(w)
        params = element.apply(params)
    base = Expression(Prefactor(), params, _IDENTITY, kind=BASE_KINDS[Family.GEGENBAUER])
    return value * evaluate_expression(base, w).value


def _ratio_spread(left, right, params, points):
    ratios = [_chain_value(left, params, z) / _chain_value(right, params, z) for z in points]
    return max(abs(r - ratios[0]) for r in ratios) / abs(ratios[0])


def whipple_relations(params):
    """
    Defects of tau^2 = 1 and tau epsilon = (-1) epsilon tau on Gegenbauer solutions.

    tau is Whipple's element, epsilon is w = -z with lambda -> -lambda and (-1)
    flips both parameters. Each relation must hold in the group, and both sides
    must send the solution ~1 at z = 1 to proportional functions; the defect is
    the spread of their ratio over the sample points (inf when the group
    products disagree).
    """
    if params.family is not Family.GEGENBAUER:
        raise UsageError("Whipple's relations are defined for gegenbauer parameters")
    group = enumerate_group(Family.GEGENBAUER)
    tau = group.find(((1, 1), (0, 1)))
    epsilon = group.find(((0, 1), (1, -1)))
    minus_one = group.find(((0, -1), (1, -1)))

    defects = {}
    if group.compose(tau, tau) is group.identity():
        defects['tau_squared'] = _ratio_spread((tau, tau), (), params, TAU_SQUARED_POINTS)
    else:
        defects['tau_squared'] = float('inf')
    if group.compose(epsilon, tau) is group.compose(group.compose(tau, epsilon), minus_one):
        defects['tau_epsilon'] = _ratio_spread((epsilon, tau), (tau, epsilon, minus_one), params,
                                               TAU_EPSILON_POINTS)
    else:
        defects['tau_epsilon'] = float('inf')
    logger.debug("Whipple relation defects %s", defects)
    return defects
