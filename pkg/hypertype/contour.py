"""
Contours of integration and quadrature of multivalued integrands along them.

Contours are written as comma separated items between brackets:

    [0, 1]              segment from 0 to 1
    [1, inf[            half-line from 1 towards +inf
    ]-inf, 0^+, -inf[   in from -inf, counterclockwise around 0, back out
    [1, (z,0)^+, 1]     from 1 around the group {z, 0} and back
    [0^+]  [0^-]        small counterclockwise / clockwise loop around 0
    [(0-0)^+]           kidney: leaves 0 at angle pi, turns around 0, returns
    [(0+0@pi/2)^+, 1]   leaves 0 at angle pi/2, bypasses 0, goes on to 1

`inf@phi` is the point at infinity in the direction phi (`inf` is `inf@0`,
`-inf` is `inf@pi`). Angles are reals or multiples of pi such as `pi`,
`-pi/2` and `3pi/4`. Names like `z` are bound through `anchors`. Whether a
bracket opens or closes an end is notation only.

Power factors are evaluated with arguments that vary continuously along the
path. The branch is fixed at the anchor of the contour, where every factor
takes its principal value: the middle of the first arc when there is one,
otherwise the finite start (or, for a path coming in from infinity, its
finite end).
"""
import cmath
import logging
import math
import re
from dataclasses import dataclass, field
from typing import Callable

from .config import get_settings
from .errors import DomainError, NonIntegrableEndpoint, ParseError, TruncationError
from .numeric_core import SeriesResult, Status, parse_complex, quad_complex

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
INFINITE = complex(math.inf, 0)


# ---------------------------------------------------------------------------
# path segments

@dataclass(frozen=True)
class LineSegment:
    a: complex
    b: complex

    lower = 0.0
    upper = 1.0

    @property
    def start(self):
        return self.a

    @property
    def end(self):
        return self.b

    def point(self, s):
        return self.a + (self.b - self.a) * s

    def velocity(self, s):
        return self.b - self.a

    def direction(self, at_upper):
        d = self.a - self.b if at_upper else self.b - self.a
        return d / abs(d)

    def rel_arg(self, p, s):
        """A continuous argument of point(s) - p."""
        if self.a == p:
            return cmath.phase(self.b - self.a)
        if self.b == p:
            return cmath.phase(self.a - self.b)
        return cmath.phase(self.a - p) + cmath.phase((self.point(s) - p) / (self.a - p))

    def passes_through(self, p):
        d = self.b - self.a
        s = ((p - self.a) / d).real
        return 0 < s < 1 and abs(self.point(s) - p) <= 1e-13 * max(1.0, abs(p))

    def __str__(self):
        return f"line {self.a} -> {self.b}"


@dataclass(frozen=True)
class BypassArc:
    """center + radius e^{i theta} for theta from lower to upper; a full turn is a loop."""
    center: complex
    radius: float
    lower: float
    upper: float

    @property
    def start(self):
        return self.point(self.lower)

    @property
    def end(self):
        return self.point(self.upper)

    @property
    def is_loop(self):
        return abs(abs(self.upper - self.lower) - TWO_PI) < 1e-12

    @property
    def orientation(self):
        return 1 if self.upper > self.lower else -1

    def point(self, theta):
        return self.center + self.radius * cmath.exp(1j * theta)

    def velocity(self, theta):
        return 1j * self.radius * cmath.exp(1j * theta)

    def direction(self, at_upper):
        theta = self.upper if at_upper else self.lower
        d = 1j * cmath.exp(1j * theta) * self.orientation
        return -d if at_upper else d

    def rel_arg(self, p, theta):
        w = (p - self.center) / self.radius
        if abs(w) < 1:
            return theta + cmath.phase(1 - w * cmath.exp(-1j * theta))
        c = self.center - p
        return cmath.phase(c) + cmath.phase(1 + self.radius * cmath.exp(1j * theta) / c)

    def passes_through(self, p):
        return abs(abs(p - self.center) - self.radius) <= 1e-13 * max(1.0, self.radius)

    def __str__(self):
        kind = 'loop' if self.is_loop else 'arc'
        return f"{kind} around {self.center}, r={self.radius:.6g}, {self.lower:.6g} -> {self.upper:.6g}"


@dataclass(frozen=True)
class Ray:
    """origin + e^{i angle} x for x >= 0, walked inwards when `incoming`."""
    origin: complex
    angle: float
    incoming: bool = False

    @property
    def lower(self):
        return math.inf if self.incoming else 0.0

    @property
    def upper(self):
        return 0.0 if self.incoming else math.inf

    @property
    def start(self):
        return None if self.incoming else self.origin

    @property
    def end(self):
        return self.origin if self.incoming else None

    @property
    def unit(self):
        return cmath.exp(1j * self.angle)

    def point(self, x):
        return self.origin + self.unit * x

    def velocity(self, x):
        return self.unit

    def direction(self, at_upper):
        return self.unit

    def rel_arg(self, p, x):
        if self.origin == p:
            return self.angle
        c = self.origin - p
        return cmath.phase(c) + cmath.phase(1 + self.unit * x / c)

    def passes_through(self, p):
        x = ((p - self.origin) / self.unit).real
        return x > 0 and abs(self.point(x) - p) <= 1e-13 * max(1.0, abs(p))

    def __str__(self):
        way = 'in from' if self.incoming else 'out to'
        return f"ray {way} inf@{self.angle:.6g} at {self.origin}"


@dataclass(frozen=True)
class Contour:
    text: str
    segments: tuple

    @property
    def start(self):
        return self.segments[0].start

    @property
    def end(self):
        return self.segments[-1].end

    @property
    def closed(self):
        return self.start is not None and self.start == self.end

    @property
    def arcs(self):
        return [s for s in self.segments if isinstance(s, BypassArc)]

    def anchor(self):
        """(segment index, parameter) where every factor is principal."""
        for i, seg in enumerate(self.segments):
            if isinstance(seg, BypassArc):
                return i, (seg.lower + seg.upper) / 2
        if self.segments[0].start is not None:
            return 0, self.segments[0].lower
        return len(self.segments) - 1, self.segments[-1].upper

    def finite_points(self):
        out = []
        for seg in self.segments:
            for p in (seg.start, seg.end):
                if p is not None:
                    out.append(p)
        return out

    def describe(self):
        return [str(s) for s in self.segments]


# ---------------------------------------------------------------------------
# parsing

@dataclass(frozen=True)
class Infinity:
    angle: float


@dataclass(frozen=True)
class _Item:
    kind: str
    points: tuple
    sign: int = 1
    angle: float = 0.0
    position: int = 0

    @property
    def center(self):
        return sum(self.points) / len(self.points)


_PI_ANGLE = re.compile(r'^(?P<num>[+-]?(\d+(\.\d*)?|\.\d+)?)\*?pi(/(?P<den>\d+(\.\d*)?))?$')
_WRAPPED = re.compile(r'^\((?P<inner>.*)\)\^(?P<sign>[+-])$', re.S)
_BYPASS = re.compile(r'^(?P<point>.+)\^(?P<sign>[+-])$', re.S)
_KIDNEY = re.compile(r'^(?P<u>.+?)(?P<side>[+-])0(?:@(?P<phi>.+))?$')
_NAME = re.compile(r'^[A-Za-z_]\w*$')


def _parse_angle(text, position):
    text = text.strip().replace(' ', '')
    m = _PI_ANGLE.match(text)
    if m:
        num = m.group('num')
        factor = -1.0 if num == '-' else 1.0 if num in ('', '+') else float(num)
        den = float(m.group('den')) if m.group('den') else 1.0
        return factor * math.pi / den
    try:
        value = parse_complex(text)
    except ParseError:
        raise ParseError(f"bad angle {text!r}", position) from None
    if isinstance(value, complex):
        raise ParseError(f"an angle must be real, got {text!r}", position)
    return float(value)


def _parse_point(text, anchors, position):
    t = text.strip()
    if not t:
        raise ParseError("missing point", position)
    if t in ('inf', '+inf'):
        return Infinity(0.0)
    if t == '-inf':
        return Infinity(math.pi)
    if t.startswith('inf@'):
        return Infinity(_parse_angle(t[4:], position + 4))
    if t in anchors:
        return complex(anchors[t])
    if _NAME.match(t):
        raise ParseError(f"unbound name {t!r}", position)
    try:
        return complex(parse_complex(t))
    except ParseError:
        raise ParseError(f"bad point {t!r}", position) from None


def _split(body, offset):
    items, depth, start = [], 0, 0
    for k, ch in enumerate(body):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", offset + k)
        elif ch == ',' and depth == 0:
            items.append((body[start:k], offset + start))
            start = k + 1
    if depth:
        raise ParseError("unbalanced '('", offset + len(body))
    items.append((body[start:], offset + start))
    return items


def _finite(point, position):
    if isinstance(point, Infinity):
        raise ParseError("infinity cannot be bypassed", position)
    return point


def _parse_item(text, position, anchors):
    stripped = text.lstrip()
    position += len(text) - len(stripped)
    stripped = stripped.rstrip()
    if not stripped:
        raise ParseError("empty item", position)

    m = _WRAPPED.match(stripped)
    if m:
        sign = 1 if m.group('sign') == '+' else -1
        inner = m.group('inner')
        parts = _split(inner, position + 1)
        if len(parts) == 1:
            k = _KIDNEY.match(inner.strip())
            if k and (k.group('u').strip() in anchors or _is_literal(k.group('u'))):
                u = _finite(_parse_point(k.group('u'), anchors, position + 1), position)
                phi = _parse_angle(k.group('phi'), position) if k.group('phi') else 0.0
                if k.group('side') == '-':
                    phi += math.pi
                return _Item('kidney', (u,), sign, phi, position)
        points = tuple(_finite(_parse_point(p, anchors, pos), pos) for p, pos in parts)
        return _Item('group' if len(points) > 1 else 'bypass', points, sign, 0.0, position)

    m = _BYPASS.match(stripped)
    if m:
        sign = 1 if m.group('sign') == '+' else -1
        u = _finite(_parse_point(m.group('point'), anchors, position), position)
        return _Item('bypass', (u,), sign, 0.0, position)
    return _Item('point', (_parse_point(stripped, anchors, position),), position=position)


def _is_literal(text):
    try:
        parse_complex(text)
        return True
    except ParseError:
        return False


def _sweep(theta0, target, sign):
    if sign > 0:
        delta = (target - theta0) % TWO_PI
        return theta0 + (delta if delta > 1e-12 else TWO_PI)
    delta = (theta0 - target) % TWO_PI
    return theta0 - (delta if delta > 1e-12 else TWO_PI)


def _circle(item, marked, radius_scale):
    """Center and radius of the circle an item turns around."""
    center = item.center
    own = {complex(p) for p in item.points}
    half_span = max(abs(p - center) for p in own)
    others = [abs(m - center) for m in marked if all(abs(m - p) > 1e-14 for p in own)]
    if others:
        gap = min(others) - half_span
        if gap <= 0:
            raise ParseError(f"no circle around {sorted(own, key=abs)} avoids the other points", item.position)
        margin = gap / 4
    else:
        margin = 1.0
    return center, half_span + margin * radius_scale


def _exit_angle(center, item):
    if item.kind == 'point':
        p = item.points[0]
        return p.angle if isinstance(p, Infinity) else cmath.phase(p - center)
    return cmath.phase(item.center - center)


def _build(items, marked, radius_scale):
    segments = []
    pending = None
    current = None
    n = len(items)
    for i, item in enumerate(items):
        nxt = items[i + 1] if i + 1 < n else None
        if item.kind == 'point' and isinstance(item.points[0], Infinity):
            if i == 0 and n > 1:
                pending = item.points[0].angle
            elif i == n - 1 and current is not None:
                segments.append(Ray(current, item.points[0].angle))
            else:
                raise ParseError("infinity may only open or close a contour", item.position)
            continue

        if item.kind == 'point':
            w = item.points[0]
            if pending is not None:
                segments.append(Ray(w, pending, incoming=True))
                pending = None
            elif current is not None and w != current:
                segments.append(LineSegment(current, w))
            current = w
            continue

        center, radius = _circle(item, marked, radius_scale)
        if item.kind == 'kidney':
            if pending is not None:
                raise ParseError("a kidney cannot start at infinity", item.position)
            u = item.points[0]
            if current is not None and current != u:
                segments.append(LineSegment(current, u))
            theta0 = item.angle
            segments.append(LineSegment(u, u + radius * cmath.exp(1j * theta0)))
            target = theta0 if nxt is None else _exit_angle(center, nxt)
            arc = BypassArc(center, radius, theta0, _sweep(theta0, target, item.sign))
            segments.append(arc)
            current = arc.end
            if nxt is None:
                segments.append(LineSegment(arc.end, u))
                current = u
            continue

        if pending is not None:
            theta0 = pending
            segments.append(Ray(center + radius * cmath.exp(1j * theta0), pending, incoming=True))
            pending = None
        elif current is not None:
            if abs(current - center) <= radius:
                raise ParseError("the path starts inside the circle it bypasses", item.position)
            theta0 = cmath.phase(current - center)
            segments.append(LineSegment(current, center + radius * cmath.exp(1j * theta0)))
        else:
            theta0 = None
        exit_angle = _exit_angle(center, nxt) if nxt is not None else None
        if theta0 is None:
            theta0 = exit_angle if exit_angle is not None else (-math.pi if item.sign > 0 else math.pi)
        target = theta0 if exit_angle is None else exit_angle
        arc = BypassArc(center, radius, theta0, _sweep(theta0, target, item.sign))
        segments.append(arc)
        current = arc.end
    if not segments:
        raise ParseError("a contour needs at least two points or a loop", 0)
    return segments


def parse_contour(notation, anchors=None, singularities=(), radius_scale=1.0):
    """
    Build a Contour from its bracket notation.

    Args:
        notation (str): the contour, e.g. "]-inf, 0^+, -inf["
        anchors (dict): values of named points such as z
        singularities (iterable): further points the default radii keep away from
        radius_scale (float): multiplies the free margin of every circle

    Raises:
        ParseError: malformed text, with the offending position
    """
    anchors = dict(anchors or {})
    text = str(notation)
    body = text.strip()
    lead = len(text) - len(text.lstrip())
    if len(body) < 2 or body[0] not in '[]' or body[-1] not in '[]':
        raise ParseError("a contour is enclosed in brackets", lead)
    items = [_parse_item(t, pos, anchors) for t, pos in _split(body[1:-1], lead + 1)]

    marked = [complex(s) for s in singularities]
    for item in items:
        marked.extend(p for p in item.points if not isinstance(p, Infinity))
    segments = _build(items, marked, radius_scale)
    contour = Contour(text, tuple(segments))
    logger.debug("contour %s: %s", text, '; '.join(contour.describe()))
    return contour


# ---------------------------------------------------------------------------
# integrands

@dataclass(frozen=True)
class PowerFactor:
    """(scale * prod(t - p) / prod(t - q)) ** exponent over zeros p and poles q."""
    exponent: complex
    zeros: tuple = ()
    poles: tuple = ()
    scale: complex = 1

    def order_at(self, point):
        return sum(1 for p in self.zeros if p == point) - sum(1 for q in self.poles if q == point)


@dataclass(frozen=True)
class ExpFactor:
    """exp(coef * (t - point) ** power) for an integer power."""
    coef: complex
    power: int = 1
    point: complex = 0j


def power(point, exponent, scale=1):
    """(scale * (t - point)) ** exponent."""
    return PowerFactor(complex(exponent), (complex(point),), (), complex(scale))


@dataclass(frozen=True)
class BranchedIntegrand:
    """
    constant * prod(power factors) * exp(sum of exponential terms) * extra(t).

    `extra` must be single valued along the contour.
    """
    powers: tuple = ()
    exps: tuple = ()
    constant: complex = 1
    extra: Callable = field(default=None, compare=False)

    def points(self):
        out = []
        for f in self.powers:
            for p in f.zeros + f.poles:
                if p not in out:
                    out.append(p)
        return out

    def singular_points(self):
        out = self.points()
        for e in self.exps:
            if e.power < 0 and e.point not in out:
                out.append(complex(e.point))
        return out

    def endpoint_behaviour(self, p, direction):
        """
        (Re of the total power at p, mode) where mode is 'flat' when an
        exponential factor kills the integrand along `direction`, 'blows'
        when one makes it explode, and None otherwise.
        """
        exponent = sum(f.exponent * f.order_at(p) for f in self.powers)
        mode = None
        for e in self.exps:
            if e.power < 0 and e.point == p:
                r = (e.coef * direction ** e.power).real
                if r > 0:
                    return exponent.real if exponent else 0.0, 'blows'
                if r < 0:
                    mode = 'flat'
        return (complex(exponent).real, mode)

    def behaviour_at_infinity(self, angle):
        """(Re of the total power, sign of the dominant exponential growth) along angle."""
        exponent = sum(f.exponent * (len(f.zeros) - len(f.poles)) for f in self.powers)
        d = cmath.exp(1j * angle)
        by_power = {}
        for e in self.exps:
            if e.power > 0:
                by_power[e.power] = by_power.get(e.power, 0) + e.coef * d ** e.power
        growth = 0
        for k in sorted(by_power, reverse=True):
            r = by_power[k].real
            if abs(r) > 1e-15 * max(1.0, abs(by_power[k])):
                growth = 1 if r > 0 else -1
                break
        return complex(exponent).real, growth


def _principal(angle):
    a = math.remainder(angle, TWO_PI)
    return math.pi if a <= -math.pi + 1e-15 else a


class BoundIntegrand:
    """An integrand with its branches fixed along a contour."""

    def __init__(self, integrand, contour):
        self.integrand = integrand
        self.contour = contour
        self.segments = contour.segments
        points = integrand.points()
        for p in integrand.singular_points():
            for seg in self.segments:
                if seg.passes_through(p):
                    raise DomainError(f"{contour.text} passes through the singular point {p}")
        self.offsets = {p: self._offsets(p) for p in points}
        i, s = contour.anchor()
        self.constants = []
        for f in integrand.powers:
            raw = self._raw_arg(f, i, s)
            self.constants.append(_principal(raw) - raw)

    def _offsets(self, p):
        offsets = [0.0]
        for prev, seg in zip(self.segments, self.segments[1:]):
            jump = prev.rel_arg(p, prev.upper) - seg.rel_arg(p, seg.lower)
            offsets.append(offsets[-1] + TWO_PI * round(jump / TWO_PI))
        return offsets

    def tracked_arg(self, p, i, s):
        return self.offsets[p][i] + self.segments[i].rel_arg(p, s)

    def _raw_arg(self, f, i, s):
        return (cmath.phase(f.scale) + sum(self.tracked_arg(p, i, s) for p in f.zeros)
                - sum(self.tracked_arg(q, i, s) for q in f.poles))

    def log_value(self, i, s, ds=0.0):
        """
        (t, log of the integrand without `extra`), or (t, None) at a zero of a base.

        t is the point at parameter s + ds. A nonzero ds is an offset from the
        endpoint at parameter s: factors based there are evaluated from
        velocity * ds, which keeps their precision where t - p would cancel.
        """
        seg = self.segments[i]
        t = seg.point(s + ds)
        near, delta = None, None
        if ds:
            near = seg.start if s == seg.lower else seg.end if s == seg.upper else seg.point(s)
            delta = seg.velocity(s) * ds

        def distance(p):
            return abs(delta) if p == near else abs(t - p)

        total = 0j
        for f, k in zip(self.integrand.powers, self.constants):
            modulus = math.log(abs(f.scale))
            for p in f.zeros:
                r = distance(p)
                if r == 0:
                    return t, None
                modulus += math.log(r)
            for q in f.poles:
                r = distance(q)
                if r == 0:
                    return t, None
                modulus -= math.log(r)
            total += f.exponent * complex(modulus, self._raw_arg(f, i, s + ds) + k)
        for e in self.integrand.exps:
            base = delta if e.point == near else t - e.point
            if base == 0:
                return t, None
            total += e.coef * base ** e.power
        return t, total

    def value(self, i, s, ds=0.0):
        t, total = self.log_value(i, s, ds)
        if total is None:
            return 0j
        if total.real > 700:
            return INFINITE
        v = complex(self.integrand.constant) * cmath.exp(total)
        if self.integrand.extra is not None:
            v *= self.integrand.extra(t)
        return v


def bind(integrand, contour):
    return BoundIntegrand(integrand, contour)


# ---------------------------------------------------------------------------
# quadrature

def _graded(h, end, other, exponent, tol, limit):
    """
    The integral of h from `end` to `other`, with s = end + (other - end) u^q near `end`.

    h(s, ds) is called with the offset ds = (other - end) u^q kept apart from `end`.
    """
    if exponent is None:
        return quad_complex(h, end, other, tol=tol, limit=limit)
    q = 2 / (1 + exponent)
    width = other - end

    def g(u):
        return h(end, width * u ** q) * width * q * u ** (q - 1)

    return quad_complex(g, 0.0, 1.0, tol=tol, limit=limit)


def _interval(h, lower, upper, e_lower, e_upper, tol, limit):
    if e_lower is None and e_upper is None:
        return quad_complex(h, lower, upper, tol=tol, limit=limit)
    mid = (lower + upper) / 2
    left, left_err = _graded(h, lower, mid, e_lower, tol / 2, limit)
    right, right_err = _graded(h, upper, mid, e_upper, tol / 2, limit)
    return left - right, left_err + right_err


def _end_exponent(bound, seg, at_upper):
    """The grading exponent at one end of a segment, or None when it is regular."""
    p = seg.end if at_upper else seg.start
    if p is None or p not in bound.integrand.singular_points():
        return None
    exponent, mode = bound.integrand.endpoint_behaviour(p, seg.direction(at_upper))
    if mode == 'blows':
        raise NonIntegrableEndpoint(f"the integrand grows exponentially towards {p}")
    if mode == 'flat':
        return None
    if exponent <= -1:
        raise NonIntegrableEndpoint(f"the integrand behaves like |t - {p}|^{exponent:.6g} at an endpoint")
    return exponent if exponent < 0 else None


def _check_tail(bound, seg, T, tol):
    integrand = bound.integrand
    if integrand.extra is None:
        exponent, growth = integrand.behaviour_at_infinity(seg.angle)
        if growth > 0 or (growth == 0 and exponent >= -1):
            raise TruncationError(f"the integrand does not decay along {seg}")
        return
    i = bound.segments.index(seg)
    near = abs(bound.value(i, 1e4 * T)) * 1e4 * T
    far = abs(bound.value(i, 1e8 * T)) * 1e8 * T
    if far >= near and far > tol:
        raise TruncationError(f"the tail along {seg} stays at {far:.3g}")


def _tail_exponent(bound, i, seg, T):
    """Re of the algebraic decay exponent along a ray, or None when the decay is exponential."""
    integrand = bound.integrand
    if integrand.extra is None:
        exponent, growth = integrand.behaviour_at_infinity(seg.angle)
        return None if growth < 0 else exponent
    near = abs(bound.value(i, 1e2 * T))
    far = abs(bound.value(i, 1e4 * T))
    if near == 0 or far == 0:
        return None
    slope = math.log(far / near) / math.log(1e2)
    # steeper than any power in the sampled range: treat as exponential
    return None if slope < -6 else min(slope, -1.05)


def _algebraic_tail(h, T, exponent, tol, limit):
    """The integral of h over [T, inf) for |h(x)| ~ x^exponent, with x = T u^-k."""
    k = -2 / (1 + exponent)

    def g(u):
        x = T * u ** -k
        if not math.isfinite(x):
            return 0j
        return h(x) * T * k * u ** (-k - 1)

    return quad_complex(g, 0.0, 1.0, tol=tol, limit=limit)


def _ray_integral(bound, i, seg, tol, limit, cutoff):
    finite = [abs(p) for p in bound.integrand.singular_points()]
    T = cutoff * max([1.0, abs(seg.origin)] + finite)
    _check_tail(bound, seg, T, tol)
    unit = seg.unit

    def h(x, dx=0.0):
        return bound.value(i, x, dx) * unit

    e0 = _end_exponent(bound, seg, at_upper=seg.incoming)
    value, err = _interval(h, 0.0, T, e0, None, tol, limit)
    pieces = 1
    exponent = _tail_exponent(bound, i, seg, T)
    if exponent is None:
        tail_bound = abs(h(T)) * T
    else:
        # the integral of |h(T)| (x/T)^exponent over [T, inf)
        tail_bound = abs(h(T)) * T / (-1 - exponent)
    if tail_bound > tol * 1e-3:
        if exponent is None:
            tail, tail_err = quad_complex(h, T, math.inf, tol=tol, limit=limit)
        else:
            tail, tail_err = _algebraic_tail(h, T, exponent, tol, limit)
        value += tail
        err += tail_err
        pieces += 1
    else:
        err += tail_bound
    if seg.incoming:
        value = -value
    return value, err, pieces


def integrate(f, gamma, tol=None):
    """
    The integral of the branched integrand f along the contour gamma.

    Finite endpoints where the integrand behaves like |t - p|^e with
    -1 < e < 0 are graded out by a power substitution; rays are integrated
    to T = ray_cutoff * scale. Beyond T an algebraic tail x^e is mapped onto
    [0, 1] by x = T u^(2/(1+e)) and an exponential one goes to an
    infinite-range rule; a tail below tol is left out and its bound added
    to the error estimate.

    Raises:
        NonIntegrableEndpoint: a finite endpoint with e <= -1 or exponential blow-up
        TruncationError: a ray along which the integrand does not decay
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    limit = settings.quad_limit
    bound = f if isinstance(f, BoundIntegrand) else bind(f, gamma)

    total, err, pieces = 0j, 0.0, 0
    for i, seg in enumerate(bound.segments):
        if isinstance(seg, Ray):
            value, e, n = _ray_integral(bound, i, seg, tol, limit, settings.ray_cutoff)
        elif isinstance(seg, BypassArc):
            def h(theta, i=i, seg=seg):
                return bound.value(i, theta) * seg.velocity(theta)
            value, e = quad_complex(h, seg.lower, seg.upper, tol=tol, limit=limit)
            n = 1
        else:
            e_lo = _end_exponent(bound, seg, at_upper=False)
            e_hi = _end_exponent(bound, seg, at_upper=True)
            velocity = seg.velocity(0.0)

            def h(s, ds=0.0, i=i):
                return bound.value(i, s, ds) * velocity
            value, e = _interval(h, 0.0, 1.0, e_lo, e_hi, tol, limit)
            n = 1 if e_lo is None and e_hi is None else 2
        logger.debug("segment %s: %s (error %.3g)", seg, value, e)
        total += value
        err += e
        pieces += n

    if not (math.isfinite(total.real) and math.isfinite(total.imag)):
        raise TruncationError(f"the integral along {gamma.text} is not finite")
    status = Status.CONVERGED if err <= max(tol, 1e-9 * abs(total)) else Status.FAILED
    if status is Status.FAILED:
        logger.warning("quadrature along %s: error estimate %.3g", gamma.text, err)
    return SeriesResult(total, err, pieces, status)


# ---------------------------------------------------------------------------
# boundary terms

def _end_value(bound, at_end):
    segments = bound.segments
    i = len(segments) - 1 if at_end else 0
    seg = segments[i]
    s = seg.upper if at_end else seg.lower
    integrand = bound.integrand

    if math.isinf(s):
        if integrand.extra is None:
            exponent, growth = integrand.behaviour_at_infinity(seg.angle)
            if growth < 0 or (growth == 0 and exponent < 0):
                return 0j
            if growth > 0 or exponent > 0:
                return INFINITE
        cutoff = get_settings().ray_cutoff * max(1.0, abs(seg.origin))
        return bound.value(i, 1e6 * cutoff)

    p = seg.point(s)
    if p in integrand.singular_points():
        exponent, mode = integrand.endpoint_behaviour(p, seg.direction(at_end))
        if mode == 'flat':
            return 0j
        if mode == 'blows' or exponent < 0:
            return INFINITE
        if exponent > 0:
            return 0j
        inside = s + (-1e-9 if at_end else 1e-9) * (1 if seg.upper >= seg.lower else -1)
        return bound.value(i, inside)
    return bound.value(i, s)


def boundary_term(witness, contour):
    """
    The witness at the end of the contour minus its value at the start, with
    the branch tracked along the path. Zero for the contours a representation
    admits; infinite when the witness blows up at an end.
    """
    bound = bind(witness, contour)
    end = _end_value(bound, at_end=True)
    start = _end_value(bound, at_end=False)
    if math.isinf(abs(end)) or math.isinf(abs(start)):
        return INFINITE
    return end - start
