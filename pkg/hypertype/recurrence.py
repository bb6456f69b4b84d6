"""
Parameter ladders: first-order operators L with  L f_p = k(p) f_{p+s}.

The differential parts are the commutation catalog of the operators module
(L intertwines the equations for p and p+s); the right-hand coefficients k(p)
are stated against the normalization in which they are simplest for each
family, and convert_coefficient moves them to any other normalization.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable

from .errors import UsageError
from .families import HALF, Family
from .numeric_core import SeriesResult, Status
from .operators import DiffOp, commutation_relations, commutations
from .poly import Z
from .series import (
    Normalization, SolutionKind, hyp0f1, hyp1f1, hyp2f0, hyp2f1, normalization_factor, standard_solution,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LadderOperator:
    family: Family
    index: int
    label: str
    multiplier: str
    shift: tuple
    norm: Normalization
    build: Callable = field(repr=False, compare=False)
    coefficient: Callable = field(repr=False, compare=False)

    def operator(self, params):
        """The differential part p(z) d + q(z) at `params`."""
        return self.build(params)

    def rhs_coefficient(self, params):
        return self.coefficient(params)

    def to_dict(self):
        return {
            'family': self.family.value,
            'index': self.index,
            'operator': self.label,
            'multiplier': self.multiplier,
            'shift': list(self.shift),
            'normalization': self.norm.value,
        }


# ---------------------------------------------------------------------------
# right-hand coefficients, in the list order of the commutation catalog

def _coefficients_2f1(p):
    a, b, c = p.classical
    return [b, a - 1, c - b, c - a - 1, b, c - b, c - a - 1, a - 1, b, c - a - 1, c - b, a - 1]


def _coefficients_1f1(p):
    theta, alpha = p.lie
    return [
        (1 + theta + alpha) * HALF, 1, 1, (-1 + theta - alpha) * HALF,
        (1 + theta + alpha) * HALF, (1 - theta + alpha) * HALF,
    ]


def _coefficients_2f0(p):
    a, b = p.classical
    return [a, -1, 1, 1 - b, a, 1 - b]


def _coefficients_0f1(p):
    return [1, 1]


def _coefficients_gegenbauer(p):
    a, b = p.classical
    return [-HALF * a * b, -2, -b, -a, HALF * a * (a + 1), -2, HALF * b * (b + 1), -2]


def _coefficients_hermite(p):
    (lam,) = p.lie
    return [-(HALF + lam), -2, -2, HALF * (HALF + lam) * (3 * HALF + lam)]


_COEFFICIENTS = {
    Family.HYP2F1: _coefficients_2f1,
    Family.HYP1F1: _coefficients_1f1,
    Family.HYP2F0: _coefficients_2f0,
    Family.HYP0F1: _coefficients_0f1,
    Family.GEGENBAUER: _coefficients_gegenbauer,
    Family.HERMITE: _coefficients_hermite,
}

LADDER_NORMALIZATION = {
    Family.HYP2F1: Normalization.BOLD_I,
    Family.HYP1F1: Normalization.BOLD,
    Family.HYP2F0: Normalization.BOLD_I,
    Family.HYP0F1: Normalization.BOLD,
    Family.GEGENBAUER: Normalization.BOLD,
    Family.HERMITE: Normalization.PLAIN,
}


def ladders(family):
    """The basic recurrence relations of `family`, numbered from 1."""
    entries = commutation_relations(family)
    norm = LADDER_NORMALIZATION[family]
    out = []
    for i, entry in enumerate(entries):
        out.append(LadderOperator(
            family=family,
            index=i + 1,
            label=entry.label,
            multiplier=entry.multiplier,
            shift=entry.shift,
            norm=norm,
            build=lambda params, i=i: commutations(params)[i].operator,
            coefficient=lambda params, i=i: _COEFFICIENTS[params.family](params)[i],
        ))
    return out


def ladder(family, index):
    catalog = ladders(family)
    if not 1 <= index <= len(catalog):
        raise UsageError(f"{family.value} has ladders 1..{len(catalog)}, not {index}")
    return catalog[index - 1]


# ---------------------------------------------------------------------------
# additional recurrences: shifts of mu by 2 (2F1) and of alpha by 2 (2F0)

def _r_2f1(sign):
    def build(params):
        alpha, beta, mu = params.lie
        m = sign * mu
        s = alpha + beta
        k = (1 + s + m) * (-1 - alpha + beta - m) / 4
        top = (1 + s + m) * HALF
        return DiffOp.first_order(-(1 + m) * (Z - Z * Z), k + top * (m + 1) * Z)

    def coefficient(params):
        alpha, beta, mu = params.lie
        m = sign * mu
        return (1 + alpha + beta + m) * (-1 - alpha + beta - m) / 4

    return build, coefficient


def _r_2f0(sign):
    def build(params):
        a, b = params.classical
        _, alpha = params.lie
        top = a if sign > 0 else b
        return DiffOp.first_order((1 + sign * alpha) * Z * Z, (1 + sign * alpha) * top * Z - top)

    def coefficient(params):
        a, b = params.classical
        return -(a if sign > 0 else b)

    return build, coefficient


def additional_recurrences(family):
    """
    The recurrences outside the basic list: for 2F1 (on F / Gamma(c))

        (k + b(mu+1) z - (1+mu) z(1-z) d) F_{a,b,mu} = k F_{a,b,mu+2},
        k = (1+alpha+beta+mu)(-1-alpha+beta-mu)/4,

    and the same with mu -> -mu; for 2F0 (plain)

        ((1-alpha) z^2 d + (1-alpha) b z - b) F = -b F_{theta,alpha-2},
        ((1+alpha) z^2 d + (1+alpha) a z - a) F = -a F_{theta,alpha+2}.
    """
    if family is Family.HYP2F1:
        specs = [
            ('k + b(mu+1)z - (1+mu)z(1-z)d', (0, 0, 2), _r_2f1(1)),
            ('k\' + a(1-mu)z - (1-mu)z(1-z)d', (0, 0, -2), _r_2f1(-1)),
        ]
        norm = Normalization.BOLD
    elif family is Family.HYP2F0:
        specs = [
            ('(1-alpha)z^2 d + (1-alpha)bz - b', (0, -2), _r_2f0(-1)),
            ('(1+alpha)z^2 d + (1+alpha)az - a', (0, 2), _r_2f0(1)),
        ]
        norm = Normalization.PLAIN
    else:
        return []
    return [
        LadderOperator(family, i + 1, label, '1', shift, norm, build, coefficient)
        for i, (label, shift, (build, coefficient)) in enumerate(specs)
    ]


# ---------------------------------------------------------------------------
# evaluation

def ladder_function(family, params, z, norm, tol=None, derivatives=1):
    """The function a ladder acts on: the solution at 0 (2F1, 1F1, 0F1), the
    2F0 function, S at z = 1 (Gegenbauer) or S at +inf (Hermite)."""
    if family is Family.HYP2F1:
        return hyp2f1(params, z, norm, tol=tol, derivatives=derivatives)
    if family is Family.HYP1F1:
        return hyp1f1(params, z, norm, tol=tol, derivatives=derivatives)
    if family is Family.HYP0F1:
        return hyp0f1(params, z, norm, tol=tol, derivatives=derivatives)
    if family is Family.HYP2F0:
        return hyp2f0(params, z, norm, tol=tol, derivatives=derivatives)
    if family is Family.GEGENBAUER:
        return standard_solution(SolutionKind.GEGENBAUER_AT1_INDEX0, params, z, norm, tol=tol,
                                 derivatives=derivatives)
    return standard_solution(SolutionKind.HERMITE_AT_PLUS_INF, params, z, norm, tol=tol, derivatives=derivatives)


def apply_ladder(op, params, z, tol=None):
    """
    The left-hand side  L f_p  at z, with f' from termwise differentiation.

    Its contract is  L f_p = op.rhs_coefficient(params) * f_{p+shift}  in op.norm.
    """
    if params.family is not op.family:
        raise UsageError(f"{op.family.value} ladder applied to {params.family.value} parameters")
    f = ladder_function(op.family, params, z, op.norm, tol=tol, derivatives=1)
    L = op.operator(params)
    z = complex(z)
    value = L.evaluate(z, (f.value, f.derivatives[0]))
    scale = abs(L[1](z)) + abs(L[0](z))
    return SeriesResult(complex(value), f.err_estimate * max(scale, 1.0), f.terms_used, f.status)


@dataclass(frozen=True)
class LadderCheck:
    lhs: complex
    rhs: complex
    residual: float
    status: Status

    def passed(self, tol):
        return self.residual <= tol

    def to_dict(self):
        return {'lhs': str(self.lhs), 'rhs': str(self.rhs), 'residual': self.residual, 'status': self.status.value}


def verify_ladder(op, params, z, tol=None):
    """Compare both sides of a ladder identity at z; the residual is relative to max(1, |rhs|)."""
    lhs = apply_ladder(op, params, z, tol=tol)
    target = ladder_function(op.family, params.shifted(op.shift), z, op.norm, tol=tol, derivatives=0)
    rhs = complex(op.rhs_coefficient(params)) * target.value
    residual = abs(lhs.value - rhs) / max(1.0, abs(rhs))
    status = Status.FAILED if Status.FAILED in (lhs.status, target.status) else lhs.status
    logger.debug("ladder %s #%d at %s: residual %.3g", op.family.value, op.index, params, residual)
    return LadderCheck(lhs.value, rhs, residual, status)


def convert_coefficient(op, params, norm):
    """
    The right-hand coefficient of `op` when both sides use `norm`:
    k_B = k_A * (B_p / A_p) * (A_{p+s} / B_{p+s}).
    """
    family = op.family
    target = params.shifted(op.shift)
    ratio = (normalization_factor(family, params, norm) / normalization_factor(family, params, op.norm)
             * normalization_factor(family, target, op.norm) / normalization_factor(family, target, norm))
    return complex(op.rhs_coefficient(params)) * ratio


def inverse_ladder(op):
    """The basic ladder of the same family with the opposite shift."""
    for candidate in ladders(op.family):
        if tuple(-s for s in candidate.shift) == tuple(op.shift):
            return candidate
    raise UsageError(f"no ladder of {op.family.value} undoes shift {op.shift}")


def round_trip(op, params, z, tol=None):
    """
    (L' L f_p, k(p) k'(p+s) f_p) for the ladder L and its inverse L'.
    """
    back = inverse_ladder(op)
    composed = back.operator(params.shifted(op.shift)) @ op.operator(params)
    f = ladder_function(op.family, params, z, op.norm, tol=tol, derivatives=2)
    lhs = composed.evaluate(complex(z), (f.value,) + f.derivatives)
    k = complex(op.rhs_coefficient(params)) * complex(back.rhs_coefficient(params.shifted(op.shift)))
    return complex(lhs), k * f.value
