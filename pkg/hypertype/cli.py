"""
Command line front end.

    python -m hypertype eval 2f1 a=1 b=1 c=2 z=0.5
    python -m hypertype poly hermite n=3
    python -m hypertype suite all --tol 1e-8

Every subcommand builds a report dictionary carrying "schema": 1; --format
chooses between indented text and JSON. Exit codes: 0 on success, 1 when a
residual is above its tolerance, 2 on usage and domain errors.
"""
import argparse
import json
import logging
import math
import sys
from fractions import Fraction

import numpy as np

from .config import configure_logging, get_settings, use_settings
from .connection import CONNECTION_KINDS, connection_coeffs, degenerate_value, verify_connection
from .errors import HypertypeError, IrregularPoint, UsageError
from .families import CLASSICAL_NAMES, LIE_NAMES, Family, FamilyParams
from .numeric_core import Status, format_complex, parse_complex
from .operators import (
    HTOperator, balanced_form, canonical_data, classify, commutation_relations, divide, factorizations,
    indices, quadratic_roots, schrodinger_potential, verify_commutation, verify_factorization,
)
from .polynomials import (
    CROSS_FAMILY_IDENTITIES, PARAM_NAMES, POLYNOMIAL_SYMMETRIES, PolyFamily, classical_recurrences,
    cross_family_identities, family_polynomial, generating_function, generating_function_check, special_values,
    symmetry_identities, to_fraction, verify_recurrence,
)
from .recurrence import additional_recurrences, ladder, ladders, verify_ladder
from .representations import (
    gamma_identity_checks, list_representations, representation, representation_boundary_term, verify_representation,
)
from .series import (
    Normalization, SolutionKind, evaluate_expression, gegenbauer_solution, hyp0f1, hyp1f1, hyp2f0, hyp2f1,
    standard_solution,
)
from .suites import connection_sample, run_suites, sample_point, suite_names
from .symmetry import enumerate_group, kummer_expressions, kummer_table, verify_conjugation

logger = logging.getLogger(__name__)

SCHEMA = 1

SUBCOMMANDS = ('eval', 'classify', 'symmetries', 'kummer', 'ladder', 'poly', 'verify', 'quadcheck', 'suite')

VERIFY_TARGETS = ('connection', 'factorization', 'commutation', 'recurrence', 'identity', 'generating',
                  'degenerate', 'gamma')

# Lie parameters used when a checking command is given none
DEFAULT_LIE = {
    Family.HYP2F1: (0.31, -0.27, 0.18),
    Family.HYP1F1: (0.42, 0.37),
    Family.HYP2F0: (0.35, 0.22),
    Family.HYP0F1: (0.33,),
    Family.GEGENBAUER: (0.29, 0.41),
    Family.HERMITE: (0.23,),
}

# pass thresholds of the checking commands when --tol is not given
DEFAULT_CHECK_TOL = {
    'symmetries': 1e-10,
    'kummer': 1e-9,
    'ladder': 1e-9,
    'verify': 1e-8,
    'quadcheck': 1e-7,
}


class CliParser(argparse.ArgumentParser):
    """argparse that reports bad usage as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, help='Series tolerance for eval, pass threshold for checking commands')
    common.add_argument('--format', choices=('text', 'json'), default='text', help='Output format (default: text)')
    common.add_argument('--seed', type=int, help='Seed for random sampling (default: HYPERTYPE_SEED or 0)')
    common.add_argument('--max-terms', type=int, help='Series term bound (default: HYPERTYPE_MAX_TERMS)')
    common.add_argument('--log-level', type=str.upper, choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
                        help='Logging level (default: LOG_LEVEL)')
    return common


def build_parser():
    """The argument parser of every subcommand."""
    common = _common_flags()
    parser = CliParser(prog='hypertype', description='Hypergeometric type functions: evaluate, classify and verify.')
    sub = parser.add_subparsers(dest='command', metavar='subcommand', parser_class=CliParser)
    sub.required = True

    p = sub.add_parser('eval', parents=[common], help='Evaluate a series or standard solution')
    p.add_argument('family', help='2f1, 1f1, 2f0, 0f1, gegenbauer or hermite')
    p.add_argument('bindings', nargs='*', help='Parameters and the point: name=value ... z=value')
    p.add_argument('--norm', default='Plain', help='Plain, Bold, BoldI, BoldII or Bold0 (default: Plain)')
    p.add_argument('--kind', help='Standard solution, e.g. At1Index0 or 1f1:AtPlusInf')
    p.add_argument('--derivatives', type=int, default=0, help='Also report up to two derivatives')
    p.add_argument('--method', default='auto', choices=('auto', 'asymptotic', 'quadrature'), help='2f0 method')

    p = sub.add_parser('classify', parents=[common], help='Classify sigma f\'\' + tau f\' + eta f')
    p.add_argument('bindings', nargs='+', help='sigma=c0,c1,c2 tau=c0,c1 eta=c (lowest degree first)')

    p = sub.add_parser('symmetries', parents=[common], help='List the symmetry group of a family')
    p.add_argument('family')
    p.add_argument('bindings', nargs='*', help='Parameters for --verify')
    p.add_argument('--table', action='store_true', help='Include the composition table')
    p.add_argument('--verify', action='store_true', help='Check the operator conjugation of every element')

    p = sub.add_parser('kummer', parents=[common], help='The four expressions of a 2f1 standard solution')
    p.add_argument('kind', help='At0Index0, At0IndexAlpha, At1Index0, At1IndexBeta, AtInfA or AtInfB')
    p.add_argument('bindings', nargs='*', help='Parameters and z=value to evaluate the expressions')

    p = sub.add_parser('ladder', parents=[common], help='List or verify recurrence ladders')
    p.add_argument('family')
    p.add_argument('bindings', nargs='*', help='1-based ladder number (omit to list), parameters and z=value')
    p.add_argument('--additional', action='store_true', help='Index into the additional recurrences')

    p = sub.add_parser('poly', parents=[common], help='Exact coefficients of a classical polynomial')
    p.add_argument('family', help=', '.join(f.value for f in PolyFamily))
    p.add_argument('bindings', nargs='*', help='n=degree (or a bare integer), parameters, z=value')

    p = sub.add_parser('verify', parents=[common], help='Residual tables for identities')
    p.add_argument('target', choices=VERIFY_TARGETS)
    p.add_argument('tokens', nargs='*', help='Target name followed by name=value bindings')

    p = sub.add_parser('quadcheck', parents=[common], help='Integrate a contour representation')
    p.add_argument('rep_id', nargs='?', help='Representation id (omit to list)')
    p.add_argument('bindings', nargs='*', help='Parameters and z=value')
    p.add_argument('--contour', help='Contour in the bracket grammar, e.g. "[1, (z,0)^+, 1]"')
    p.add_argument('--radius-scale', type=float, default=1.0, help='Scale the default bypass radii')
    p.add_argument('--boundary', action='store_true', help='Also report the boundary term')

    p = sub.add_parser('suite', parents=[common], help='Run the randomized verification suites')
    p.add_argument('names', nargs='*', default=['all'], help=f"all or any of {', '.join(suite_names())}")
    p.add_argument('--workers', type=int, default=1, help='Worker threads (default: 1)')
    p.add_argument('--verbose', action='store_true', help='Report every case, not only failures')
    return parser


# ---------------------------------------------------------------------------
# argument helpers

def parse_bindings(tokens, bare='n'):
    """name=value tokens to a dict of parsed numbers; a bare integer is returned under `bare`."""
    out = {}
    for token in tokens:
        if '=' not in token:
            try:
                value = parse_complex(token)
            except HypertypeError:
                raise UsageError(f"expected name=value, got {token!r}") from None
            if not isinstance(value, int):
                raise UsageError(f"expected name=value, got {token!r}")
            name = bare
        else:
            name, _, text = token.partition('=')
            name = name.strip()
            value = parse_complex(text)
        if name in out:
            raise UsageError(f"{name} is given twice")
        out[name] = value
    return out


def _family_params(family, bindings, default=False):
    """FamilyParams from the bindings in either parameter system, or the defaults."""
    names = set(bindings)
    if not names and default:
        return FamilyParams.from_lie(family, *DEFAULT_LIE[family])
    unknown = names - set(CLASSICAL_NAMES[family]) - set(LIE_NAMES[family])
    if unknown:
        raise UsageError(f"{family.value} has no parameter(s) {', '.join(sorted(unknown))}; it takes "
                         f"{', '.join(CLASSICAL_NAMES[family])} or {', '.join(LIE_NAMES[family])}")
    return FamilyParams.from_mapping(family, bindings)


def _take(bindings, name, default=None, required=False):
    if name in bindings:
        return bindings.pop(name)
    if required:
        raise UsageError(f"{name}= is required")
    return default


def _coefficients(text):
    return [parse_complex(part) for part in str(text).split(',') if part.strip()]


def _check_tol(args):
    return DEFAULT_CHECK_TOL.get(args.command, 1e-9) if args.tol is None else args.tol


def _report(command, **fields):
    return {'schema': SCHEMA, 'command': command, **fields}


def _residual_of(diffop):
    """Largest coefficient of a residual operator; zero when the identity holds."""
    return max((abs(complex(c)) for poly in diffop.coeffs for c in poly.coeffs), default=0.0)


def _exact_or_complex(value):
    if isinstance(value, (int, Fraction)):
        return str(value)
    return format_complex(value)


# ---------------------------------------------------------------------------
# subcommands

def cmd_eval(args):
    family = Family.parse(args.family)
    bindings = parse_bindings(args.bindings)
    z = _take(bindings, 'z', required=True)
    params = _family_params(family, bindings)
    norm = Normalization.parse(args.norm)
    settings = get_settings()
    options = {'tol': settings.tol, 'max_terms': settings.max_terms, 'derivatives': args.derivatives}
    kind = None
    if args.kind:
        kind = SolutionKind.parse(args.kind, family)
        result = standard_solution(kind, params, z, norm, **options)
    elif family is Family.HYP2F1:
        result = hyp2f1(params, z, norm, **options)
    elif family is Family.HYP1F1:
        result = hyp1f1(params, z, norm, **options)
    elif family is Family.HYP0F1:
        result = hyp0f1(params, z, norm, **options)
    elif family is Family.HYP2F0:
        result = hyp2f0(params, z, norm, method=args.method, **options)
    elif family is Family.GEGENBAUER:
        result = gegenbauer_solution(params, z, norm, **options)
    else:
        kind = SolutionKind.HERMITE_EVEN
        result = standard_solution(kind, params, z, norm, **options)

    report = _report('eval', family=family.value, params=params.to_dict(), z=format_complex(z),
                     normalization=norm.value, kind=str(kind) if kind else None, **result.to_dict())
    if result.derivatives:
        report['derivatives'] = [format_complex(d) for d in result.derivatives]
    return (1 if result.status is Status.FAILED else 0), report


def _sigma_roots(sigma):
    """Distinct zeros of sigma, exact when they are rational."""
    if sigma.degree == 2:
        roots = quadratic_roots(divide(sigma[1], sigma[2]), divide(sigma[0], sigma[2]))
    elif sigma.degree == 1:
        roots = (divide(-sigma[0], sigma[1]),)
    else:
        return []
    return list(dict.fromkeys(roots))


def cmd_classify(args):
    bindings = {}
    for token in args.bindings:
        name, sep, text = token.partition('=')
        if not sep or name not in ('sigma', 'tau', 'eta'):
            raise UsageError(f"expected sigma=..., tau=... or eta=..., got {token!r}")
        bindings[name] = text
    missing = [n for n in ('sigma', 'tau', 'eta') if n not in bindings]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    op = HTOperator.of(_coefficients(bindings['sigma']), _coefficients(bindings['tau']), parse_complex(bindings['eta']))
    cls = classify(op)
    data = canonical_data(op)

    points = _sigma_roots(op.sigma)
    table = []
    for point in points + ['inf']:
        try:
            table.append(indices(op, point).to_dict())
        except IrregularPoint as e:
            table.append({'point': str(point), 'irregular': str(e)})

    report = _report('classify', operator=op.to_dict(), classification=cls.to_dict(),
                     kappa=data.kappa.to_list(), lam=str(data.lam), weight=str(data.weight),
                     balanced_form=str(balanced_form(op)), schrodinger_potential=repr(schrodinger_potential(op)),
                     indices=table)
    return 0, report


def cmd_symmetries(args):
    family = Family.parse(args.family)
    group = enumerate_group(family)
    report = _report('symmetries', **group.to_dict())
    code = 0
    if args.table:
        report['composition_table'] = group.composition_table()
    if args.verify:
        params = _family_params(family, parse_bindings(args.bindings), default=True)
        tol = _check_tol(args)
        residuals = [verify_conjugation(e, params)[0] for e in group.elements]
        report['params'] = params.to_dict()
        report['conjugation_residuals'] = residuals
        report['worst_residual'] = max(residuals)
        code = 1 if max(residuals) > tol else 0
    return code, report


def _kummer_kind(text):
    return SolutionKind.parse(text if ':' in text else f'2f1:{text}')


def cmd_kummer(args):
    kind = _kummer_kind(args.kind)
    rows = kummer_table(kind)
    report = _report('kummer', kind=str(kind), expressions=[str(e) for e in rows])
    bindings = parse_bindings(args.bindings)
    z = _take(bindings, 'z')
    if z is None:
        return 0, report
    params = _family_params(Family.HYP2F1, bindings, default=True)
    values = [evaluate_expression(e, z).value for e in kummer_expressions(kind, params)]
    spread = max(abs(u - v) for u in values for v in values) / max(1.0, max(abs(v) for v in values))
    report.update(params=params.to_dict(), z=format_complex(z), values=[format_complex(v) for v in values],
                  spread=spread)
    return (1 if spread > _check_tol(args) else 0), report


def cmd_ladder(args):
    family = Family.parse(args.family)
    bindings = parse_bindings(args.bindings, bare='index')
    index = _take(bindings, 'index')
    if index is None:
        report = _report('ladder', family=family.value,
                         ladders=[op.to_dict() for op in ladders(family)],
                         additional=[op.to_dict() for op in additional_recurrences(family)])
        return 0, report
    if args.additional:
        catalog = additional_recurrences(family)
        if not 1 <= index <= len(catalog):
            raise UsageError(f"{family.value} has additional recurrences 1..{len(catalog)}, not {index}")
        op = catalog[index - 1]
    else:
        op = ladder(family, index)
    z = _take(bindings, 'z', sample_point(family))
    params = _family_params(family, bindings, default=True)
    check = verify_ladder(op, params, z)
    report = _report('ladder', ladder=op.to_dict(), params=params.to_dict(), z=format_complex(z), **check.to_dict())
    return (0 if check.passed(_check_tol(args)) else 1), report


def _poly_params(family, bindings):
    names = PARAM_NAMES[family]
    unknown = set(bindings) - set(names)
    if unknown:
        raise UsageError(f"{family.value} takes parameters ({', '.join(names)}), not {', '.join(sorted(unknown))}")
    missing = [n for n in names if n not in bindings]
    if missing:
        raise UsageError(f"{family.value} needs {', '.join(missing)}")
    return tuple(to_fraction(bindings[n]) for n in names)


def cmd_poly(args):
    family = PolyFamily.parse(args.family)
    bindings = parse_bindings(args.bindings)
    n = _take(bindings, 'n', required=True)
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"n must be a nonnegative integer, got {n}")
    z = _take(bindings, 'z')
    params = _poly_params(family, bindings)
    result = family_polynomial(family, params, n)
    report = _report('poly', **result.to_dict())
    report['special_values'] = {k: {'expected': str(v['expected']), 'actual': str(v['actual'])}
                                for k, v in special_values(family, params, n).items()}
    if z is not None:
        value = result(z if isinstance(z, (int, Fraction)) else complex(z))
        report.update(z=_exact_or_complex(z), value=_exact_or_complex(value))
    return 0, report


# ---------------------------------------------------------------------------
# verify targets

def _verify_connection(tokens, seed):
    rows = []
    kinds = CONNECTION_KINDS
    bindings = {}
    if tokens:
        kinds = (SolutionKind.parse(tokens[0]),)
        bindings = parse_bindings(tokens[1:])
    rng = np.random.default_rng(seed)
    for kind in kinds:
        params, z = connection_sample(rng, kind)
        z = _take(dict(bindings), 'z', z)
        given = {k: v for k, v in bindings.items() if k != 'z'}
        if given:
            params = _family_params(kind.family, given)
        coeffs = connection_coeffs(kind, params)
        check = verify_connection(kind, params, z)
        rows.append({**coeffs.to_dict(), 'params': params.to_dict(), 'z': format_complex(z),
                     'residual': check.residual})
    return rows


def _verify_operator_catalog(target, tokens):
    if not tokens:
        raise UsageError(f"verify {target} needs a family")
    family = Family.parse(tokens[0])
    params = _family_params(family, parse_bindings(tokens[1:]), default=True)
    rows = []
    if target == 'factorization':
        for i in range(1, len(factorizations(params)) + 1):
            rows.append({'family': family.value, 'index': i, 'residual': _residual_of(verify_factorization(params, i))})
    else:
        for i, entry in enumerate(commutation_relations(family), start=1):
            rows.append({'family': family.value, 'index': i, 'operator': entry.label,
                         'residual': _residual_of(verify_commutation(family, i, params))})
    return rows


def _poly_target(tokens, what):
    if not tokens:
        raise UsageError(f"verify {what} needs a name")
    return tokens[0], parse_bindings(tokens[1:])


def _verify_polynomial(target, tokens):
    name, bindings = _poly_target(tokens, target)
    n = _take(bindings, 'n', 5)
    if target == 'recurrence':
        family = PolyFamily.parse(name)
        params = _poly_params(family, bindings)
        return [{'family': family.value, 'index': rec.index, 'operator': rec.label, 'additional': rec.additional,
                 'n': n, 'residual': str(verify_recurrence(family, rec.index, params, n))}
                for rec in classical_recurrences(family)]
    if target == 'identity':
        catalog = {e.id: (cross_family_identities, e) for e in CROSS_FAMILY_IDENTITIES}
        catalog.update({e.id: (symmetry_identities, e) for e in POLYNOMIAL_SYMMETRIES if e.id not in catalog})
        if name not in catalog:
            raise UsageError(f"Unknown identity {name!r}; expected one of {', '.join(catalog)}")
        run, entry = catalog[name]
        params = _poly_params(entry.family, bindings)
        return [{**entry.to_dict(), 'n': n, 'residual': str(run(name, params, n))}]
    # generating
    entry = generating_function(name)
    z = _take(bindings, 'z', Fraction(1, 3))
    t = _take(bindings, 't')
    params = _poly_params(entry.family, bindings)
    check = generating_function_check(name, params, n, z, t)
    return [{**entry.to_dict(), **check.to_dict()}]


def _verify_degenerate(tokens):
    if not tokens:
        raise UsageError("verify degenerate needs a family")
    family = Family.parse(tokens[0])
    bindings = parse_bindings(tokens[1:])
    z = _take(bindings, 'z', 0.35 + 0.2j)
    params = _family_params(family, bindings)
    check = degenerate_value(family, params, z)
    return [{'family': family.value, 'params': params.to_dict(), 'z': format_complex(z), **check.to_dict()}]


def cmd_verify(args):
    tol = _check_tol(args)
    target, tokens = args.target, list(args.tokens)
    exact = False
    if target == 'connection':
        rows = _verify_connection(tokens, get_settings().seed)
    elif target in ('factorization', 'commutation'):
        rows = _verify_operator_catalog(target, tokens)
    elif target in ('recurrence', 'identity', 'generating'):
        rows = _verify_polynomial(target, tokens)
        exact = True
    elif target == 'degenerate':
        rows = _verify_degenerate(tokens)
    else:
        rows = [check.to_dict() for check in gamma_identity_checks()]

    def failed(row):
        if exact:
            return Fraction(row.get('residual', row.get('mismatch', '0'))) != 0
        return row['residual'] > tol

    failures = sum(1 for row in rows if failed(row))
    report = _report('verify', target=target, tol=tol, rows=rows, failures=failures)
    return (1 if failures else 0), report


def cmd_quadcheck(args):
    if args.rep_id is None:
        return 0, _report('quadcheck', representations=[rep.to_dict() for rep in list_representations()])
    rep = representation(args.rep_id)
    bindings = parse_bindings(args.bindings)
    default_params, default_z = rep.default
    z = _take(bindings, 'z', default_z)
    params = {**default_params, **bindings}
    check = verify_representation(rep.id, params, z, contour=args.contour, radius_scale=args.radius_scale)
    report = _report('quadcheck', formula=rep.formula, **check.to_dict())
    if args.boundary and rep.witness is not None:
        report['boundary_term'] = format_complex(representation_boundary_term(rep.id, params, z, args.contour))
    return (0 if check.passed(_check_tol(args)) else 1), report


def cmd_suite(args):
    reports = run_suites(args.names, seed=get_settings().seed, tol=args.tol, workers=args.workers)
    summary = {
        'suites': len(reports),
        'cases': sum(r.cases for r in reports),
        'skipped': sum(r.skipped for r in reports),
        'failures': sum(len(r.failures) for r in reports),
    }
    report = _report('suite', seed=get_settings().seed, tol=args.tol,
                     suites=[r.to_dict(verbose=args.verbose) for r in reports], summary=summary)
    return (1 if summary['failures'] else 0), report


COMMANDS = {
    'eval': cmd_eval,
    'classify': cmd_classify,
    'symmetries': cmd_symmetries,
    'kummer': cmd_kummer,
    'ladder': cmd_ladder,
    'poly': cmd_poly,
    'verify': cmd_verify,
    'quadcheck': cmd_quadcheck,
    'suite': cmd_suite,
}


# ---------------------------------------------------------------------------
# output

def _json_default(value):
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return str(value)


def to_json(report):
    return json.dumps(report, indent=2, default=_json_default)


def to_text(value, indent=0):
    """Indented name: value lines."""
    pad = '  ' * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if key == 'schema':
                continue
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.append(to_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                body = to_text(item, indent + 1).lstrip()
                lines.append(f"{pad}- {body}")
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return '\n'.join(lines)


# ---------------------------------------------------------------------------
# entry points

def execute(argv):
    """
    Parse and run one command line.

    Returns:
        tuple: (exit code, report dict, output format)

    Raises:
        HypertypeError: usage, parse and domain errors
    """
    args = build_parser().parse_args(argv)
    settings = get_settings().replace(
        max_terms=args.max_terms,
        seed=args.seed,
        log_level=args.log_level,
        tol=args.tol if args.command == 'eval' else None,
    )
    if settings.max_terms <= 0:
        raise UsageError("--max-terms must be positive")
    if args.tol is not None and args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.log_level:
        logging.getLogger('hypertype').setLevel(args.log_level)
    previous = use_settings(settings)
    try:
        logger.info("running %s %s", args.command, ' '.join(str(a) for a in (argv or [])[1:]))
        code, report = COMMANDS[args.command](args)
    finally:
        use_settings(previous)
    return code, report, args.format


def main(argv=None):
    """Run the command line; returns the process exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    configure_logging()
    try:
        code, report, output_format = execute(argv)
    except HypertypeError as e:
        print(f"hypertype: {e.kind}: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        # exit code 1 is reserved for checks above tolerance
        logger.exception("unexpected error in %s", ' '.join(argv[:1]) or 'hypertype')
        print(f"hypertype: internal: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    print(to_json(report) if output_format == 'json' else to_text(report))
    return code


if __name__ == '__main__':
    sys.exit(main())
