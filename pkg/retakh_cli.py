"""
Command line front end for restricted Dyck paths (peaks on level 1 or on
even levels only).

Examples:
`python retakh_cli.py count --semilength 4`
`python retakh_cli.py enumerate --semilength 3 --stats`
`python retakh_cli.py height --semilength 5`
`python retakh_cli.py leaves --semilength 5`
`python retakh_cli.py series --which M --order 10`
`python retakh_cli.py verify --level quick`

Every command prints a record {"command", "parameters", "payload"} on
stdout, as JSON by default. Exact rationals are "p/q" strings, real values
carry 12 significant digits. The exit code is 0 on success, 1 when a check
or a cross validation fails and 2 on usage, configuration or budget errors.
"""
import sys
import argparse

from retakh import constants
from retakh import common_utils
from retakh import gf_utils
from retakh import path_utils
from retakh import report_utils
from retakh import verify_utils
from retakh.errors import ConsistencyError, DomainError, RetakhError


def _exact_int(value, what):
    value = common_utils.format_exact(value)
    if '/' in value:
        raise ConsistencyError('{} is not an integer: {}'.format(what, value))
    return int(value)


def cmd_count(args):
    n = args['semilength']
    if n < 0:
        raise DomainError('Semilength must be non negative, got {}'.format(n))
    budget = common_utils.resolve_budget(args['budget'])
    order = common_utils.resolve_order(args['order'])

    method = args['method']
    if method is None:
        method = 'both' if n <= budget else 'gf'

    methods = {}
    if method in ('brute', 'both'):
        methods['brute'] = path_utils.count_restricted(
            n,
            processes=args['processes'],
            prefix_depth=args['prefix_depth'],
            budget=budget
        )
    if method in ('gf', 'both'):
        if n <= order:
            methods['gf'] = _exact_int(gf_utils.motzkin_series(n).coeff(n), 'M_{}'.format(n))
        else:
            methods['gf'] = gf_utils.motzkin_number(n)

    if len(set(methods.values())) > 1:
        raise ConsistencyError('Counting methods disagree at semilength {}: {}'.format(n, methods))

    return report_utils.OutputRecord(
        command='count',
        parameters={'semilength': n, 'method': method},
        payload={'count': next(iter(methods.values())), 'methods': methods}
    ), 0


def cmd_enumerate(args):
    n = args['semilength']
    path_utils.check_semilength(n, budget=args['budget'])

    # listed as plain strings, so D sorts before U
    words = sorted(path_utils.enumerate_words(n))
    payload = {'count': len(words), 'paths': words}
    table = [{'path': w} for w in words]

    if args['stats']:
        table = []
        for w in words:
            path = path_utils.DyckPath.from_string(w)
            path_stats = path_utils.stats(path)
            table.append({
                'path': w,
                'height': path_stats.height,
                'peaks': [list(p) for p in path_stats.peaks],
                'leaves': path_stats.leaf_count,
                'tree': path_utils.path_to_tree(path).to_parentheses()
            })
        payload['stats'] = table

    return report_utils.OutputRecord(
        command='enumerate',
        parameters={'semilength': n, 'stats': args['stats']},
        payload=payload,
        table=table
    ), 0


def cmd_height(args):
    n = args['semilength']
    report = gf_utils.avg_height_exact(n, order=args['order'], budget=args['budget'])

    histogram = None
    if report.oracle_checked:
        histogram = path_utils.height_histogram(n, budget=args['budget'])

    return report_utils.OutputRecord(
        command='height',
        parameters={'semilength': n},
        payload=report_utils.height_payload(report, histogram)
    ), 0


def cmd_leaves(args):
    n = args['semilength']
    report = gf_utils.avg_leaves_exact(n, order=args['order'], budget=args['budget'])

    return report_utils.OutputRecord(
        command='leaves',
        parameters={'semilength': n},
        payload=report_utils.leaves_payload(report)
    ), 0


def cmd_series(args):
    which = args['which']
    order = args['series_order']
    if order is None:
        order = common_utils.resolve_order(args['order'])

    if which == 'M':
        series = gf_utils.motzkin_series(order)
    elif which == 'v':
        series = gf_utils.v_series(order)
    elif which == 'F':
        series = gf_utils.solve_fg(order)[0]
    elif which == 'G':
        series = gf_utils.solve_fg(order)[1]
    elif which == 'S':
        series = gf_utils.height_numerator_series(order)
    else:
        series = gf_utils.leaves_numerator(order)

    payload = report_utils.series_payload(series, constants.human_mapping[which])
    return report_utils.OutputRecord(
        command='series',
        parameters={'which': which, 'order': order},
        payload=payload,
        table=[{'n': i, 'coefficient': c} for i, c in enumerate(payload['coefficients'])]
    ), 0


def cmd_verify(args):
    level = args['level']
    results = verify_utils.run_checks(level)
    passed = all(r.passed for r in results)

    for r in results:
        if not r.passed:
            print('FAILED {}: {}'.format(r.name, r.detail), file=sys.stderr)

    rows = [r.to_row() for r in results]
    return report_utils.OutputRecord(
        command='verify',
        parameters={'level': level},
        payload={'passed': passed, 'checks': rows},
        table=rows
    ), 0 if passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        description='Restricted Dyck paths: counting, distributions and identity checks.',
        epilog='The exhaustive budget and the default series order can also be set with the '
               '{} and {} environment variables; the flags take precedence.'.format(
                   constants.BUDGET_ENV_VAR, constants.ORDER_ENV_VAR)
    )
    parser.add_argument(
        '-f', '--format',
        help='Output format',
        choices=constants.possible_formats,
        default='json'
    )
    parser.add_argument(
        '--budget',
        help='Largest semilength for exhaustive enumeration (default {})'.format(constants.DEFAULT_BUDGET),
        type=int,
        default=None
    )
    parser.add_argument(
        '--order',
        help='Default truncation order of the series (default {})'.format(constants.DEFAULT_ORDER),
        type=int,
        default=None
    )
    parser.add_argument(
        '--meta',
        help='Add environment information next to the payload',
        action='store_true'
    )
    parser.add_argument(
        '-v', '--verbose',
        help='Print progress and timings on stderr',
        action='store_true'
    )

    subparsers = parser.add_subparsers(dest='command', required=True)

    sub = subparsers.add_parser('count', help='Number of restricted paths of a semilength')
    sub.add_argument('-n', '--semilength', type=int, required=True)
    sub.add_argument(
        '-m', '--method',
        help='Counting method, both methods within the budget and gf beyond it by default',
        choices=constants.possible_count_methods,
        default=None
    )
    sub.add_argument('-p', '--processes', type=int, default=1, help='Worker processes for brute force')
    sub.add_argument(
        '--prefix-depth',
        dest='prefix_depth',
        type=int,
        default=constants.DEFAULT_PREFIX_DEPTH,
        help='Length of the path prefixes dealt to the workers'
    )
    sub.set_defaults(handler=cmd_count)

    sub = subparsers.add_parser('enumerate', help='List the restricted paths of a semilength')
    sub.add_argument('-n', '--semilength', type=int, required=True)
    sub.add_argument('--stats', help='Add height, peaks, leaves and tree per path', action='store_true')
    sub.set_defaults(handler=cmd_enumerate)

    sub = subparsers.add_parser('height', help='Exact and asymptotic average height')
    sub.add_argument('-n', '--semilength', type=int, required=True)
    sub.set_defaults(handler=cmd_height)

    sub = subparsers.add_parser('leaves', help='Exact and asymptotic average number of leaves')
    sub.add_argument('-n', '--semilength', type=int, required=True)
    sub.set_defaults(handler=cmd_leaves)

    sub = subparsers.add_parser('series', help='Coefficients of a generating function')
    sub.add_argument('-w', '--which', choices=constants.possible_series, required=True)
    sub.add_argument('-o', '--order', dest='series_order', type=int, default=None)
    sub.set_defaults(handler=cmd_series)

    sub = subparsers.add_parser('verify', help='Run the identity checks')
    sub.add_argument('-l', '--level', choices=constants.possible_verify_levels, default='quick')
    sub.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    """ Run one command.

    :param argv: (list) command line arguments, sys.argv[1:] if None
    :return: (int) exit code
    """

    parser = build_parser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    # Unwrap arguments
    args = vars(arguments)
    if args['verbose']:
        constants.VERBOSE = True

    try:
        record, code = args['handler'](args)
    except ConsistencyError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 1
    except RetakhError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 2

    if args['meta']:
        record.meta = report_utils.environment_meta()
    report_utils.emit(record, args['format'])
    return code


if __name__ == '__main__':
    sys.exit(main())
