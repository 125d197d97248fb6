from horadam_quat.cli.utils import (BENCH_HEADER, REPORT_HEADER, TABLE_HEADER, bit_length, csv_writer,
                                    render_bench, render_reports, render_sequence_table, render_summary,
                                    report_to_json, report_to_row, table_record, table_row)
from horadam_quat.verify.config import BENCH_REPEATS, BENCH_SIZES, HUMAN_REPORT_LIMIT, JOBS_ENV, OUTPUT_FORMATS
from horadam_quat.sequence.service import fast_double, horadam_term, naive_fib_lucas
from horadam_quat.horadam.service import build_context, qw_term
from horadam_quat.quaternion.service import quat_to_json
from horadam_quat.verify.performance import PerformanceMonitor
from horadam_quat.verify.views import IntRange, VerifyConfig
from horadam_quat.identities.views import IdentityReport
from horadam_quat.sequence.views import HoradamParams
from horadam_quat.verify.logger import CampaignLogger
from horadam_quat.verify.service import Campaign
from horadam_quat.arith.service import rat_format, rat_parse
from pydantic import ValidationError
from rich.console import Console
from termcolor import colored
from dotenv import load_dotenv
import argparse
import logging
import json
import sys
import os
import re

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)
logger.propagate = False
handler = logging.StreamHandler(sys.stderr)
formatter = logging.Formatter('%(message)s')
handler.setFormatter(formatter)
logger.addHandler(handler)

# flags whose value may legitimately start with '-'
VALUE_FLAGS = ('--p', '--q', '--a', '--b', '--n', '--idx', '--cross-idx')
_NEGATIVE_VALUE = re.compile(r'^-\d')


def normalise_argv(argv: list[str]) -> list[str]:
    """Rewrite '--p -3..3' as '--p=-3..3' so argparse does not read the value as an option."""
    normalised = []
    tokens = iter(argv)
    for token in tokens:
        if token in VALUE_FLAGS:
            value = next(tokens, None)
            if value is not None and _NEGATIVE_VALUE.match(value):
                normalised.append(f'{token}={value}')
                continue
            normalised.append(token)
            if value is not None:
                normalised.append(value)
            continue
        normalised.append(token)
    return normalised


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"expected n >= 0, got {value}")
    return value


def _default_jobs() -> int:
    value = os.getenv(JOBS_ENV)
    return int(value) if value else (os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='horadam-quat', description='Exact Horadam quaternion terms, tables, identity verification and benchmarks')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-file', default=None, help='Session log path ("" disables file logging)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    term = subparsers.add_parser('term', parents=[common], help='Print Q_{w,n} (or W_n with --scalar)')
    _add_params(term)
    term.add_argument('--n', type=int, required=True, help='Index (any integer)')
    term.add_argument('--scalar', action='store_true', help='Print the scalar W_n instead of the quaternion')
    term.add_argument('--format', choices=OUTPUT_FORMATS, default='human')

    table = subparsers.add_parser('table', parents=[common], help='Rows (n, W_n, Q_{w,n}) over an index range')
    _add_params(table)
    table.add_argument('--idx', type=IntRange.parse, default=IntRange(lo=0, hi=9), help='Index range lo..hi')
    table.add_argument('--format', choices=OUTPUT_FORMATS, default='csv')

    verify = subparsers.add_parser('verify', parents=[common], help='Check identities over a parameter grid')
    verify.add_argument('--id', dest='identities', action='append', default=None, help='Identity id (repeatable)')
    verify.add_argument('--all', action='store_true', help='Select every identity (the default)')
    for name in ('p', 'q', 'a', 'b', 'idx'):
        verify.add_argument(f'--{name}', type=IntRange.parse, default=None, help=f'{name} range lo..hi')
    verify.add_argument('--cross-idx', type=IntRange.parse, default=None, help='n, r, s range for cross-lucas-fib')
    verify.add_argument('--jobs', type=_positive_int, default=None,
                        help=f'Worker processes (default ${JOBS_ENV} or the CPU count)')
    verify.add_argument('--format', choices=OUTPUT_FORMATS, default='human')

    bench = subparsers.add_parser('bench', parents=[common], help='Time naive recurrence against fast doubling')
    bench.add_argument('--p', type=rat_parse, default=1)
    bench.add_argument('--q', type=rat_parse, default=1)
    bench.add_argument('--n', dest='sizes', type=_non_negative_int, action='append', default=None,
                       help='Index to time (repeatable, default 2^10, 2^14, 2^18)')
    bench.add_argument('--repeat', type=_positive_int, default=BENCH_REPEATS,
                       help='Timed runs per method, best one reported')
    bench.add_argument('--format', choices=OUTPUT_FORMATS, default='human')
    return parser


def _add_params(parser: argparse.ArgumentParser):
    parser.add_argument('--p', type=rat_parse, default=1, help='Recurrence coefficient p')
    parser.add_argument('--q', type=rat_parse, default=1, help='Recurrence coefficient q (nonzero)')
    parser.add_argument('--a', type=rat_parse, default=0, help='Seed W_0')
    parser.add_argument('--b', type=rat_parse, default=1, help='Seed W_1')


def cmd_term(args, session: CampaignLogger) -> int:
    params = HoradamParams(args.p, args.q, args.a, args.b)
    if args.scalar:
        value = horadam_term(params, args.n)
        text = rat_format(value)
        payload = json.dumps(text)
        csv_row = ['n', 'W'], [str(args.n), text]
    else:
        value = qw_term(build_context(params), args.n)
        text = value.to_string()
        payload = json.dumps(quat_to_json(value))
        csv_row = TABLE_HEADER, table_row(args.n, horadam_term(params, args.n), value)
    session.log_info(f"term {params.to_string()} n={args.n}: {text}")
    if args.format == 'json':
        print(payload)
    elif args.format == 'csv':
        writer = csv_writer()
        writer.writerows(csv_row)
    else:
        print(text)
    return 0


def cmd_table(args, session: CampaignLogger) -> int:
    params = HoradamParams(args.p, args.q, args.a, args.b)
    ctx = build_context(params)
    rows = [(n, horadam_term(params, n), qw_term(ctx, n)) for n in args.idx.values()]
    session.log_info(f"table {params.to_string()} idx={args.idx}: {len(rows)} rows")
    if args.format == 'csv':
        writer = csv_writer()
        writer.writerow(TABLE_HEADER)
        writer.writerows(table_row(*row) for row in rows)
    elif args.format == 'json':
        for row in rows:
            print(table_record(*row))
    else:
        render_sequence_table(rows, f'Horadam quaternions ({params.to_string()})', Console())
    return 0


def _verify_config(args) -> VerifyConfig:
    fields = {name: getattr(args, name) for name in ('p', 'q', 'a', 'b', 'idx', 'cross_idx')
              if getattr(args, name) is not None}
    if args.identities and not args.all:
        fields['identities'] = args.identities
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    return VerifyConfig(format=args.format, jobs=jobs, **fields)


def cmd_verify(args, session: CampaignLogger) -> int:
    config = _verify_config(args)
    grid = {name: str(getattr(config, name)) for name in ('p', 'q', 'a', 'b', 'idx')}
    grid['cross_idx'] = str(config.cross_idx) if config.cross_idx else 'clipped'
    session.log_grid(config.identities, grid, config.jobs)
    campaign = Campaign(config, session_logger=session)

    shown: list[IdentityReport] = []
    streamed = 0
    if config.format == 'json':
        sink = lambda report: print(report_to_json(report))
    elif config.format == 'csv':
        writer = csv_writer()
        writer.writerow(REPORT_HEADER)
        sink = lambda report: writer.writerow(report_to_row(report))
    else:
        def sink(report: IdentityReport):
            nonlocal streamed
            streamed += 1
            if len(shown) < HUMAN_REPORT_LIMIT:
                shown.append(report)

    result = campaign.run(sink)
    if config.format == 'json':
        print(json.dumps({'summary': result.summary()}))
    elif config.format == 'human':
        console = Console()
        # the full listing only when the whole campaign fits
        if streamed <= HUMAN_REPORT_LIMIT:
            render_reports(shown, 'Reports', console)
        render_summary(result, console)

    total = result.total()
    verdict = f"{total.passed} passed, {total.failed} failed, {total.skipped} skipped, {total.flagged} flagged in {result.elapsed:.2f}s"
    if result.exit_code == 0:
        logger.info(colored(f"[PASS] {verdict}", color='green'))
    else:
        logger.info(colored(f"[FAIL] {verdict}", color='red'))
    return result.exit_code


def cmd_bench(args, session: CampaignLogger) -> int:
    sizes = args.sizes or list(BENCH_SIZES)
    params = HoradamParams.fibonacci(args.p, args.q)
    monitor = PerformanceMonitor()
    rows = []
    for n in sizes:
        for _ in range(args.repeat):
            naive, _ = monitor.measure(f'naive:{n}', naive_fib_lucas, params.p, params.q, n)
            fast, _ = monitor.measure(f'fast-double:{n}', fast_double, params.p, params.q, n)
            if naive != fast:
                message = f"fast doubling disagrees with the recurrence at n={n} ({params.to_string()})"
                session.log_error(message)
                logger.error(colored(f"[FAIL] {message}", color='red'))
                return 1
        stats = monitor.get_stats()
        naive_time, fast_time = stats[f'naive:{n}']['min_time'], stats[f'fast-double:{n}']['min_time']
        for method, seconds in (('naive', naive_time), ('fast-double', fast_time)):
            session.log_bench_row(method, n, seconds)
            rows.append({'method': method, 'n': n, 'seconds': seconds,
                         'F_bits': bit_length(naive[0]), 'L_bits': bit_length(naive[1])})
        speedup = naive_time / fast_time if fast_time else float('inf')
        logger.info(colored(f"n={n}: fast doubling {speedup:.1f}x faster", color='cyan'))
    if args.format == 'json':
        for row in rows:
            print(json.dumps(row))
    elif args.format == 'csv':
        writer = csv_writer()
        writer.writerow(BENCH_HEADER)
        writer.writerows([row[column] for column in BENCH_HEADER] for row in rows)
    else:
        render_bench(rows, Console())
    return 0


COMMANDS = {'term': cmd_term, 'table': cmd_table, 'verify': cmd_verify, 'bench': cmd_bench}


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(normalise_argv(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else 2

    session = CampaignLogger(args.log_file)
    session.log_session_start()
    session.log_command(args.command, vars(args))
    try:
        exit_code = COMMANDS[args.command](args, session)
    except (ValueError, ZeroDivisionError, ValidationError) as error:
        message = _error_message(error)
        session.log_error(message)
        logger.error(colored(f"error: {message}", color='red'))
        exit_code = 2
    session.log_session_end(exit_code)
    session.close()
    return exit_code


def _error_message(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return '; '.join(f"{'.'.join(str(part) for part in issue['loc'])}: {issue['msg']}" for issue in error.errors())
    return str(error)


def main_entry():
    sys.exit(main())
