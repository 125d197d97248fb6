from horadam_quat.identities.views import IdentityReport, ReportRecord
from horadam_quat.verify.views import CampaignResult
from horadam_quat.quaternion.service import quat_to_json
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.arith.service import rat_format
from rich.console import Console
from rich.table import Table
import json
import csv
import sys

TABLE_HEADER = ['n', 'W', 'Q', 'Q0', 'Qi', 'Qj', 'Qk']
REPORT_HEADER = ['identity', 'p', 'q', 'a', 'b', 'indices', 'lhs', 'rhs', 'equal', 'flagged', 'notes']
BENCH_HEADER = ['method', 'n', 'seconds', 'F_bits', 'L_bits']


def csv_writer():
    return csv.writer(sys.stdout, lineterminator='\n')


def report_to_record(report: IdentityReport) -> ReportRecord:
    return ReportRecord(
        identity=report.identity,
        params=report.params.to_dict(),
        indices=list(report.indices),
        lhs=quat_to_json(report.lhs),
        rhs=quat_to_json(report.rhs),
        equal=report.equal,
        notes=report.notes,
        forms=report.forms,
    )


def report_to_json(report: IdentityReport) -> str:
    return report_to_record(report).model_dump_json()


def report_to_row(report: IdentityReport) -> list[str]:
    params = report.params.to_dict()
    return [report.identity, params['p'], params['q'], params['a'], params['b'],
            ' '.join(str(index) for index in report.indices), report.lhs.to_string(), report.rhs.to_string(),
            str(report.equal).lower(), str(report.flagged).lower(), ' | '.join(report.notes)]


def table_row(n: int, term, quaternion: Quaternion) -> list[str]:
    return [str(n), rat_format(term), quaternion.to_string(), *quat_to_json(quaternion)]


def table_record(n: int, term, quaternion: Quaternion) -> str:
    return json.dumps({'n': n, 'W': rat_format(term), 'Q': quat_to_json(quaternion)})


def render_sequence_table(rows: list[tuple], title: str, console: Console):
    table = Table(title=title)
    for column in ('n', 'W_n', 'Q_w,n'):
        table.add_column(column, justify='right' if column != 'Q_w,n' else 'left')
    for n, term, quaternion in rows:
        table.add_row(str(n), rat_format(term), quaternion.to_string())
    console.print(table)


def render_reports(reports: list[IdentityReport], title: str, console: Console):
    table = Table(title=title)
    for column in ('identity', 'params', 'indices', 'lhs', 'rhs', 'equal'):
        table.add_column(column)
    for report in reports:
        verdict = '[green]yes[/green]' if report.equal else '[bold red]no[/bold red]'
        table.add_row(report.identity, report.params.to_string(), str(report.indices),
                      report.lhs.to_string(), report.rhs.to_string(), verdict)
    console.print(table)


def render_summary(result: CampaignResult, console: Console):
    table = Table(title='Identity verification')
    for column in ('identity', 'passed', 'failed', 'skipped', 'flagged', 'errors'):
        table.add_column(column, justify='left' if column == 'identity' else 'right')
    for identity, tally in result.tallies.items():
        failed = f'[bold red]{tally.failed}[/bold red]' if tally.failed else '0'
        table.add_row(identity, str(tally.passed), failed, str(tally.skipped), str(tally.flagged), str(tally.errors))
    total = result.total()
    table.add_row('[bold]total[/bold]', str(total.passed), str(total.failed), str(total.skipped),
                  str(total.flagged), str(total.errors))
    console.print(table)
    if result.failures:
        render_reports(result.failures, 'Failing checks', console)
    for error in result.errors:
        console.print(f'[red]error:[/red] {error}')
    if result.notes:
        console.print('[bold yellow]Convention notes[/bold yellow] (sample per identity)')
        for identity, notes in result.notes.items():
            flagged = result.tallies[identity].flagged
            console.print(f'[yellow]{identity}[/yellow]: {flagged} report(s) flagged')
            for note in notes:
                console.print(f'  - {note}', highlight=False)


def render_bench(rows: list[dict], console: Console):
    table = Table(title='Fast doubling vs naive recurrence')
    for column in ('method', 'n', 'seconds', 'bits (F_n)'):
        table.add_column(column, justify='left' if column == 'method' else 'right')
    for row in rows:
        table.add_row(row['method'], str(row['n']), f"{row['seconds']:.6f}", str(row['F_bits']))
    console.print(table)


def bit_length(value) -> int:
    # terms near index 2^18 exceed the int-to-str digit limit
    return abs(getattr(value, 'numerator', value)).bit_length()
