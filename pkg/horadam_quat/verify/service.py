from horadam_quat.verify.views import CampaignResult, CheckTask, IdentityTally, TaskOutcome, VerifyConfig
from horadam_quat.verify.config import NOTE_SAMPLE_SIZE, POOL_CHUNKSIZE
from horadam_quat.identities.registry.service import registry
from horadam_quat.verify.performance import PerformanceMonitor
from horadam_quat.identities.views import IdentityReport
from horadam_quat.verify.logger import CampaignLogger
from horadam_quat.sequence.views import HoradamParams
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator
from itertools import product
import logging

logger = logging.getLogger(__name__)

ReportSink = Callable[[IdentityReport], None]


def is_degenerate(p: int, q: int) -> bool:
    """p² + 4q = 0 means a double root; such grid points are skipped."""
    return p * p + 4 * q == 0


def run_task(task: CheckTask) -> TaskOutcome:
    '''Worker entry point: every index tuple of one identity at one parameter point.'''
    params = HoradamParams(*task.key)
    outcome = TaskOutcome(identity=task.identity, key=task.key)
    for indices in task.indices:
        result = registry.execute(task.identity, params, indices)
        if result.error is not None:
            outcome.errors.append(f"{task.identity} at {params.to_string()} indices={indices}: {result.error}")
        outcome.reports.extend(result.reports)
    return outcome


class Campaign:
    def __init__(self, config: VerifyConfig, session_logger: CampaignLogger | None = None):
        self.config = config
        self.session_logger = session_logger
        self.performance_monitor = PerformanceMonitor()

    def grid_keys(self, scope: str) -> Iterator[tuple[int, int, int, int]]:
        """Parameter tuples in sorted order; (p,q)-only identities use the seeds a=0, b=1."""
        config = self.config
        if scope == 'pq':
            for p, q in product(config.p.values(), config.q_values()):
                yield (p, q, 0, 1)
        else:
            yield from product(config.p.values(), config.q_values(), config.a.values(), config.b.values())

    def plan(self) -> tuple[list[CheckTask], dict[str, int]]:
        """Tasks in deterministic order, plus the number of skipped checks per identity."""
        tasks, skipped = [], {}
        for identity in self.config.identities:
            checker = registry.get(identity)
            indices = tuple(registry.index_tuples(identity, self.config.idx.values(), self.config.cross_indices()))
            skipped[identity] = 0
            for key in self.grid_keys(checker.scope):
                if is_degenerate(key[0], key[1]):
                    skipped[identity] += len(indices)
                    continue
                if indices:
                    tasks.append(CheckTask(identity=identity, key=key, indices=indices))
        return tasks, skipped

    def _outcomes(self, tasks: list[CheckTask]) -> Iterator[TaskOutcome]:
        if self.config.jobs == 1 or len(tasks) <= 1:
            yield from map(run_task, tasks)
            return
        # map keeps task order, so output does not depend on scheduling
        with ProcessPoolExecutor(max_workers=self.config.jobs) as executor:
            yield from executor.map(run_task, tasks, chunksize=POOL_CHUNKSIZE)

    def run(self, sink: ReportSink | None = None) -> CampaignResult:
        tasks, skipped = self.plan()
        result = CampaignResult(tallies={identity: IdentityTally(skipped=count) for identity, count in skipped.items()})
        logger.info(f"running {len(tasks)} tasks over {len(self.config.identities)} identities with {self.config.jobs} job(s)")
        self.performance_monitor.start_timer('verify')
        for outcome in self._outcomes(tasks):
            tally = result.tallies[outcome.identity]
            for report in outcome.reports:
                self._record(result, tally, report)
                if sink is not None:
                    sink(report)
            for error in outcome.errors:
                tally.errors += 1
                result.errors.append(error)
                if self.session_logger:
                    self.session_logger.log_error(error)
        result.elapsed = self.performance_monitor.end_timer('verify')
        if self.session_logger:
            for identity, tally in result.tallies.items():
                self.session_logger.log_summary(identity, tally.to_dict())
        return result

    def _record(self, result: CampaignResult, tally: IdentityTally, report: IdentityReport):
        if report.equal:
            tally.passed += 1
        else:
            tally.failed += 1
            result.failures.append(report)
            if self.session_logger:
                self.session_logger.log_check_failure(report.identity, report.params.to_string(), report.indices,
                                                      report.lhs.to_string(), report.rhs.to_string())
        if report.flagged:
            tally.flagged += 1
            sample = result.notes.setdefault(report.identity, [])
            if len(sample) < NOTE_SAMPLE_SIZE:
                sample.extend(report.notes[:NOTE_SAMPLE_SIZE - len(sample)])
                if self.session_logger:
                    for note in report.notes:
                        self.session_logger.log_convention_conflict(report.identity, note)


def run_campaign(config: VerifyConfig, sink: ReportSink | None = None,
                 session_logger: CampaignLogger | None = None) -> CampaignResult:
    return Campaign(config, session_logger=session_logger).run(sink)
