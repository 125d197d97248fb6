"""
Session logging for verification campaigns and benchmarks.
Appends every command, grid, failure and summary to horadam_quat.log
"""
from horadam_quat.verify.config import DEFAULT_LOG_FILE, LOG_FILE_ENV
import logging
import os


class CampaignLogger:
    def __init__(self, log_file: str | None = None):
        if log_file is None:
            log_file = os.getenv(LOG_FILE_ENV, DEFAULT_LOG_FILE)
        self.log_file = log_file
        self.setup_logger()

    def setup_logger(self):
        """File handler in append mode; an empty path disables the file."""
        self.logger = logging.getLogger('horadam_quat.session')
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False
        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers = []
        if not self.log_file:
            self.logger.addHandler(logging.NullHandler())
            return
        file_handler = logging.FileHandler(self.log_file, mode='a', encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        formatter = logging.Formatter(
            '%(asctime)s | %(levelname)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        file_handler.setFormatter(formatter)
        self.logger.addHandler(file_handler)

    def close(self):
        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers = []

    def log_session_start(self):
        self.logger.info("=" * 80)
        self.logger.info("NEW SESSION STARTED")
        self.logger.info("=" * 80)

    def log_session_end(self, exit_code: int):
        self.logger.info("=" * 80)
        self.logger.info(f"SESSION ENDED (exit {exit_code})")
        self.logger.info("=" * 80 + "\n")

    def log_command(self, command: str, args: dict):
        self.logger.info(f"COMMAND: {command}")
        self.logger.debug(f"ARGS: {args}")

    def log_grid(self, identities: list[str], grid: dict[str, str], jobs: int):
        self.logger.info(f"GRID: {grid} | jobs={jobs}")
        self.logger.info(f"IDENTITIES: {', '.join(identities)}")

    def log_check_failure(self, identity: str, params: str, indices: tuple, lhs: str, rhs: str):
        self.logger.error(f"CHECK FAILED: {identity} at {params} indices={indices}")
        self.logger.error(f"  LHS: {lhs}")
        self.logger.error(f"  RHS: {rhs}")

    def log_convention_conflict(self, identity: str, note: str):
        self.logger.warning(f"CONVENTION [{identity}]: {note}")

    def log_summary(self, identity: str, counts: dict[str, int]):
        self.logger.info(f"SUMMARY [{identity}]: {counts}")

    def log_bench_row(self, method: str, n: int, seconds: float):
        self.logger.info(f"BENCH: {method} n={n} {seconds:.6f}s")

    def log_error(self, error: str):
        self.logger.error(f"ERROR: {error}")

    def log_info(self, message: str):
        self.logger.info(message)
