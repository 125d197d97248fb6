"""
Wall-clock timing for benchmark methods and campaign phases
"""
from collections import defaultdict
from typing import Any, Callable
import time


class PerformanceMonitor:
    def __init__(self):
        self.metrics = defaultdict(list)
        self.start_times = {}

    def start_timer(self, operation: str):
        self.start_times[operation] = time.perf_counter()

    def end_timer(self, operation: str) -> float:
        """Record and return the elapsed seconds; 0 when the timer was never started."""
        if operation not in self.start_times:
            return 0.0
        duration = time.perf_counter() - self.start_times.pop(operation)
        self.metrics[operation].append(duration)
        return duration

    def measure(self, operation: str, function: Callable, *args, **kwargs) -> tuple[Any, float]:
        self.start_timer(operation)
        try:
            result = function(*args, **kwargs)
        finally:
            duration = self.end_timer(operation)
        return result, duration

    def get_stats(self) -> dict[str, dict[str, float]]:
        """Per operation: run count, total, mean and best/worst seconds."""
        stats = {}
        for operation, durations in self.metrics.items():
            if durations:
                stats[operation] = {
                    'count': len(durations),
                    'total_time': sum(durations),
                    'avg_time': sum(durations) / len(durations),
                    'min_time': min(durations),
                    'max_time': max(durations),
                }
        return stats
