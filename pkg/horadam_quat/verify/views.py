from horadam_quat.verify.config import (CROSS_INDEX_WINDOW, DEFAULT_A_RANGE, DEFAULT_B_RANGE, DEFAULT_INDEX_RANGE,
                                        DEFAULT_P_RANGE, DEFAULT_Q_RANGE)
from pydantic import BaseModel, Field, field_validator
from dataclasses import dataclass, field
from typing import Literal
import re

_RANGE = re.compile(r'^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$')


class IntRange(BaseModel):
    '''Inclusive integer interval; lo > hi is the empty range.'''
    lo: int
    hi: int

    @classmethod
    def parse(cls, text: str) -> 'IntRange':
        """Accepts "lo..hi" or a single integer "n"."""
        match = _RANGE.match(text)
        if match is None:
            raise ValueError(f"invalid range '{text}', expected 'lo..hi' or an integer")
        lo, hi = match.groups()
        return cls(lo=int(lo), hi=int(hi if hi is not None else lo))

    @classmethod
    def of(cls, bounds: tuple[int, int]) -> 'IntRange':
        return cls(lo=bounds[0], hi=bounds[1])

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def clip(self, bounds: tuple[int, int]) -> 'IntRange':
        return IntRange(lo=max(self.lo, bounds[0]), hi=min(self.hi, bounds[1]))

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


def _all_identities() -> list[str]:
    from horadam_quat.identities.registry.service import registry
    return registry.identities


class VerifyConfig(BaseModel):
    identities: list[str] = Field(default_factory=_all_identities)
    p: IntRange = Field(default_factory=lambda: IntRange.of(DEFAULT_P_RANGE))
    q: IntRange = Field(default_factory=lambda: IntRange.of(DEFAULT_Q_RANGE))
    a: IntRange = Field(default_factory=lambda: IntRange.of(DEFAULT_A_RANGE))
    b: IntRange = Field(default_factory=lambda: IntRange.of(DEFAULT_B_RANGE))
    idx: IntRange = Field(default_factory=lambda: IntRange.of(DEFAULT_INDEX_RANGE))
    cross_idx: IntRange | None = None
    format: Literal['json', 'csv', 'human'] = 'human'
    jobs: int = Field(default=1, ge=1)

    @field_validator('identities')
    @classmethod
    def validate_identities(cls, identities: list[str]) -> list[str]:
        known = _all_identities()
        unknown = [identity for identity in identities if identity not in known]
        if unknown:
            raise ValueError(f"unknown identity ids: {', '.join(unknown)}")
        if not identities:
            raise ValueError("no identities selected")
        # registry order, duplicates removed
        return [identity for identity in known if identity in identities]

    @field_validator('q')
    @classmethod
    def validate_q(cls, q: IntRange) -> IntRange:
        if not any(value != 0 for value in q.values()):
            raise ValueError(f"q-range {q} contains no nonzero value")
        return q

    def cross_indices(self) -> range:
        """Index range for cross-lucas-fib: cross_idx when given, else idx clipped to the default window."""
        if self.cross_idx is not None:
            return self.cross_idx.values()
        return self.idx.clip(CROSS_INDEX_WINDOW).values()

    def q_values(self) -> list[int]:
        return [value for value in self.q.values() if value != 0]


@dataclass(frozen=True)
class CheckTask:
    '''One identity over all its index tuples at one parameter point.'''
    identity: str
    key: tuple[int, int, int, int]
    indices: tuple[tuple[int, ...], ...]


@dataclass
class TaskOutcome:
    identity: str
    key: tuple[int, int, int, int]
    reports: list = field(default_factory=list)
    errors: list[str] = field(default_factory=list)


@dataclass
class IdentityTally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    flagged: int = 0
    errors: int = 0

    def to_dict(self) -> dict[str, int]:
        return {'passed': self.passed, 'failed': self.failed, 'skipped': self.skipped,
                'flagged': self.flagged, 'errors': self.errors}


@dataclass
class CampaignResult:
    '''
    Aggregate of a campaign. Passing reports are streamed to the caller and not retained;
    failures are kept in full and convention notes as a bounded sample per identity.
    '''
    tallies: dict[str, IdentityTally] = field(default_factory=dict)
    failures: list = field(default_factory=list)
    notes: dict[str, list[str]] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def total(self) -> IdentityTally:
        total = IdentityTally()
        for tally in self.tallies.values():
            total.passed += tally.passed
            total.failed += tally.failed
            total.skipped += tally.skipped
            total.flagged += tally.flagged
            total.errors += tally.errors
        return total

    @property
    def exit_code(self) -> int:
        total = self.total()
        return 0 if total.failed == 0 and total.errors == 0 else 1

    def summary(self) -> dict:
        return {
            'total': self.total().to_dict(),
            'identities': {identity: tally.to_dict() for identity, tally in self.tallies.items()},
            'elapsed': round(self.elapsed, 3),
        }
