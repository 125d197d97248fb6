from horadam_quat.sequence.views import HoradamParams
from horadam_quat.quaternion.views import Quaternion
from pydantic import BaseModel, Field
from dataclasses import dataclass, field
from typing import Literal, Union

IdentityId = Literal[
    'lemma1-ab', 'lemma1-ba', 'lemma1-sum',
    'catalan', 'cassini', 'docagne', 'commutator-adjacent', 'cross-lucas-fib',
    'lemma2-alpha', 'lemma2-beta',
    'square-diff', 'square-diff-scaled', 'square-root-sum',
    'mixed-commutator', 'mixed-commutator-diag',
    'binet-recurrence', 'fib-negative-index', 'fib-square', 'fib-double', 'root-power',
]


@dataclass
class IdentityReport:
    '''
    Outcome of one identity check at one grid point.

    lhs/rhs are rational quaternions when both sides are rational, otherwise both are lifted
    into Quaternion<QuadExt> over Q(√D) of the parameters. equal is exact componentwise
    equality (plus a vanishing √D part when the identity is rational-valued).
    forms maps alternative right-hand sides (proof intermediates, printed variants) to
    whether they agree with the lhs.
    '''
    identity: IdentityId
    params: HoradamParams
    indices: tuple[int, ...]
    lhs: Quaternion
    rhs: Quaternion
    equal: bool
    notes: list[str] = field(default_factory=list)
    forms: dict[str, bool] = field(default_factory=dict)

    @property
    def flagged(self) -> bool:
        return not all(self.forms.values())

    def sort_key(self) -> tuple:
        return (self.identity, self.params.key(), self.indices)


class QuadExtRecord(BaseModel):
    rat: str
    irr: str
    D: Union[int, str]


class ReportRecord(BaseModel):
    '''JSON shape of an IdentityReport.'''
    identity: str
    params: dict[str, str]
    indices: list[int]
    lhs: list[Union[str, QuadExtRecord]] = Field(min_length=4, max_length=4)
    rhs: list[Union[str, QuadExtRecord]] = Field(min_length=4, max_length=4)
    equal: bool
    notes: list[str] = Field(default_factory=list)
    forms: dict[str, bool] = Field(default_factory=dict)
