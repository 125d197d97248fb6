from horadam_quat.identities.registry.views import Checker, CheckOutcome
from horadam_quat.identities.views import IdentityId
from horadam_quat.sequence.views import HoradamParams
from horadam_quat.identities import service as checks
from itertools import product
from textwrap import dedent


class IdentityRegistry:
    def __init__(self, checkers: list[Checker]):
        self.checkers = checkers
        self.checkers_registry = self.registry()

    def registry(self) -> dict[str, Checker]:
        return {checker.identity: checker for checker in self.checkers}

    @property
    def identities(self) -> list[IdentityId]:
        return [checker.identity for checker in self.checkers]

    def get(self, identity: str) -> Checker:
        checker = self.checkers_registry.get(identity)
        if checker is None:
            raise ValueError(f"unknown identity '{identity}', expected one of {', '.join(self.identities)}")
        return checker

    def describe(self, identity: str) -> str:
        checker = self.get(identity)
        return dedent(f"""
        Identity: {checker.identity}
        Description: {checker.description}
        Indices: {checker.arity} ({checker.scope})
        """)

    def index_tuples(self, identity: str, indices: range, cross_indices: range | None = None) -> list[tuple[int, ...]]:
        '''
        Every index tuple the identity is checked at.

        cross-lucas-fib draws n, r, s from cross_indices (falls back to indices); root-power
        drops indices below its minimum.
        '''
        checker = self.get(identity)
        if checker.identity == 'cross-lucas-fib' and cross_indices is not None:
            indices = cross_indices
        if checker.min_index is not None:
            indices = [index for index in indices if index >= checker.min_index]
        return list(product(indices, repeat=checker.arity))

    def execute(self, identity: str, params: HoradamParams, indices: tuple[int, ...] = ()) -> CheckOutcome:
        checker = self.checkers_registry.get(identity)
        if checker is None:
            return CheckOutcome(is_success=False, error=f"Identity '{identity}' not found.")
        if len(indices) != checker.arity:
            return CheckOutcome(is_success=False, error=f"'{identity}' takes {checker.arity} indices, got {len(indices)}.")
        try:
            if checker.scope == 'pq':
                report = checker.function(params.p, params.q, *indices)
            else:
                report = checker.function(params, *indices)
            return CheckOutcome(is_success=report.equal, reports=[report])
        except Exception as error:
            return CheckOutcome(is_success=False, error=f"{type(error).__name__}: {error}")


registry = IdentityRegistry([
    Checker(identity='lemma1-ab', description='alpha_bar*beta_bar = Q_L0 - [q] - q*Delta*omega',
            function=checks.lemma1_ab_check, arity=0, scope='pq'),
    Checker(identity='lemma1-ba', description='beta_bar*alpha_bar = Q_L0 - [q] + q*Delta*omega',
            function=checks.lemma1_ba_check, arity=0, scope='pq'),
    Checker(identity='lemma1-sum', description='alpha_bar*beta_bar + beta_bar*alpha_bar = 2(Q_L0 - [q])',
            function=checks.lemma1_sum_check, arity=0, scope='pq'),
    Checker(identity='catalan', description='Catalan identity Q_m² - Q_{m+n}Q_{m-n} at (m, n)',
            function=checks.catalan_check, arity=2, scope='params'),
    Checker(identity='cassini', description='Cassini identity Q_m² - Q_{m+1}Q_{m-1} at m',
            function=checks.cassini_check, arity=1, scope='params'),
    Checker(identity='docagne', description="d'Ocagne identity Q_nQ_{m+1} - Q_{n+1}Q_m at (n, m)",
            function=checks.docagne_check, arity=2, scope='params'),
    Checker(identity='commutator-adjacent', description='Q_nQ_{n+1} - Q_{n+1}Q_n = 2(-q)^(n+1) AB omega',
            function=checks.commutator_adjacent_check, arity=1, scope='params'),
    Checker(identity='cross-lucas-fib', description='Q_{L,n+r}Q_{F,n+s} - Q_{L,n+s}Q_{F,n+r} at (n, r, s)',
            function=checks.cross_lucas_fib_check, arity=3, scope='pq'),
    Checker(identity='lemma2-alpha', description='alpha_bar² = (Q_L0 - r) + Delta(Q_F0 - s)',
            function=checks.lemma2_alpha_check, arity=0, scope='pq'),
    Checker(identity='lemma2-beta', description='beta_bar² = (Q_L0 - r) - Delta(Q_F0 - s)',
            function=checks.lemma2_beta_check, arity=0, scope='pq'),
    Checker(identity='square-diff', description='Q_{L,n}² - Q_{F,n}² closed form',
            function=checks.square_diff_check, arity=1, scope='pq'),
    Checker(identity='square-diff-scaled', description='D(Q_{L,n}² - Q_{F,n}²) through alpha_bar², beta_bar²',
            function=checks.square_diff_scaled_check, arity=1, scope='pq'),
    Checker(identity='square-root-sum', description='alpha_bar²alpha^2n + beta_bar²beta^2n expansion',
            function=checks.square_root_sum_check, arity=1, scope='pq'),
    Checker(identity='mixed-commutator', description='Q_{F,n}Q_{w,m} - Q_{w,m}Q_{F,n} = 2(-q)^(n+1) omega W_{m-n}',
            function=checks.mixed_commutator_check, arity=2, scope='params'),
    Checker(identity='mixed-commutator-diag', description='Q_{F,n}Q_{w,n} - Q_{w,n}Q_{F,n} = 2(-q)^(n+1) a omega',
            function=checks.mixed_commutator_diag_check, arity=1, scope='params'),
    Checker(identity='binet-recurrence', description='Q_{w,n} by recurrence equals the quaternion Binet formula',
            function=checks.binet_recurrence_check, arity=1, scope='params'),
    Checker(identity='fib-negative-index', description='F_{-n} = -(-q)^(-n) F_n, printed -(-q)^n F_n audited',
            function=checks.fib_negative_index_check, arity=1, scope='pq'),
    Checker(identity='fib-square', description='D F_n² = L_2n - 2(-q)^n',
            function=checks.fib_square_check, arity=1, scope='pq'),
    Checker(identity='fib-double', description='F_2n = F_n L_n',
            function=checks.fib_double_check, arity=1, scope='pq'),
    Checker(identity='root-power', description='alpha^n = F_n alpha + q F_{n-1} for n >= 1',
            function=checks.root_power_check, arity=1, scope='pq', min_index=1),
])
