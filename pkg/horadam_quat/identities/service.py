from horadam_quat.sequence.service import (fibonacci_params, horadam_term, neg_index_fib, pq_fibonacci, pq_lucas,
                                           printed_neg_index_fib, root_power)
from horadam_quat.horadam.service import binet_quat, build_context, qw_term, special_quat
from horadam_quat.quaternion.service import commutator, quat_lift
from horadam_quat.identities.views import IdentityId, IdentityReport
from horadam_quat.horadam.views import HoradamQuatContext
from horadam_quat.sequence.views import HoradamParams
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.arith.service import rat_div, rat_format, rat_pow
from horadam_quat.arith.views import QuadExt
import logging

logger = logging.getLogger(__name__)


def _pq_context(p, q) -> HoradamQuatContext:
    return build_context(fibonacci_params(p, q))


def _has_radicals(u: Quaternion) -> bool:
    return any(isinstance(value, QuadExt) for value in u.components())


def _report(identity: IdentityId, ctx: HoradamQuatContext, indices: tuple, lhs: Quaternion, rhs: Quaternion,
            rational: bool = True, notes: list[str] | None = None, forms: dict[str, bool] | None = None) -> IdentityReport:
    '''
    Compare both sides exactly. Purely rational sides are compared as they are; as soon as
    one side carries QuadExt components both are lifted into Q(√D).
    '''
    if _has_radicals(lhs) or _has_radicals(rhs):
        D = ctx.consts.D
        lhs, rhs = quat_lift(lhs, D), quat_lift(rhs, D)
    equal = lhs == rhs and (lhs.is_rational or not rational)
    if not equal:
        logger.debug(f"{identity} failed at {ctx.params.to_string()} indices={indices}: {lhs} != {rhs}")
    return IdentityReport(identity=identity, params=ctx.params, indices=tuple(indices), lhs=lhs, rhs=rhs,
                          equal=equal, notes=notes or [], forms=forms or {})


# Lemma: products of alpha_bar and beta_bar

def _twist(ctx: HoradamQuatContext) -> Quaternion:
    # q*Delta*omega
    return ctx.omega * (ctx.params.q * ctx.consts.delta)


def lemma1_ab_check(p, q) -> IdentityReport:
    """alpha_bar*beta_bar = Q_{L,0} - [q] - q*Delta*omega"""
    ctx = _pq_context(p, q)
    return _report('lemma1-ab', ctx, (), ctx.alpha_bar * ctx.beta_bar, ctx.lucas_core - _twist(ctx), rational=False)


def lemma1_ba_check(p, q) -> IdentityReport:
    """beta_bar*alpha_bar = Q_{L,0} - [q] + q*Delta*omega"""
    ctx = _pq_context(p, q)
    return _report('lemma1-ba', ctx, (), ctx.beta_bar * ctx.alpha_bar, ctx.lucas_core + _twist(ctx), rational=False)


def lemma1_sum_check(p, q) -> IdentityReport:
    ctx = _pq_context(p, q)
    lhs = ctx.alpha_bar * ctx.beta_bar + ctx.beta_bar * ctx.alpha_bar
    return _report('lemma1-sum', ctx, (), lhs, ctx.lucas_core * 2)


def check_lemma1(p, q) -> list[IdentityReport]:
    return [lemma1_ab_check(p, q), lemma1_ba_check(p, q), lemma1_sum_check(p, q)]


# Catalan family

def _catalan_core(ctx: HoradamQuatContext, n: int) -> Quaternion:
    # (Q_{L,0}-[q])F_n - q*omega*L_n
    p, q = ctx.params.p, ctx.params.q
    return ctx.lucas_core * pq_fibonacci(p, q, n) - ctx.omega * (q * pq_lucas(p, q, n))


def _catalan_rhs(ctx: HoradamQuatContext, m: int, n: int, neg_fib) -> Quaternion:
    return _catalan_core(ctx, n) * (-ctx.consts.AB * rat_pow(-ctx.params.q, m) * neg_fib)


def _cassini_rhs(ctx: HoradamQuatContext, m: int) -> Quaternion:
    p, q = ctx.params.p, ctx.params.q
    return (ctx.lucas_core - ctx.omega * (p * q)) * (ctx.consts.AB * rat_pow(-q, m - 1))


def _commutator_adjacent_rhs(ctx: HoradamQuatContext, n: int) -> Quaternion:
    return ctx.omega * (2 * rat_pow(-ctx.params.q, n + 1) * ctx.consts.AB)


def catalan_check(params: HoradamParams, m: int, n: int) -> IdentityReport:
    '''
    Q_m² - Q_{m+n}Q_{m-n} = -AB(-q)^m F_{-n}((Q_{L,0}-[q])F_n - q*omega*L_n).

    F_{-n} is the recurrence value -(-q)^(-n)F_n. Two more right-hand sides are evaluated
    and recorded in forms: the proof's AB(-q)^(m-n)((Q_{L,0}-[q])F_n² - q*omega*F_2n) and the
    same printed formula with F_{-n} replaced by -(-q)^n F_n.
    '''
    ctx = build_context(params)
    p, q, AB = params.p, params.q, ctx.consts.AB
    lhs = qw_term(ctx, m) * qw_term(ctx, m) - qw_term(ctx, m + n) * qw_term(ctx, m - n)

    fib_n = pq_fibonacci(p, q, n)
    core = _catalan_core(ctx, n)
    scale = -AB * rat_pow(-q, m)
    neg_fib = neg_index_fib(p, q, n)
    printed_fib = printed_neg_index_fib(p, q, n)
    rhs = core * (scale * neg_fib)
    intermediate = ((ctx.lucas_core * (fib_n * fib_n) - ctx.omega * (q * pq_fibonacci(p, q, 2 * n)))
                    * (AB * rat_pow(-q, m - n)))
    printed = core * (scale * printed_fib)

    forms = {'proof-intermediate': lhs == intermediate, 'printed-negative-index': lhs == printed}
    notes = []
    if not forms['proof-intermediate']:
        notes.append(f"proof intermediate form gives {intermediate}")
    if not forms['printed-negative-index']:
        notes.append(f"printed F(-n) = -(-q)^n F(n) = {rat_format(printed_fib)} at n={n} gives {printed}; "
                     f"recurrence F(-n) = {rat_format(neg_fib)}")
    return _report('catalan', ctx, (m, n), lhs, rhs, notes=notes, forms=forms)


def cassini_check(params: HoradamParams, m: int) -> IdentityReport:
    """Q_m² - Q_{m+1}Q_{m-1} = AB(-q)^(m-1)(Q_{L,0} - [q] - pq*omega)"""
    ctx = build_context(params)
    lhs = qw_term(ctx, m) * qw_term(ctx, m) - qw_term(ctx, m + 1) * qw_term(ctx, m - 1)
    rhs = _cassini_rhs(ctx, m)
    neg_fib = neg_index_fib(params.p, params.q, 1)
    forms = {'catalan-n1': rhs == _catalan_rhs(ctx, m, 1, neg_fib)}
    return _report('cassini', ctx, (m,), lhs, rhs, forms=forms)


def docagne_check(params: HoradamParams, n: int, m: int) -> IdentityReport:
    """Q_nQ_{m+1} - Q_{n+1}Q_m = (-q)^m AB((Q_{L,0}-[q])F_{n-m} - q*omega*L_{n-m})"""
    ctx = build_context(params)
    lhs = qw_term(ctx, n) * qw_term(ctx, m + 1) - qw_term(ctx, n + 1) * qw_term(ctx, m)
    rhs = _catalan_core(ctx, n - m) * (rat_pow(-params.q, m) * ctx.consts.AB)
    forms = {}
    if m == n - 1:
        forms['cassini'] = rhs == _cassini_rhs(ctx, n)
    if m == n:
        forms['commutator-adjacent'] = rhs == _commutator_adjacent_rhs(ctx, n)
    return _report('docagne', ctx, (n, m), lhs, rhs, forms=forms)


def commutator_adjacent_check(params: HoradamParams, n: int) -> IdentityReport:
    """Q_nQ_{n+1} - Q_{n+1}Q_n = 2(-q)^(n+1) AB omega"""
    ctx = build_context(params)
    lhs = commutator(qw_term(ctx, n), qw_term(ctx, n + 1))
    return _report('commutator-adjacent', ctx, (n,), lhs, _commutator_adjacent_rhs(ctx, n))


def cross_lucas_fib_check(p, q, n: int, r: int, s: int) -> IdentityReport:
    """Q_{L,n+r}Q_{F,n+s} - Q_{L,n+s}Q_{F,n+r} = 2(-q)^(n+r) F_{s-r} (Q_{L,0} - [q])"""
    ctx = _pq_context(p, q)
    p, q = ctx.params.p, ctx.params.q
    lucas = lambda k: special_quat('pq-lucas', p, q, k)
    fib = lambda k: special_quat('pq-fib', p, q, k)
    lhs = lucas(n + r) * fib(n + s) - lucas(n + s) * fib(n + r)
    rhs = ctx.lucas_core * (2 * rat_pow(-q, n + r) * pq_fibonacci(p, q, s - r))
    return _report('cross-lucas-fib', ctx, (n, r, s), lhs, rhs)


# Lemma: squares of alpha_bar and beta_bar

def lemma2_alpha_check(p, q) -> IdentityReport:
    """alpha_bar² = (Q_{L,0} - r) + Delta(Q_{F,0} - s)"""
    ctx = _pq_context(p, q)
    rhs = (ctx.ql0 - ctx.r) + (ctx.qf0 - ctx.s) * ctx.consts.delta
    return _report('lemma2-alpha', ctx, (), ctx.alpha_bar * ctx.alpha_bar, rhs, rational=False)


def lemma2_beta_check(p, q) -> IdentityReport:
    """beta_bar² = (Q_{L,0} - r) - Delta(Q_{F,0} - s)"""
    ctx = _pq_context(p, q)
    rhs = (ctx.ql0 - ctx.r) - (ctx.qf0 - ctx.s) * ctx.consts.delta
    return _report('lemma2-beta', ctx, (), ctx.beta_bar * ctx.beta_bar, rhs, rational=False)


def check_lemma2(p, q) -> list[IdentityReport]:
    return [lemma2_alpha_check(p, q), lemma2_beta_check(p, q)]


# Squares of the Lucas and Fibonacci quaternions

def _square_difference(p, q, n: int) -> Quaternion:
    lucas = special_quat('pq-lucas', p, q, n)
    fib = special_quat('pq-fib', p, q, n)
    return lucas * lucas - fib * fib


def _root_squares(ctx: HoradamQuatContext, n: int) -> tuple[Quaternion, object, object]:
    # alpha_bar²alpha^2n + beta_bar²beta^2n, with alpha^2n and beta^2n
    alpha_2n, beta_2n = ctx.consts.alpha ** (2 * n), ctx.consts.beta ** (2 * n)
    squares = (ctx.alpha_bar * ctx.alpha_bar) * alpha_2n + (ctx.beta_bar * ctx.beta_bar) * beta_2n
    return squares, alpha_2n, beta_2n


def square_diff_check(p, q, n: int) -> IdentityReport:
    '''
    Q_{L,n}² - Q_{F,n}² = ((D-1)/D)(Q_{L,0}-r)L_2n + (D-1)(Q_{F,0}-s)F_2n + (2(D+1)(-q)^n/D)(Q_{L,0}-[q]).

    The printed statement carries coefficient 1 instead of D-1 on the F_2n term; that variant is
    kept in forms['printed-coefficient'].
    '''
    ctx = _pq_context(p, q)
    p, q, D = ctx.params.p, ctx.params.q, ctx.consts.D
    lhs = _square_difference(p, q, n)
    fib_2n, luc_2n = pq_fibonacci(p, q, 2 * n), pq_lucas(p, q, 2 * n)
    lucas_term = (ctx.ql0 - ctx.r) * (rat_div(D - 1, D) * luc_2n)
    bracket_term = ctx.lucas_core * rat_div(2 * (D + 1) * rat_pow(-q, n), D)
    fib_part = ctx.qf0 - ctx.s
    rhs = lucas_term + fib_part * ((D - 1) * fib_2n) + bracket_term
    printed = lucas_term + fib_part * fib_2n + bracket_term
    forms = {'printed-coefficient': lhs == printed}
    notes = []
    if not forms['printed-coefficient']:
        notes.append(f"printed coefficient 1 on (Q_F0 - s)F_2n gives {printed}; derived coefficient D-1 = {rat_format(D - 1)}")
    return _report('square-diff', ctx, (n,), lhs, rhs, notes=notes, forms=forms)


def square_diff_scaled_check(p, q, n: int) -> IdentityReport:
    """D(Q_{L,n}² - Q_{F,n}²) = (D-1)(alpha_bar²alpha^2n + beta_bar²beta^2n) + 2(D+1)(alpha*beta)^n (Q_{L,0}-[q])"""
    ctx = _pq_context(p, q)
    D = ctx.consts.D
    lhs = _square_difference(p, q, n) * D
    squares, _, _ = _root_squares(ctx, n)
    rhs = squares * (D - 1) + ctx.lucas_core * (2 * (D + 1) * rat_pow(-ctx.params.q, n))
    return _report('square-diff-scaled', ctx, (n,), lhs, rhs)


def square_root_sum_check(p, q, n: int) -> IdentityReport:
    """alpha_bar²alpha^2n + beta_bar²beta^2n = (alpha^2n+beta^2n)(Q_{L,0}-r) + Delta(Q_{F,0}-s)(alpha^2n-beta^2n)"""
    ctx = _pq_context(p, q)
    squares, alpha_2n, beta_2n = _root_squares(ctx, n)
    rhs = (ctx.ql0 - ctx.r) * (alpha_2n + beta_2n) + (ctx.qf0 - ctx.s) * (ctx.consts.delta * (alpha_2n - beta_2n))
    return _report('square-root-sum', ctx, (n,), squares, rhs)


# Commutators with the (p,q)-Fibonacci quaternion

def mixed_commutator_check(params: HoradamParams, n: int, m: int) -> IdentityReport:
    """Q_{F,n}Q_{w,m} - Q_{w,m}Q_{F,n} = 2(-q)^(n+1) omega W_{m-n}"""
    ctx = build_context(params)
    lhs = commutator(special_quat('pq-fib', params.p, params.q, n), qw_term(ctx, m))
    rhs = ctx.omega * (2 * rat_pow(-params.q, n + 1) * horadam_term(params, m - n))
    return _report('mixed-commutator', ctx, (n, m), lhs, rhs)


def mixed_commutator_diag_check(params: HoradamParams, n: int) -> IdentityReport:
    """Q_{F,n}Q_{w,n} - Q_{w,n}Q_{F,n} = 2(-q)^(n+1) a omega"""
    ctx = build_context(params)
    lhs = commutator(special_quat('pq-fib', params.p, params.q, n), qw_term(ctx, n))
    rhs = ctx.omega * (2 * rat_pow(-params.q, n + 1) * params.a)
    return _report('mixed-commutator-diag', ctx, (n,), lhs, rhs)


# Binet and scalar identities

def binet_recurrence_check(params: HoradamParams, n: int) -> IdentityReport:
    """Q_{w,n} by recurrence equals the quaternion Binet formula."""
    ctx = build_context(params)
    return _report('binet-recurrence', ctx, (n,), qw_term(ctx, n), binet_quat(ctx, n))


def fib_negative_index_check(p, q, n: int) -> IdentityReport:
    '''
    F_{-n} by backward recurrence against -(-q)^(-n)F_n.

    The printed -(-q)^n F_n is evaluated alongside and flagged when it disagrees.
    '''
    ctx = _pq_context(p, q)
    p, q = ctx.params.p, ctx.params.q
    recurrence = pq_fibonacci(p, q, -n)
    consistent = neg_index_fib(p, q, n)
    printed = printed_neg_index_fib(p, q, n)
    forms = {'printed-negative-index': recurrence == printed}
    notes = []
    if not forms['printed-negative-index']:
        notes.append(f"printed F(-n) = -(-q)^n F(n) = {rat_format(printed)} disagrees with the recurrence "
                     f"F({-n}) = {rat_format(recurrence)} at p={rat_format(p)}, q={rat_format(q)}; "
                     f"-(-q)^(-n) F(n) = {rat_format(consistent)}")
    return _report('fib-negative-index', ctx, (n,), Quaternion(recurrence), Quaternion(consistent),
                   notes=notes, forms=forms)


def fib_square_check(p, q, n: int) -> IdentityReport:
    """D*F_n² = L_2n - 2(-q)^n"""
    ctx = _pq_context(p, q)
    p, q = ctx.params.p, ctx.params.q
    fib_n = pq_fibonacci(p, q, n)
    lhs = Quaternion(ctx.consts.D * fib_n * fib_n)
    rhs = Quaternion(pq_lucas(p, q, 2 * n) - 2 * rat_pow(-q, n))
    return _report('fib-square', ctx, (n,), lhs, rhs)


def fib_double_check(p, q, n: int) -> IdentityReport:
    """F_2n = F_n * L_n"""
    ctx = _pq_context(p, q)
    p, q = ctx.params.p, ctx.params.q
    lhs = Quaternion(pq_fibonacci(p, q, 2 * n))
    rhs = Quaternion(pq_fibonacci(p, q, n) * pq_lucas(p, q, n))
    return _report('fib-double', ctx, (n,), lhs, rhs)


def root_power_check(p, q, n: int) -> IdentityReport:
    """alpha^n = F_n*alpha + q*F_{n-1}"""
    ctx = _pq_context(p, q)
    power, expansion = root_power(ctx.params.p, ctx.params.q, n)
    return _report('root-power', ctx, (n,), Quaternion(power), Quaternion(expansion), rational=False)
