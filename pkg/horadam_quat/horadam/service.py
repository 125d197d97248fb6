from horadam_quat.sequence.service import derive_constants, fibonacci_params, horadam_window, lucas_params, pq_fibonacci
from horadam_quat.sequence.config import PARAMS_CACHE_SIZE, SEQUENCE_KINDS, TERM_CACHE_SIZE
from horadam_quat.horadam.views import HoradamQuatContext
from horadam_quat.sequence.views import HoradamParams
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.arith.service import rat_div
from horadam_quat.arith.views import QuadExt, Rational
from functools import lru_cache
import logging

logger = logging.getLogger(__name__)


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _qw_term(params: HoradamParams, n: int) -> Quaternion:
    return Quaternion(*horadam_window(params, n, 4))


def _special_params(kind: str, p, q) -> HoradamParams:
    if kind == 'pq-fib':
        return fibonacci_params(p, q)
    if kind == 'pq-lucas':
        return lucas_params(p, q)
    raise ValueError(f"unknown sequence kind '{kind}', expected one of {SEQUENCE_KINDS}")


def _root_quaternion(root: QuadExt) -> Quaternion:
    square = root * root
    return Quaternion(QuadExt(1, 0, root.D), root, square, square * root)


def rs_constants(p, q) -> tuple[Rational, Rational]:
    """
    r = 1 + (p/2)(F_2+F_4+F_6) + q(F_1+F_3+F_5) and s = (F_2+F_4+F_6)/2.

    Returns:
        tuple: (r, s) as exact rationals; halves appear whenever F_2+F_4+F_6 is odd.
    """
    params = fibonacci_params(p, q)
    even = sum(pq_fibonacci(params.p, params.q, k) for k in (2, 4, 6))
    odd = sum(pq_fibonacci(params.p, params.q, k) for k in (1, 3, 5))
    s = rat_div(even, 2)
    r = 1 + rat_div(params.p * even, 2) + params.q * odd
    return r, s


def ab_product(params: HoradamParams) -> Rational:
    """AB = (b - a*beta)(b - a*alpha) = b² - pab - qa²."""
    return derive_constants(params).AB


@lru_cache(maxsize=PARAMS_CACHE_SIZE)
def build_context(params: HoradamParams) -> HoradamQuatContext:
    p, q = params.p, params.q
    consts = derive_constants(params)
    r, s = rs_constants(p, q)
    context = HoradamQuatContext(
        params=params,
        consts=consts,
        omega=Quaternion(0, q, p, -1),
        bracket_q=1 - q + q ** 2 - q ** 3,
        ql0=special_quat('pq-lucas', p, q, 0),
        qf0=special_quat('pq-fib', p, q, 0),
        r=r,
        s=s,
        alpha_bar=_root_quaternion(consts.alpha),
        beta_bar=_root_quaternion(consts.beta),
    )
    logger.debug(f"built quaternion context for {params.to_string()}")
    return context


def qw_term(ctx: HoradamQuatContext, n: int) -> Quaternion:
    """Q_{w,n} = W_n + W_{n+1}i + W_{n+2}j + W_{n+3}k for any integer n."""
    return _qw_term(ctx.params, n)


def binet_quat(ctx: HoradamQuatContext, n: int) -> Quaternion:
    """(A*alpha_bar*alpha^n - B*beta_bar*beta^n) / (alpha - beta) over Q(√D)."""
    consts = ctx.consts
    numerator = (consts.A * ctx.alpha_bar) * consts.alpha ** n - (consts.B * ctx.beta_bar) * consts.beta ** n
    return numerator * consts.delta_inv


def special_quat(kind: str, p, q, n: int) -> Quaternion:
    """The (p,q)-Fibonacci ('pq-fib') or (p,q)-Lucas ('pq-lucas') quaternion at index n."""
    return _qw_term(_special_params(kind, p, q), n)


def lucas_binet_quat(p, q, n: int) -> Quaternion:
    """alpha_bar*alpha^n + beta_bar*beta^n."""
    ctx = build_context(fibonacci_params(p, q))
    consts = ctx.consts
    return ctx.alpha_bar * consts.alpha ** n + ctx.beta_bar * consts.beta ** n


def fib_binet_quat(p, q, n: int) -> Quaternion:
    """(alpha_bar*alpha^n - beta_bar*beta^n) / (alpha - beta)."""
    ctx = build_context(fibonacci_params(p, q))
    consts = ctx.consts
    return (ctx.alpha_bar * consts.alpha ** n - ctx.beta_bar * consts.beta ** n) * consts.delta_inv


def closed_form_seeds(params: HoradamParams) -> tuple[Quaternion, Quaternion]:
    '''
    Q_{w,0} and Q_{w,1} from their symbolic formulas in p, q, a, b.

    The last coefficient of Q_{w,1}, (p³+2pq)b + q(p²+q)a, is read as the k-coefficient.
    '''
    p, q, a, b = params.key()
    w2 = p * b + q * a
    w3 = (p * p + q) * b + p * q * a
    w4 = (p ** 3 + 2 * p * q) * b + q * (p * p + q) * a
    return Quaternion(a, b, w2, w3), Quaternion(b, w2, w3, w4)
