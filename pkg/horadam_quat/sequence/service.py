from horadam_quat.arith.service import rat_div, rat_pow
from horadam_quat.arith.views import QuadExt, Rational, canonical
from horadam_quat.sequence.views import DerivedConstants, HoradamParams
from horadam_quat.sequence.config import PARAMS_CACHE_SIZE, TERM_CACHE_SIZE
from functools import lru_cache
import logging

logger = logging.getLogger(__name__)


def _step_back(params: HoradamParams, current: Rational, following: Rational) -> Rational:
    # W_{k-1} = (W_{k+1} - p*W_k) / q
    return rat_div(following - params.p * current, params.q)


@lru_cache(maxsize=TERM_CACHE_SIZE)
def horadam_term(params: HoradamParams, n: int) -> Rational:
    """
    W_n for any integer n, by forward recurrence for n >= 0 and backward recurrence below 0.

    This is the oracle of record: Binet and fast doubling are checked against it.
    """
    current, following = params.a, params.b
    if n >= 0:
        for _ in range(n):
            current, following = following, params.p * following + params.q * current
    else:
        for _ in range(-n):
            current, following = _step_back(params, current, following), current
    return canonical(current)


def horadam_window(params: HoradamParams, n: int, count: int) -> tuple[Rational, ...]:
    """Consecutive terms W_n, ..., W_{n+count-1}."""
    if count <= 0:
        return ()
    terms = [horadam_term(params, n)]
    if count > 1:
        terms.append(horadam_term(params, n + 1))
    while len(terms) < count:
        terms.append(params.p * terms[-1] + params.q * terms[-2])
    return tuple(canonical(term) for term in terms)


@lru_cache(maxsize=PARAMS_CACHE_SIZE)
def fibonacci_params(p, q) -> HoradamParams:
    """The validated (p,q)-Fibonacci parameters, built once per (p, q)."""
    return HoradamParams.fibonacci(p, q)


@lru_cache(maxsize=PARAMS_CACHE_SIZE)
def lucas_params(p, q) -> HoradamParams:
    return HoradamParams.lucas(p, q)


def pq_fibonacci(p, q, n: int) -> Rational:
    return horadam_term(fibonacci_params(p, q), n)


def pq_lucas(p, q, n: int) -> Rational:
    return horadam_term(lucas_params(p, q), n)


@lru_cache(maxsize=PARAMS_CACHE_SIZE)
def derive_constants(params: HoradamParams) -> DerivedConstants:
    p, q, a, b = params.key()
    D = params.discriminant
    half = rat_div(1, 2)
    alpha = QuadExt(rat_div(p, 2), half, D)
    beta = QuadExt(rat_div(p, 2), -half, D)
    delta = alpha - beta
    return DerivedConstants(
        D=D,
        alpha=alpha,
        beta=beta,
        delta=delta,
        delta_inv=delta.inverse(),
        A=b - a * beta,
        B=b - a * alpha,
        AB=b * b - p * a * b - q * a * a,
    )


def binet_scalar(params: HoradamParams, n: int) -> QuadExt:
    """W_n = (A*alpha^n - B*beta^n) / (alpha - beta), evaluated in Q(√D)."""
    consts = derive_constants(params)
    return (consts.A * consts.alpha ** n - consts.B * consts.beta ** n) * consts.delta_inv


def naive_fib_lucas(p, q, n: int) -> tuple[Rational, Rational]:
    """(F_n, L_n) by plain forward iteration; L_n = 2F_{n+1} - pF_n."""
    if n < 0:
        raise ValueError("naive_fib_lucas needs n >= 0")
    params = fibonacci_params(p, q)
    p, q = params.p, params.q
    current, following = 0, 1
    for _ in range(n):
        current, following = following, p * following + q * current
    return canonical(current), canonical(2 * following - p * current)


def fast_double(p, q, n: int) -> tuple[Rational, Rational]:
    """
    (F_n, L_n) in O(log n) steps.

    Doubling uses F_2k = F_k*L_k and L_2k = L_k² - 2(-q)^k; a set bit steps up with
    F_{k+1} = (p*F_k + L_k)/2 and L_{k+1} = (D*F_k + p*L_k)/2.
    """
    if n < 0:
        raise ValueError("fast_double needs n >= 0")
    params = fibonacci_params(p, q)
    p, q, D = params.p, params.q, params.discriminant
    fib, luc, power = 0, 2, 1  # k = 0, power = (-q)^k
    for bit in bin(n)[2:]:
        fib, luc = fib * luc, luc * luc - 2 * power
        power = power * power
        if bit == '1':
            fib, luc = rat_div(p * fib + luc, 2), rat_div(D * fib + p * luc, 2)
            power = power * -q
    logger.debug(f"fast_double p={p} q={q} n={n} done")
    return canonical(fib), canonical(luc)


def neg_index_fib(p, q, n: int) -> Rational:
    """F_{-n} = -(-q)^(-n) * F_n, the form consistent with the recurrence and with Binet."""
    params = fibonacci_params(p, q)
    return canonical(-rat_pow(-params.q, -n) * pq_fibonacci(params.p, params.q, n))


def printed_neg_index_fib(p, q, n: int) -> Rational:
    """The variant -(-q)^n * F_n; it agrees with the recurrence only when |q| = 1 or F_n = 0."""
    params = fibonacci_params(p, q)
    return canonical(-rat_pow(-params.q, n) * pq_fibonacci(params.p, params.q, n))


def root_power(p, q, n: int) -> tuple[QuadExt, QuadExt]:
    """Both sides of alpha^n = F_n*alpha + q*F_{n-1}."""
    params = fibonacci_params(p, q)
    alpha = derive_constants(params).alpha
    expansion = pq_fibonacci(p, q, n) * alpha + params.q * pq_fibonacci(p, q, n - 1)
    return alpha ** n, expansion
