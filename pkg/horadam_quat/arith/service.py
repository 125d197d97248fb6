from horadam_quat.arith.views import QuadExt, Rational, canonical, is_rational
from fractions import Fraction
from typing import Callable
import operator
import re

_RATIONAL_TEXT = re.compile(r'^[+-]?\d+(?:/\d+)?$')


def rat_normalize(numerator: int, denominator: int) -> Rational:
    """
    Build the canonical rational numerator/denominator.

    Args:
        numerator (int): Any integer.
        denominator (int): Any nonzero integer; the sign moves to the numerator.

    Returns:
        Rational: an int when the value is integral, otherwise a reduced Fraction.
    """
    if denominator == 0:
        raise ZeroDivisionError(f"rational {numerator}/0 has a zero denominator")
    return canonical(Fraction(numerator, denominator))


def rat_div(x, y):
    """Exact division; never produces a float."""
    if y == 0:
        raise ZeroDivisionError("division by zero")
    return canonical(Fraction(x) / y) if is_rational(x) else canonical(x / y)


def rat_pow(base: Rational, exponent: int) -> Rational:
    if exponent >= 0:
        return base ** exponent
    if base == 0:
        raise ZeroDivisionError("zero raised to a negative power")
    return canonical(Fraction(base) ** exponent)


RAT_OPS: dict[str, Callable] = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': rat_div,
    'neg': lambda x, _=None: -x,
    'pow': rat_pow,
}


def rat_ops(name: str, x: Rational, y=None) -> Rational:
    op = RAT_OPS.get(name)
    if op is None:
        raise ValueError(f"unknown rational operation '{name}'")
    return canonical(op(x, y))


def rat_format(value: Rational) -> str:
    value = canonical(value)
    if isinstance(value, Fraction):
        return f'{value.numerator}/{value.denominator}'
    return str(value)


def rat_parse(text: str) -> Rational:
    text = str(text).strip()
    if not _RATIONAL_TEXT.match(text):
        raise ValueError(f"'{text}' is not a rational of the form num or num/den")
    numerator, _, denominator = text.partition('/')
    if denominator and int(denominator) == 0:
        raise ValueError(f"'{text}' has a zero denominator")
    return rat_normalize(int(numerator), int(denominator or 1))


def as_rational(value) -> Rational:
    """Accept ints, Fractions and rational text; reject floats and bools."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if is_rational(value):
        return canonical(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise ValueError(f"{value!r} is not an exact rational")


def quad_mul(u: QuadExt, v: QuadExt) -> QuadExt:
    if u.D != v.D:
        raise ValueError(f"mismatched discriminants {u.D} and {v.D}")
    return u * v


def quad_inverse(u: QuadExt) -> QuadExt:
    return u.inverse()


def quad_conj(u: QuadExt) -> QuadExt:
    return u.conjugate()


def quad_norm(u: QuadExt) -> Rational:
    return u.norm()


def quad_pow(u: QuadExt, exponent: int) -> QuadExt:
    return u ** exponent


def discriminant_to_json(D: Rational) -> int | str:
    D = canonical(D)
    return D if isinstance(D, int) else rat_format(D)


def quad_to_json(u: QuadExt) -> dict:
    return {'rat': rat_format(u.rat), 'irr': rat_format(u.irr), 'D': discriminant_to_json(u.D)}


def quad_from_json(data: dict) -> QuadExt:
    return QuadExt(rat_parse(data['rat']), rat_parse(data['irr']), as_rational(data['D']))
