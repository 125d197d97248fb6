from horadam_quat.arith.service import quad_to_json, rat_format, rat_parse
from horadam_quat.arith.views import QuadExt, Rational
from horadam_quat.quaternion.views import Quaternion
import re

_TERM = re.compile(r'([+-]?)(\d+(?:/\d+)?)?([ijk]?)')


def _require_quaternions(*values):
    for value in values:
        if not isinstance(value, Quaternion):
            raise ValueError(f"expected a Quaternion, got {type(value).__name__}")


def quat_mul(u: Quaternion, v: Quaternion) -> Quaternion:
    """Hamilton product; QuadExt coefficients with different D raise ValueError."""
    _require_quaternions(u, v)
    return u * v


def quat_conj(u: Quaternion) -> Quaternion:
    return u.conjugate()


def quat_norm(u: Quaternion):
    return u.norm()


def commutator(u: Quaternion, v: Quaternion) -> Quaternion:
    """uv - vu, always a pure quaternion equal to twice the cross product of the vector parts."""
    _require_quaternions(u, v)
    return u * v - v * u


def quat_lift(u: Quaternion, D: Rational) -> Quaternion:
    """Embed a quaternion into Quaternion<QuadExt> over Q(√D); QuadExt components must share D."""
    def lift(value):
        if isinstance(value, QuadExt):
            if value.D != D:
                raise ValueError(f"component lives in Q(√{value.D}), not Q(√{D})")
            return value
        return QuadExt(value, 0, D)
    return u.map(lift)


def quat_ring_conj(u: Quaternion) -> Quaternion:
    """Apply √D -> -√D to every component."""
    return u.map(lambda value: value.conjugate() if isinstance(value, QuadExt) else value)


def quat_parse(text: str) -> Quaternion:
    '''
    Parse the display form produced by Quaternion.to_string for rational quaternions.

    Examples: "0", "i+j+2k", "-13+2i+4j+6k", "1/2-i".
    '''
    compact = text.replace(' ', '')
    if not compact:
        raise ValueError("empty quaternion text")
    coefficients = dict.fromkeys(('', 'i', 'j', 'k'), 0)
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        sign, number, unit = match.groups()
        if match.end() == position or (number is None and not unit):
            raise ValueError(f"cannot parse quaternion '{text}' at offset {position}")
        if position > 0 and not sign:
            raise ValueError(f"missing sign before term at offset {position} in '{text}'")
        value = rat_parse(number) if number else 1
        coefficients[unit] += -value if sign == '-' else value
        position = match.end()
    return Quaternion(coefficients[''], coefficients['i'], coefficients['j'], coefficients['k'])


def quat_to_json(u: Quaternion) -> list:
    """Four rational strings, or four QuadExt objects when some component has a √D part."""
    if u.is_rational:
        return [rat_format(value) for value in u.rational_part().components()]
    D = next(value.D for value in u.components() if isinstance(value, QuadExt))
    return [quad_to_json(value) for value in quat_lift(u, D).components()]
