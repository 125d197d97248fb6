from horadam_quat.arith.service import rat_div, rat_format
from horadam_quat.arith.views import QuadExt, is_rational
from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

R = TypeVar('R')

BASIS = ('', 'i', 'j', 'k')


def _coefficient_to_string(value) -> str:
    if isinstance(value, QuadExt):
        if value.is_rational:
            return rat_format(value.rat)
        return f'({value.to_string()})'
    return rat_format(value)


@dataclass(frozen=True, eq=False)
class Quaternion(Generic[R]):
    '''
    Hamilton quaternion w + xi + yj + zk over a commutative ring R.

    R is int/Fraction (the rationals) or QuadExt. Non-quaternion operands of + - * are
    ring scalars; scalars are central, so left and right scaling agree.
    '''
    w: R
    x: R = 0
    y: R = 0
    z: R = 0

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def vector(self) -> tuple:
        return (self.x, self.y, self.z)

    def map(self, function: Callable) -> 'Quaternion':
        return Quaternion(function(self.w), function(self.x), function(self.y), function(self.z))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        return Quaternion(self.w + other, self.x, self.y, self.z)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
        return Quaternion(self.w - other, self.x, self.y, self.z)

    def __rsub__(self, other):
        return Quaternion(other - self.w, -self.x, -self.y, -self.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.components()
            a2, b2, c2, d2 = other.components()
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __rmul__(self, other):
        return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)

    def __truediv__(self, scalar):
        if isinstance(scalar, Quaternion):
            return NotImplemented
        return self.map(lambda value: rat_div(value, scalar))

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components() == other.components()
        if is_rational(other) or isinstance(other, QuadExt):
            return self.components() == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        if all(value == 0 for value in self.vector()):
            return hash(self.w)
        return hash(self.components())

    def conjugate(self) -> 'Quaternion':
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """w² + x² + y² + z² (no square root: stays in the ring)."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def is_zero(self) -> bool:
        return all(value == 0 for value in self.components())

    @property
    def is_pure(self) -> bool:
        return self.w == 0

    @property
    def is_rational(self) -> bool:
        """True when no component carries a √D part."""
        return all(is_rational(value) or (isinstance(value, QuadExt) and value.is_rational)
                   for value in self.components())

    def rational_part(self) -> 'Quaternion':
        return self.map(lambda value: value.rat if isinstance(value, QuadExt) else value)

    def irrational_part(self) -> 'Quaternion':
        return self.map(lambda value: value.irr if isinstance(value, QuadExt) else 0)

    def to_string(self) -> str:
        '''Display form w+xi+yj+zk, zero terms omitted, unit coefficients implicit.'''
        terms = []
        for value, unit in zip(self.components(), BASIS):
            if value == 0:
                continue
            text = _coefficient_to_string(value)
            if unit and text in ('1', '-1'):
                text = text[:-1]
            terms.append(text + unit)
        if not terms:
            return '0'
        result = terms[0]
        for term in terms[1:]:
            result += term if term.startswith('-') else f'+{term}'
        return result

    def __str__(self):
        return self.to_string()
