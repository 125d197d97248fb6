from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Integral rationals stay plain ints so the grid runs on machine-fast arithmetic;
# everything else is a reduced Fraction. Both expose numerator/denominator.
Rational = Union[int, Fraction]

RATIONAL_TYPES = (int, Fraction)


def canonical(value):
    """Collapse an integral Fraction to int, leave everything else untouched."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def is_rational(value) -> bool:
    return isinstance(value, RATIONAL_TYPES) and not isinstance(value, bool)


@dataclass(frozen=True, eq=False)
class QuadExt:
    '''
    Element rat + irr*√D of the ring Q[t]/(t²-D).

    √D is purely formal: D may be negative or a perfect square, only D == 0 is refused.
    Two elements combine only when they share the same D.
    '''
    rat: Rational
    irr: Rational
    D: Rational

    def __post_init__(self):
        if self.D == 0:
            raise ValueError("QuadExt needs a nonzero discriminant D")

    @classmethod
    def from_rational(cls, value: Rational, D: Rational) -> 'QuadExt':
        return cls(value, 0, D)

    @classmethod
    def sqrt_d(cls, D: Rational) -> 'QuadExt':
        return cls(0, 1, D)

    def _coerce(self, other) -> 'QuadExt':
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise ValueError(f"cannot combine elements of Q(√{self.D}) and Q(√{other.D})")
            return other
        if is_rational(other):
            return QuadExt(other, 0, self.D)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.irr == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.rat + other.rat, self.irr + other.irr, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.rat - other.rat, self.irr - other.irr, self.D)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QuadExt(-self.rat, -self.irr, self.D)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        x1, y1, x2, y2 = self.rat, self.irr, other.rat, other.irr
        return QuadExt(x1 * x2 + self.D * y1 * y2, x1 * y2 + x2 * y1, self.D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        result = QuadExt(1, 0, self.D)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def norm(self) -> Rational:
        """Ring norm x² - D·y²."""
        return self.rat * self.rat - self.D * self.irr * self.irr

    def conjugate(self) -> 'QuadExt':
        return QuadExt(self.rat, -self.irr, self.D)

    def inverse(self) -> 'QuadExt':
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError(f"{self.to_string()} has zero ring norm and is not invertible")
        return QuadExt(canonical(Fraction(self.rat) / norm), canonical(Fraction(-self.irr) / norm), self.D)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            # a pure rational is the same number in every Q(√D)
            if self.irr == 0 and other.irr == 0:
                return self.rat == other.rat
            return self.D == other.D and self.rat == other.rat and self.irr == other.irr
        if is_rational(other):
            return self.irr == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.D))

    def to_string(self) -> str:
        root = f'√{self.D}' if self.D > 0 else f'√({self.D})'
        if self.irr == 0:
            return str(self.rat)
        if self.irr == 1:
            irr_text = root
        elif self.irr == -1:
            irr_text = f'-{root}'
        else:
            irr_text = f'{self.irr}{root}'
        if self.rat == 0:
            return irr_text
        sign = '' if irr_text.startswith('-') else '+'
        return f'{self.rat}{sign}{irr_text}'

    def __repr__(self):
        return f'QuadExt({self.rat}, {self.irr}, D={self.D})'
