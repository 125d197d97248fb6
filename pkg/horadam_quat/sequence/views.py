from horadam_quat.arith.service import as_rational, rat_format
from horadam_quat.arith.views import QuadExt, Rational
from horadam_quat.sequence.config import FIBONACCI_SEEDS
from dataclasses import dataclass


@dataclass(frozen=True)
class HoradamParams:
    '''
    Parameters of the Horadam sequence W_n = p*W_{n-1} + q*W_{n-2}, W_0 = a, W_1 = b.

    Accepts ints, Fractions or rational text. q == 0 and p² + 4q == 0 are refused.
    '''
    p: Rational
    q: Rational
    a: Rational = 0
    b: Rational = 1

    def __post_init__(self):
        for name in ('p', 'q', 'a', 'b'):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if self.discriminant == 0:
            raise ValueError(f"p^2 + 4q = 0 for p={self.p}, q={self.q}: the characteristic roots coincide")

    @classmethod
    def fibonacci(cls, p, q) -> 'HoradamParams':
        return cls(p, q, *FIBONACCI_SEEDS)

    @classmethod
    def lucas(cls, p, q) -> 'HoradamParams':
        return cls(p, q, 2, p)

    @property
    def discriminant(self) -> Rational:
        return self.p * self.p + 4 * self.q

    def key(self) -> tuple:
        return (self.p, self.q, self.a, self.b)

    def to_dict(self) -> dict[str, str]:
        return {name: rat_format(getattr(self, name)) for name in ('p', 'q', 'a', 'b')}

    def to_string(self) -> str:
        return ', '.join(f'{name}={value}' for name, value in self.to_dict().items())


@dataclass(frozen=True)
class DerivedConstants:
    D: Rational
    alpha: QuadExt
    beta: QuadExt
    delta: QuadExt
    delta_inv: QuadExt
    A: QuadExt
    B: QuadExt
    AB: Rational
