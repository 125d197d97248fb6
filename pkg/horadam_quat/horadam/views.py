from horadam_quat.sequence.views import DerivedConstants, HoradamParams
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.arith.views import Rational
from dataclasses import dataclass


@dataclass(frozen=True)
class HoradamQuatContext:
    '''
    Everything the quaternion identities need for one parameter tuple.

    omega = qi + pj - k, bracket_q = 1 - q + q² - q³, ql0/qf0 are the (p,q)-Lucas and
    (p,q)-Fibonacci quaternions at index 0, r/s the constants of the alpha_bar² expansion,
    alpha_bar = 1 + αi + α²j + α³k (beta_bar likewise) over Q(√D).
    '''
    params: HoradamParams
    consts: DerivedConstants
    omega: Quaternion
    bracket_q: Rational
    ql0: Quaternion
    qf0: Quaternion
    r: Rational
    s: Rational
    alpha_bar: Quaternion
    beta_bar: Quaternion

    @property
    def lucas_core(self) -> Quaternion:
        """Q_{L,0} - [q], the quaternion shared by most right-hand sides."""
        return self.ql0 - self.bracket_q
