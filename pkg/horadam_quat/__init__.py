from horadam_quat.sequence.views import HoradamParams
from horadam_quat.quaternion.views import Quaternion
from horadam_quat.arith.views import QuadExt

__all__ = ['HoradamParams', 'Quaternion', 'QuadExt']
