from horadam_quat.verify.service import Campaign, run_campaign
from horadam_quat.verify.views import VerifyConfig

__all__ = [
    'Campaign',
    'VerifyConfig',
    'run_campaign',
]
