from horadam_quat.identities.views import IdentityId
from pydantic import BaseModel
from typing import Any, Callable, Literal


class Checker(BaseModel):
    identity: IdentityId
    description: str
    function: Callable
    arity: int
    # 'pq' checkers take (p, q, *indices); 'params' checkers take (params, *indices)
    scope: Literal['pq', 'params']
    min_index: int | None = None


class CheckOutcome(BaseModel):
    is_success: bool
    # IdentityReport instances, kept as plain objects
    reports: list[Any] = []
    error: str | None = None
