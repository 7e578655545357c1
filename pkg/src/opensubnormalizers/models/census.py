from datetime import datetime
from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel

from .fields import ExactRatio


class CensusFormat(str, Enum):
    tsv = "tsv"
    json_lines = "json-lines"


class CensusRecord(BaseModel):
    """
    The invariants of one group, as persisted in a census file.

    Every field except `timestamp` is a function of the group alone.
    """

    group: str
    order: int
    spr_total: ExactRatio
    frobenius: Dict[int, ExactRatio]
    phi: Optional[ExactRatio] = None
    checks: Dict[str, bool]
    version: str
    timestamp: datetime

    def mathematical_fields(self) -> dict:
        return self.model_dump(exclude={"timestamp", "version"})
