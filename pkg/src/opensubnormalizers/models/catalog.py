from enum import Enum
from typing import List, Optional

from pydantic import BaseModel


class Family(str, Enum):
    trivial = "trivial"
    cyclic = "cyclic"
    dihedral = "dihedral"
    alternating = "alternating"
    symmetric = "symmetric"
    psl2 = "psl2"
    pgl2 = "pgl2"
    pgammal2 = "pgammal2"
    direct_product = "direct_product"
    power_wreath = "power_wreath"


class CatalogEntry(BaseModel):
    key: str
    family: Family
    params: List[str]
    expected_order: int
    simple: bool = False
    lie_type_characteristic: Optional[int] = None
    exception: bool = False
