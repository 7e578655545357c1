from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .fields import ExactRatio, PermutationField


class SubnormalizerReport(BaseModel):
    """
    The order of one subnormalizer, by brute force and by the Sylow counts.
    """

    model_config = ConfigDict(populate_by_name=True)

    x: PermutationField
    p: int
    subnormalizer_order_bruteforce: int
    lambda_: int = Field(alias="lambda")
    alpha: int
    n_p: int
    normalizer_order: int
    centralizer_order: int
    identities_hold: bool


class SprRow(BaseModel):
    representative: PermutationField
    class_size: int
    element_order: int
    spr: ExactRatio


class SprReport(BaseModel):
    group: str
    order: int
    rows: List[SprRow]
    spr_total: ExactRatio
    dn: Optional[ExactRatio] = None
    ds: Optional[ExactRatio] = None
    # dn <= spr <= ds, as forced by the pairwise implications
    implication_chain_holds: Optional[bool] = None
    # ds <= spr <= dn, as the ordering is sometimes stated in prose
    prose_ordering_holds: Optional[bool] = None
    chain_violations: int = 0


class OpViolation(BaseModel):
    x: PermutationField
    p: int
    k: int
    spr: ExactRatio


class MonotonicityRow(BaseModel):
    x: PermutationField
    spr_in_group: ExactRatio
    spr_in_subgroup: ExactRatio


class MonotonicityVerdict(BaseModel):
    normal: bool
    checked: int
    counterexamples: List[MonotonicityRow]
    holds: bool


class QuotientVerdict(BaseModel):
    spr_group: ExactRatio
    spr_quotient: ExactRatio
    central: bool
    checked: int
    mismatches: int
    holds: bool


class WreathCycleVerdict(BaseModel):
    base_order: int
    p: int
    n_p: int
    x: PermutationField
    spr: ExactRatio
    bound: ExactRatio
    holds: bool


class PElementCensus(BaseModel):
    p: int
    count: int
    p_part: int
    ratio: ExactRatio


class BoundKind(str, Enum):
    subgroup_sylow = "subgroup-sylow"
    cycle = "cycle"
    mixed_cycle = "mixed-cycle"


class CosetCensus(BaseModel):
    group: str
    normal_order: int
    representative: PermutationField
    p: int
    count: int
    bound: int
    bound_kind: BoundKind
    product: Optional[int] = None
    product_holds: Optional[bool] = None
    notice: Optional[str] = None
    holds: bool


class SumIdentityCheck(BaseModel):
    p: int
    lhs: int
    rhs: int
    holds: bool


class SteinbergCheck(BaseModel):
    p: int
    count: int
    square: int
    holds: bool


class LyonsCheck(BaseModel):
    p: int
    sylow_order: int
    group_order: int
    holds: bool


class CentralizerRatio(BaseModel):
    c: int
    ratio: ExactRatio
    witness: PermutationField


class FrobeniusComparison(BaseModel):
    smaller: ExactRatio
    larger: ExactRatio
    equality_expected: bool
    holds: bool


class DecompositionBound(BaseModel):
    """
    spr(G) split over 2-elements, elements of order `2^n * 3`, and the rest.

    All sums are of spr values over elements, i.e. `|G|` times an average.
    """

    two_elements: ExactRatio
    two_three_elements: ExactRatio
    two_three_elements_projected: ExactRatio
    rest_count: int
    rest_max: ExactRatio
    total: ExactRatio
    holds: bool


class OrderThreeCheck(BaseModel):
    checked: int
    max_spr: Optional[ExactRatio] = None
    holds: bool


class CheckResult(BaseModel):
    name: str
    passed: bool
    details: List[str] = []


class MonolithicCensus(BaseModel):
    """
    The Frobenius-ratio census of one minimal nonsolvable monolithic group.

    Groups whose socle is on the exception list are held to
    `spr(G) <= 1/6` instead of the ratio bound.
    """

    socle_order: int
    exception: bool
    ratio: ExactRatio
    spr_total: Optional[ExactRatio] = None
    holds: Optional[bool] = None
