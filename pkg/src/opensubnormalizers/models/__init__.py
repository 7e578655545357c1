from .catalog import CatalogEntry, Family
from .census import CensusFormat, CensusRecord
from .config import DEFAULT_CAPS, Caps, VerifyConfig
from .reports import (
    BoundKind,
    CentralizerRatio,
    CheckResult,
    CosetCensus,
    DecompositionBound,
    FrobeniusComparison,
    LyonsCheck,
    MonolithicCensus,
    MonotonicityRow,
    MonotonicityVerdict,
    OpViolation,
    OrderThreeCheck,
    PElementCensus,
    QuotientVerdict,
    SprReport,
    SprRow,
    SteinbergCheck,
    SubnormalizerReport,
    SumIdentityCheck,
    WreathCycleVerdict,
)
