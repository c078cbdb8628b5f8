"""Messiaen's compositional arithmetic.

Non-retrogradable rhythms over exact rational durations, modes of
limited transposition on the integers modulo 12, and symmetric
permutations with their orbit tables, plus the catalog of quoted
deçî-tâlas and Quatuor measures.
"""

from .errors import (
    BadPredicate,
    BadRatio,
    CapExceeded,
    DegenerateSet,
    DomainError,
    DuplicateId,
    Empty,
    MessiaenError,
    NoCenter,
    NonIntegerTotal,
    NotABijection,
    NoVoices,
    ParseError,
    SizeMismatch,
    TooShort,
    UnitMismatch,
)
# Note: the rhythm() convenience constructor is not re-exported here so
# that messiaen.rhythm keeps naming the submodule.
from .rhythm import (
    AugmentationChain,
    CanonSchedule,
    InterleaveProfile,
    Rhythm,
    augment,
    build_canon,
    detect_augmentation_chain,
    eliminate_extremes,
    interleave_profile,
    is_non_retrogradable,
    is_prime_total,
    parse_rhythm,
    retrograde,
    scale_central,
    symmetric_amplification,
    total_duration,
)
from .z12 import (
    MODES,
    ModeId,
    classify_mode,
    detect_truncated,
    enumerate_limited,
    is_limited_transposition,
    minimal_period,
    parse_pcset,
    pcset,
    transpose,
)
from .perm import (
    OrbitTable,
    Perm,
    chromatic_durations,
    chronochromie,
    fan,
    identity,
    orbit_table,
    parse_perm,
    permutation_count,
)
from .catalog import (
    AnalysisReport,
    ModeEntry,
    TalaEntry,
    analyze_entry,
    analyze_rhythm,
    filter_catalog,
    load_catalog,
    load_modes,
    seed_modes,
    seed_quatuor,
    seed_talas,
    serialize_catalog,
)

__version__ = "0.1.0"
