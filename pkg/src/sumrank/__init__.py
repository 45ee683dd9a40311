"""Exact arithmetic for the sum-rank metric: sphere and ball volumes,
packing and Singleton-like bounds, non-existence criteria for linear
perfect codes, and an independent brute-force verification oracle.
"""

from .bounds import (
    DivisibilityVerdict,
    QPowerExpr,
    SingletonData,
    VolumeBoundsReport,
    compare_q_power,
    packing_bound,
    perfection_divisibility,
    singleton_bound,
    volume_bounds_check,
)
from .combinat import (
    PrimePowerField,
    as_q_power,
    binomial,
    compositions,
    exact_div,
    p_adic_valuation,
    prime_power_decomposition,
    q_binomial,
    rank_count,
)
from .fields import (
    EnumerationCapExceeded,
    Field,
    FieldMatrix,
    enumerate_matrices,
    make_field,
    rank,
)
from .oracle import (
    GeneratorFormatError,
    GeneratorSet,
    PerfectionReport,
    WeightDistribution,
    code_min_distance,
    enumerate_distribution,
    load_generator_file,
    parse_generator_document,
    verify_perfect,
)
from .rules import (
    Conclusion,
    EvaluationResult,
    ParamSet,
    RuleVerdict,
    RULE_REGISTRY,
    evaluate_all,
    sweep,
)
from .tables import (
    AuditReport,
    EntryStatus,
    TableEntry,
    audit_report,
    regenerate_table,
    reported_exclusions,
)
from .volumes import (
    BlockProfile,
    VolumeReport,
    ball_volume,
    closed_form_v1,
    closed_form_v2,
    congruence_poly,
    space_size,
    sphere_volume,
    two_block_closed_form,
)

__version__ = "0.1.0"
