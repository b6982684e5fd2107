"""Hierarchical multi-criteria decision engine built on pairwise comparisons.

Model a goal as a tree of criteria over a set of alternatives, elicit
pairwise judgments on a 1-9 ratio scale, derive priority weights by the
principal eigenvector (or row geometric mean), validate judgment
consistency, and synthesize a ranked result with sensitivity analysis.
"""

from ahpkit.consistency import (
    DEFAULT_CR_THRESHOLD,
    RANDOM_INDEX,
    ConsistencyReport,
    check_consistency,
    estimate_random_index,
    suggest_revision,
)
from ahpkit.engine import Evaluation, evaluate, node_matrix
from ahpkit.errors import AhpError, ConvergenceError, SchemaError, ValidationError
from ahpkit.model import (
    CANONICAL_VALUES,
    GOAL_ID,
    SCALE_TABLE,
    Alternative,
    ComparisonSet,
    CriterionNode,
    DecisionHierarchy,
    Defect,
    JudgmentMatrix,
    JudgmentSet,
    PairJudgment,
    SaatyJudgment,
    build_matrix,
    canonical_value,
    scale_lookup,
    validate_hierarchy,
)
from ahpkit.priority import (
    EIGENVECTOR,
    GEOMETRIC_MEAN,
    DerivationSettings,
    PriorityVector,
    derive,
    derive_eigenvector,
    derive_geometric_mean,
)
from ahpkit.store import (
    ModelDocument,
    export_results,
    load_model,
    read_model,
    save_model,
    write_model,
)
from ahpkit.synthesis import (
    SensitivityQuery,
    SensitivityResult,
    SweepPoint,
    SynthesisResult,
    WeightedModel,
    global_weights,
    rank,
    score_alternatives,
    sensitivity_scan,
)

__version__ = "0.1.0"

__all__ = [
    "AhpError",
    "Alternative",
    "CANONICAL_VALUES",
    "ComparisonSet",
    "ConsistencyReport",
    "ConvergenceError",
    "CriterionNode",
    "DEFAULT_CR_THRESHOLD",
    "DecisionHierarchy",
    "Defect",
    "DerivationSettings",
    "EIGENVECTOR",
    "Evaluation",
    "GEOMETRIC_MEAN",
    "GOAL_ID",
    "JudgmentMatrix",
    "JudgmentSet",
    "ModelDocument",
    "PairJudgment",
    "PriorityVector",
    "RANDOM_INDEX",
    "SCALE_TABLE",
    "SaatyJudgment",
    "SchemaError",
    "SensitivityQuery",
    "SensitivityResult",
    "SweepPoint",
    "SynthesisResult",
    "ValidationError",
    "WeightedModel",
    "build_matrix",
    "canonical_value",
    "check_consistency",
    "derive",
    "derive_eigenvector",
    "derive_geometric_mean",
    "estimate_random_index",
    "evaluate",
    "export_results",
    "global_weights",
    "load_model",
    "node_matrix",
    "rank",
    "read_model",
    "save_model",
    "scale_lookup",
    "score_alternatives",
    "sensitivity_scan",
    "suggest_revision",
    "validate_hierarchy",
    "write_model",
    "__version__",
]
