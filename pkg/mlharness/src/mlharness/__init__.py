"""Learning harness for the quantum-battery dataset.

Consumes the dataset file emitted by the simulator's sweep pipeline and
provides rule-plus-clustering class labels, group-aware supervised
classification over named feature subspaces, permutation feature importance,
a binary log-odds analysis of the high-ergotropy regime, and report
rendering.
"""
from .data import (
    AUX_COLUMNS,
    COLUMNS,
    FEATURE_COLUMNS,
    IMPORTANCE_COLUMNS,
    LOGIT_FEATURES,
    MAPPINGS,
    NUMERIC_COLUMNS,
    Dataset,
    load_dataset,
)
from .evaluation import EvaluationResult, evaluate
from .importance import ImportanceResult, fixed_model, permutation_importance
from .labeling import Labeler, LabelResult, label_classes
from .logit import LogitResult, SeparableWarning, logistic_high_class
from .training import (
    DEFAULT_BUDGET,
    FAMILIES,
    OBJECTIVES,
    DegenerateClasses,
    InsufficientGroups,
    TrainedModel,
    train_classifier,
)

__version__ = "0.1.0"

__all__ = [
    "AUX_COLUMNS",
    "COLUMNS",
    "FEATURE_COLUMNS",
    "IMPORTANCE_COLUMNS",
    "LOGIT_FEATURES",
    "MAPPINGS",
    "NUMERIC_COLUMNS",
    "Dataset",
    "load_dataset",
    "EvaluationResult",
    "evaluate",
    "ImportanceResult",
    "fixed_model",
    "permutation_importance",
    "Labeler",
    "LabelResult",
    "label_classes",
    "LogitResult",
    "SeparableWarning",
    "logistic_high_class",
    "DEFAULT_BUDGET",
    "FAMILIES",
    "OBJECTIVES",
    "DegenerateClasses",
    "InsufficientGroups",
    "TrainedModel",
    "train_classifier",
    "__version__",
]
