"""Design-pattern recovery, coupling metrics and PCA for Java codebases."""

from .errors import AnalysisError
from .interactions import InteractionEvidence, InteractionGraph, InteractionKind, build_interaction_graph
from .java_frontend import ClassDecl, build_registry, load_corpus, parse_classes, parse_source, tokenize
from .metrics import MEASURES, MetricsMatrix, Orientation, compute_class_metrics, metrics_matrix
from .pca import PcaResult, recommend_integration_class, run_pca, select_significant_measure

__all__ = [
    "AnalysisError",
    "ClassDecl",
    "InteractionEvidence",
    "InteractionGraph",
    "InteractionKind",
    "MEASURES",
    "MetricsMatrix",
    "Orientation",
    "PcaResult",
    "build_interaction_graph",
    "build_registry",
    "compute_class_metrics",
    "load_corpus",
    "metrics_matrix",
    "parse_classes",
    "parse_source",
    "recommend_integration_class",
    "run_pca",
    "select_significant_measure",
    "tokenize",
]
