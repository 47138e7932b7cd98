"""The six per-class coupling measures and the PCA input matrix."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EmptyCorpus, UnknownClass
from .interactions import InteractionGraph, InteractionKind

MEASURES = ("NUCD", "TNUCD", "NUCC", "TNUCC", "ClassCoupling", "VisibleMembers")

# inheritance is a CCIG edge but not a "dependency"
DEPENDENCY_KINDS = frozenset({InteractionKind.PARAM_PASS, InteractionKind.RETURN_TYPE, InteractionKind.OBJECT_DECL})


class Orientation(str, Enum):
    CLASSES_BY_MEASURES = "classes_by_measures"
    MEASURES_BY_CLASSES = "measures_by_classes"


@dataclass(frozen=True)
class MetricVector:
    class_id: int
    nucd: int
    tnucd: int
    nucc: int
    tnucc: int
    class_coupling: int
    visible_members: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.nucd, self.tnucd, self.nucc, self.tnucc, self.class_coupling, self.visible_members)


@dataclass
class MetricsMatrix:
    values: np.ndarray
    row_labels: list[str]
    col_labels: list[str]
    orientation: Orientation

    def transposed(self) -> "MetricsMatrix":
        other = (
            Orientation.MEASURES_BY_CLASSES
            if self.orientation == Orientation.CLASSES_BY_MEASURES
            else Orientation.CLASSES_BY_MEASURES
        )
        return MetricsMatrix(self.values.T.copy(), list(self.col_labels), list(self.row_labels), other)

    def class_coupling(self) -> dict[str, float]:
        """ClassCoupling value per class label, whichever way the matrix is laid out."""
        m = self if self.orientation == Orientation.CLASSES_BY_MEASURES else self.transposed()
        if "ClassCoupling" not in m.col_labels:
            return {}
        j = m.col_labels.index("ClassCoupling")
        return {lab: float(m.values[i, j]) for i, lab in enumerate(m.row_labels)}


def dependency_edges(graph: InteractionGraph) -> Counter:
    """Multiset of (source, target) over param, return and object-declaration evidences."""
    return Counter((e.source, e.target) for e in graph.evidences if e.kind in DEPENDENCY_KINDS)


def compute_class_metrics(graph: InteractionGraph, cls: int | str, _deps: Counter | None = None) -> MetricVector:
    cid = graph.node_id(cls) if isinstance(cls, str) else cls
    nodes = {n.id: n for n in graph.nodes}
    if cid is None or cid not in nodes:
        raise UnknownClass(f"unknown class: {cls!r}")
    deps = dependency_edges(graph) if _deps is None else _deps

    out_counts = [c for (s, _), c in deps.items() if s == cid]
    in_counts = [c for (_, t), c in deps.items() if t == cid]
    client = sum(1 for s, _ in graph.ccig_edges if s == cid)
    server = sum(1 for _, t in graph.ccig_edges if t == cid)
    return MetricVector(
        class_id=cid,
        nucd=len(out_counts),
        tnucd=sum(out_counts),
        nucc=len(in_counts),
        tnucc=sum(in_counts),
        class_coupling=client + server,
        visible_members=nodes[cid].visible_members,
    )


def all_class_metrics(graph: InteractionGraph) -> list[MetricVector]:
    deps = dependency_edges(graph)
    return [compute_class_metrics(graph, n.id, deps) for n in graph.nodes]


def metrics_matrix(graph: InteractionGraph, orientation: Orientation | str = Orientation.CLASSES_BY_MEASURES) -> MetricsMatrix:
    if not graph.nodes:
        raise EmptyCorpus("no user-defined classes found")
    orientation = Orientation(orientation)
    ordered = sorted(graph.nodes, key=lambda n: n.id)
    vecs = {v.class_id: v for v in all_class_metrics(graph)}
    values = np.array([vecs[n.id].as_tuple() for n in ordered], dtype=float)
    m = MetricsMatrix(values, [n.name for n in ordered], list(MEASURES), Orientation.CLASSES_BY_MEASURES)
    return m if orientation == Orientation.CLASSES_BY_MEASURES else m.transposed()
