"""DOT, JSON, CSV and text serializers.

Every writer sorts its output so identical inputs give byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

import numpy as np

from .errors import WrongOrientation
from .interactions import KIND_ORDER, InteractionGraph, InteractionKind
from .metrics import MEASURES, MetricsMatrix, Orientation
from .pca import FALLBACK_RULE, PcaResult, Recommendation

SCHEMA_VERSION = 1


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _sorted_edges(graph: InteractionGraph):
    names = {n.id: n.name for n in graph.nodes}
    counts = graph.kind_counts()
    rows = []
    for (s, t), c in counts.items():
        kinds = {k.value: c[k] for k in KIND_ORDER if c[k]}
        rows.append((names[s], names[t], kinds, sum(c.values())))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def to_dot(graph: InteractionGraph) -> str:
    lines = ["digraph design_pattern {"]
    for name in sorted(n.name for n in graph.nodes):
        lines.append(f"  {_q(name)};")
    for src, dst, kinds, total in _sorted_edges(graph):
        label = f"{','.join(kinds)} x{total}"
        lines.append(f"  {_q(src)} -> {_q(dst)} [label={_q(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: InteractionGraph) -> dict[str, Any]:
    classes = [
        {"name": n.name, "kind": n.kind, "file": n.file, "line": n.line, "visible_members": n.visible_members}
        for n in sorted(graph.nodes, key=lambda n: n.name)
    ]
    edges = [
        {"source": s, "target": t, "kinds": kinds, "total": total}
        for s, t, kinds, total in _sorted_edges(graph)
    ]
    return {"schema_version": SCHEMA_VERSION, "classes": classes, "edges": edges}


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_graph_json(text: str) -> tuple[list[str], dict[tuple[str, str], dict[str, int]]]:
    """Class names and per-edge kind counts from a document written by :func:`to_json`."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kinds = {k.value for k in InteractionKind}
    edges = {}
    for e in doc["edges"]:
        bad = set(e["kinds"]) - kinds
        if bad:
            raise ValueError(f"unknown interaction kinds {sorted(bad)}")
        if sum(e["kinds"].values()) != e["total"]:
            raise ValueError(f"edge {e['source']}->{e['target']}: total does not match kind counts")
        edges[(e["source"], e["target"])] = dict(e["kinds"])
    return [c["name"] for c in doc["classes"]], edges


def _num(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def metrics_csv(matrix: MetricsMatrix | None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", *MEASURES])
    if matrix is None:
        return buf.getvalue()
    if matrix.orientation != Orientation.CLASSES_BY_MEASURES:
        raise WrongOrientation("metrics CSV needs the classes_by_measures orientation")
    for label, row in zip(matrix.row_labels, matrix.values):
        w.writerow([label, *(_num(v) for v in row)])
    return buf.getvalue()


def read_matrix_csv(text: str) -> MetricsMatrix:
    """Parse a labelled matrix CSV: first column row labels, header row column labels."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ValueError("empty matrix file")
    header, body = rows[0], rows[1:]
    width = len(header)
    for r in body:
        if len(r) != width:
            raise ValueError(f"row {r[0]!r} has {len(r)} fields, expected {width}")
    values = np.array([[float(x) for x in r[1:]] for r in body], dtype=float).reshape(len(body), width - 1)
    return MetricsMatrix(values, [r[0] for r in body], header[1:], Orientation.CLASSES_BY_MEASURES)


def pca_report(pca: PcaResult, selection: str | None = None,
               recommendation: Recommendation | None = None, mode: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "labels": list(pca.labels),
        "components": [
            {"number": i + 1, "eigenvalue": float(val), "eigenvector": [float(x) for x in vec]}
            for i, (val, vec) in enumerate(zip(pca.eigenvalues, pca.eigenvectors))
        ],
        "variance_retained": [float(v) for v in pca.variance_retained],
    }
    if mode:
        doc["mode"] = mode
    if selection is not None:
        doc["selected_measure"] = selection
    if recommendation is not None:
        doc["recommendation"] = {
            "rule": recommendation.rule,
            "k": recommendation.k,
            "classes": list(recommendation.classes),
            "coupling": {c: recommendation.coupling[c] for c in recommendation.classes if c in recommendation.coupling},
        }
    return doc


def format_recommendation(rec: dict[str, Any]) -> list[str]:
    lines = [f"recommendation (k={rec['k']}): rule={rec['rule']}"]
    if not rec["classes"]:
        lines.append("  (no candidate class)")
    for c in rec["classes"]:
        if rec["rule"] == FALLBACK_RULE and c in rec["coupling"]:
            lines.append(f"  {c} (ClassCoupling={_num(rec['coupling'][c])})")
        else:
            lines.append(f"  {c}")
    return lines


def format_pca_report(doc: dict[str, Any]) -> str:
    lines = []
    if "mode" in doc:
        lines.append(f"mode: {doc['mode']}")
    lines.append("labels: " + ", ".join(doc["labels"]))
    lines.append("component\teigenvector\teigenvalue")
    for comp in doc["components"]:
        vec = ", ".join(f"{x:.6f}" for x in comp["eigenvector"])
        lines.append(f"{comp['number']}\t({vec})\t{comp['eigenvalue']:.4f}")
    lines.append("variance retained")
    if not doc["variance_retained"]:
        lines.append("  undefined (zero total variance)")
    for d, v in enumerate(doc["variance_retained"], 1):
        lines.append(f"  {d}\t{100 * v:.2f}%")
    if "selected_measure" in doc:
        lines.append(f"most significant measure: {doc['selected_measure']}")
    if "recommendation" in doc:
        lines.extend(format_recommendation(doc["recommendation"]))
    return "\n".join(lines) + "\n"
