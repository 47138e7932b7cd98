"""Command-line driver: sources -> interaction graph -> metrics -> PCA -> reports.

Exit status is 0 on success, 1 on analysis errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import reporting
from .errors import AnalysisError, ZeroTrace
from .interactions import InteractionGraph, build_interaction_graph
from .java_frontend import build_registry, load_corpus
from .metrics import MetricsMatrix, Orientation, metrics_matrix
from .pca import recommend_integration_class, run_pca, select_significant_measure

log = logging.getLogger("design_analyzer")

COMMANDS = ("analyze", "metrics", "pca", "recommend", "replay")
FORMATS = {
    "analyze": ("dot", "json"),
    "metrics": ("csv",),
    "pca": ("text", "json"),
    "recommend": ("text", "json"),
    "replay": ("text", "json"),
}
MODES = {"measure": Orientation.CLASSES_BY_MEASURES, "class": Orientation.MEASURES_BY_CLASSES}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[Path] = field(default_factory=list)
    format: str = "text"
    components_k: int = 3
    lenient: bool = False
    out: Path | None = None
    mode: str = "measure"
    matrix: Path | None = None
    bundle: str | None = None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="design-analyzer", description="Recover class interaction graphs and coupling metrics from Java sources.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, with_inputs=True):
        if with_inputs:
            p.add_argument("inputs", nargs="+", type=Path, help="Java files or directories")
            p.add_argument("--lenient", action="store_true", help="skip files that fail to parse")
        p.add_argument("-o", "--out", type=Path, help="output file (default: stdout)")

    p = sub.add_parser("analyze", help="emit the class interaction graph")
    common(p)
    p.add_argument("--format", choices=FORMATS["analyze"], default="dot")
    p.add_argument("--bundle", metavar="STEM", help="also write STEM.dot, STEM.json, STEM.metrics.csv and STEM.pca.txt")
    p.add_argument("-k", "--components", type=_positive_int, default=3)

    p = sub.add_parser("metrics", help="emit the coupling metric table as CSV")
    common(p)
    p.add_argument("--format", choices=FORMATS["metrics"], default="csv")

    for name, help_ in (("pca", "principal component report"), ("recommend", "integration-class recommendation")):
        p = sub.add_parser(name, help=help_)
        common(p)
        p.add_argument("--format", choices=FORMATS[name], default="text")
        p.add_argument("-k", "--components", type=_positive_int, default=3)
        if name == "pca":
            p.add_argument("--mode", choices=sorted(MODES), default="measure")

    p = sub.add_parser("replay", help="run the PCA on a metrics CSV instead of sources")
    common(p, with_inputs=False)
    p.add_argument("--matrix", type=Path, required=True)
    p.add_argument("--format", choices=FORMATS["replay"], default="text")
    p.add_argument("-k", "--components", type=_positive_int, default=3)
    p.add_argument("--mode", choices=sorted(MODES), default="measure")
    return parser


def validate_args(argv: list[str]) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        raise UsageError(parser.format_usage() + "design-analyzer: error: a command is required")
    if ns.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    mode = getattr(ns, "mode", "measure")
    if ns.command == "recommend":
        mode = "class"
    return RunConfig(
        command=ns.command,
        inputs=list(getattr(ns, "inputs", []) or []),
        format=ns.format,
        components_k=getattr(ns, "components", 3),
        lenient=getattr(ns, "lenient", False),
        out=ns.out,
        mode=mode,
        matrix=getattr(ns, "matrix", None),
        bundle=getattr(ns, "bundle", None),
    )


def analyze_sources(inputs, lenient: bool = False) -> InteractionGraph:
    corpus = load_corpus(inputs, lenient=lenient)
    if not corpus.decls:
        raise AnalysisError("no user-defined classes found")
    return build_interaction_graph(corpus.decls, build_registry(corpus.decls))


def pca_document(matrix: MetricsMatrix, mode: str, k: int, recommend_only: bool = False) -> dict:
    """Report document for a classes_by_measures matrix analysed in ``mode``."""
    oriented = matrix if MODES[mode] == matrix.orientation else matrix.transposed()
    result = run_pca(oriented)
    selection = recommendation = None
    if mode == "measure":
        try:
            selection = select_significant_measure(result)
        except ZeroTrace as exc:
            log.warning("%s", exc)
    else:
        recommendation = recommend_integration_class(result, k, matrix.class_coupling())
    doc = reporting.pca_report(result, selection, recommendation, mode=mode)
    if recommend_only:
        return {"recommendation": doc["recommendation"]}
    return doc


def _render_pca(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return reporting.dumps(doc)
    if set(doc) == {"recommendation"}:
        return "\n".join(reporting.format_recommendation(doc["recommendation"])) + "\n"
    return reporting.format_pca_report(doc)


def write_bundle(stem: str, graph: InteractionGraph, k: int) -> list[Path]:
    matrix = metrics_matrix(graph)
    measure = reporting.format_pca_report(pca_document(matrix, "measure", k))
    cls_k = min(k, len(graph.nodes))
    classes = reporting.format_pca_report(pca_document(matrix, "class", cls_k))
    files = {
        f"{stem}.dot": reporting.to_dot(graph),
        f"{stem}.json": reporting.dumps(reporting.to_json(graph)),
        f"{stem}.metrics.csv": reporting.metrics_csv(matrix),
        f"{stem}.pca.txt": measure + "\n" + classes,
    }
    written = []
    for name, text in files.items():
        path = Path(name)
        path.write_text(text, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def run(config: RunConfig) -> str:
    """Execute one command and return the artifact text."""
    if config.format not in FORMATS[config.command]:
        raise UsageError(f"--format {config.format} is not valid for {config.command}")
    if config.command == "replay":
        matrix = reporting.read_matrix_csv(config.matrix.read_text(encoding="utf-8"))
        return _render_pca(pca_document(matrix, config.mode, config.components_k), config.format)

    if not config.inputs:
        raise UsageError(f"{config.command} needs at least one input path")
    graph = analyze_sources(config.inputs, config.lenient)
    if config.command == "analyze":
        if config.bundle:
            for p in write_bundle(config.bundle, graph, config.components_k):
                log.info("wrote %s", p)
        if config.format == "json":
            return reporting.dumps(reporting.to_json(graph))
        return reporting.to_dot(graph)
    matrix = metrics_matrix(graph)
    if config.command == "metrics":
        return reporting.metrics_csv(matrix)
    doc = pca_document(matrix, config.mode, config.components_k, recommend_only=config.command == "recommend")
    return _render_pca(doc, config.format)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        config = validate_args(sys.argv[1:] if argv is None else argv)
        text = run(config)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (AnalysisError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text, encoding="utf-8", newline="\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
