"""Generate a random Java corpus, run the full pipeline on it and time each stage.

    python scripts/synthetic_corpus.py --classes 40 --seed 1 --keep out/
"""

import argparse
import random
import tempfile
import time
from pathlib import Path

from design_analyzer.interactions import build_interaction_graph
from design_analyzer.java_frontend import build_registry, load_corpus
from design_analyzer.metrics import metrics_matrix
from design_analyzer.pca import recommend_integration_class, run_pca, select_significant_measure

EXTERNAL = ["String", "int", "double", "java.util.List<String>", "Object"]


def make_class(name, others, rng):
    lines = []
    header = f"public class {name}"
    if others and rng.random() < 0.3:
        header += f" extends {rng.choice(others)}"
    lines.append(header + " {")
    pool = others + EXTERNAL
    for k in range(rng.randint(0, 5)):
        t = rng.choice(pool)
        init = f" = new {t}()" if t in others and rng.random() < 0.5 else ""
        lines.append(f"    {rng.choice(['private ', 'public ', ''])}{t} f{k}{init};")
    for k in range(rng.randint(0, 4)):
        ret = rng.choice(pool + ["void"])
        params = ", ".join(f"{rng.choice(pool)} p{j}" for j in range(rng.randint(0, 3)))
        lines.append(f"    public {ret} m{k}({params}) {{")
        if others and rng.random() < 0.4:
            t = rng.choice(others)
            lines.append(f"        {t} local = new {t}();")
        lines.append("        throw new UnsupportedOperationException();")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--classes", type=int, default=25)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-k", type=int, default=3)
    ap.add_argument("--keep", type=Path, help="write the corpus here instead of a temp dir")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    names = [f"C{i:03d}" for i in range(args.classes)]
    root = args.keep or Path(tempfile.mkdtemp(prefix="synthetic_java_"))
    root.mkdir(parents=True, exist_ok=True)
    for i, name in enumerate(names):
        others = [n for n in names if n != name]
        (root / f"{name}.java").write_text(make_class(name, rng.sample(others, min(4, len(others))), rng))

    t0 = time.perf_counter()
    corpus = load_corpus([root])
    t1 = time.perf_counter()
    graph = build_interaction_graph(corpus.decls, build_registry(corpus.decls))
    t2 = time.perf_counter()
    by_measure = metrics_matrix(graph)
    t3 = time.perf_counter()
    pca_m = run_pca(by_measure)
    pca_c = run_pca(by_measure.transposed())
    t4 = time.perf_counter()

    print(f"corpus: {root} ({len(corpus.files)} files, {len(graph.nodes)} classes)")
    print(f"evidences: {len(graph.evidences)}, CCIG edges: {len(graph.ccig_edges)}")
    print(f"parse {1e3 * (t1 - t0):.1f} ms, graph {1e3 * (t2 - t1):.1f} ms, "
          f"metrics {1e3 * (t3 - t2):.1f} ms, pca {1e3 * (t4 - t3):.1f} ms")
    print("variance retained:", ", ".join(f"{100 * v:.2f}%" for v in pca_m.variance_retained[:3]))
    print("most significant measure:", select_significant_measure(pca_m))
    rec = recommend_integration_class(pca_c, min(args.k, len(graph.nodes)), by_measure.class_coupling())
    print(f"recommendation: rule={rec.rule} classes={rec.classes}")


if __name__ == "__main__":
    main()
