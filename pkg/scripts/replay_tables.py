"""Recompute retained variance, measure selection and the integration-class
recommendation from the published eigen tables in data/case_studies.json."""

import argparse
import json
from pathlib import Path

from design_analyzer.pca import PcaResult, recommend_integration_class, select_significant_measure

DATA = Path(__file__).resolve().parents[1] / "data" / "case_studies.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data", type=Path, default=DATA)
    ap.add_argument("-k", type=int, default=3)
    args = ap.parse_args()
    tables = json.loads(args.data.read_text())

    for name, t in tables["measure_pca"].items():
        pca = PcaResult.from_eigenpairs(t["eigenvalues"], t["eigenvectors"], t["labels"])
        print(f"== {name}: measure PCA")
        print("   d   computed   published")
        for d, pub in enumerate(t["variance_retained_pct"], 1):
            print(f"  {d:2d}   {100 * pca.variance_retained[d - 1]:7.2f}%   {pub:7.2f}%")
        print(f"  most significant: {select_significant_measure(pca)} (published: {t['most_significant']})")

    for name, t in tables["class_pca"].items():
        labels = [str(i) for i in range(1, len(t["eigenvectors"][0]) + 1)]
        pca = PcaResult.from_eigenpairs(t["eigenvalues"], t["eigenvectors"], labels)
        rec = recommend_integration_class(pca, args.k)
        print(f"== {name}: class PCA, top {args.k} components")
        print(f"  rule={rec.rule} positions={rec.classes} (published: {t['recommended_position']})")


if __name__ == "__main__":
    main()
