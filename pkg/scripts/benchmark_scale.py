#!/usr/bin/env python3
"""Measure dashboard generation time and memory at KnowledgeGraph-track scale."""

import argparse
import random
import resource
import sys
import time
from pathlib import Path

from aligndash.alignio import Relation
from aligndash.dashboard import AnnotatedCell, default_spec, render_dashboard
from aligndash.evaluation import EvalOutcome
from aligndash.ontology import ElementType


def synthetic_rows(n, seed=7):
    rng = random.Random(seed)
    outcomes = list(EvalOutcome)
    types = list(ElementType)
    equal = Relation.from_token("=")
    return [AnnotatedCell(
        track=f"track{i % 3}", testcase=f"tc{i % 40}",
        matcher=f"matcher{i % 12}",
        source=f"http://left.example.org/kg/resource/entity_{i}",
        target=f"http://right.example.org/kg/resource/entity_{i}",
        relation=equal, confidence=round(rng.random(), 6),
        outcome=outcomes[i % 3],
        left_type=types[i % len(types)],
        right_type=types[(i + 3) % len(types)],
        residual=i % 5 == 0 and i % 3 != 1,
    ) for i in range(n)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=200_000)
    parser.add_argument("--out", type=Path, default=Path("scale.html"))
    args = parser.parse_args()

    print(f"building {args.rows} synthetic rows ...")
    rows = synthetic_rows(args.rows)

    started = time.perf_counter()
    html = render_dashboard(default_spec(rows, title="Scale benchmark"))
    elapsed = time.perf_counter() - started

    args.out.write_bytes(html)
    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(f"rendered {args.rows} rows in {elapsed:.2f}s")
    print(f"output: {args.out} ({len(html) / 1e6:.1f} MB)")
    print(f"peak process memory: {peak_mb:.0f} MB")
    return 0


if __name__ == "__main__":
    sys.exit(main())
