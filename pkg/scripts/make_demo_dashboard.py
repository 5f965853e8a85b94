#!/usr/bin/env python3
"""Generate a synthetic two-track campaign and build its dashboard.

Writes ontologies, reference alignments, and four matchers' result files
under the output directory, then runs the evaluator exactly like
``aligndash evaluate`` would.  Handy for eyeballing the dashboard with
believable data.
"""

import argparse
import json
import random
import sys
from pathlib import Path

from aligndash.alignio import Alignment, Correspondence, Relation, serialize_alignment
from aligndash.cli import run

EQ = Relation.from_token("=")

TRACKS = {
    "anatomy": {"organ": 60, "cell": 40},
    "conference": {"events": 50},
}

# matcher profiles: (recall of reference, wrong-pair count, confidence floor)
MATCHERS = {
    "StringsAttached": (0.95, 2, 0.9),
    "LexMapper": (0.8, 10, 0.6),
    "GreedyAligner": (0.6, 30, 0.3),
    "CoinFlip": (0.3, 60, 0.1),
}


def write_ontology(path, ns, stems, rng):
    lines = ["@prefix owl: <http://www.w3.org/2002/07/owl#> .",
             "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
             f"@prefix : <{ns}#> ."]
    for i, stem in enumerate(stems):
        kind = ("owl:Class" if i % 4 != 3 else
                rng.choice(["owl:ObjectProperty", "owl:DatatypeProperty"]))
        lines.append(f":{stem} a {kind} ; rdfs:label \"{stem.lower()}\" .")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def make_case(root, track, case_id, size, rng):
    left_ns = f"http://demo.example.org/{track}/{case_id}/left"
    right_ns = f"http://demo.example.org/{track}/{case_id}/right"
    stems = [f"{case_id.capitalize()}Term{i}" for i in range(size)]
    # the right ontology renames a third of the entities so the string
    # baseline cannot find everything
    right_stems = [s if i % 3 else f"Alt{s}" for i, s in enumerate(stems)]

    onto_dir = root / "ontologies"
    onto_dir.mkdir(parents=True, exist_ok=True)
    left_path = onto_dir / f"{track}_{case_id}_left.ttl"
    right_path = onto_dir / f"{track}_{case_id}_right.ttl"
    write_ontology(left_path, left_ns, stems, rng)
    write_ontology(right_path, right_ns, right_stems, rng)

    reference = Alignment(
        (Correspondence(f"{left_ns}#{s}", f"{right_ns}#{r}", EQ)
         for s, r in zip(stems, right_stems)),
        onto1=left_ns, onto2=right_ns)
    ref_path = root / "references" / track / f"{case_id}.rdf"
    ref_path.parent.mkdir(parents=True, exist_ok=True)
    ref_path.write_bytes(serialize_alignment(reference))

    for matcher, (recall, wrong, floor) in MATCHERS.items():
        cells = []
        for cell in reference:
            if rng.random() < recall:
                cells.append(Correspondence(
                    cell.source, cell.target, EQ,
                    round(rng.uniform(floor, 1.0), 3)))
        for _ in range(wrong):
            cells.append(Correspondence(
                f"{left_ns}#{rng.choice(stems)}",
                f"{right_ns}#{rng.choice(right_stems)}", EQ,
                round(rng.uniform(floor * 0.5, 0.9), 3)))
        system = Alignment(cells, onto1=left_ns, onto2=right_ns)
        out = root / "results" / matcher / track / f"{case_id}.rdf"
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(serialize_alignment(system))

    return {"id": case_id,
            "leftOntology": str(left_path.relative_to(root)),
            "rightOntology": str(right_path.relative_to(root)),
            "reference": str(ref_path.relative_to(root)),
            "completeness": "complete"}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("demo"),
                        help="output directory (default: %(default)s)")
    parser.add_argument("--seed", type=int, default=13)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    root = args.out
    config = {"tracks": []}
    for track, cases in TRACKS.items():
        entries = [make_case(root, track, case_id, size, rng)
                   for case_id, size in cases.items()]
        config["tracks"].append({"name": track, "testcases": entries})
    config_path = root / "tracks.json"
    config_path.write_text(json.dumps(config, indent=2), encoding="utf-8")

    return run(["evaluate",
                "--config", str(config_path),
                "--results", str(root / "results"),
                "--out", str(root / "dashboard.html"),
                "--report", str(root / "report.csv"),
                "--title", "Demo campaign dashboard"])


if __name__ == "__main__":
    sys.exit(main())
