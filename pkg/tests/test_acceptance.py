"""Acceptance gate: one test per release criterion, at stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion; any assertion failure marks that criterion FAILED.
"""

import random
import resource
import time

from aligndash.alignio import (
    Alignment,
    Correspondence,
    Relation,
    parse_alignment,
    serialize_alignment,
)
from aligndash.cli import run
from aligndash.dashboard import (
    AnnotatedCell,
    decode_embedded_dataset,
    default_spec,
    render_dashboard,
)
from aligndash.evaluation import (
    ConfusionCounts,
    EvalOutcome,
    GoldStandardCompleteness,
    classify,
    confusion,
    macro_average,
    metrics,
    micro_average,
    residual_reference,
)
from aligndash.ontology import ElementType

from .oracle import oracle_classify, oracle_confusion, oracle_residual
from .test_cli import EXPECTED_REPORT, evaluate_args, read_report

TOLERANCE = 1e-12


def report(line):
    print(f"\nACCEPTANCE PASS: {line}")


def random_cell_tuples(rng, max_cells=50, pool=14):
    uris = [f"http://ex.org/e{i}" for i in range(pool)]
    tokens = ["=", "<", ">", "%", "?"]
    cells = {}
    for _ in range(rng.randrange(max_cells + 1)):
        key = (rng.choice(uris), rng.choice(uris), rng.choice(tokens))
        cells[key] = (*key, round(rng.random(), 3))
    return list(cells.values())


def to_alignment(cells):
    return Alignment(Correspondence(s, t, Relation.from_token(r), c)
                     for s, t, r, c in cells)


def test_oracle_equivalence_1000_randomized_pairs():
    """classify/confusion/residual match the brute-force oracle exactly."""
    rng = random.Random(20250613)
    started = time.perf_counter()
    for i in range(1000):
        system = random_cell_tuples(rng)
        reference = random_cell_tuples(rng)
        baseline = random_cell_tuples(rng)
        partial = rng.random() < 0.5
        completeness = (GoldStandardCompleteness.PARTIAL if partial
                        else GoldStandardCompleteness.COMPLETE)

        rows = classify(to_alignment(system), to_alignment(reference),
                        completeness)
        oracle_rows = oracle_classify(system, reference, partial=partial)
        got = sorted((c.source, c.target, c.relation.raw, c.confidence,
                      o.value) for c, o in rows)
        want = sorted((s, t, r, conf, o)
                      for (s, t, r, conf), o in oracle_rows)
        assert got == want, f"classify diverged from oracle on instance {i}"

        counts = confusion(rows)
        assert (counts.tp, counts.fp, counts.fn) == \
            oracle_confusion(oracle_rows)

        residual = residual_reference(to_alignment(reference),
                                      to_alignment(baseline))
        want_residual = {(s, t, Relation.from_token(r).kind)
                         for s, t, r in oracle_residual(reference, baseline)}
        assert residual == want_residual

    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"oracle equivalence took {elapsed:.1f}s"
    report(f"oracle equivalence on 1000 randomized pairs ({elapsed:.2f}s)")


def test_metric_fixtures_exact():
    """Hand-computed metric values reproduced to 1e-12."""
    m = metrics(ConfusionCounts(2, 1, 1))
    for value in (m.precision, m.recall, m.f1):
        assert abs(value - 2 / 3) <= TOLERANCE

    micro = micro_average([ConfusionCounts(1, 1, 0), ConfusionCounts(1, 0, 1)])
    for value in (micro.precision, micro.recall, micro.f1):
        assert abs(value - 2 / 3) <= TOLERANCE

    macro = macro_average([ConfusionCounts(1, 1, 0), ConfusionCounts(1, 0, 1)])
    for value in (macro.precision, macro.recall, macro.f1):
        assert abs(value - 0.75) <= TOLERANCE
    report("metric fixtures (2,1,1) and micro/macro pairs exact to 1e-12")


def random_alignment(rng):
    tokens = ["=", "<", ">", "%", "?", "HasInstance", "~"]
    cells = []
    for _ in range(rng.randrange(25)):
        extensions = {}
        for _ in range(rng.randrange(3)):
            key = rng.choice(["note", "method", "origin",
                              "{http://ext.example.org/meta}score"])
            extensions[key] = f"v{rng.randrange(1000)}"
        cells.append(Correspondence(
            source=f"http://l.org/o#{rng.randrange(40)}",
            target=f"http://r.org/o#{rng.randrange(40)}",
            relation=Relation.from_token(rng.choice(tokens)),
            confidence=rng.choice([rng.random(), 1.0, 0.0,
                                   round(rng.random(), 6), 1.5, -0.25]),
            extensions=extensions))
    return Alignment(cells,
                     onto1=rng.choice(["", "http://l.org/o"]),
                     onto2=rng.choice(["", "http://r.org/o"]),
                     level=rng.choice(["0", "2EDOAL"]),
                     type=rng.choice(["**", "11", "1n"]))


def test_roundtrip_200_randomized_alignments():
    """parse(serialize(a)) == a, duplicate-key inputs reach their fixpoint."""
    rng = random.Random(97)
    for i in range(200):
        alignment = random_alignment(rng)
        assert parse_alignment(serialize_alignment(alignment)) == alignment, \
            f"round-trip failed on alignment {i}"

    # duplicate-key documents: parse -> dedup fixpoint -> stable round trip
    for i in range(20):
        alignment = random_alignment(rng)
        cells = list(alignment)
        if not cells:
            continue
        duplicated = Alignment(cells, onto1=alignment.onto1,
                               onto2=alignment.onto2, level=alignment.level,
                               type=alignment.type)
        data = serialize_alignment(duplicated)
        # inject textual duplicates with lower confidence: max-confidence
        # dedup must keep the originals
        extra = serialize_alignment(Alignment(
            [Correspondence(c.source, c.target, c.relation,
                            c.confidence - 1.0) for c in cells]))
        merged = data.replace(
            b"</Alignment>",
            extra.split(b"<Alignment>")[1].split(b"</Alignment>")[0]
            .split(b"<xml>yes</xml>")[1] + b"</Alignment>")
        parsed = parse_alignment(merged)
        assert parsed == duplicated, f"dedup fixpoint failed on document {i}"
    report("round-trip identity on 200 randomized alignments + dedup inputs")


def synthetic_rows(n):
    rng = random.Random(7)
    outcomes = list(EvalOutcome)
    types = list(ElementType)
    rows = []
    for i in range(n):
        outcome = outcomes[i % 3]
        rows.append(AnnotatedCell(
            track=f"track{i % 3}", testcase=f"tc{i % 40}",
            matcher=f"matcher{i % 12}",
            source=f"http://left.example.org/kg/resource/entity_{i}",
            target=f"http://right.example.org/kg/resource/entity_{i}",
            relation=Relation.from_token("="),
            confidence=round(rng.random(), 6),
            outcome=outcome,
            left_type=types[i % len(types)],
            right_type=types[(i + 3) % len(types)],
            residual=(outcome is not EvalOutcome.FALSE_POSITIVE
                      and i % 5 == 0)))
    return rows


def test_scale_200k_rows_renders_within_budget(tmp_path):
    """200,000 rows: < 30 s to render, < 2 GB peak, fully self-contained."""
    rows = synthetic_rows(200_000)
    spec = default_spec(rows, title="Scale check")

    started = time.perf_counter()
    html = render_dashboard(spec)
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"render took {elapsed:.1f}s"

    peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    assert peak_kb < 2 * 1024 * 1024, f"peak memory {peak_kb / 1024:.0f} MB"

    import re
    assert re.search(rb"""(?:src|href)\s*=\s*["']?https?://""", html) is None

    out = tmp_path / "scale.html"
    out.write_bytes(html)
    assert out.stat().st_size > 10 * 1024 * 1024  # the data really is inline

    decoded = decode_embedded_dataset(html)
    assert decoded == rows
    report(f"200k-row dashboard in {elapsed:.2f}s, "
           f"peak {peak_kb / 1024:.0f} MB, no external references")


def test_end_to_end_miniature_campaign(minicampaign_dir, tmp_path, capsys):
    """Fixture campaign: every report number hand-verified; missing result
    file becomes all-FN rows plus a warning."""
    exit_code = run(evaluate_args(minicampaign_dir, tmp_path))
    captured = capsys.readouterr()
    assert exit_code == 0
    assert read_report(tmp_path / "report.csv") == EXPECTED_REPORT
    assert "no result file for matcher 'matcherB' on mini/tc2" in captured.err

    dataset = decode_embedded_dataset((tmp_path / "dash.html").read_bytes())
    missing = [r for r in dataset
               if r.matcher == "matcherB" and r.testcase == "tc2"]
    assert len(missing) == 3
    assert all(r.outcome is EvalOutcome.FALSE_NEGATIVE for r in missing)
    report("end-to-end miniature campaign matches hand-verified report")


def test_partition_law_on_complete_fixtures(minicampaign):
    """tp+fn = |reference| and tp+fp = |system| on every Complete fixture."""
    checked = 0
    for matcher, case, system in minicampaign.results():
        reference = minicampaign.references[case.key]
        counts = confusion(classify(system, reference, case.completeness))
        assert counts.tp + counts.fn == len(reference), (matcher, case.id)
        assert counts.tp + counts.fp == len(system), (matcher, case.id)
        checked += 1

    rng = random.Random(11)
    for _ in range(200):
        system = to_alignment(random_cell_tuples(rng))
        reference = to_alignment(random_cell_tuples(rng))
        counts = confusion(classify(system, reference,
                                    GoldStandardCompleteness.COMPLETE))
        assert counts.tp + counts.fn == len(reference)
        assert counts.tp + counts.fp == len(system)
        checked += 1
    report(f"partition law held on {checked} complete-gold evaluations")
