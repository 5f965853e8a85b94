"""Brute-force set-algebra reference for alignment evaluation.

Works on plain tuples only, never on package types, so it stays an
independent cross-check for the engine.  A cell is a 4-tuple
``(source, target, relation_kind, confidence)``; its identity key is the
first three fields.
"""


def key_of(cell):
    return cell[:3]


def oracle_classify(system, reference, partial=False):
    """Classify system cells against reference cells by exhaustive set algebra.

    Returns a list of (cell, outcome) pairs with outcome in {"TP", "FP", "FN"}.
    Under ``partial`` gold standards, a would-be FP whose source and target
    both never occur in the reference is dropped entirely.
    """
    ref_keys = {key_of(c) for c in reference}
    sys_keys = {key_of(c) for c in system}
    ref_uris = set()
    for s, t, _, _ in reference:
        ref_uris.add(s)
        ref_uris.add(t)

    rows = []
    for cell in system:
        if key_of(cell) in ref_keys:
            rows.append((cell, "TP"))
        elif partial and cell[0] not in ref_uris and cell[1] not in ref_uris:
            continue
        else:
            rows.append((cell, "FP"))
    for cell in reference:
        if key_of(cell) not in sys_keys:
            rows.append((cell, "FN"))
    return rows


def oracle_confusion(rows):
    """Tally (tp, fp, fn) from oracle_classify output."""
    outcomes = [o for _, o in rows]
    return (outcomes.count("TP"), outcomes.count("FP"), outcomes.count("FN"))


def oracle_residual(reference, baseline):
    """Keys of reference cells absent from the baseline: plain set difference."""
    return {key_of(c) for c in reference} - {key_of(c) for c in baseline}
