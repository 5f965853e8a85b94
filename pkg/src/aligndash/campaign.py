"""Campaign layout: track configuration files and matcher result folders.

A campaign is described by one JSON file (tracks, test cases, ontology and
reference paths) plus a results directory laid out as
``results/<matcher>/<track>/<testcase>.rdf`` (or ``results/<matcher>.rdf``
with the flat convention for single-test-case runs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .evaluation import GoldStandardCompleteness

CaseKey = tuple[str, str]


class ConfigError(ValueError):
    """Invalid or unusable track configuration; the message names the path."""


@dataclass(frozen=True)
class TestCase:
    track: str
    id: str
    left_ontology: Path
    right_ontology: Path
    reference: Path
    completeness: GoldStandardCompleteness = GoldStandardCompleteness.COMPLETE

    @property
    def key(self) -> CaseKey:
        return (self.track, self.id)


@dataclass(frozen=True)
class Track:
    name: str
    testcases: tuple[TestCase, ...]


@dataclass(frozen=True)
class TrackConfig:
    tracks: tuple[Track, ...]

    @property
    def testcases(self) -> list[TestCase]:
        return [case for track in self.tracks for case in track.testcases]


def _require(mapping: dict, field: str, context: str, path) -> object:
    try:
        return mapping[field]
    except (KeyError, TypeError):
        raise ConfigError(f"{path}: {context} is missing {field!r}") from None


def load_track_config(path) -> TrackConfig:
    """Read and validate a track configuration JSON file.

    Relative ontology/reference paths are resolved against the config file's
    directory; every referenced path must exist.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from None

    tracks = []
    for track_entry in _require(raw, "tracks", "config", path):
        name = str(_require(track_entry, "name", "track", path))
        cases = []
        seen_ids = set()
        for case_entry in _require(track_entry, "testcases",
                                   f"track {name!r}", path):
            case = _load_testcase(case_entry, name, path)
            if case.id in seen_ids:
                raise ConfigError(
                    f"{path}: duplicate testcase id {case.id!r} in "
                    f"track {name!r}")
            seen_ids.add(case.id)
            cases.append(case)
        tracks.append(Track(name=name, testcases=tuple(cases)))
    return TrackConfig(tracks=tuple(tracks))


def _load_testcase(entry: dict, track: str, path: Path) -> TestCase:
    context = f"testcase in track {track!r}"
    case_id = str(_require(entry, "id", context, path))
    base = path.parent
    paths = {}
    for field in ("leftOntology", "rightOntology", "reference"):
        value = Path(str(_require(entry, field, f"testcase {case_id!r}", path)))
        if not value.is_absolute():
            value = base / value
        if not value.exists():
            raise ConfigError(f"{path}: testcase {case_id!r} {field} does not "
                              f"exist: {value}")
        paths[field] = value
    completeness_raw = str(entry.get("completeness", "complete")).lower()
    try:
        completeness = GoldStandardCompleteness(completeness_raw)
    except ValueError:
        raise ConfigError(
            f"{path}: testcase {case_id!r} has unknown completeness "
            f"{completeness_raw!r} (use 'complete' or 'partial')") from None
    return TestCase(track=track, id=case_id,
                    left_ontology=paths["leftOntology"],
                    right_ontology=paths["rightOntology"],
                    reference=paths["reference"],
                    completeness=completeness)


def discover_results(root, config: TrackConfig,
                     flat: bool = False) -> tuple[list[str],
                                                  dict[tuple[str, CaseKey], Path]]:
    """Map matcher result files onto (matcher, track, testcase) triples.

    Returns the sorted matcher names and the files that are present;
    (matcher, testcase) combinations without a file are simply absent and
    are scored as empty alignments by the caller.
    """
    root = Path(root)
    if not root.is_dir():
        raise ConfigError(f"results directory does not exist: {root}")
    found: dict[tuple[str, CaseKey], Path] = {}
    if flat:
        cases = config.testcases
        if len(cases) != 1:
            raise ConfigError(
                f"--flat needs a single-testcase config, got "
                f"{len(cases)} testcases")
        matchers = sorted(p.stem for p in root.glob("*.rdf"))
        for matcher in matchers:
            found[(matcher, cases[0].key)] = root / f"{matcher}.rdf"
        return matchers, found
    matchers = sorted(p.name for p in root.iterdir() if p.is_dir())
    for matcher in matchers:
        for case in config.testcases:
            candidate = root / matcher / case.track / f"{case.id}.rdf"
            if candidate.is_file():
                found[(matcher, case.key)] = candidate
    return matchers, found
