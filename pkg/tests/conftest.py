"""Shared fixtures: the hand-built miniature campaign."""

from pathlib import Path

import pytest

from aligndash.campaign import load_track_config
from aligndash.alignio import Alignment, parse_alignment
from aligndash.evaluation import baseline_match
from aligndash.ontology import load_ontology_file

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def minicampaign_dir():
    return FIXTURES / "minicampaign"


class CampaignData:
    """Loaded campaign inputs, keyed the way build_dataset wants them."""

    def __init__(self, root: Path):
        self.root = root
        self.config = load_track_config(root / "tracks.json")
        self.references = {}
        self.indices = {}
        self.baselines = {}
        for case in self.config.testcases:
            self.references[case.key] = parse_alignment(
                case.reference.read_bytes())
            pair = (load_ontology_file(case.left_ontology),
                    load_ontology_file(case.right_ontology))
            self.indices[case.key] = pair
            self.baselines[case.key] = baseline_match(*pair)

    def results(self):
        rows = []
        for case in self.config.testcases:
            for matcher in ("matcherA", "matcherB"):
                path = (self.root / "results" / matcher / case.track /
                        f"{case.id}.rdf")
                system = (parse_alignment(path.read_bytes())
                          if path.exists() else Alignment())
                rows.append((matcher, case, system))
        return rows


@pytest.fixture(scope="session")
def minicampaign(minicampaign_dir):
    return CampaignData(minicampaign_dir)
