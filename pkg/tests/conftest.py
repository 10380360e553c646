import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
sys.path.insert(0, str(TESTS_DIR))

FIXTURE_MANIFEST = TESTS_DIR / "fixtures" / "corpus" / "manifest.json"


@pytest.fixture(scope="session")
def fixture_manifest() -> Path:
    assert FIXTURE_MANIFEST.is_file(), "run scripts/make_fixture_corpus.py first"
    return FIXTURE_MANIFEST


@pytest.fixture(scope="session")
def pipeline_workdir(tmp_path_factory, fixture_manifest) -> Path:
    """Full pipeline run over the fixture corpus, shared across tests."""
    from doctopics.service import pipeline

    work = tmp_path_factory.mktemp("work")
    pipeline.stage_ingest(fixture_manifest, work)
    pipeline.stage_fit(work)
    pipeline.stage_analyze(work)
    pipeline.stage_summarize(work, stub=True)
    pipeline.stage_export(work, work / "bundle", timestamp="2024-09-01T00:00:00+00:00")
    return work


@pytest.fixture(scope="session")
def fixture_bundle(pipeline_workdir):
    from doctopics.service.bundle import load_bundle

    return load_bundle(pipeline_workdir / "bundle")
