#!/usr/bin/env python3
"""Capture API responses from the fixture bundle for the frontend tests.

Runs the full pipeline on the committed fixture corpus, then records the
HTTP responses the UI consumes into frontend/tests/fixtures/.
"""

import json
import os
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from doctopics.service import pipeline
from doctopics.service.api import create_app
from doctopics.service.bundle import load_bundle

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "frontend" / "tests" / "fixtures"

CAPTURES = {
    "meta.json": "/api/meta",
    "sections.json": "/api/sections",
    "model_climate.json": "/api/sections/climate/model",
    "terms_climate_default.json": "/api/sections/climate/terms",
    "terms_climate_lambda1.json": "/api/sections/climate/terms?lambda=1.0",
    "clusters_climate_agg_k2.json": "/api/sections/climate/clusters?algo=agglomerative&k=2",
    "clusters_climate_kmeans_k2.json": "/api/sections/climate/clusters?algo=kmeans&k=2",
    "mapping_climate_mds.json": "/api/sections/climate/mapping?method=mds",
    "mapping_climate_tsne.json": "/api/sections/climate/mapping?method=tsne",
    "summary_AT_climate.json": "/api/documents/AT/summary?section=climate",
    "compare_climate_AT_SE.json": "/api/compare?section=climate&ids=AT,SE",
    "correlations_climate.json": "/api/correlations?section=climate",
}


def main():
    os.environ["SOURCE_DATE_EPOCH"] = "1700000000"
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        work = Path(tmp)
        pipeline.stage_ingest(ROOT / "tests" / "fixtures" / "corpus" / "manifest.json", work)
        pipeline.stage_fit(work)
        pipeline.stage_analyze(work)
        pipeline.stage_summarize(work, stub=True)
        pipeline.stage_export(work, work / "bundle")
        client = TestClient(create_app(load_bundle(work / "bundle")))
        for filename, url in CAPTURES.items():
            resp = client.get(url)
            resp.raise_for_status()
            (OUT / filename).write_text(json.dumps(resp.json(), indent=1, sort_keys=True) + "\n")
            print(f"captured {filename}")


if __name__ == "__main__":
    main()
