#!/usr/bin/env python3
"""Generate the committed fixture corpus used by the end-to-end tests.

12 country documents, two sections each, three planted topics per section.
Deterministic (seeded); rerunning overwrites the same bytes.

Usage: python scripts/make_fixture_corpus.py [out_dir]
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

DOCS = ["AT", "BE", "DE", "DK", "ES", "FI", "FR", "IT", "NL", "PL", "PT", "SE"]

SECTIONS = {
    "climate": {
        "header": "1. Climate Policy",
        "topics": [
            "solar wind turbine photovoltaic hydro geothermal biomass grid storage megawatt".split(),
            "carbon emission dioxide methane pollution exhaust smog particulate warming offset".split(),
            "railway transit cycling pedestrian vehicle electric charging mobility freight commuter".split(),
        ],
    },
    "economy": {
        "header": "2. Economic Outlook",
        "topics": [
            "budget deficit taxation revenue spending fiscal treasury debt surplus austerity".split(),
            "recruit wages workforce jobless hiring payroll pension salary intern vacancy".split(),
            "manufacturing exports factory industrial production machinery steel automotive logistics cargo".split(),
        ],
    },
}

FILLERS = ["the", "and", "for", "with", "our", "this"]

SENTENCES_PER_SECTION = 14
WORDS_PER_SENTENCE = 7


def check_pools_disjoint():
    from doctopics.corpus.preprocess import stem

    for section, spec in SECTIONS.items():
        stems = [frozenset(stem(w) for w in pool) for pool in spec["topics"]]
        for pool in stems:
            for s in pool:
                assert stem(s) == s, f"{section}: stem {s!r} is not a fixed point"
        for i in range(len(stems)):
            for j in range(i + 1, len(stems)):
                overlap = stems[i] & stems[j]
                assert not overlap, f"{section}: stem collision {overlap}"


def doc_text(rng: np.random.Generator, spec: dict) -> str:
    theta = rng.dirichlet([0.25, 0.25, 0.25])
    tilt = np.linspace(1.0, 0.3, len(spec["topics"][0]))
    tilt = tilt / tilt.sum()
    lines = [spec["header"]]
    for _ in range(SENTENCES_PER_SECTION):
        k = rng.choice(len(spec["topics"]), p=theta)
        pool = spec["topics"][k]
        words = list(rng.choice(pool, size=WORDS_PER_SENTENCE, p=tilt))
        words.insert(0, rng.choice(FILLERS).capitalize())
        words.insert(3, rng.choice(FILLERS))
        lines.append(" ".join(words) + ".")
    return "\n".join(lines) + "\n"


def main(out_dir: str):
    check_pools_disjoint()
    out = Path(out_dir)
    texts = out / "texts"
    texts.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(20240901)

    documents = []
    for doc_id in DOCS:
        parts = [f"Report for {doc_id}.\n"]
        for spec in SECTIONS.values():
            parts.append(doc_text(rng, spec))
        (texts / f"{doc_id.lower()}.txt").write_text("".join(parts), encoding="utf-8")
        gdp = round(float(rng.uniform(20, 90)), 1)
        emissions = round(float(rng.uniform(3, 12)), 2)
        documents.append(
            {
                "doc_id": doc_id,
                "entity_id": doc_id,
                "text": f"texts/{doc_id.lower()}.txt",
                "covariates": {
                    "gdp": gdp,
                    # one explicit null exercises pairwise dropping
                    "emissions": None if doc_id == "DK" else emissions,
                },
            }
        )

    manifest = {
        "version": 1,
        "language": "en",
        "stopwords_extra": [],
        "structure": {
            "sections": [
                {"id": "climate", "header_pattern": "^1\\. Climate"},
                {"id": "economy", "header_pattern": "^2\\. Economic"},
            ]
        },
        "documents": documents,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote fixture corpus to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/corpus")
