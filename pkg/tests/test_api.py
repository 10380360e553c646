import numpy as np
import pytest
from fastapi.testclient import TestClient

from doctopics.service.api import create_app


@pytest.fixture(scope="module")
def client(fixture_bundle):
    return TestClient(create_app(fixture_bundle))


class TestMetaAndSections:
    def test_meta_shape(self, client):
        meta = client.get("/api/meta").json()
        assert meta["geo"] is True  # fixture uses ISO country codes
        assert meta["section_ids"] == ["climate", "economy"]
        assert len(meta["doc_ids"]) == 12
        assert meta["covariates"] == ["emissions", "gdp"]
        assert set(meta["clustering"]) == {"agglomerative", "kmeans", "hdbscan"}
        assert meta["mapping_methods"] == ["mds", "tsne"]

    def test_sections_listing(self, client):
        secs = client.get("/api/sections").json()
        assert [s["id"] for s in secs] == ["climate", "economy"]
        for s in secs:
            assert len(s["topics"]) == s["K"]

    def test_unknown_section_404(self, client):
        assert client.get("/api/sections/nope/model").status_code == 404


class TestModelAndTerms:
    def test_model_payload(self, client):
        model = client.get("/api/sections/climate/model").json()
        K = model["K"]
        assert len(model["phi"]) == K
        assert len(model["intertopic"]["coords"]) == K
        assert len(model["intertopic"]["prevalence"]) == K
        for row in model["theta"]:
            assert sum(row) == pytest.approx(1.0, abs=1e-9)

    def test_lambda_one_equals_phi_ordering(self, client):
        model = client.get("/api/sections/climate/model").json()
        terms = client.get("/api/sections/climate/terms", params={"lambda": 1.0}).json()
        phi = np.asarray(model["phi"])
        vocab = model["vocab"]
        for k, ranked in enumerate(terms["topics"]):
            n = len(ranked)
            order = np.lexsort((np.arange(len(vocab)), -phi[k]))[:n]
            assert [t for t, _ in ranked] == [vocab[i] for i in order]

    def test_lambda_validation_names_parameter(self, client):
        resp = client.get("/api/sections/climate/terms", params={"lambda": 1.5})
        assert resp.status_code == 400
        assert "lambda" in resp.json()["detail"]

    def test_default_lambda_applied(self, client):
        terms = client.get("/api/sections/climate/terms").json()
        assert terms["lambda"] == 0.6


class TestClustersAndMapping:
    def test_cluster_variant_selection(self, client):
        resp = client.get(
            "/api/sections/climate/clusters",
            params={"algo": "agglomerative", "k": 3, "linkage": "average"},
        ).json()
        assert resp["params"]["k"] == 3
        assert len(resp["labels"]) == len(resp["doc_ids"])
        assert "manova" in resp

    def test_unknown_algo_400(self, client):
        resp = client.get("/api/sections/climate/clusters", params={"algo": "optics"})
        assert resp.status_code == 400
        assert "algo" in resp.json()["detail"]

    def test_missing_variant_400(self, client):
        resp = client.get("/api/sections/climate/clusters", params={"algo": "kmeans", "k": 99})
        assert resp.status_code == 400

    def test_manova_endpoint(self, client):
        resp = client.get(
            "/api/sections/climate/manova", params={"algo": "kmeans", "k": 2}
        ).json()
        assert "manova" in resp
        report = resp["manova"]
        assert ("p_value" in report) or ("error" in report)

    def test_mapping_methods(self, client):
        for method in ("mds", "tsne"):
            resp = client.get("/api/sections/climate/mapping", params={"method": method}).json()
            assert len(resp["coords"]) == len(resp["doc_ids"])

    def test_mapping_requires_method(self, client):
        resp = client.get("/api/sections/climate/mapping")
        assert resp.status_code == 400
        assert "method" in resp.json()["detail"]


class TestSummariesCompareCorrelations:
    def test_summary_payload(self, client):
        resp = client.get("/api/documents/AT/summary", params={"section": "climate"}).json()
        assert resp["doc_id"] == "AT"
        assert resp["path"] in ("direct", "extractive")
        assert resp["summary"]
        assert len(resp["top_words"]) == 10

    def test_summary_unknown_doc_404(self, client):
        assert client.get("/api/documents/XX/summary", params={"section": "climate"}).status_code == 404

    def test_compare_payload(self, client):
        resp = client.get("/api/compare", params={"section": "climate", "ids": "AT,SE"}).json()
        assert [d["doc_id"] for d in resp["docs"]] == ["AT", "SE"]
        for doc in resp["docs"]:
            assert sum(doc["theta"]) == pytest.approx(1.0, abs=1e-9)
        assert len(resp["distribution"]) == len(resp["topics"])
        assert len(resp["distribution"][0]["values"]) == 12

    def test_compare_unknown_ids_404(self, client):
        resp = client.get("/api/compare", params={"section": "climate", "ids": "AT,QQ"})
        assert resp.status_code == 404

    def test_correlations_payload(self, client):
        resp = client.get("/api/correlations", params={"section": "climate"}).json()
        assert resp["covariate_names"] == ["emissions", "gdp"]
        assert len(resp["r"]) == len(resp["topic_labels"])


class TestAppConfigOverrides:
    def test_ui_defaults_override_bundle(self, fixture_bundle, tmp_path):
        from doctopics.service.config import AppConfig

        config = AppConfig(bundle=tmp_path, ui={"mapping": "tsne", "lambda": 0.3})
        app = create_app(fixture_bundle, config)
        meta = TestClient(app).get("/api/meta").json()
        assert meta["defaults"]["mapping"] == "tsne"
        assert meta["defaults"]["lambda"] == 0.3
        assert meta["defaults"]["algorithm"] == "agglomerative"  # untouched


class TestDeterminism:
    def test_repeated_gets_byte_identical(self, client):
        paths = [
            "/api/meta",
            "/api/sections",
            "/api/sections/climate/model",
            "/api/sections/climate/terms?lambda=0.4",
            "/api/sections/climate/clusters?algo=kmeans&k=2",
            "/api/sections/climate/mapping?method=mds",
            "/api/compare?section=climate&ids=AT,SE",
            "/api/correlations?section=climate",
            "/api/documents/AT/summary?section=climate",
        ]
        for path in paths:
            a = client.get(path).content
            b = client.get(path).content
            assert a == b, path


class TestCrawl:
    def test_no_dangling_references(self, client):
        meta = client.get("/api/meta").json()
        for sid in meta["section_ids"]:
            model = client.get(f"/api/sections/{sid}/model")
            assert model.status_code == 200
            payload = model.json()
            for doc_id in payload["doc_ids"]:
                assert doc_id in meta["doc_ids"]
            for algo, variants in meta["clustering"].items():
                for params in variants:
                    resp = client.get(
                        f"/api/sections/{sid}/clusters",
                        params={"algo": algo, **{k: v for k, v in params.items() if k in ("k", "linkage")}},
                    )
                    assert resp.status_code == 200
            for method in meta["mapping_methods"]:
                assert client.get(f"/api/sections/{sid}/mapping", params={"method": method}).status_code == 200
            for doc_id in meta["doc_ids"]:
                assert client.get(f"/api/documents/{doc_id}/summary", params={"section": sid}).status_code == 200
            assert client.get("/api/correlations", params={"section": sid}).status_code == 200
