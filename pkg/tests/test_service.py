import json

import pytest
from fastapi.testclient import TestClient

from rigikit import encode, named_framework, named_graph
from rigikit.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def graph_doc(name, *params):
    return json.loads(encode(named_graph(name, *params)))


def framework_doc(name, *params):
    return json.loads(encode(named_framework(name, *params)))


def test_health(client):
    body = client.get("/api/health").json()
    assert body["status"] == "ok" and "version" in body


def test_graph_analyze_embeds_verdict_fields(client):
    response = client.post(
        "/api/graph/analyze",
        json={
            "graph": graph_doc("ThreePrism"),
            "dim": 2,
            "properties": ["rigid", "min-rigid", "globally-rigid"],
            "seed": 11,
        },
    )
    assert response.status_code == 200
    results = response.json()["results"]
    assert results["rigid"]["value"] is True
    assert results["rigid"]["method"] == "sparsity"
    assert results["rigid"]["failure_probability_bound"] == 0.0
    assert results["globally-rigid"]["value"] is False
    assert results["globally-rigid"]["method"] == "combinatorial-2d"


def test_graph_analyze_randomized_reports_seed(client):
    response = client.post(
        "/api/graph/analyze",
        json={
            "graph": graph_doc("Cycle", 4),
            "dim": 2,
            "properties": ["rigid"],
            "algorithm": "randomized",
            "epsilon": 1e-6,
            "seed": 99,
        },
    )
    verdict = response.json()["results"]["rigid"]
    assert verdict == {
        "value": False,
        "method": "randomized",
        "failure_probability_bound": 1e-6,
        "seed": 99,
    }


def test_graph_components_and_nac(client):
    response = client.post(
        "/api/graph/analyze",
        json={"graph": graph_doc("Cycle", 4), "dim": 2, "properties": ["components", "nac"]},
    )
    results = response.json()["results"]
    assert results["components"] == [[0, 1], [0, 3], [1, 2], [2, 3]]
    assert len(results["nac"]) == 3


def test_framework_analyze(client):
    response = client.post(
        "/api/framework/analyze",
        json={
            "framework": framework_doc("ThreePrism", "parallel"),
            "properties": ["inf-rigid", "prestress-stable", "second-order-rigid"],
        },
    )
    results = response.json()["results"]
    assert results == {
        "inf-rigid": False,
        "prestress-stable": True,
        "second-order-rigid": True,
    }


def test_framework_flexes(client):
    response = client.post(
        "/api/framework/flexes",
        json={"framework": framework_doc("ThreePrism", "parallel")},
    )
    body = response.json()
    assert len(body["flexes"]) == 1
    assert len(body["stresses"]) == 1
    assert body["trivial_dim"] == 3
    assert set(body["flexes"][0]) == {"0", "1", "2", "3", "4", "5"}


def test_motion_endpoint(client):
    response = client.post(
        "/api/motion/approximate",
        json={
            "framework": framework_doc("CompleteBipartite", 2, 4),
            "steps": 5,
            "step_size": 0.1,
            "chosen_flex": 0,
            "fixed_pair": [0, 1],
        },
    )
    assert response.status_code == 200
    assert len(response.json()["samples"]) == 6


def test_db_endpoint(client):
    body = client.get(
        "/api/db", params={"name": "ThreePrism", "params": "parallel", "kind": "framework"}
    ).json()
    assert body["mode"] == "exact"
    assert body["realization"]["3"] == ["0", "6"]
    graph = client.get("/api/db", params={"name": "Complete", "params": "4"}).json()
    assert len(graph["edges"]) == 6
    missing = client.get("/api/db", params={"name": "Nope"})
    assert missing.status_code == 400
    assert missing.json()["error"] == "unknown-name"


def test_schema_error_payload(client):
    response = client.post(
        "/api/graph/analyze", json={"graph": {"vertices": 3, "edges": []}}
    )
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "schema-error"
    assert "message" in body and "detail" in body


def test_not_flexible_error_code(client):
    response = client.post(
        "/api/motion/approximate",
        json={
            "framework": framework_doc("Diamond"),
            "steps": 3,
            "step_size": 0.1,
            "chosen_flex": 0,
        },
    )
    assert response.status_code == 400
    assert response.json()["error"] == "not-flexible"


def test_timeout_returns_504():
    fast = TestClient(create_app(timeout_s=0.02))
    big_cycle = json.loads(encode(named_graph("Cycle", 24)))
    response = fast.post(
        "/api/graph/analyze",
        json={"graph": big_cycle, "dim": 2, "properties": ["nac"]},
    )
    assert response.status_code == 504
    assert response.json()["error"] == "timeout"
