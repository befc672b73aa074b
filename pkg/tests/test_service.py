import warnings

import pytest

from conftest import bowtie
from fanfree import (
    build_hk,
    build_hk_prime,
    canonical_form,
    complete_graph,
    extremal_construction,
    graph6_encode,
)
from fanfree.service import app

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

client = TestClient(app)

BOWTIE = graph6_encode(bowtie())


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok" and body["version"]


# -- formulas -----------------------------------------------------------


def test_formula():
    r = client.post("/formula", json={"n": 20, "k": 4})
    assert r.status_code == 200
    assert r.json() == {"value": 133, "valid_from": 256, "formula_id": "fan-triangles-even"}
    assert client.post("/formula", json={"n": 4, "k": 2}).status_code == 422


def test_ex3():
    r = client.post("/ex3", json={"n": 20, "k": 4})
    assert r.status_code == 200
    body = r.json()
    assert body["value"] == 151 and body["valid_from"] is None


def test_missing_fields_are_rejected():
    assert client.post("/formula", json={"n": 20}).status_code == 422


# -- constructions ------------------------------------------------------


def test_construct():
    r = client.post("/construct", json={"kind": "hk", "k": 4})
    assert r.status_code == 200
    assert r.json() == {"graph6": "F{CZG", "n": 7, "edges": 10, "triangles": 3}


def test_construct_rejects_bad_requests():
    r = client.post("/construct", json={"kind": "moebius", "k": 4})
    assert r.status_code == 422 and "unknown kind" in r.json()["error"]
    r = client.post("/construct", json={"kind": "odd-extremal", "k": 4, "n": 20})
    assert r.status_code == 422


# -- graph inspection ---------------------------------------------------


def test_count():
    r = client.post("/count", json={"graph6": "Bw"})
    assert r.status_code == 200
    body = r.json()
    assert body["n"] == 3 and body["triangle_count"] == 1
    assert body["triangles"] == [[0, 1, 2]]
    assert body["triangles_truncated"] is False
    assert body["degree_sequence"] == [2, 2, 2]


def test_count_parse_error_carries_offset():
    r = client.post("/count", json={"graph6": "A@"})
    assert r.status_code == 400
    body = r.json()
    assert body["offset"] == 1 and "padding" in body["error"]


def test_classify():
    g6 = graph6_encode(extremal_construction(20, 4))
    r = client.post("/classify", json={"graph6": g6, "k": 4})
    assert r.status_code == 200
    body = r.json()
    assert body["counts"] == {"heavy": 10, "medium": 0, "light": 91}
    assert len(body["edges"]) == 101
    first = body["edges"][0]
    assert set(first) == {"u", "v", "codegree", "label", "zero_flagged"}


def test_weights_clean_graph():
    r = client.post("/weights", json={"graph6": graph6_encode(complete_graph(4)), "k": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["f"] == {str(v): "1" for v in range(4)}
    assert body["total"] == "4"
    assert body["lemmas"]["ok"] is True


def test_weights_fan_precondition():
    r = client.post("/weights", json={"graph6": BOWTIE, "k": 2})
    assert r.status_code == 409
    assert r.json()["witness"] == {"center": 0, "pairs": [[1, 2], [3, 4]]}
    # skipping the lemma suite lifts the precondition
    r = client.post("/weights", json={"graph6": BOWTIE, "k": 2, "lemmas": False})
    assert r.status_code == 200 and r.json()["lemmas"] is None


def test_weights_scheme_validation():
    r = client.post("/weights", json={"graph6": "Bw", "k": 2, "scheme": "bespoke"})
    assert r.status_code == 422


# -- detection ----------------------------------------------------------


def test_check_fan():
    r = client.post("/check-fan", json={"graph6": BOWTIE, "k": 2})
    body = r.json()
    assert body["fan_free"] is False and body["verdict"] == "contains F2"
    assert body["witness"] == {"center": 0, "pairs": [[1, 2], [3, 4]]}
    r = client.post("/check-fan", json={"graph6": BOWTIE, "k": 3})
    assert r.json()["verdict"] == "F3-free"


def test_check_star_from_triples():
    r = client.post("/check-star", json={"k": 2, "triples": "0 1 2\n0 3 4\n"})
    assert r.status_code == 200
    body = r.json()
    assert body["star_free"] is False and body["triple_count"] == 2
    assert body["verdict"] == "contains an F2-star"
    assert body["witness"]["center"] == 0


def test_check_star_from_graph():
    g6 = graph6_encode(complete_graph(4))
    r = client.post("/check-star", json={"k": 2, "graph6": g6})
    assert r.json()["verdict"] == "F2-star-free"


def test_check_star_wants_exactly_one_input():
    assert client.post("/check-star", json={"k": 2}).status_code == 422
    r = client.post("/check-star", json={"k": 2, "graph6": "Bw", "triples": "0 1 2"})
    assert r.status_code == 422


# -- search -------------------------------------------------------------


def test_search_exhaustive():
    r = client.post("/search", json={"mode": "exhaustive", "n": 6, "k": 2})
    body = r.json()
    assert body["best_value"] == 4 and body["exact"] is True


def test_search_degseq_defaults_to_the_rigid_sequence():
    r = client.post("/search", json={"mode": "degseq", "k": 4})
    body = r.json()
    assert body["params"]["degrees"] == [3, 3, 3, 3, 3, 3, 2]
    assert body["best_value"] == 3
    assert body["witnesses"] == [canonical_form(build_hk(4))]
    assert body["params"]["min_triangles"] == 0
    assert body["params"]["min_witnesses"] == [canonical_form(build_hk_prime(4))]


def test_search_hill():
    payload = {"mode": "hill", "n": 10, "k": 2, "restarts": 2, "steps": 100, "seed": 9}
    a = client.post("/search", json=payload).json()
    b = client.post("/search", json=payload).json()
    a.pop("wall_time_s"), b.pop("wall_time_s")
    assert a == b and a["exact"] is False


def test_search_rejections():
    r = client.post("/search", json={"mode": "exhaustive", "n": 40, "k": 2})
    assert r.status_code == 413
    r = client.post("/search", json={"mode": "simulated-annealing", "n": 6, "k": 2})
    assert r.status_code == 422
    r = client.post("/search", json={"mode": "exhaustive", "k": 2})
    assert r.status_code == 422


# -- degree-sequence bounds ---------------------------------------------


def test_degseq_bounds():
    r = client.post("/degseq", json={"k": 6})
    body = r.json()
    assert (body["max_value"], body["min_value"], body["dichotomy_floor"]) == (24, 2, 3)
    assert body["max_witness"] == graph6_encode(build_hk(6))
    assert body["min_witness"] == graph6_encode(build_hk_prime(6))
    r = client.post("/degseq", json={"k": 6, "s": 1})
    assert r.json()["max_value"] == 16
    assert client.post("/degseq", json={"k": 5}).status_code == 422


# -- identities and verification ----------------------------------------


def test_goodman():
    r = client.post("/goodman", json={"graph6": graph6_encode(extremal_construction(10, 3))})
    body = r.json()
    assert body["holds"] and body["lhs"] == body["rhs"] == 120
    assert body["triangles"] == 26 and body["complement_triangles"] == 4


def test_verify_single_criterion():
    r = client.post("/verify", json={"criteria": [5]})
    assert r.status_code == 200
    body = r.json()
    assert body["all_passed"] is True
    assert len(body["results"]) == 1 and body["results"][0]["number"] == 5
    assert client.post("/verify", json={"criteria": [99]}).status_code == 422


def test_verify_corpus_is_resilient():
    lines = ["Bw", "", "# comment", "A@", BOWTIE]
    r = client.post("/verify-corpus", json={"lines": lines, "k": 2})
    assert r.status_code == 200
    rows = r.json()["rows"]
    assert [row["line"] for row in rows] == [1, 4, 5]
    ok, bad, fan = rows
    assert ok["fan_free"] is True and ok["lemma_ok"] is True and ok["error"] is None
    assert bad["error"] is not None and bad["n"] is None
    assert fan["fan_free"] is False and fan["lemma_ok"] is None
    assert client.post("/verify-corpus", json={"lines": ["Bw"], "k": 1}).status_code == 422
