"""HTTP endpoints: payload fidelity and status-code mapping."""

import json

import pytest
from fastapi.testclient import TestClient

from motdt.blowup import FamilyParams, build_graph
from motdt.errors import MismatchWithEngine
from motdt.quiver import walls_table
from motdt.report import compute_report
from motdt.service import app


@pytest.fixture
def client():
    return TestClient(app, raise_server_exceptions=False)


class TestInvariants:
    def test_payload_matches_report(self, client):
        r = client.get("/invariants", params={"a": 2, "b": 2, "order": 3})
        assert r.status_code == 200
        expected = json.loads(
            json.dumps(compute_report(FamilyParams(2, 2), order=3).to_json_dict())
        )
        assert r.json() == expected

    def test_omitted_b_means_infinite(self, client):
        r = client.get("/invariants", params={"a": 2, "order": 3})
        assert r.status_code == 200
        body = r.json()
        assert body["b"] == "inf"
        assert body["gv"] == {"gv1": 5, "gv2": 1}

    def test_text_format(self, client):
        r = client.get("/invariants", params={"a": 2, "b": "inf", "order": 3, "format": "text"})
        assert r.status_code == 200
        assert r.headers["content-type"].startswith("text/plain")
        assert r.text == compute_report(FamilyParams(2, None), order=3).to_text()

    def test_env_default_order(self, client, monkeypatch):
        monkeypatch.setenv("MOTDT_ORDER_DEFAULT", "3")
        r = client.get("/invariants", params={"a": 2, "b": "inf"})
        assert r.status_code == 200
        assert r.json()["stability"]["order"] == 3


class TestResolve:
    def test_graph_payload(self, client):
        r = client.get("/resolve", params={"a": 3, "b": 2})
        assert r.status_code == 200
        assert r.json() == {
            "a": 3,
            "b": 2,
            "graph": json.loads(json.dumps(build_graph(FamilyParams(3, 2)).to_json())),
        }


class TestPartition:
    def test_payload_matches_report(self, client):
        r = client.get("/partition", params={"a": 2, "b": "inf", "order": 4})
        assert r.status_code == 200
        rep = compute_report(FamilyParams(2, None), order=4)
        body = r.json()
        assert body["order"] == 4
        assert body["v"] == [2, -1]
        assert body["rays"] == [rs.to_json() for rs in rep.rays]
        assert body["partition"] == json.loads(json.dumps(rep.partition.to_json()))


class TestWalls:
    def test_table(self, client):
        r = client.get("/walls", params={"range": "-4:4"})
        assert r.status_code == 200
        assert r.json() == json.loads(json.dumps(walls_table(-4, 4)))

    def test_bad_syntax(self, client):
        r = client.get("/walls", params={"range": "wide"})
        assert r.status_code == 422

    def test_missing_range(self, client):
        assert client.get("/walls").status_code == 422


class TestCompare:
    def test_equal_family(self, client):
        r = client.get("/compare", params={"a": 2, "bs": "2,3,inf", "order": 3})
        assert r.status_code == 200
        body = r.json()
        assert body["all_equal"] is True
        assert [row["b"] for row in body["rows"]] == [2, 3, "inf"]

    def test_bad_token(self, client):
        assert client.get("/compare", params={"a": 2, "bs": "2,zz"}).status_code == 422

    def test_empty_list(self, client):
        assert client.get("/compare", params={"a": 2, "bs": ","}).status_code == 422


class TestSelftest:
    def test_subset(self, client):
        r = client.get("/selftest", params={"checks": "4,6"})
        assert r.status_code == 200
        body = r.json()
        assert [res["number"] for res in body["results"]] == [4, 6]
        assert body["all_passed"] is True
        assert body["summary"] == "all 2 checks passed"

    def test_unknown_check(self, client):
        assert client.get("/selftest", params={"checks": "99"}).status_code == 422

    def test_bad_list(self, client):
        assert client.get("/selftest", params={"checks": "one"}).status_code == 422


class TestStatusCodes:
    def test_domain_validation_is_422(self, client):
        r = client.get("/invariants", params={"a": 2, "b": 0})
        assert r.status_code == 422
        assert "b must be" in r.json()["detail"]

    def test_type_validation_is_422(self, client):
        assert client.get("/invariants", params={"a": "zz"}).status_code == 422

    def test_bad_order_is_422(self, client):
        assert client.get("/invariants", params={"a": 2, "b": 2, "order": 0}).status_code == 422

    def test_internal_failure_is_500(self, client, monkeypatch):
        def boom(*args, **kwargs):
            raise MismatchWithEngine("cross-check failed")

        monkeypatch.setattr("motdt.service.compute_report", boom)
        r = client.get("/invariants", params={"a": 2, "b": 2})
        assert r.status_code == 500
        assert r.json()["detail"] == "cross-check failed"
