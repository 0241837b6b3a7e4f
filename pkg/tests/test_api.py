"""HTTP endpoints: request validation, envelope passthrough, the
calculate error table, and byte-stable serialization."""

import json

import pytest
from fastapi.testclient import TestClient

from mathqa.api import create_app


@pytest.fixture(scope="module")
def client(qa_service):
    return TestClient(create_app(qa_service))


class TestQuestionEndpoint:
    def test_answered(self, client):
        response = client.post("/api/question",
                               json={"text": "What is the formula for speed?"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["outcome"] == "ANSWERED"
        assert payload["answer"]["formula"] == "v = s/t"
        symbols = [i["symbol"] for i in payload["answer"]["identifiers"]]
        assert symbols == ["v", "s", "t"]

    def test_unrecognized_is_still_200(self, client):
        response = client.post("/api/question", json={"text": "tell me a joke"})
        assert response.status_code == 200
        assert response.json()["outcome"] == "UNRECOGNIZED"

    def test_language_passthrough(self, client):
        response = client.post(
            "/api/question",
            json={"text": "What is the formula for speed?", "lang": "de"})
        assert response.status_code == 200
        assert response.json()["outcome"] == "UNRECOGNIZED"

    @pytest.mark.parametrize("body", [
        {},
        {"text": 7},
        {"question": "What is the formula for speed?"},
        ["not", "an", "object"],
    ])
    def test_invalid_bodies(self, client, body):
        response = client.post("/api/question", json=body)
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid_request"

    def test_non_json_body(self, client):
        response = client.post(
            "/api/question", content=b"text=hello",
            headers={"content-type": "application/json"})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid_request"

    def test_bad_lang_type(self, client):
        response = client.post("/api/question",
                               json={"text": "anything", "lang": 3})
        assert response.status_code == 400


class TestCalculateEndpoint:
    def test_successful_calculation(self, client):
        response = client.post(
            "/api/calculate",
            json={"formula": "v = s/t", "bindings": {"s": 100, "t": 9.58}})
        assert response.status_code == 200
        payload = response.json()
        assert payload["lhs"] == "v"
        assert payload["value"] == pytest.approx(100 / 9.58)
        assert payload["bindings"]["s"] == {"value": 100.0, "origin": "USER"}

    def test_constant_prefill_over_http(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "E = m c ^ 2",
                                     "bindings": {"m": 1}})
        payload = response.json()
        assert payload["value"] == pytest.approx(299792458.0 ** 2)
        assert payload["bindings"]["c"]["origin"] == "CONSTANT"

    def test_unbound_identifiers_error_names_the_symbols(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "v = s/t", "bindings": {}})
        assert response.status_code == 400
        error = response.json()["error"]
        assert error["code"] == "unbound_identifiers"
        assert error["symbols"] == ["s", "t"]

    def test_non_algebraic_error_names_the_construct(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "E = \\sum_i m_i"})
        assert response.status_code == 400
        error = response.json()["error"]
        assert error["code"] == "non_algebraic"
        assert error["construct"] == "summation"

    def test_division_by_zero(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "v = s/t",
                                     "bindings": {"s": 1, "t": 0}})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "division_by_zero"

    def test_syntax_error(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "v = ((s/t"})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "syntax_error"

    def test_non_numeric_binding(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "v = s/t",
                                     "bindings": {"s": "fast", "t": 1}})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid_request"

    @pytest.mark.parametrize("body", [
        {},
        {"formula": 7},
        {"formula": "v = s/t", "bindings": ["s", 1]},
    ])
    def test_invalid_bodies(self, client, body):
        response = client.post("/api/calculate", json=body)
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "invalid_request"


class TestHealthEndpoint:
    def test_health(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        payload = response.json()
        assert payload["status"] == "ok"
        assert payload["sources"] == [
            "arxiv-index", "wikipedia-index", "knowledge-graph"]
        assert payload["constants"] == {
            "G": 6.6743e-11, "c": 299792458.0, "h": 6.62607015e-34}


class TestSerialization:
    def test_repeated_requests_are_byte_identical(self, client):
        body = {"text": "What is the relationship between energy and mass?"}
        first = client.post("/api/question", json=body).content
        second = client.post("/api/question", json=body).content
        assert first == second

    def test_keys_are_sorted_and_compact(self, client):
        content = client.get("/api/health").content
        payload = json.loads(content)
        assert content == json.dumps(
            payload, ensure_ascii=False, sort_keys=True,
            separators=(",", ":")).encode("utf-8")

    def test_unicode_survives_round_trip(self, client):
        response = client.post("/api/calculate",
                               json={"formula": "A = \\pi r ^ 2",
                                     "bindings": {"r": 2}})
        payload = response.json()
        assert payload["value"] == pytest.approx(4 * 3.141592653589793)


class TestStaticMount:
    def test_static_directory_served_at_root(self, qa_service, tmp_path):
        (tmp_path / "index.html").write_text(
            "<!doctype html><title>mathqa</title>", "utf-8")
        client = TestClient(create_app(qa_service, static_dir=tmp_path))
        response = client.get("/")
        assert response.status_code == 200
        assert "mathqa" in response.text
        # the API keeps priority over the static mount
        assert client.get("/api/health").status_code == 200

    def test_missing_static_directory_is_ignored(self, qa_service, tmp_path):
        client = TestClient(
            create_app(qa_service, static_dir=tmp_path / "absent"))
        assert client.get("/api/health").status_code == 200
        assert client.get("/").status_code == 404
