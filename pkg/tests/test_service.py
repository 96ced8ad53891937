import io

import pytest
from fastapi.testclient import TestClient

from narql.lexicon import load_lexicon
from narql.minidb import load_bundled_seed
from narql.service import MAX_TEXT_LENGTH, create_app
from support import CUSTOMER_SQL, EXAMPLE_AF, EXAMPLE_ZU


@pytest.fixture()
def client():
    return TestClient(create_app())


def translate(client, text, execute=False):
    return client.post("/api/translate", json={"text": text, "execute": execute})


def test_translate_example_with_execution(client):
    response = translate(client, EXAMPLE_AF, execute=True)
    assert response.status_code == 200
    payload = response.json()
    assert payload["sql"] == CUSTOMER_SQL
    assert payload["error"] is None
    assert len(payload["result"]["rows"]) == 12
    assert payload["result"]["columns"][0] == "CustomerID"


def test_translate_without_execution_has_no_result(client):
    payload = translate(client, EXAMPLE_ZU).json()
    assert payload["sql"] == CUSTOMER_SQL
    assert "result" not in payload


def test_translate_is_referentially_transparent(client):
    first = translate(client, EXAMPLE_AF)
    second = translate(client, EXAMPLE_AF)
    assert first.content == second.content


def test_empty_text_is_a_domain_error(client):
    response = translate(client, "")
    assert response.status_code == 200
    assert response.json()["error"]["code"] == "NoVerb"


def test_malformed_body_is_400(client):
    response = client.post("/api/translate", content=b"{not json",
                           headers={"Content-Type": "application/json"})
    assert response.status_code == 400
    response = client.post("/api/translate", json={"execute": True})
    assert response.status_code == 400


def test_oversized_text_is_400(client):
    response = translate(client, "x" * (MAX_TEXT_LENGTH + 1))
    assert response.status_code == 400


def test_delete_narration_does_not_mutate(client):
    response = translate(client, "susa alle playlist", execute=True)
    payload = response.json()
    assert response.status_code == 200
    assert payload["sql"] == "DELETE FROM Playlist;"
    assert payload["error"]["code"] == "FullDeleteNotAllowed"
    assert payload["error"]["stage"] == "execute"
    # store unchanged: the paper-style select still sees every playlist row
    check = translate(client, "vind alle playlist", execute=True).json()
    assert len(check["result"]["rows"]) == 3


def test_insert_narration_reports_unbound_placeholder(client):
    payload = translate(client, "faka customer", execute=True).json()
    assert payload["error"]["code"] == "UnboundPlaceholder"


def test_schema_endpoint(client):
    response = client.get("/api/schema")
    assert response.status_code == 200
    payload = response.json()
    names = [t["name"] for t in payload["tables"]]
    assert len(names) == 11
    customer = next(t for t in payload["tables"] if t["name"] == "Customer")
    assert {"name": "FirstName", "type": "text"} in customer["columns"]
    assert customer["primary_key"] == "CustomerID"
    assert client.get("/api/schema").content == response.content


def test_languages_endpoint(client, lexicon):
    response = client.get("/api/languages")
    assert response.status_code == 200
    payload = response.json()
    tags = {item["tag"] for item in payload}
    assert {"af", "zu"} <= tags
    assert sum(item["word_count"] for item in payload) == len(lexicon.entries)


def test_languages_empty_lexicon():
    app = create_app(lexicon=load_lexicon(io.StringIO("")), db=load_bundled_seed())
    assert TestClient(app).get("/api/languages").json() == []


def test_static_console_served(tmp_path):
    (tmp_path / "index.html").write_text("<!doctype html><title>narql</title>")
    app = create_app(static_dir=tmp_path)
    client = TestClient(app)
    response = client.get("/")
    assert response.status_code == 200
    assert "narql" in response.text
    # API routes still win over the static mount
    assert client.get("/api/schema").status_code == 200
