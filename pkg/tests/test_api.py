"""HTTP surface: health probe, identity browsing and verification jobs."""

import pytest
from fastapi.testclient import TestClient

from app.core.config import settings
from app.main import app

client = TestClient(app)
PREFIX = settings.api_v1_prefix


def test_health_check() -> None:
    response = client.get("/healthz")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "environment": settings.environment, "identities": 33}


def test_list_identities() -> None:
    response = client.get(f"{PREFIX}/identities")
    assert response.status_code == 200
    rows = response.json()
    assert len(rows) == 33
    assert rows[0]["id"] == "S0"
    assert {"name": "n", "kind": "nonneg-int"} in rows[0]["params"]


def test_get_identity() -> None:
    response = client.get(f"{PREFIX}/identities/C7")
    assert response.status_code == 200
    assert response.json()["constraints"] == "p ≥ q ≥ n, n ≥ 2"
    assert client.get(f"{PREFIX}/identities/T42").status_code == 404


def test_evaluate_identity() -> None:
    response = client.post(
        f"{PREFIX}/identities/T1/evaluate",
        json={"params": {"x": "1", "y": "1/2", "n": "1"}},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "equal"
    assert body["lhs"] == {"value": "-7/64", "pole": None}
    assert body["rhs"]["value"] == "-7/64"


def test_evaluate_pole() -> None:
    response = client.post(
        f"{PREFIX}/identities/T1/evaluate",
        json={"params": {"x": "-1", "y": "0", "n": "1"}},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "pole"
    assert body["lhs"]["value"] is None
    assert body["lhs"]["pole"].startswith("pole: ")


def test_evaluate_errors() -> None:
    assert client.post(f"{PREFIX}/identities/T99/evaluate", json={"params": {}}).status_code == 404
    bad = client.post(f"{PREFIX}/identities/T1/evaluate", json={"params": {"x": "1", "y": "1/0", "n": "1"}})
    assert bad.status_code == 422
    missing = client.post(f"{PREFIX}/identities/T1/evaluate", json={"params": {"x": "1"}})
    assert missing.status_code == 422


def test_verification_job_runs_eagerly() -> None:
    response = client.post(
        f"{PREFIX}/verifications",
        json={"kind": "sweep", "identity_ids": ["T1", "C1"], "samples": 5, "seed": 3},
    )
    assert response.status_code == 202
    job_id = response.json()["job_id"]

    status = client.get(f"{PREFIX}/verifications/{job_id}")
    assert status.status_code == 200
    body = status.json()
    assert body["status"] == "completed"
    assert body["kind"] == "sweep"
    assert [entry["id"] for entry in body["report"]["identities"]] == ["T1", "C1"]
    assert all(not entry["failures"] for entry in body["report"]["identities"])


def test_lemma_job() -> None:
    response = client.post(f"{PREFIX}/verifications", json={"kind": "lemma", "samples": 10, "s_max": 3})
    body = client.get(f"{PREFIX}/verifications/{response.json()['job_id']}").json()
    assert body["status"] == "completed"
    assert body["report"]["identities"][0]["attempted"] == 10


def test_verification_rejects_unknown_ids() -> None:
    response = client.post(f"{PREFIX}/verifications", json={"identity_ids": ["T1", "Z9"]})
    assert response.status_code == 404
    assert client.get(f"{PREFIX}/verifications/ver_missing").status_code == 404


def test_token_is_enforced_when_configured(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "api_token", "secret")
    assert client.get(f"{PREFIX}/identities").status_code == 401
    assert client.get(f"{PREFIX}/identities", headers={"Authorization": "Bearer secret"}).status_code == 200
    assert client.get("/healthz").status_code == 200


def test_job_status_reads_worker_results(monkeypatch: pytest.MonkeyPatch) -> None:
    from app.api.routes import verifications
    from app.models.job import VerificationKind
    from app.services import job_store

    class FinishedResult:
        result = {"kind": "lemma", "seed": 1, "identities": []}

        def successful(self) -> bool:
            return True

        def failed(self) -> bool:
            return False

    job_store.create_job("ver_remote", VerificationKind.lemma, {})
    monkeypatch.setattr(settings, "debug", False)
    monkeypatch.setattr(verifications.run_verification, "AsyncResult", lambda job_id: FinishedResult())

    body = client.get(f"{PREFIX}/verifications/ver_remote").json()
    assert body["status"] == "completed"
    assert body["report"]["kind"] == "lemma"
