from __future__ import annotations

from httpx import ASGITransport, AsyncClient as HTTPXAsyncClient
import pytest


@pytest.fixture()
def app_instance(monkeypatch: pytest.MonkeyPatch, reload_app_modules):
    monkeypatch.setenv("HLSPIN_THREADS", "2")
    monkeypatch.setenv("HLSPIN_TOLERANCE", "1e-9")

    reload_app_modules()
    from hlspin.http_app import create_fastapi_app

    return create_fastapi_app()


def _client(app) -> HTTPXAsyncClient:
    return HTTPXAsyncClient(transport=ASGITransport(app=app), base_url="http://testserver")


@pytest.mark.asyncio
async def test_info_reports_catalog_and_settings(app_instance) -> None:
    async with _client(app_instance) as client:
        response = await client.get("/")

    assert response.status_code == 200
    body = response.json()
    assert body["identity_count"] == 38
    assert body["threads"] == 2
    assert body["tolerance"] == 1e-9


@pytest.mark.asyncio
async def test_identities_list_includes_out_of_scope_entries(app_instance) -> None:
    async with _client(app_instance) as client:
        response = await client.get("/identities")

    assert response.status_code == 200
    entries = {entry["id"]: entry for entry in response.json()}
    assert entries["cauchy"]["kind"] == "truncated"
    assert entries["cauchy"]["paperRef"]
    assert entries["spectral-orthogonality"]["kind"] is None
    assert "outOfScope" in entries["spectral-orthogonality"]


@pytest.mark.asyncio
async def test_compute_endpoint_returns_exact_value(app_instance) -> None:
    async with _client(app_instance) as client:
        response = await client.post(
            "/compute",
            json={"kind": "f", "q": "1/3", "s": "1/5", "mu": "0,0", "u": "2,3"},
        )

    assert response.status_code == 200
    assert response.json()["value"] == "200/81"


@pytest.mark.asyncio
async def test_compute_endpoint_validation_errors(app_instance) -> None:
    async with _client(app_instance) as client:
        bad_signature = await client.post(
            "/compute", json={"kind": "f", "q": "1/3", "s": "1/5", "mu": "0,1", "u": "2"}
        )
        unknown_field = await client.post("/compute", json={"kind": "f", "colour": "red"})
        missing_variables = await client.post(
            "/compute", json={"kind": "f", "q": "1/3", "s": "1/5", "mu": "1"}
        )
        pole = await client.post(
            "/compute", json={"kind": "f", "q": "1/3", "s": "1/5", "mu": "0", "u": "5"}
        )

    assert bad_signature.status_code == 422
    assert unknown_field.status_code == 422
    assert missing_variables.status_code == 422
    assert pole.status_code == 400
    assert pole.json()["detail"]["errorType"] == "PoleError"


@pytest.mark.asyncio
async def test_verify_endpoint_runs_checks(app_instance) -> None:
    async with _client(app_instance) as client:
        response = await client.post(
            "/verify",
            json={"identities": ["symmetry"], "points": 1, "maxLength": 2, "maxPart": 2},
        )

    assert response.status_code == 200
    reports = response.json()
    assert [report["id"] for report in reports] == ["symmetry"]
    assert reports[0]["pass"] is True


@pytest.mark.asyncio
async def test_verify_endpoint_unknown_identity_is_404(app_instance) -> None:
    async with _client(app_instance) as client:
        response = await client.post("/verify", json={"identities": ["no-such-id"]})

    assert response.status_code == 404
    assert response.json()["detail"]["identity"] == "no-such-id"
