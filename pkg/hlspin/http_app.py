from __future__ import annotations

from typing import Any, Dict, List

from fastapi import FastAPI, HTTPException

from .commands import CLICommandError, compute_value, verify_identities
from .config import settings
from .identities import CATALOG, OUT_OF_SCOPE
from .manifest import RunManifest

API_VERSION = "0.1.0"


def _http_error(exc: CLICommandError) -> HTTPException:
    if exc.payload.get("errorType") == "UnknownIdentityError":
        status = 404
    elif exc.exit_code == 2:
        status = 422
    else:
        status = 400
    return HTTPException(status_code=status, detail=exc.payload)


def create_fastapi_app() -> FastAPI:
    app = FastAPI(
        title="hlspin API",
        description="Evaluate spin Hall-Littlewood functions and verify their identities.",
        version=API_VERSION,
    )

    @app.get("/", summary="Service information")
    async def info() -> dict:
        return {
            "identity_count": len(CATALOG),
            "tolerance": settings.tolerance,
            "threads": settings.threads,
            "seed": settings.seed,
        }

    @app.get("/identities", summary="List catalog identities")
    async def list_identities() -> List[dict]:
        entries: List[Dict[str, Any]] = [
            {"id": check.id, "kind": check.kind, "paperRef": check.paper_ref}
            for check in sorted(CATALOG.values(), key=lambda check: check.id)
        ]
        entries.extend(
            {"id": check_id, "kind": None, "outOfScope": reason}
            for check_id, reason in sorted(OUT_OF_SCOPE.items())
        )
        return entries

    @app.post("/compute", summary="Evaluate one function at one point")
    def compute(manifest: RunManifest) -> dict:
        try:
            return compute_value(manifest.model_copy(update={"command": "compute"}))
        except CLICommandError as exc:
            raise _http_error(exc) from exc

    @app.post("/verify", summary="Run identity checks and return their reports")
    def verify(manifest: RunManifest) -> List[dict]:
        try:
            payload, _ = verify_identities(manifest, threads=settings.threads)
        except CLICommandError as exc:
            raise _http_error(exc) from exc
        return payload

    return app


app = create_fastapi_app()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("hlspin.http_app:app", host="127.0.0.1", port=8000, reload=True)
