from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import ValidationError

from .config import settings
from .formulas import (
    SCHUR_KINDS,
    f_principal,
    f_symmetrized,
    g_principal,
    g_symmetrized,
    hall_littlewood_p,
    rational_limit_f,
    rational_limit_g,
    schur_like_determinant,
)
from .identities import UnknownIdentityError, run_suite
from .lattice import skew_f, skew_f_conjugated, skew_g, skew_g_conjugated
from .manifest import RunManifest, load_manifest
from .scalars import Params, PoleError, Scalar, format_scalar
from .signatures import Signature, enumerate_signatures
from .weights import BASIC

logger = logging.getLogger(__name__)

USAGE_EXIT_CODE = 2
FAILURE_EXIT_CODE = 1
TABLE_KINDS = ("f", "g", "fc", "gc", "f-sym", "g-sym")


class CLICommandError(RuntimeError):
    """Raised when a command cannot produce a usable result."""

    def __init__(self, payload: dict[str, Any], exit_code: int):
        super().__init__(payload.get("error", "command failed"))
        self.payload = payload
        self.exit_code = exit_code


def _usage_error(command: str, exc: Exception, **extra: Any) -> CLICommandError:
    payload: Dict[str, Any] = {
        "command": command,
        "exit_code": USAGE_EXIT_CODE,
        "error": str(exc),
        "errorType": type(exc).__name__,
    }
    payload.update(extra)
    return CLICommandError(payload, exit_code=USAGE_EXIT_CODE)


def build_manifest(
    command: str,
    overrides: Mapping[str, Any],
    manifest_path: Optional[Path] = None,
) -> RunManifest:
    """Merge command-line overrides over an optional manifest file and validate."""

    try:
        base = load_manifest(manifest_path) if manifest_path else RunManifest(command=command)
    except (OSError, ValueError, RuntimeError) as exc:
        raise _usage_error(command, exc) from exc
    values = base.model_dump(exclude_unset=True, exclude_none=True)
    values["command"] = command
    values.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return RunManifest.model_validate(values)
    except ValidationError as exc:
        fields = [".".join(str(part) for part in error["loc"]) for error in exc.errors()]
        raise _usage_error(command, exc, fields=fields) from exc


def _require(value: Optional[Any], flag: str, kind: str) -> Any:
    if value is None:
        raise ValueError(f"compute {kind} needs --{flag}.")
    return value


def _lower(manifest: RunManifest, default: Signature) -> Signature:
    lower = manifest.signature("lambda")
    return default if lower is None else lower


def _evaluate(kind: str, manifest: RunManifest, params: Params) -> Scalar:
    mu, nu = manifest.signature("mu"), manifest.signature("nu")
    us, vs = manifest.variables("u"), manifest.variables("v")
    if kind in {"f", "fc", "f-sym", "f-principal", "hl-p"}:
        mu = _require(mu, "mu", kind)
        us = _require(us, "u", kind)
    if kind in {"g", "gc", "g-sym", "g-principal"}:
        nu = _require(nu, "nu", kind)
        vs = _require(vs, "v", kind)
    if kind == "f":
        return skew_f(mu, _lower(manifest, Signature()), us, BASIC, params)
    if kind == "fc":
        return skew_f_conjugated(mu, _lower(manifest, Signature()), us, params)
    if kind == "g":
        return skew_g(nu, _lower(manifest, Signature.zeros(len(nu))), vs, BASIC, params)
    if kind == "gc":
        return skew_g_conjugated(nu, _lower(manifest, Signature.zeros(len(nu))), vs, params)
    if kind == "f-sym":
        return f_symmetrized(mu, us, params)
    if kind == "g-sym":
        return g_symmetrized(nu, vs, params, subset_form=manifest.variant == "subset")
    if kind == "f-principal":
        return f_principal(mu, _require(us[:1] or None, "u", kind)[0], params)
    if kind == "g-principal":
        v = _require(vs[:1] or None, "v", kind)[0]
        return g_principal(nu, v, manifest.count if manifest.count is not None else len(nu), params)
    if kind == "hl-p":
        return hall_littlewood_p(mu, us, params.q)
    if kind == "schur-det":
        variant = manifest.variant or "F-q0"
        if variant not in SCHUR_KINDS:
            raise ValueError(f"Unknown determinant variant {variant!r}; expected one of {', '.join(SCHUR_KINDS)}.")
        if variant.startswith("F"):
            return schur_like_determinant(
                variant, _require(mu, "mu", kind), _require(us, "u", kind), params
            )
        return schur_like_determinant(
            variant, _require(nu, "nu", kind), _require(vs, "v", kind), params
        )
    if kind == "rational":
        zeta = _require(manifest.scalar("zeta"), "zeta", kind)
        if mu is not None:
            return rational_limit_f(mu, _require(us, "u", kind), zeta)
        return rational_limit_g(_require(nu, "nu", kind), _require(vs, "v", kind), zeta)
    raise ValueError(f"Unknown compute kind {kind!r}.")


def _params_payload(params: Params) -> Dict[str, str]:
    return {"q": format_scalar(params.q), "s": format_scalar(params.s)}


def _params_for(manifest: RunManifest) -> Params:
    # the q=0 determinants sit on the excluded locus on purpose
    relax = ["q=0"] if manifest.kind == "schur-det" else []
    return manifest.params(relax=relax)


def compute_value(manifest: RunManifest) -> Dict[str, Any]:
    kind = manifest.kind
    if kind is None:
        raise _usage_error("compute", ValueError("compute needs a kind."))
    try:
        params = _params_for(manifest)
        value = _evaluate(kind, manifest, params)
    except PoleError as exc:
        raise CLICommandError(
            {
                "command": "compute",
                "kind": kind,
                "exit_code": FAILURE_EXIT_CODE,
                "error": str(exc),
                "errorType": type(exc).__name__,
            },
            exit_code=FAILURE_EXIT_CODE,
        ) from exc
    except ValueError as exc:
        raise _usage_error("compute", exc, kind=kind) from exc
    return {
        "command": "compute",
        "kind": kind,
        "params": _params_payload(params),
        "value": format_scalar(value),
    }


def verify_identities(
    manifest: RunManifest, threads: Optional[int] = None
) -> Tuple[List[Dict[str, Any]], int]:
    """Run the requested identity checks; the exit code is 0 iff every report passes."""

    try:
        cfg = manifest.check_config()
        params = None
        if manifest.has_params():
            params = manifest.params(depth=2 * cfg.max_length + cfg.max_part + 4)
        reports = run_suite(
            manifest.identities,
            cfg,
            threads,
            params=params,
            inputs=manifest.check_inputs() or None,
        )
    except UnknownIdentityError as exc:
        raise _usage_error("verify", exc, identity=exc.identity_id) from exc
    except ValueError as exc:
        raise _usage_error("verify", exc) from exc
    payload = [report.to_json_dict() for report in reports]
    failed = [report.id for report in reports if not report.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(reports)} checks failed: {', '.join(sorted(set(failed)))}")
    return payload, FAILURE_EXIT_CODE if failed else 0


def manifest_hash(manifest: RunManifest) -> str:
    encoded = json.dumps(manifest.to_json_dict(), sort_keys=True).encode("utf-8")
    return hashlib.sha256(encoded).hexdigest()[:16]


def report_path(manifest: RunManifest) -> Path:
    if manifest.out:
        return Path(manifest.out).expanduser()
    return settings.report_dir / f"{manifest_hash(manifest)}.json"


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def write_report(path: Path, payload: Sequence[Dict[str, Any]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(list(payload)) + "\n", encoding="utf-8")
    return path


def table_csv(manifest: RunManifest) -> str:
    """F or G values over every signature of ``length`` with parts <= ``max_part``."""

    kind = manifest.kind
    if kind not in TABLE_KINDS:
        raise _usage_error(
            "table", ValueError(f"table kind must be one of {', '.join(TABLE_KINDS)}.")
        )
    if manifest.length is None or manifest.length < 0:
        raise _usage_error("table", ValueError("table needs --length >= 0."))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["signature", "value"])
    signatures = (
        [] if manifest.max_part < 0 else enumerate_signatures(manifest.length, manifest.max_part)
    )
    try:
        params = _params_for(manifest)
        for sig in signatures:
            field = "mu" if kind.startswith("f") else "nu"
            row = manifest.model_copy(update={field: str(sig)})
            writer.writerow([str(sig), format_scalar(_evaluate(kind, row, params))])
    except PoleError as exc:
        raise CLICommandError(
            {
                "command": "table",
                "kind": kind,
                "exit_code": FAILURE_EXIT_CODE,
                "error": str(exc),
                "errorType": type(exc).__name__,
            },
            exit_code=FAILURE_EXIT_CODE,
        ) from exc
    except ValueError as exc:
        raise _usage_error("table", exc, kind=kind) from exc
    return buffer.getvalue()
