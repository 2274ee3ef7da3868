from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import uvicorn

from .commands import (
    TABLE_KINDS,
    CLICommandError,
    build_manifest,
    compute_value,
    dump_json,
    report_path,
    table_csv,
    verify_identities,
    write_report,
)
from .manifest import RunManifest

logger = logging.getLogger(__name__)

COMPUTE_KINDS = (
    "f",
    "g",
    "fc",
    "gc",
    "f-sym",
    "g-sym",
    "f-principal",
    "g-principal",
    "hl-p",
    "schur-det",
    "rational",
)


def _add_point_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", default=None, help='Global parameter q, e.g. "1/3" or "0.2+0.1i".')
    parser.add_argument("--s", default=None, help="Global spin parameter s.")
    parser.add_argument("--mu", default=None, help='Signature such as "2,1,0"; "" is the empty signature.')
    parser.add_argument("--nu", default=None, help="Signature for G-type kinds.")
    parser.add_argument(
        "--lambda", dest="lam", default=None, help="Lower signature of a skew function."
    )
    parser.add_argument("--u", default=None, help="Comma-separated spectral variables u_i.")
    parser.add_argument("--v", default=None, help="Comma-separated spectral variables v_j.")
    parser.add_argument("--t", default=None, help="Fusion parameter of the fused functions.")
    parser.add_argument("--zeta", default=None, help="Boundary parameter of the rational limit.")
    parser.add_argument("--seed", type=int, default=None, help="Seed for sampled parameters.")
    parser.add_argument(
        "--tol", dest="tolerance", type=float, default=None, help="Residual tolerance."
    )
    parser.add_argument(
        "--manifest",
        type=Path,
        default=None,
        help="JSON or YAML run manifest; command-line flags override its values.",
    )


def _overrides(args: argparse.Namespace, *names: str) -> Dict[str, Any]:
    return {name: getattr(args, name, None) for name in names}


POINT_FIELDS = ("q", "s", "mu", "nu", "lam", "u", "v", "t", "zeta", "seed", "tolerance")


def _manifest(command: str, args: argparse.Namespace, *extra: str) -> RunManifest:
    return build_manifest(
        command, _overrides(args, *POINT_FIELDS, *extra), manifest_path=args.manifest
    )


def _execute_compute(args: argparse.Namespace) -> None:
    manifest = _manifest("compute", args, "kind", "variant", "count")
    result = compute_value(manifest)
    if args.json:
        print(dump_json(result))
    else:
        print(result["value"])


def _execute_verify(args: argparse.Namespace) -> None:
    # an empty positional list must not mask the manifest ids
    args.identities = args.identities or None
    manifest = _manifest(
        "verify",
        args,
        "identities",
        "cap",
        "points",
        "truncation_start",
        "max_length",
        "max_part",
        "out",
        "preset",
    )
    payload, exit_code = verify_identities(manifest, threads=args.threads)
    path = write_report(report_path(manifest), payload)
    logger.info(f"Wrote {len(payload)} reports to {path}")
    print(dump_json(payload))
    if exit_code:
        raise SystemExit(exit_code)


def _execute_table(args: argparse.Namespace) -> None:
    manifest = _manifest("table", args, "kind", "length", "max_part")
    rendered = table_csv(manifest)
    if args.out:
        path = Path(args.out).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(rendered, encoding="utf-8")
        logger.info(f"Wrote table to {path}")
        return
    sys.stdout.write(rendered)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="hlspin: exact spin Hall-Littlewood symmetric functions and their identities"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    compute_parser = subparsers.add_parser("compute", help="Evaluate one function at one point")
    compute_parser.add_argument("kind", choices=COMPUTE_KINDS)
    _add_point_arguments(compute_parser)
    compute_parser.add_argument(
        "--variant",
        default=None,
        help='Determinant kind for schur-det (F-q0, G-q0, F-inhom, G-inhom) or "subset" for g-sym.',
    )
    compute_parser.add_argument(
        "--count", type=int, default=None, help="Number of principal points for g-principal."
    )
    compute_parser.add_argument("--json", action="store_true", help="Print a JSON object.")

    verify_parser = subparsers.add_parser(
        "verify", help='Check catalog identities; pass "all" for the whole catalog'
    )
    verify_parser.add_argument("identities", nargs="*", default=None)
    _add_point_arguments(verify_parser)
    verify_parser.add_argument("--cap", type=int, default=None, help="Largest truncation cap.")
    verify_parser.add_argument(
        "--truncation-start", type=int, default=None, help="First truncation cap."
    )
    verify_parser.add_argument(
        "--points", type=int, default=None, help="Sampled points per identity."
    )
    verify_parser.add_argument("--max-length", type=int, default=None)
    verify_parser.add_argument("--max-part", type=int, default=None)
    verify_parser.add_argument(
        "--acceptance",
        dest="preset",
        action="store_const",
        const="acceptance",
        default=None,
        help="Acceptance scale: 20 points, length 4, parts 5, unless set explicitly.",
    )
    verify_parser.add_argument(
        "--threads", type=int, default=None, help="Worker threads (HLSPIN_THREADS)."
    )
    verify_parser.add_argument(
        "--out", default=None, help="Report file; defaults to HLSPIN_REPORT_DIR/<hash>.json."
    )

    table_parser = subparsers.add_parser(
        "table", help="CSV of F or G over all signatures with bounded parts"
    )
    table_parser.add_argument("kind", choices=TABLE_KINDS)
    _add_point_arguments(table_parser)
    table_parser.add_argument("--length", type=int, required=True)
    table_parser.add_argument("--max-part", type=int, required=True)
    table_parser.add_argument("--out", default=None, help="Write the CSV here instead of stdout.")

    http_parser = subparsers.add_parser("serve-http", help="Run the hlspin FastAPI server")
    http_parser.add_argument(
        "--host", default="127.0.0.1", help="Host interface for the HTTP server"
    )
    http_parser.add_argument("--port", type=int, default=8000, help="Port for the HTTP server")
    http_parser.add_argument(
        "--reload", action="store_true", help="Enable autoreload (development only)"
    )

    return parser


def main(argv: Optional[list[str]] = None) -> None:
    parser = _build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command == "serve-http":
        uvicorn.run("hlspin.http_app:app", host=args.host, port=args.port, reload=args.reload)
        return

    handlers = {
        "compute": _execute_compute,
        "verify": _execute_verify,
        "table": _execute_table,
    }
    handler = handlers.get(args.command)
    if handler is None:
        parser.error(f"Unknown command: {args.command}")
    try:
        handler(args)
    except CLICommandError as exc:
        print(json.dumps(exc.payload, indent=2), file=sys.stderr)
        raise SystemExit(exc.exit_code) from exc


if __name__ == "__main__":
    main()
