from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

from hlspin.cli import main

POINT = ["--q", "1/3", "--s", "1/5"]


def test_compute_prints_exact_value(capsys: pytest.CaptureFixture[str]) -> None:
    main(["compute", "f", *POINT, "--mu", "0,0", "--u", "2,3"])

    captured = capsys.readouterr()
    # (q;q)_2 / ((1 - 2s)(1 - 3s))
    assert captured.out.strip() == "200/81"


def test_compute_json_payload(capsys: pytest.CaptureFixture[str]) -> None:
    main(["compute", "g", *POINT, "--nu", "0", "--v", "2", "--json"])

    result = json.loads(capsys.readouterr().out)
    assert result == {
        "command": "compute",
        "kind": "g",
        "params": {"q": "1/3", "s": "1/5"},
        "value": "13/9",
    }


def test_compute_symmetrized_matches_lattice(capsys: pytest.CaptureFixture[str]) -> None:
    main(["compute", "f", *POINT, "--mu", "2,1", "--u", "2,3/7"])
    lattice = capsys.readouterr().out.strip()
    main(["compute", "f-sym", *POINT, "--mu", "2,1", "--u", "2,3/7"])
    symmetrized = capsys.readouterr().out.strip()
    assert lattice == symmetrized


def test_compute_missing_variables_is_a_usage_error(
    capsys: pytest.CaptureFixture[str],
) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "f", *POINT, "--mu", "1"])

    assert exc_info.value.code == 2
    payload = json.loads(capsys.readouterr().err)
    assert payload["command"] == "compute"
    assert payload["exit_code"] == 2
    assert "--u" in payload["error"]


def test_compute_rejects_half_specified_parameters(
    capsys: pytest.CaptureFixture[str],
) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "f", "--q", "1/3", "--mu", "1", "--u", "2"])

    assert exc_info.value.code == 2
    assert "both q and s" in json.loads(capsys.readouterr().err)["error"]


def test_compute_rejects_malformed_literals(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "f", *POINT, "--mu", "0,1", "--u", "2,3"])

    assert exc_info.value.code == 2
    payload = json.loads(capsys.readouterr().err)
    assert payload["fields"] == ["mu"]


def test_compute_pole_exits_with_failure(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "f", *POINT, "--mu", "0", "--u", "5"])

    assert exc_info.value.code == 1
    payload = json.loads(capsys.readouterr().err)
    assert payload["errorType"] == "PoleError"


def test_table_lists_every_bounded_signature(capsys: pytest.CaptureFixture[str]) -> None:
    main(["table", "f", *POINT, "--u", "2,3", "--length", "2", "--max-part", "2"])

    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["signature", "value"]
    assert [row[0] for row in rows[1:]] == ["0,0", "1,0", "1,1", "2,0", "2,1", "2,2"]
    assert rows[1][1] == "200/81"


def test_table_with_empty_range_has_only_a_header(
    capsys: pytest.CaptureFixture[str],
) -> None:
    main(["table", "g", *POINT, "--v", "2", "--length", "1", "--max-part", "-1"])

    assert capsys.readouterr().out == "signature,value\n"


def test_table_writes_to_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "tables" / "g.csv"
    main(
        [
            "table",
            "g",
            *POINT,
            "--v",
            "2",
            "--length",
            "1",
            "--max-part",
            "1",
            "--out",
            str(out),
        ]
    )

    assert capsys.readouterr().out == ""
    rows = list(csv.reader(out.read_text(encoding="utf-8").splitlines()))
    assert rows[1] == ["0", "13/9"]
    assert len(rows) == 3


def test_verify_unknown_identity_exits_with_usage_error(
    capsys: pytest.CaptureFixture[str],
) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["verify", "no-such-id"])

    assert exc_info.value.code == 2
    payload = json.loads(capsys.readouterr().err)
    assert payload["identity"] == "no-such-id"
    assert payload["error"] == "Unknown identity id: no-such-id"


def test_verify_writes_report_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "reports" / "run.json"
    main(
        [
            "verify",
            "symmetry",
            "branching",
            "--points",
            "1",
            "--max-length",
            "2",
            "--max-part",
            "2",
            "--out",
            str(out),
        ]
    )

    printed = json.loads(capsys.readouterr().out)
    stored = json.loads(out.read_text(encoding="utf-8"))
    assert printed == stored
    assert [report["id"] for report in stored] == ["branching", "symmetry"]
    assert all(report["pass"] for report in stored)
    assert all("paperRef" in report for report in stored)


def test_verify_reads_yaml_manifest(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    manifest = tmp_path / "run.yaml"
    manifest.write_text(
        "identities:\n"
        "  - cauchy\n"
        "q: '1/3'\n"
        "s: '1/5'\n"
        "u: '1/4'\n"
        "v: '1/4'\n"
        "points: 1\n",
        encoding="utf-8",
    )

    main(["verify", "--manifest", str(manifest), "--out", str(tmp_path / "out.json")])

    reports = json.loads(capsys.readouterr().out)
    assert len(reports) == 1
    assert reports[0]["id"] == "cauchy"
    assert reports[0]["pass"] is True
    assert reports[0]["params"]["q"] == "1/3"


def test_verify_failing_report_exits_with_one(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(
            [
                "verify",
                "cauchy",
                *POINT,
                "--u",
                "3",
                "--v",
                "3",
                "--points",
                "1",
                "--out",
                str(tmp_path / "out.json"),
            ]
        )

    assert exc_info.value.code == 1
    reports = json.loads(capsys.readouterr().out)
    assert reports[0]["pass"] is False
    assert reports[0]["diagnostics"]["detail"]["errorType"] == "ConvergenceGateError"


def test_verify_with_no_ids_returns_empty_list(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    main(["verify", "--out", str(tmp_path / "empty.json")])

    assert json.loads(capsys.readouterr().out) == []


def test_verify_acceptance_flag_sets_the_scale(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    seen = {}

    def fake_verify(manifest, threads=None):
        seen["cfg"] = manifest.check_config()
        return [], 0

    monkeypatch.setattr("hlspin.cli.verify_identities", fake_verify)

    out = tmp_path / "r.json"
    main(["verify", "cross-method", "--acceptance", "--points", "2", "--out", str(out)])

    cfg = seen["cfg"]
    assert (cfg.points, cfg.max_length, cfg.max_part) == (2, 4, 5)
    assert json.loads(capsys.readouterr().out) == []
