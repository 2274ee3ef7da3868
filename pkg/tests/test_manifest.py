from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from hlspin.commands import build_manifest, manifest_hash, CLICommandError
from hlspin.manifest import RunManifest, load_manifest
from hlspin.signatures import Signature


def test_manifest_accepts_aliases_and_field_names() -> None:
    manifest = RunManifest.model_validate(
        {"command": "compute", "kind": "f", "lambda": "1", "mu": "2,1", "maxPart": 4}
    )
    assert manifest.signature("lambda") == Signature.of(1)
    assert manifest.signature("mu") == Signature.of(2, 1)
    assert manifest.max_part == 4
    same = RunManifest(command="compute", kind="f", lam="1", mu="2,1", max_part=4)
    assert same == manifest


def test_manifest_rejects_bad_literals() -> None:
    with pytest.raises(ValidationError):
        RunManifest(u="1/2,x")
    with pytest.raises(ValidationError):
        RunManifest(kind="h")
    with pytest.raises(ValidationError):
        RunManifest(tolerance=0)
    with pytest.raises(ValidationError):
        RunManifest.model_validate({"unexpected": 1})


def test_params_and_inputs() -> None:
    manifest = RunManifest(q="1/3", s="1/5", u="1/4", t="2")
    params = manifest.params()
    assert params.q == Fraction(1, 3)
    assert manifest.check_inputs() == {"us": [Fraction(1, 4)], "t": Fraction(2)}
    sampled = RunManifest(seed=5).params()
    assert sampled == RunManifest(seed=5).params()
    with pytest.raises(ValueError):
        RunManifest(q="1/3").params()


def test_check_config_carries_overrides() -> None:
    cfg = RunManifest(cap=12, truncation_start=2, points=1, tolerance=1e-6).check_config()
    assert cfg.max_part_cap == 12
    assert cfg.truncation_start == 2
    assert cfg.points == 1
    assert cfg.tolerance == 1e-6


def test_json_round_trip_and_hash_stability(tmp_path: Path) -> None:
    manifest = RunManifest(identities=["cauchy"], q="1/3", s="1/5", lam="", seed=3)
    path = tmp_path / "run.json"
    path.write_text(json.dumps(manifest.to_json_dict()), encoding="utf-8")

    loaded = load_manifest(path)

    assert loaded == manifest
    assert manifest.to_json_dict()["lambda"] == ""
    assert manifest_hash(loaded) == manifest_hash(manifest)


def test_yaml_manifest(tmp_path: Path) -> None:
    path = tmp_path / "run.yaml"
    path.write_text("command: table\nkind: g\nnu: '1,0'\nlength: 2\n", encoding="utf-8")

    manifest = load_manifest(path)

    assert manifest.command == "table"
    assert manifest.length == 2


def test_non_mapping_manifest_is_rejected(tmp_path: Path) -> None:
    path = tmp_path / "run.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError):
        load_manifest(path)


def test_build_manifest_lets_flags_override_file(tmp_path: Path) -> None:
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"identities": ["cauchy"], "seed": 4, "points": 2}), encoding="utf-8")

    manifest = build_manifest("verify", {"seed": 9, "points": None}, manifest_path=path)

    assert manifest.seed == 9
    assert manifest.points == 2
    assert manifest.identities == ["cauchy"]
    with pytest.raises(CLICommandError) as exc_info:
        build_manifest("verify", {}, manifest_path=tmp_path / "missing.json")
    assert exc_info.value.exit_code == 2


def test_acceptance_preset_fills_unset_scale() -> None:
    manifest = RunManifest(preset="acceptance")
    cfg = manifest.check_config()
    assert (cfg.points, cfg.max_length, cfg.max_part) == (20, 4, 5)
    explicit = RunManifest.model_validate({"preset": "acceptance", "maxPart": 2})
    assert (explicit.points, explicit.max_length, explicit.max_part) == (20, 4, 2)
    assert RunManifest().max_length == 3
    with pytest.raises(ValidationError):
        RunManifest(preset="nightly")


def test_acceptance_preset_survives_merging(tmp_path: Path) -> None:
    manifest = build_manifest("verify", {"preset": "acceptance", "points": 2})
    assert (manifest.points, manifest.max_length, manifest.max_part) == (2, 4, 5)

    path = tmp_path / "run.yaml"
    path.write_text("preset: acceptance\nidentities: [cross-method]\n", encoding="utf-8")
    merged = build_manifest("verify", {"max_part": 3}, manifest_path=path)
    assert (merged.points, merged.max_length, merged.max_part) == (20, 4, 3)
    assert merged.to_json_dict()["preset"] == "acceptance"
