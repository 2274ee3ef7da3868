from __future__ import annotations

from pathlib import Path

import pytest

from hlspin.config import Settings


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("HLSPIN_THREADS", "HLSPIN_TOLERANCE", "HLSPIN_SEED", "HLSPIN_BOUND", "HLSPIN_REPORT_DIR"):
        monkeypatch.delenv(name, raising=False)

    settings = Settings.load()

    assert settings.threads == 1
    assert settings.tolerance == 1e-10
    assert settings.seed == 1
    assert settings.bound == 64
    assert settings.report_dir == Path(".hlspin/reports")


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("HLSPIN_THREADS", "4")
    monkeypatch.setenv("HLSPIN_TOLERANCE", "1e-6")
    monkeypatch.setenv("HLSPIN_SEED", "0")
    monkeypatch.setenv("HLSPIN_REPORT_DIR", str(tmp_path))

    settings = Settings.load()

    assert settings.threads == 4
    assert settings.tolerance == 1e-6
    assert settings.seed == 0
    assert settings.report_dir == tmp_path


def test_invalid_values_fall_back_to_defaults(
    monkeypatch: pytest.MonkeyPatch, caplog: pytest.LogCaptureFixture
) -> None:
    monkeypatch.setenv("HLSPIN_THREADS", "many")
    monkeypatch.setenv("HLSPIN_TOLERANCE", "-1")
    monkeypatch.setenv("HLSPIN_BOUND", "1")

    with caplog.at_level("WARNING"):
        settings = Settings.load()

    assert settings.threads == 1
    assert settings.tolerance == 1e-10
    assert settings.bound == 64
    assert "HLSPIN_THREADS" in caplog.text
