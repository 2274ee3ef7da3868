from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .config import settings
from .report import CheckConfig
from .scalars import Params, Scalar, parse_scalar, parse_scalar_list, sample_generic_params
from .signatures import Signature

try:
    import yaml  # type: ignore[import-untyped]
except Exception:  # pragma: no cover - yaml is optional
    yaml = None  # type: ignore

ComputeKind = Literal[
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
]

# Sampling scale of the full acceptance run; explicit fields still win.
ACCEPTANCE_PRESET: Dict[str, Any] = {"points": 20, "max_length": 4, "max_part": 5}


class RunManifest(BaseModel):
    """Everything needed to reproduce one compute, verify or table run.

    Scalars and signatures stay in their string form so a manifest
    round-trips through JSON unchanged.
    """

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    command: Literal["compute", "verify", "table"] = "verify"
    kind: Optional[ComputeKind] = None
    variant: Optional[str] = None
    identities: List[str] = Field(default_factory=list)
    q: Optional[str] = None
    s: Optional[str] = None
    mu: Optional[str] = None
    nu: Optional[str] = None
    lam: Optional[str] = Field(default=None, alias="lambda")
    u: Optional[str] = None
    v: Optional[str] = None
    t: Optional[str] = None
    zeta: Optional[str] = None
    count: Optional[int] = None
    length: Optional[int] = None
    seed: int = Field(default_factory=lambda: settings.seed)
    tolerance: float = Field(default_factory=lambda: settings.tolerance)
    cap: Optional[int] = Field(default=None, alias="maxPartCap")
    truncation_start: Optional[int] = Field(default=None, alias="truncationStart")
    points: int = 3
    max_length: int = Field(default=3, alias="maxLength")
    max_part: int = Field(default=3, alias="maxPart")
    out: Optional[str] = None
    preset: Optional[Literal["acceptance"]] = None

    @model_validator(mode="before")
    @classmethod
    def _apply_preset(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("preset") != "acceptance":
            return data
        data = dict(data)
        for name, value in ACCEPTANCE_PRESET.items():
            alias = cls.model_fields[name].alias
            if name not in data and alias not in data:
                data[name] = value
        return data

    @field_validator("q", "s", "t", "zeta")
    @classmethod
    def _scalar_literal(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_scalar(value)
        return value

    @field_validator("mu", "nu", "lam")
    @classmethod
    def _signature_literal(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            Signature.parse(value)
        return value

    @field_validator("u", "v")
    @classmethod
    def _scalar_list_literal(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_scalar_list(value)
        return value

    @field_validator("tolerance")
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerance must be > 0")
        return value

    def has_params(self) -> bool:
        return self.q is not None and self.s is not None

    def params(self, depth: int = 6, relax: Sequence[str] = ()) -> Params:
        """Explicit (q, s), or a seed-reproducible generic sample when both are absent."""

        if self.has_params():
            return Params.create(
                parse_scalar(self.q), parse_scalar(self.s), depth=depth, relax=relax
            )
        if self.q is not None or self.s is not None:
            raise ValueError("Provide both q and s, or neither.")
        return sample_generic_params(self.seed, depth, 0, count_v=0, bound=settings.bound).params

    def signature(self, name: Literal["mu", "nu", "lambda"]) -> Optional[Signature]:
        raw = self.lam if name == "lambda" else getattr(self, name)
        return None if raw is None else Signature.parse(raw)

    def variables(self, name: Literal["u", "v"]) -> Optional[List[Scalar]]:
        raw = getattr(self, name)
        return None if raw is None else parse_scalar_list(raw)

    def scalar(self, name: Literal["t", "zeta"]) -> Optional[Scalar]:
        raw = getattr(self, name)
        return None if raw is None else parse_scalar(raw)

    def check_config(self) -> CheckConfig:
        values: Dict[str, Any] = {
            "tolerance": self.tolerance,
            "seed": self.seed,
            "points": self.points,
            "max_length": self.max_length,
            "max_part": self.max_part,
        }
        if self.cap is not None:
            values["max_part_cap"] = self.cap
        if self.truncation_start is not None:
            values["truncation_start"] = self.truncation_start
        return CheckConfig(**values)

    def check_inputs(self) -> Dict[str, Any]:
        """Overrides for sampled check inputs; absent fields are left to the sampler."""

        inputs: Dict[str, Any] = {
            "mu": self.signature("mu"),
            "nu": self.signature("nu"),
            "lambda": self.signature("lambda"),
            "us": self.variables("u"),
            "vs": self.variables("v"),
            "t": self.scalar("t"),
            "zeta": self.scalar("zeta"),
        }
        return {key: value for key, value in inputs.items() if value is not None}

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


def load_manifest(path: Path) -> RunManifest:
    """Load a run manifest from a JSON or YAML file."""

    raw = path.read_text(encoding="utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError:
        if not yaml:
            raise RuntimeError(
                "Failed to parse the manifest as JSON and PyYAML is not installed."
            )
        data = yaml.safe_load(raw)
    if not isinstance(data, dict):
        raise ValueError("A run manifest must decode to an object.")
    return RunManifest.model_validate(data)
