from __future__ import annotations

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

CheckKind = Literal["exact", "truncated", "quadrature"]


class Diagnostics(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    cap: Optional[int] = None
    tail_estimate: Optional[float] = Field(default=None, alias="tailEstimate")
    terms: Optional[int] = None
    stabilization_delta: Optional[float] = Field(default=None, alias="stabilizationDelta")
    node_count: Optional[int] = Field(default=None, alias="nodeCount")
    last_delta: Optional[float] = Field(default=None, alias="lastDelta")
    points: Optional[int] = None
    detail: Dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    """Outcome of one identity check at one parameter point."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    paper_ref: str = Field(alias="paperRef")
    kind: CheckKind
    params: Dict[str, Any] = Field(default_factory=dict)
    residual: float
    tolerance: float
    passed: bool = Field(alias="pass")
    diagnostics: Diagnostics = Field(default_factory=Diagnostics)
    seed_index: int = Field(default=0, alias="seedIndex")

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


class CheckConfig(BaseModel):
    """Tolerances, truncation policy and sampling controls shared by all checks."""

    model_config = ConfigDict(populate_by_name=True)

    tolerance: float = 1e-10
    truncation_start: int = Field(default=4, alias="truncationStart")
    truncation_step_rule: str = Field(
        default="cap <- cap + max(4, cap // 2)", alias="truncationStepRule"
    )
    max_part_cap: int = Field(default=80, alias="maxPartCap")
    seed: int = 1
    points: int = 3
    max_length: int = Field(default=3, alias="maxLength")
    max_part: int = Field(default=3, alias="maxPart")
    quadrature_tolerance: float = Field(default=1e-9, alias="quadratureTolerance")

    @field_validator("tolerance", "quadrature_tolerance")
    @classmethod
    def _positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerance must be > 0")
        return value

    @field_validator("truncation_start", "max_part_cap", "points")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    def next_cap(self, cap: int) -> int:
        return cap + max(4, cap // 2)
