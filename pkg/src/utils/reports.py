"""
Verification Reports

Machine-readable results of exact and numerical checks. The JSON schema is
stable: {"check", "weight", "pass", "details"} plus, for numerical checks,
"samples", "residuals", "tolerance", "parameters" and the optional
"terms", "seed", "envelope_A".
"""
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class VerificationReport(BaseModel):
    """Outcome of one check at one weight"""

    model_config = ConfigDict(populate_by_name=True)

    check: str
    weight: Optional[int] = None
    passed: bool = Field(serialization_alias="pass")
    details: Dict[str, Any] = Field(default_factory=dict)
    terms: Optional[int] = None
    seed: Optional[int] = None
    envelope_A: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude_none=True)

    def to_json(self) -> str:
        """Serialize with sorted keys so identical runs give identical bytes"""
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        weight = "-" if self.weight is None else str(self.weight)
        return f"{self.check:<16} k={weight:<4} {verdict}"


class NumericCheckReport(VerificationReport):
    """
    Outcome of an approximate check

    passed holds iff every residual is below tolerance and, when a
    discrimination control is attached, the control residual exceeds its
    threshold.
    """

    samples: List[str] = Field(default_factory=list)
    residuals: List[float] = Field(default_factory=list)
    tolerance: float
    parameters: Dict[str, Any] = Field(default_factory=dict)
    control: Optional[Dict[str, Any]] = None

    def to_text(self) -> str:
        worst = max(self.residuals) if self.residuals else 0.0
        return f"{super().to_text()}  max residual {worst:.3e} (tol {self.tolerance:.1e})"


def numeric_verdict(
    residuals: List[float],
    tolerance: float,
    control_residual: Optional[float] = None,
    control_threshold: Optional[float] = None,
) -> bool:
    """Pass flag for a NumericCheckReport"""
    ok = all(r < tolerance for r in residuals)
    if control_residual is not None and control_threshold is not None:
        ok = ok and control_residual > control_threshold
    return ok
