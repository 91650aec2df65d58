"""
Validated physical parameters shared by every solver.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PhysicalParams(BaseModel):
    """
    Constants (m, hbar, lambda) plus the per-problem couplings.

    ``lam`` is the deformation parameter (momentum units, any sign);
    ``slope`` is the linear-potential force F, ``strength`` the delta
    coupling V, ``kappa`` the Coulomb coupling, and ``charge * field`` the
    Stark perturbation strength.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    mass: float = Field(1.0, gt=0, allow_inf_nan=False)
    hbar: float = Field(1.0, gt=0, allow_inf_nan=False)
    lam: float = Field(0.0, allow_inf_nan=False)
    slope: float = Field(1.0, gt=0, allow_inf_nan=False)
    strength: float = Field(1.0, gt=0, allow_inf_nan=False)
    kappa: float = Field(1.0, gt=0, allow_inf_nan=False)
    charge: float = Field(1.0, allow_inf_nan=False)
    field: float = Field(0.01, allow_inf_nan=False)

    @property
    def e_field(self) -> float:
        """Product e * E of charge and field strength (force units)."""
        return self.charge * self.field

    @property
    def gauge_shift(self) -> float:
        """Uniform energy shift -lambda^2 / 2m carried by every bound level."""
        return -self.lam ** 2 / (2.0 * self.mass)

    def with_lambda(self, lam: float) -> "PhysicalParams":
        return self.with_updates(lam=lam)

    def with_updates(self, **changes: float) -> "PhysicalParams":
        """Copy with fields replaced, re-validated."""
        data = self.model_dump()
        data.update(changes)
        return PhysicalParams(**data)


class RunConfig(BaseModel):
    """Everything a CLI subcommand needs, validated at parse time."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: str
    params: PhysicalParams = PhysicalParams()
    n_min: int = Field(1, ge=1)
    n_max: int = Field(5, ge=1)
    grid_points: Optional[int] = Field(None, gt=0)
    x_max: Optional[float] = Field(None, gt=0, allow_inf_nan=False)
    fmt: Literal["csv", "json"] = "csv"
    out: Optional[str] = None
    tolerance: float = Field(1e-11, gt=0, lt=1, allow_inf_nan=False)
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _level_range(self) -> "RunConfig":
        if self.n_max < self.n_min:
            raise ValueError(f"n_max ({self.n_max}) must be >= n_min ({self.n_min})")
        return self

    @property
    def levels(self) -> List[int]:
        return list(range(self.n_min, self.n_max + 1))

    def describe(self) -> Dict[str, Any]:
        """Parameters echoed in the output envelope; excludes workers and paths."""
        return {
            **self.params.model_dump(),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "grid_points": self.grid_points,
            "x_max": self.x_max,
            "tolerance": self.tolerance,
        }
