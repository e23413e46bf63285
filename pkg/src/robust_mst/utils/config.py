"""
Configuration management for the robust spanning tree solver.
"""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Solver settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_prefix="ROBUST_MST_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging Configuration
    log_level: str = Field(default="INFO")
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    log_file: Optional[str] = Field(default=None)
    trace_enabled: bool = Field(default=False)

    # LP Configuration
    lp_tol_rel: float = Field(default=1e-6, gt=0)
    separation_tol: float = Field(default=1e-7, gt=0)
    feasibility_tol: float = Field(default=1e-7, gt=0)
    cut_cap_factor: int = Field(default=10, ge=1)
    lp_backend: str = Field(default="highs")

    # Exact Solver Configuration
    tree_enumeration_limit: int = Field(default=10_000_000, ge=1)
    two_stage_edge_limit: int = Field(default=64, ge=1)
    bnb_time_limit_s: float = Field(default=600.0, gt=0)

    # Generator Configuration
    scenario_cap: int = Field(default=100_000, ge=1)

    # Rounding Configuration
    default_seed: int = Field(default=20240917, ge=0, lt=2**64)
    max_restarts: int = Field(default=3, ge=0)
    rho1: float = Field(default=2.0, ge=2.0)

    # Benchmark Configuration
    bench_workers: int = Field(default=1, ge=1)


# Global settings instance
settings = Settings()


def get_tolerance(kind: str) -> float:
    """Get the configured numerical tolerance for a given check."""
    tolerance_map = {
        "lp": settings.lp_tol_rel,
        "separation": settings.separation_tol,
        "feasibility": settings.feasibility_tol,
    }
    return tolerance_map.get(kind, settings.feasibility_tol)
