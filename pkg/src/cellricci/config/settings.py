"""
Configuration management for cellricci.

Loads settings from environment variables (prefix ``CELLRICCI_``) with validation.
"""

from fractions import Fraction
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="CELLRICCI_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Parallelism
    jobs: int = Field(
        default=1, description="Default worker count for per-vector fan-out"
    )

    # Spectral Configuration
    spectral_eps: float = Field(
        default=1e-9, description="Absolute threshold separating zero eigenvalues"
    )
    jacobi_tolerance: float = Field(
        default=1e-12,
        description="Off-diagonal Frobenius norm at which Jacobi sweeps stop",
    )
    jacobi_max_sweeps: int = Field(
        default=100, description="Maximum number of cyclic Jacobi sweeps"
    )

    # Curvature Configuration
    bochner_tolerance: float = Field(
        default=1e-9, description="Tolerance of the Bochner identity check"
    )
    lipschitz_strict: bool = Field(
        default=True, description="Refuse dual witnesses that are not 1-Lipschitz"
    )
    limit_max_iterations: int = Field(
        default=24, description="Refinement cap for the alpha -> 1 limit"
    )
    default_alpha: str = Field(
        default="1/2", description="Laziness used by the transport command"
    )

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Log file path")

    # Validators
    @field_validator("jobs", "jacobi_max_sweeps", "limit_max_iterations")
    @classmethod
    def validate_positive_int(cls, v: int) -> int:
        """Ensure counts are positive."""
        if v <= 0:
            raise ValueError("value must be positive")
        return v

    @field_validator("spectral_eps", "jacobi_tolerance", "bochner_tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Ensure tolerances are positive."""
        if v <= 0.0:
            raise ValueError("tolerance must be positive")
        return v

    @field_validator("default_alpha")
    @classmethod
    def validate_default_alpha(cls, v: str) -> str:
        """Ensure default_alpha is a rational in [0, 1]."""
        try:
            alpha = Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"default_alpha is not a rational: {v!r}") from e
        if not 0 <= alpha <= 1:
            raise ValueError("default_alpha must be between 0 and 1")
        return v.strip()

    @property
    def alpha(self) -> Fraction:
        """default_alpha as an exact rational."""
        return Fraction(self.default_alpha)


# Singleton settings instance
settings = Settings()


def print_settings(console=None) -> None:
    """Print current settings as a table."""
    from rich.console import Console
    from rich.table import Table

    console = console or Console()
    table = Table(title="cellricci configuration")

    table.add_column("Setting", style="cyan")
    table.add_column("Value", style="green")

    for field_name in Settings.model_fields.keys():
        table.add_row(field_name, str(getattr(settings, field_name)))

    console.print(table)


if __name__ == "__main__":
    print_settings()
