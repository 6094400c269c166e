"""
Configuration module for flagrep.
Loads and validates environment variables.
"""
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Central configuration management using environment variables."""

    # Logging
    LOG_LEVEL: str = os.getenv("FLAGREP_LOG_LEVEL", "WARNING")

    # Resource caps
    MAX_TABLE: int = int(os.getenv("FLAGREP_MAX_TABLE", "1000000"))
    MAX_WEIGHTS: int = int(os.getenv("FLAGREP_MAX_WEIGHTS", "1000000"))
    MAX_GROUP_ORDER: int = int(os.getenv("FLAGREP_MAX_GROUP_ORDER", "100000"))
    ITERATION_CAP: int = int(os.getenv("FLAGREP_ITERATION_CAP", "100000"))

    # bwb-table sweep
    TABLE_WORKERS: int = int(os.getenv("FLAGREP_TABLE_WORKERS", "1"))

    # Matsuki sampler
    MATSUKI_EPSILON: float = float(os.getenv("FLAGREP_MATSUKI_EPSILON", "1e-9"))

    @classmethod
    def validate(cls) -> None:
        """
        Validate that all configuration values are usable.

        Raises:
            ValueError: If any configuration value is out of range.
        """
        positive_vars = {
            "FLAGREP_MAX_TABLE": cls.MAX_TABLE,
            "FLAGREP_MAX_WEIGHTS": cls.MAX_WEIGHTS,
            "FLAGREP_MAX_GROUP_ORDER": cls.MAX_GROUP_ORDER,
            "FLAGREP_ITERATION_CAP": cls.ITERATION_CAP,
            "FLAGREP_TABLE_WORKERS": cls.TABLE_WORKERS,
        }

        invalid_vars = [var for var, value in positive_vars.items() if value <= 0]
        if not 0.0 < cls.MATSUKI_EPSILON < 1.0:
            invalid_vars.append("FLAGREP_MATSUKI_EPSILON")
        if invalid_vars:
            raise ValueError(
                f"Invalid configuration values: {', '.join(invalid_vars)}\n"
                "Caps and worker counts must be positive; epsilon must lie in (0, 1)."
            )
