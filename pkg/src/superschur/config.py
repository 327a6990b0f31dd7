"""
Configuration for the verification harness and randomized checks.
"""

import os
from dataclasses import dataclass, field

import numpy as np

SEED_ENV = "SUPERSCHUR_SEED"


def seed_from_env(default: int = 0) -> int:
    """
    Read the random seed from SUPERSCHUR_SEED.

    Raises:
        ValueError: If the variable is set but is not an integer
    """
    raw = os.getenv(SEED_ENV)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


@dataclass
class VerifyConfig:
    """Configuration for verify-paper and the property checks."""

    # Randomization
    seed: int = 0  # Seeds every numpy generator used by the harness
    basis_change_trials: int = 20  # Random basis changes per catalog entry
    fingerprint_trials: int = 10  # Basis changes per fingerprint invariance check
    random_entry_bound: int = 3  # Basis-change matrix entries lie in [-bound, bound]

    # Families
    abelian_max_total_dim: int = 6  # A(m|n) checked for all m+n up to this
    heisenberg_family: tuple[tuple[int, int], ...] = ((3, 0), (4, 1), (5, 2))  # (m, n) of H(1,0)+A(m-3|n)
    scan_values: tuple[str, ...] = field(
        default_factory=lambda: ("1/4", "1/3", "1/2", "1", "2", "3")
    )  # p values for the one-parameter families

    @classmethod
    def from_env(cls, **overrides) -> "VerifyConfig":
        """Defaults with the seed taken from SUPERSCHUR_SEED."""
        values = {"seed": seed_from_env()}
        values.update(overrides)
        return cls(**values)

    def rng(self, offset: int = 0) -> np.random.Generator:
        """Independent generator per consumer, reproducible from the seed."""
        return np.random.default_rng([self.seed, offset])
