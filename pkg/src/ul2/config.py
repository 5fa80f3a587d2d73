"""Shared numeric tolerances and size limits.

All comparison thresholds used across the package live here so that a
single record can be threaded through the CLI and the verification
suites instead of scattering magic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Default cap for exhaustive enumeration / canonical labeling.
DEFAULT_ENUM_BOUND = 12

#: Hard cap accepted from CLI configuration.
MAX_ENUM_BOUND = 14


@dataclass(frozen=True)
class Tolerances:
    """Comparison thresholds, loosest to tightest use.

    eig_residual   bound on ||M x - lambda x|| relative to max(1, ||M||)
                   for recomputed eigenpairs
    identity       for identities that hold exactly in real arithmetic
                   (closed forms, trace, orthogonality, interlacing)
    rounded        for reference values quoted to five decimals
    equality_band  |lambda2 - threshold| window classified as Equal
    slack          leeway when checking structural verdicts against the
                   numeric sign of lambda2 - threshold
    """

    eig_residual: float = 1e-10
    identity: float = 1e-9
    rounded: float = 5e-5
    equality_band: float = 1e-9
    slack: float = 1e-7

    def __post_init__(self) -> None:
        for name in ("eig_residual", "identity", "rounded", "equality_band", "slack"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"tolerance {name} must be positive")


DEFAULT_TOLERANCES = Tolerances()
