"""Packing and covering density pairs of convex disks."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateConfigurationError,
    DomainError,
    GenerationFailure,
    InvalidInputError,
    NotCentrallySymmetricError,
    OmegaError,
    SandwichOrderError,
)
from .leaf import DensityPoint, alpha_point, beta_point  # noqa: E402
