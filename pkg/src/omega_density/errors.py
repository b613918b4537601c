class OmegaError(Exception):
    """Base class for all errors raised by omega_density."""


class InvalidInputError(OmegaError, ValueError):
    pass


class DomainError(OmegaError, ValueError):
    """A parameter lies outside the domain of a closed form."""


class DegenerateConfigurationError(OmegaError, ValueError):
    pass


class SandwichOrderError(OmegaError, ValueError):
    """Body and tile areas are in the wrong order for the requested density."""


class NotCentrallySymmetricError(InvalidInputError):
    pass


class GenerationFailure(OmegaError, RuntimeError):
    pass
