"""Exception hierarchy.

Two families matter to callers: configuration problems (bad input files,
unknown presets, swept values outside their domain) and model-domain
problems (the analytical model does not apply to the requested point).
The CLI maps them to distinct exit codes.
"""


class StarSecError(Exception):
    """Base class for all package errors."""


class ConfigError(StarSecError, ValueError):
    """Invalid scenario, sweep specification or preset name."""


class ModelDomainError(StarSecError, ValueError):
    """The requested point lies outside the analytical model's domain."""


class ModelValidityError(ModelDomainError):
    """A link distance is below the path-loss model's 10 m floor."""

    def __init__(self, message, link=None, distance=None):
        super().__init__(message)
        self.link = link
        self.distance = distance


class RelayNotBeneficialError(ModelDomainError):
    """The direct link dominates, so the DF relay power split does not exist."""


class ZoneDisabledError(ModelDomainError):
    """The requested STAR-RIS zone receives no power (zeta = 0 or 1)."""


class InfeasibleTargetError(ModelDomainError):
    """No finite transmit power reaches the requested rate."""
