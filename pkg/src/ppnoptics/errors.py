"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the physical domain of the formula (e.g. the origin)."""


class DegenerateGaugeError(ValueError):
    """Free-fall-aligned propagation direction: the polarization gauge is undefined."""


class UnsupportedOrientationError(ValueError):
    """Operation restricted to a documented interferometer orientation."""


class IntegrationFailure(RuntimeError):
    """ODE integration failed; carries the last good state."""

    def __init__(self, message, t_last=None, y_last=None):
        super().__init__(message)
        self.t_last = t_last
        self.y_last = y_last


class OracleInvalidError(RuntimeError):
    """A conserved quantity drifted beyond tolerance; the oracle run is rejected."""

    def __init__(self, message, drifts=None):
        super().__init__(message)
        self.drifts = dict(drifts or {})


class ConfigError(ValueError):
    """Invalid configuration; lists every violation found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {v}" for v in self.violations))
