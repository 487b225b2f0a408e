"""
Parameter Models
================

Frozen value types for the channel, the detector and the modulation.

Each class validates itself in __post_init__ through app.utils.validators and
raises DomainError with the validator's message on failure.

Usage:
    >>> from app.models.params import ChannelParams
    >>> ch = ChannelParams.from_nbar(0.9, 1.0)
    >>> ch.omega
    3.0
"""

from dataclasses import dataclass

from app.utils.exceptions import DomainError
from app.utils.validators import (
    validate_channel,
    validate_detector,
    validate_modulation
)


@dataclass(frozen=True)
class ChannelParams:
    """
    Thermal-loss channel: a beam splitter of transmissivity eta mixing the
    signal with an environmental thermal mode of variance omega.

    Attributes:
        eta (float): Transmissivity, 0 < eta < 1
        omega (float): Thermal variance, omega >= 1
    """

    eta: float
    omega: float

    def __post_init__(self):
        is_valid, error_msg = validate_channel(self.eta, self.omega)
        if not is_valid:
            raise DomainError(error_msg)
        object.__setattr__(self, 'eta', float(self.eta))
        object.__setattr__(self, 'omega', float(self.omega))

    @classmethod
    def from_nbar(cls, eta, nbar):
        """Build the channel from its mean thermal photon number."""
        if nbar < 0:
            raise DomainError(f'Mean photon number nbar must be >= 0 (got {nbar}).')
        return cls(eta, 2.0 * nbar + 1.0)

    @property
    def nbar(self):
        """Mean thermal photon number (omega - 1) / 2."""
        return (self.omega - 1.0) / 2.0

    @property
    def is_pure_loss(self):
        return self.omega == 1.0


@dataclass(frozen=True)
class DetectorParams:
    """
    Bob's trusted-noise detector: a beam splitter of transmissivity eta_d
    mixing the received mode with a thermal mode of variance gamma.

    Attributes:
        eta_d (float): Detector transmissivity, 0 < eta_d <= 1
        gamma (float): Trusted thermal variance, gamma >= 1
    """

    eta_d: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        is_valid, error_msg = validate_detector(self.eta_d, self.gamma)
        if not is_valid:
            raise DomainError(error_msg)
        object.__setattr__(self, 'eta_d', float(self.eta_d))
        object.__setattr__(self, 'gamma', float(self.gamma))


@dataclass(frozen=True)
class ModulationParam:
    """TMSV variance of Alice's source, 1 < mu <= MU_MAX."""

    mu: float

    def __post_init__(self):
        is_valid, error_msg = validate_modulation(self.mu)
        if not is_valid:
            raise DomainError(error_msg)
        object.__setattr__(self, 'mu', float(self.mu))
