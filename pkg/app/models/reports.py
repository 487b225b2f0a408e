"""
Result Models
=============

Frozen records returned by the bounds, protocol and optimizer services.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from app.models.gaussian import SymplecticSpectrum


@dataclass(frozen=True)
class BoundSet:
    """
    Capacity bounds of a thermal-loss channel, in bits per channel use.

    Attributes:
        lower_rc (float): Reverse coherent information, raw (may be negative)
        upper_phi (float): Entanglement-flux upper bound (>= 0)
        lower_c (float): Coherent information, raw (may be negative)
        lossy_capacity (float|None): Exact capacity, only when omega = 1
    """

    lower_rc: float
    upper_phi: float
    lower_c: float
    lossy_capacity: Optional[float] = None

    @property
    def best_lower(self):
        """max{I_C, I_RC}, the better of the two hashing lower bounds."""
        return max(self.lower_c, self.lower_rc)


class HolevoTerms(NamedTuple):
    """Eve's Holevo information on Bob's outcomes and its ingredients."""

    chi: float
    s_total: float
    s_cond: float
    spectrum_total: SymplecticSpectrum
    spectrum_cond: SymplecticSpectrum


@dataclass(frozen=True)
class RateReport:
    """
    Finite-energy key rate of the trusted-noise protocol with its
    intermediate quantities, so a diverging stage can be pinpointed.

    rate = i_ab - chi_eb and chi_eb = s_total - s_cond by construction.
    """

    i_ab: float
    chi_eb: float
    rate: float
    s_total: float
    s_cond: float
    spectrum_total: SymplecticSpectrum
    spectrum_cond: SymplecticSpectrum
    v_b: float
    v_b_given_a: float


class BoundaryFlags(NamedTuple):
    """Whether the optimum sits on an edge of the search box."""

    eta_d: bool
    gamma: bool


@dataclass(frozen=True)
class OptimizationResult:
    """
    Maximized asymptotic key rate over the detector parameters.

    Attributes:
        r_max (float): max(0, r_max_raw), the reported rate
        r_max_raw (float): Objective value at the optimum
        eta_d_star (float): Optimal detector transmissivity
        gamma_star (float): Optimal trusted noise variance
        on_boundary (BoundaryFlags): Box-edge flags for eta_d and gamma
        evaluations (int): Number of objective evaluations
    """

    r_max: float
    r_max_raw: float
    eta_d_star: float
    gamma_star: float
    on_boundary: BoundaryFlags
    evaluations: int


@dataclass(frozen=True)
class SweepRow:
    """One transmissivity point of a bound-comparison sweep."""

    eta: float
    lower_rc: float
    r_opt: float
    eta_d_star: float
    gamma_star: float
    upper_phi: float
