"""
Bounds Service
==============

Closed-form capacity bounds for the lossy and thermal-loss channels.

Services Provided:
    - lossy_capacity(): -log2(1 - eta), exact for the pure-loss channel
    - reverse_coherent_lb(): reverse coherent information I_RC
    - coherent_information_lb(): coherent information I_C
    - entanglement_flux_ub(): REE-based upper bound Phi
    - bound_set(): all of the above for one channel
    - choi_state_cm() / *_information_finite(): finite-energy Choi-state
      versions of I_C and I_RC, which converge to the closed forms

Sandwich:
    max{I_C, I_RC} <= K(eta, omega) <= Phi(eta, omega)

Lower-bound values are returned raw (possibly negative); clamping to 0 is a
presentation concern.

Usage:
    >>> from app.models.params import ChannelParams
    >>> round(BoundsService.bound_set(ChannelParams(0.9, 3.0)).upper_phi, 6)
    1.473931
"""

import math

from app.gaussian import (
    apply_symplectic,
    beam_splitter,
    direct_sum,
    entropy_h,
    partial_trace,
    thermal_cm,
    tmsv_cm,
    von_neumann_entropy
)
from app.models.reports import BoundSet
from app.utils.exceptions import DomainError


# Band around the Phi threshold nbar = eta/(1-eta) treated as the zero branch
THRESHOLD_TOL = 1e-12

# Mode layout of the Choi-state simulation: Alice's idler, the channel
# input (becoming B), the environment
CHOI_MODE_A, CHOI_MODE_B, CHOI_MODE_ENV = 0, 1, 2


class BoundsService:
    """
    Service class for channel capacity bounds.

    All methods are static and pure, so they are safe to call from any
    thread.
    """

    @staticmethod
    def lossy_capacity(eta):
        """
        Secret key capacity of the pure-loss channel, -log2(1 - eta).

        Args:
            eta (float): Transmissivity, 0 < eta < 1

        Returns:
            float: Bits per channel use

        Raises:
            DomainError: If eta is outside (0, 1)

        Example:
            >>> BoundsService.lossy_capacity(0.75)
            2.0
        """
        if not math.isfinite(eta) or not 0.0 < eta < 1.0:
            raise DomainError(f'Transmissivity eta must lie strictly between 0 and 1 (got {eta}).')

        return -math.log2(1.0 - eta)

    @staticmethod
    def reverse_coherent_lb(ch):
        """Reverse coherent information -log2(1 - eta) - h(omega), raw."""
        return -math.log2(1.0 - ch.eta) - entropy_h(ch.omega)

    @staticmethod
    def coherent_information_lb(ch):
        """Coherent information log2(eta / (1 - eta)) - h(omega), raw."""
        return math.log2(ch.eta / (1.0 - ch.eta)) - entropy_h(ch.omega)

    @staticmethod
    def entanglement_flux_ub(ch):
        """
        Entanglement-flux upper bound Phi(eta, omega).

            -log2[(1 - eta) eta^nbar] - h(omega)   if nbar < eta / (1 - eta)
            0                                      otherwise

        The closed form vanishes at the threshold, so a band of width
        THRESHOLD_TOL below it is assigned to the zero branch.

        Args:
            ch (ChannelParams): Thermal-loss channel

        Returns:
            float: Bits per channel use, >= 0
        """
        threshold = ch.eta / (1.0 - ch.eta)
        if ch.nbar >= threshold - THRESHOLD_TOL:
            return 0.0

        value = (
            -math.log2(1.0 - ch.eta)
            - ch.nbar * math.log2(ch.eta)
            - entropy_h(ch.omega)
        )
        # Rounding just inside the threshold can leave a tiny negative value
        return max(value, 0.0)

    @staticmethod
    def bound_set(ch):
        """
        All closed-form bounds for one channel.

        lossy_capacity is only populated for the pure-loss channel
        (omega = 1), where the bounds coincide with it.
        """
        lossy = BoundsService.lossy_capacity(ch.eta) if ch.is_pure_loss else None

        return BoundSet(
            lower_rc=BoundsService.reverse_coherent_lb(ch),
            upper_phi=BoundsService.entanglement_flux_ub(ch),
            lower_c=BoundsService.coherent_information_lb(ch),
            lossy_capacity=lossy
        )

    # =========================================================================
    # FINITE-ENERGY CHOI STATE
    # =========================================================================

    @staticmethod
    def choi_state_cm(mu, ch):
        """
        CM of (a, B): one half of TMSV(mu) sent through the channel.

        The channel is dilated into a beam splitter mixing the input with a
        thermal environment of variance omega.

        Args:
            mu (float): TMSV variance, >= 1
            ch (ChannelParams): Thermal-loss channel

        Returns:
            QuadratureCM: 2-mode CM ordered (a, B)
        """
        v0 = direct_sum([tmsv_cm(mu), thermal_cm(ch.omega)])
        channel = beam_splitter(ch.eta, CHOI_MODE_B, CHOI_MODE_ENV, 3)
        output = apply_symplectic(channel, v0)
        return partial_trace(output, [CHOI_MODE_A, CHOI_MODE_B])

    @staticmethod
    def reverse_coherent_information_finite(mu, ch):
        """S(a) - S(aB) of the finite-energy Choi state."""
        v_ab = BoundsService.choi_state_cm(mu, ch)
        return von_neumann_entropy(partial_trace(v_ab, [0])) - von_neumann_entropy(v_ab)

    @staticmethod
    def coherent_information_finite(mu, ch):
        """S(B) - S(aB) of the finite-energy Choi state."""
        v_ab = BoundsService.choi_state_cm(mu, ch)
        return von_neumann_entropy(partial_trace(v_ab, [1])) - von_neumann_entropy(v_ab)
