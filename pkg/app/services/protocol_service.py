"""
Protocol Service
================

Key rate of the noise- and memory-assisted Gaussian protocol over the
thermal-loss channel, with reverse reconciliation and perfect
reconciliation efficiency.

Protocol Outline:
    1. Alice keeps mode a of a TMSV(mu) state and sends mode A.
    2. The channel is an entangling cloner: a beam splitter (eta) mixes A
       with mode E of a TMSV(omega) state whose other mode e Eve keeps.
    3. Bob mixes the received mode B with a trusted thermal mode v
       (variance gamma) on a beam splitter (eta_d) and homodynes output +.
    4. Output - is discarded. Eve holds (e, E').

Two Evaluation Paths:
    - Finite energy: build the 5-mode CM (a, e, E', +, -) with the Gaussian
      core and compute I_AB and chi_EB = S_T - S_C from it.
    - Asymptotic: closed forms in the limit mu -> infinity.

All logarithms are base 2.

Usage:
    >>> from app.models.params import ChannelParams, DetectorParams
    >>> ch, det = ChannelParams(0.9, 3.0), DetectorParams(1.0, 1.0)
    >>> round(ProtocolService.rate_asymptotic(ch, det), 6)
    1.321928
"""

import math

import numpy as np

from app.gaussian import (
    apply_symplectic,
    beam_splitter,
    direct_sum,
    entropy_h,
    homodyne_condition,
    partial_trace,
    reorder_modes,
    thermal_cm,
    tmsv_cm
)
from app.gaussian.states import Z
from app.models.conventions import physicality_tolerance
from app.models.params import ModulationParam
from app.models.reports import HolevoTerms, RateReport
from app.utils.exceptions import DomainError, SingularityError


# Output modes of build_output_cm
MODE_A, MODE_E, MODE_E_PRIME, MODE_PLUS, MODE_MINUS = range(5)
OUTPUT_MODES = ('a', 'e', "E'", '+', '-')

# V_aAeEv -> V_aeEAv
REARRANGEMENT = (0, 2, 3, 1, 4)

# Slots of the rearranged state before the beam splitters act
SLOT_E, SLOT_A, SLOT_V = 2, 3, 4

# q- and p-conditioned entropies must agree to this relative level, widened
# to the physicality tolerance of the conditional CMs at large mu
QUADRATURE_SYMMETRY_TOL = 1e-8


class ProtocolService:
    """
    Service class for the trusted-noise protocol's key rate.

    Methods take mu as a float; mu is validated (1 < mu <= MU_MAX) wherever
    a rate is computed from it.
    """

    # =========================================================================
    # FINITE-ENERGY COVARIANCE MATRIX
    # =========================================================================

    @staticmethod
    def build_output_cm(mu, ch, det):
        """
        Global output CM of the protocol, modes (a, e, E', +, -).

        V = S_eta_d S_eta (V_TMSV(mu) + V_TMSV(omega) + gamma I) S_eta^T S_eta_d^T,
        after rearranging the input modes from (a, A, e, E, v) to
        (a, e, E, A, v). The eta splitter transmits A and reflects E into
        it; the eta_d splitter transmits B and reflects v into it.

        Args:
            mu (float): TMSV variance, 1 <= mu <= MU_MAX
            ch (ChannelParams): Thermal-loss channel
            det (DetectorParams): Trusted-noise detector

        Returns:
            QuadratureCM: 5-mode CM
        """
        if mu != 1.0:
            ModulationParam(mu)

        v0 = direct_sum([tmsv_cm(mu), tmsv_cm(ch.omega), thermal_cm(det.gamma)])
        v0 = reorder_modes(v0, REARRANGEMENT)

        s_eta = beam_splitter(ch.eta, SLOT_A, SLOT_E, 5)
        v_tilde = apply_symplectic(s_eta, v0)

        s_eta_d = beam_splitter(det.eta_d, SLOT_A, SLOT_V, 5)
        return apply_symplectic(s_eta_d, v_tilde)

    @staticmethod
    def analytic_blocks(mu, ch, det):
        """
        Closed-form blocks of the output CM.

        Returns:
            dict: 'v_eve' (4x4 CM of e, E'), 'cross' (4x2 block C between
                (e, E') and +) and 'v_plus' (2x2 block of +)
        """
        eta, omega = ch.eta, ch.omega
        identity = np.eye(2)

        v_eve = np.block([
            [omega * identity, math.sqrt(eta * (omega ** 2 - 1.0)) * Z],
            [math.sqrt(eta * (omega ** 2 - 1.0)) * Z,
             (eta * omega + (1.0 - eta) * mu) * identity]
        ])
        cross = math.sqrt(det.eta_d * (1.0 - eta)) * np.vstack([
            math.sqrt(omega ** 2 - 1.0) * Z,
            math.sqrt(eta) * (omega - mu) * identity
        ])
        v_plus = ProtocolService.v_bob(mu, ch, det) * identity

        return {'v_eve': v_eve, 'cross': cross, 'v_plus': v_plus}

    @staticmethod
    def v_bob(mu, ch, det):
        """
        Variance of Bob's measured mode, V(mu).

            V(mu) = eta_d [eta mu + (1 - eta) omega] + (1 - eta_d) gamma

        Also gives V_{B|A} = V(1/mu).
        """
        return (
            det.eta_d * (ch.eta * mu + (1.0 - ch.eta) * ch.omega)
            + (1.0 - det.eta_d) * det.gamma
        )

    @staticmethod
    def v_bob_given_alice_cm(mu, ch, det):
        """
        V_{B|A} taken from the output CM: q-homodyne Alice's mode a on the
        (a, +) block and read the conditional q-variance of +.
        """
        v_a_plus = partial_trace(ProtocolService.build_output_cm(mu, ch, det), [MODE_A, MODE_PLUS])
        return float(homodyne_condition(v_a_plus, 0, 'q').matrix[0, 0])

    # =========================================================================
    # FINITE-ENERGY RATE
    # =========================================================================

    @staticmethod
    def mutual_information_finite(mu, ch, det):
        """
        I_AB = 1/2 log2(V_B / V_{B|A}) with V_{B|A} = V(1/mu).

        Raises:
            DomainError: If mu <= 1 or mu > MU_MAX
        """
        mu = ModulationParam(mu).mu
        return 0.5 * math.log2(
            ProtocolService.v_bob(mu, ch, det) / ProtocolService.v_bob(1.0 / mu, ch, det)
        )

    @staticmethod
    def holevo_finite(mu, ch, det):
        """
        Eve's Holevo information on Bob's outcomes, chi_EB = S_T - S_C.

        S_T is the entropy of Eve's (e, E') block. S_C is the entropy of
        that block conditioned on Bob's homodyne of mode +. The q and p
        branches give the same value; both are computed and compared.

        Returns:
            HolevoTerms

        Raises:
            DomainError: If mu <= 1 or mu > MU_MAX
            SingularityError: If conditioning fails, or if the q and p
                branches disagree
        """
        mu = ModulationParam(mu).mu
        output = ProtocolService.build_output_cm(mu, ch, det)

        v_eve = partial_trace(output, [MODE_E, MODE_E_PRIME])
        v_eve_bob = partial_trace(output, [MODE_E, MODE_E_PRIME, MODE_PLUS])

        v_cond_q = homodyne_condition(v_eve_bob, 2, 'q')
        v_cond_p = homodyne_condition(v_eve_bob, 2, 'p')

        spectrum_total = v_eve.spectrum()
        spectrum_cond = v_cond_q.spectrum()
        s_total = float(np.sum(entropy_h(np.maximum(spectrum_total.as_array(), 1.0))))
        s_cond = float(np.sum(entropy_h(np.maximum(spectrum_cond.as_array(), 1.0))))

        s_cond_p = v_cond_p.entropy()
        allowed = max(
            QUADRATURE_SYMMETRY_TOL * max(1.0, abs(s_cond)),
            physicality_tolerance(v_cond_q.matrix),
            physicality_tolerance(v_cond_p.matrix)
        )
        if abs(s_cond - s_cond_p) > allowed:
            raise SingularityError(
                f'q- and p-conditioned entropies disagree ({s_cond!r} vs {s_cond_p!r}).'
            )

        return HolevoTerms(
            chi=s_total - s_cond,
            s_total=s_total,
            s_cond=s_cond,
            spectrum_total=spectrum_total,
            spectrum_cond=spectrum_cond
        )

    @staticmethod
    def rate_finite(mu, ch, det):
        """
        Finite-energy key rate R = I_AB - chi_EB with its intermediates.

        Returns:
            RateReport
        """
        i_ab = ProtocolService.mutual_information_finite(mu, ch, det)
        holevo = ProtocolService.holevo_finite(mu, ch, det)

        return RateReport(
            i_ab=i_ab,
            chi_eb=holevo.chi,
            rate=i_ab - holevo.chi,
            s_total=holevo.s_total,
            s_cond=holevo.s_cond,
            spectrum_total=holevo.spectrum_total,
            spectrum_cond=holevo.spectrum_cond,
            v_b=ProtocolService.v_bob(mu, ch, det),
            v_b_given_a=ProtocolService.v_bob(1.0 / mu, ch, det)
        )

    # =========================================================================
    # ASYMPTOTIC RATE
    # =========================================================================

    @staticmethod
    def _noise_terms(ch, det):
        """Shared combinations of the asymptotic formulas."""
        eta, omega = ch.eta, ch.omega
        eta_d, gamma = det.eta_d, det.gamma

        # eta_d omega + (1 - eta_d)(1 - eta) gamma
        alice_side = eta_d * omega + (1.0 - eta_d) * (1.0 - eta) * gamma
        # eta_d (1 - eta) omega + (1 - eta_d) gamma
        bob_noise = eta_d * (1.0 - eta) * omega + (1.0 - eta_d) * gamma
        return alice_side, bob_noise

    @staticmethod
    def conditional_spectrum_asymptotic(ch, det, mu):
        """
        Large-mu symplectic spectrum of Eve's conditional state.

            nu1 = sqrt((1 - eta)(eta_d omega + (1 - eta)(1 - eta_d) gamma) mu / (eta eta_d))
            nu2 = sqrt(omega [eta_d + (1 - eta)(1 - eta_d) omega gamma]
                       / (eta_d omega + (1 - eta)(1 - eta_d) gamma))

        nu2 does not depend on mu.

        Returns:
            tuple: (nu_bar_1, nu_bar_2)
        """
        eta, omega = ch.eta, ch.omega
        eta_d, gamma = det.eta_d, det.gamma
        alice_side, _ = ProtocolService._noise_terms(ch, det)

        nu_bar_1 = math.sqrt((1.0 - eta) * alice_side * mu / (eta * eta_d))
        nu_bar_2 = math.sqrt(
            omega * (eta_d + (1.0 - eta) * (1.0 - eta_d) * omega * gamma) / alice_side
        )
        return nu_bar_1, nu_bar_2

    @staticmethod
    def mutual_information_asymptotic(ch, det, mu):
        """Large-mu I_AB = 1/2 log2(eta_d eta mu / (eta_d (1 - eta) omega + (1 - eta_d) gamma))."""
        _, bob_noise = ProtocolService._noise_terms(ch, det)
        return 0.5 * math.log2(det.eta_d * ch.eta * mu / bob_noise)

    @staticmethod
    def holevo_asymptotic(ch, det, mu):
        """
        Large-mu Holevo bound.

            chi = h(omega) - h(nu2) + 1/2 log2((1 - eta) eta eta_d mu / (eta_d omega + (1 - eta_d)(1 - eta) gamma))
        """
        alice_side, _ = ProtocolService._noise_terms(ch, det)
        _, nu_bar_2 = ProtocolService.conditional_spectrum_asymptotic(ch, det, mu)

        return (
            entropy_h(ch.omega)
            - entropy_h(max(nu_bar_2, 1.0))
            + 0.5 * math.log2((1.0 - ch.eta) * ch.eta * det.eta_d * mu / alice_side)
        )

    @staticmethod
    def rate_asymptotic(ch, det):
        """
        Asymptotic key rate R(eta, omega, eta_d, gamma).

            R = 1/2 log2[(eta_d omega + (1 - eta_d)(1 - eta) gamma)
                         / ((1 - eta)[eta_d (1 - eta) omega + (1 - eta_d) gamma])]
                + h(nu2) - h(omega)

        At eta_d = 1 this is -log2(1 - eta) - h(omega) for every gamma.

        Args:
            ch (ChannelParams): Thermal-loss channel
            det (DetectorParams): Detector; eta_d > 0 is enforced by the type

        Returns:
            float: Bits per channel use (raw, may be negative)
        """
        alice_side, bob_noise = ProtocolService._noise_terms(ch, det)
        _, nu_bar_2 = ProtocolService.conditional_spectrum_asymptotic(ch, det, 1.0)

        return (
            0.5 * math.log2(alice_side / ((1.0 - ch.eta) * bob_noise))
            + entropy_h(max(nu_bar_2, 1.0))
            - entropy_h(ch.omega)
        )

    @staticmethod
    def rate_asymptotic_grid(eta, omega, eta_d, gamma):
        """
        Vectorized rate over arrays of detector parameters.

        Args:
            eta (float): Channel transmissivity
            omega (float): Channel thermal variance
            eta_d (np.ndarray): Detector transmissivities, all in (0, 1]
            gamma (np.ndarray): Trusted variances, all >= 1 (broadcast with eta_d)

        Returns:
            np.ndarray: Rates with the broadcast shape
        """
        eta_d = np.asarray(eta_d, dtype=float)
        gamma = np.asarray(gamma, dtype=float)
        if np.any(eta_d <= 0.0) or np.any(eta_d > 1.0) or np.any(gamma < 1.0):
            raise DomainError('Detector grid outside 0 < eta_d <= 1, gamma >= 1.')

        alice_side = eta_d * omega + (1.0 - eta_d) * (1.0 - eta) * gamma
        bob_noise = eta_d * (1.0 - eta) * omega + (1.0 - eta_d) * gamma
        nu_bar_2 = np.sqrt(
            omega * (eta_d + (1.0 - eta) * (1.0 - eta_d) * omega * gamma) / alice_side
        )

        return (
            0.5 * np.log2(alice_side / ((1.0 - eta) * bob_noise))
            + entropy_h(np.maximum(nu_bar_2, 1.0))
            - entropy_h(omega)
        )
