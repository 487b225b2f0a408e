"""
Input Validation Module
=======================

Provides functions for validating physical and command-line parameters
before they reach the numerical services.

Parameter Validation Functions:
    - validate_channel(): Thermal-loss channel (eta, omega)
    - validate_detector(): Trusted-noise detector (eta_d, gamma)
    - validate_modulation(): TMSV variance mu
    - validate_channel_inputs(): omega/nbar exclusivity for the CLI
    - validate_sweep_range(): transmissivity grid for sweeps

Every validator returns a tuple (is_valid, error_message) and never raises.
The domain types in app.models call them and raise DomainError on failure;
the CLI commands call them directly and report the message.

Usage:
    >>> from app.utils.validators import validate_channel
    >>> validate_channel(0.9, 3.0)
    (True, None)

    >>> validate_channel(1.2, 3.0)
    (False, 'Transmissivity eta must lie strictly between 0 and 1 (got 1.2).')
"""

import math


# Largest TMSV variance the finite-energy simulation accepts
MU_MAX = 1e8


def _is_real(value):
    """Return True for finite real numbers (bools excluded)."""
    if isinstance(value, bool):
        return False
    try:
        return math.isfinite(float(value))
    except (TypeError, ValueError):
        return False


# =============================================================================
# CHANNEL VALIDATION
# =============================================================================

def validate_channel(eta, omega):
    """
    Validate thermal-loss channel parameters.

    Validation Rules:
        - eta: real, 0 < eta < 1 (open interval)
        - omega: real, omega >= 1 (vacuum variance is 1)

    Args:
        eta (float): Channel transmissivity
        omega (float): Thermal variance of the environment, 2*nbar + 1

    Returns:
        tuple: (is_valid, error_message)

    Example:
        >>> validate_channel(0.5, 1.0)
        (True, None)

        >>> validate_channel(0.5, 0.5)
        (False, 'Thermal variance omega must be >= 1 (got 0.5).')
    """
    if not _is_real(eta):
        return False, f'Transmissivity eta must be a real number (got {eta!r}).'

    if not 0.0 < float(eta) < 1.0:
        return False, f'Transmissivity eta must lie strictly between 0 and 1 (got {eta}).'

    if not _is_real(omega):
        return False, f'Thermal variance omega must be a real number (got {omega!r}).'

    if float(omega) < 1.0:
        return False, f'Thermal variance omega must be >= 1 (got {omega}).'

    return True, None


# =============================================================================
# DETECTOR VALIDATION
# =============================================================================

def validate_detector(eta_d, gamma):
    """
    Validate trusted-noise detector parameters.

    Validation Rules:
        - eta_d: real, 0 < eta_d <= 1 (eta_d = 0 leaves Bob with pure noise)
        - gamma: real, gamma >= 1

    Args:
        eta_d (float): Detector beam-splitter transmissivity
        gamma (float): Variance of the trusted thermal mode

    Returns:
        tuple: (is_valid, error_message)

    Example:
        >>> validate_detector(0.0, 1.0)
        (False, 'Detector transmissivity eta_d must satisfy 0 < eta_d <= 1 (got 0.0).')
    """
    if not _is_real(eta_d):
        return False, f'Detector transmissivity eta_d must be a real number (got {eta_d!r}).'

    if not 0.0 < float(eta_d) <= 1.0:
        return False, f'Detector transmissivity eta_d must satisfy 0 < eta_d <= 1 (got {eta_d}).'

    if not _is_real(gamma):
        return False, f'Trusted noise variance gamma must be a real number (got {gamma!r}).'

    if float(gamma) < 1.0:
        return False, f'Trusted noise variance gamma must be >= 1 (got {gamma}).'

    return True, None


# =============================================================================
# MODULATION VALIDATION
# =============================================================================

def validate_modulation(mu):
    """
    Validate the TMSV variance used by the finite-energy simulation.

    mu = 1 carries no modulation (I_AB = 0), and above MU_MAX the Schur
    complements lose too many digits, so the valid range is 1 < mu <= MU_MAX.

    Args:
        mu (float): TMSV variance

    Returns:
        tuple: (is_valid, error_message)
    """
    if not _is_real(mu):
        return False, f'Modulation mu must be a real number (got {mu!r}).'

    if float(mu) <= 1.0:
        return False, f'Modulation mu must be > 1 (got {mu}).'

    if float(mu) > MU_MAX:
        return False, f'Modulation mu must be <= {MU_MAX:g} (got {mu}).'

    return True, None


# =============================================================================
# CLI INPUT VALIDATION
# =============================================================================

def validate_channel_inputs(eta, omega=None, nbar=None):
    """
    Validate command-line channel input where omega and nbar are alternatives.

    Exactly one of omega / nbar must be given. nbar is converted to
    omega = 2*nbar + 1 before the channel check.

    Args:
        eta (float): Channel transmissivity
        omega (float|None): Thermal variance
        nbar (float|None): Mean thermal photon number

    Returns:
        tuple: (is_valid, error_message)

    Example:
        >>> validate_channel_inputs(0.9, omega=3.0, nbar=1.0)
        (False, 'Give exactly one of --omega or --nbar.')
    """
    if (omega is None) == (nbar is None):
        return False, 'Give exactly one of --omega or --nbar.'

    if nbar is not None:
        if not _is_real(nbar) or float(nbar) < 0.0:
            return False, f'Mean photon number nbar must be >= 0 (got {nbar}).'
        omega = 2.0 * float(nbar) + 1.0

    return validate_channel(eta, omega)


def validate_sweep_range(eta_min, eta_max, steps):
    """
    Validate a transmissivity sweep request.

    Validation Rules:
        - 0 < eta_min < eta_max < 1
        - steps >= 2 (integer)

    Args:
        eta_min (float): First grid point
        eta_max (float): Last grid point
        steps (int): Number of grid points

    Returns:
        tuple: (is_valid, error_message)
    """
    if not (_is_real(eta_min) and _is_real(eta_max)):
        return False, 'Sweep bounds must be real numbers.'

    if not 0.0 < float(eta_min) < float(eta_max) < 1.0:
        return False, (
            f'Sweep bounds must satisfy 0 < eta_min < eta_max < 1 '
            f'(got {eta_min}, {eta_max}).'
        )

    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        return False, f'Sweep needs at least 2 steps (got {steps}).'

    return True, None
