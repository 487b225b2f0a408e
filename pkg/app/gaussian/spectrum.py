"""
Symplectic Spectrum and Entropy
===============================

Symplectic eigenvalues are the moduli of the eigenvalues of i Omega V.
With the Cholesky factor V = L L^T, the matrix i Omega V is similar to the
Hermitian matrix i L^T Omega L, so the spectrum comes from a Hermitian
eigen-solver. Its eigenvalues come in exact (+nu, -nu) pairs, one pair per
mode.

Large-variance states such as TMSV(mu) near mu = 1e8 are positive definite
only up to rounding and have no Cholesky factor. Those are accepted when
no eigenvalue of V is clearly negative, and their spectrum is read from
the moduli of the eigenvalues of Omega V directly.
"""

import logging

import numpy as np
from scipy.linalg import LinAlgError, cholesky, eigvals, eigvalsh

from app.gaussian.states import entropy_h
from app.models.conventions import PAIRING_RTOL, physicality_tolerance, symplectic_form
from app.models.gaussian import SymplecticSpectrum
from app.utils.exceptions import DomainError, SingularityError, UsageError


# Closed-form and eigen-solver spectra may differ by this many physicality tolerances
CROSS_CHECK_FACTOR = 10.0


def _two_mode_closed_form(matrix):
    """
    Delta-invariant formula for a 2-mode CM [[A, C], [C^T, B]]:

        nu_pm^2 = (Delta pm sqrt(Delta^2 - 4 det V)) / 2
        Delta   = det A + det B + 2 det C

    nu_-^2 is taken as det V / nu_+^2, which is the same quantity without
    the subtraction. Returns None when rounding has pushed det V or nu_+^2
    to zero or below.
    """
    a, b, c = matrix[:2, :2], matrix[2:, 2:], matrix[:2, 2:]
    delta = np.linalg.det(a) + np.linalg.det(b) + 2.0 * np.linalg.det(c)
    det_v = np.linalg.det(matrix)
    if not det_v > 0.0:
        return None

    discriminant = np.sqrt(max(delta * delta - 4.0 * det_v, 0.0))
    nu_plus_sq = 0.5 * (delta + discriminant)
    if not nu_plus_sq > 0.0:
        return None

    return np.sqrt(np.array([det_v / nu_plus_sq, nu_plus_sq]))


def two_mode_symplectic_eigenvalues(V):
    """
    Closed-form symplectic spectrum of a 2-mode CM.

    Raises:
        UsageError: If V does not have exactly 2 modes
        SingularityError: If V is too close to singular for the closed form
    """
    if V.n_modes != 2:
        raise UsageError(f'Closed form needs a 2-mode CM (got {V.n_modes} modes).')

    closed_form = _two_mode_closed_form(V.matrix)
    if closed_form is None:
        raise SingularityError('Covariance matrix is too close to singular for the closed form.')

    return SymplecticSpectrum(closed_form, tolerance=physicality_tolerance(V.matrix))


def _semidefinite_pairs(matrix, n_modes):
    """
    (+nu, -nu) moduli of the eigenvalues of Omega V for a CM without a
    Cholesky factor, both sorted ascending.

    Raises:
        DomainError: If V has an eigenvalue below rounding of zero
    """
    eigenvalues = eigvalsh(matrix)
    if eigenvalues[0] < -100.0 * np.finfo(float).eps * abs(eigenvalues[-1]):
        raise DomainError('Covariance matrix is not positive definite.')

    logging.debug(f"No Cholesky factor for {n_modes}-mode CM; using Omega V eigenvalues")
    moduli = np.sort(np.abs(eigvals(symplectic_form(n_modes) @ matrix)))
    return moduli[1::2], moduli[0::2]


def symplectic_eigenvalues(V):
    """
    Symplectic spectrum of a CM, sorted ascending.

    For 2-mode CMs the result is cross-checked against the Delta-invariant
    closed form; a disagreement beyond rounding is logged as a warning.

    Args:
        V (QuadratureCM): Symmetric positive semi-definite CM

    Returns:
        SymplecticSpectrum: One eigenvalue per mode

    Raises:
        DomainError: If V is not positive semi-definite, or violates the
            uncertainty principle beyond the physicality tolerance
    """
    matrix = V.matrix
    n_modes = V.n_modes
    tolerance = physicality_tolerance(matrix)

    try:
        lower = cholesky(matrix, lower=True)
    except LinAlgError:
        lower = None

    if lower is None:
        positive, negative = _semidefinite_pairs(matrix, n_modes)
    else:
        eigenvalues = eigvalsh(1j * (lower.T @ symplectic_form(n_modes) @ lower))
        positive = eigenvalues[n_modes:]
        negative = -eigenvalues[:n_modes][::-1]

    pairing = np.maximum(PAIRING_RTOL * np.maximum(1.0, positive), tolerance)
    if np.any(np.abs(positive - negative) > pairing):
        raise DomainError('Eigenvalues of i Omega V do not pair up; CM is ill-conditioned.')

    spectrum = SymplecticSpectrum(0.5 * (positive + negative), tolerance=tolerance)

    if n_modes == 2:
        _cross_check_two_mode(matrix, spectrum, tolerance)

    return spectrum


def _cross_check_two_mode(matrix, spectrum, tolerance):
    closed_form = _two_mode_closed_form(matrix)
    if closed_form is None:
        logging.debug('2-mode closed form unavailable for a near-singular CM')
        return

    allowed = max(1e-9, CROSS_CHECK_FACTOR * tolerance)
    mismatch = np.abs(closed_form - spectrum.as_array()) / np.maximum(1.0, closed_form)
    if np.any(mismatch > allowed):
        logging.warning(
            f"2-mode spectrum cross-check mismatch {mismatch.max():.3e} "
            f"(eigen-solver {spectrum}, closed form {closed_form})"
        )


def von_neumann_entropy(V):
    """
    Von Neumann entropy in bits, the sum of h over the symplectic spectrum.

    Eigenvalues that dipped below 1 within tolerance count as exactly 1.
    """
    nu = symplectic_eigenvalues(V).as_array()
    return float(np.sum(entropy_h(np.maximum(nu, 1.0))))
