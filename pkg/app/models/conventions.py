"""
Quadrature Conventions
======================

The one place where the phase-space conventions of the toolkit are fixed.

Conventions:
    - Interleaved ordering (q1, p1, q2, p2, ..., qn, pn)
    - Vacuum variance 1, so a thermal mode with mean photon number nbar
      has variance omega = 2*nbar + 1
    - Symplectic form Omega = direct sum of [[0, 1], [-1, 0]]
    - Physical CMs have every symplectic eigenvalue >= 1

Tolerances:
    SYMMETRY_RTOL     relative asymmetry accepted by QuadratureCM
    SYMPLECTIC_ATOL   max-norm error accepted in S Omega S^T = Omega
    PHYSICALITY_TOL   how far a symplectic eigenvalue may dip below 1
    PAIRING_RTOL      mismatch accepted between the +nu / -nu eigenvalue pairs
"""

import numpy as np


SYMMETRY_RTOL = 1e-12
SYMPLECTIC_ATOL = 1e-10
PHYSICALITY_TOL = 1e-9
PAIRING_RTOL = 1e-8

# Single-mode symplectic form
OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])

QUADRATURES = ('q', 'p')


def symplectic_form(n_modes):
    """
    Return the 2n x 2n symplectic form for n modes in interleaved ordering.

    Args:
        n_modes (int): Number of bosonic modes

    Returns:
        np.ndarray: Block-diagonal direct sum of [[0, 1], [-1, 0]]
    """
    return np.kron(np.eye(n_modes), OMEGA_1)


def mode_indices(modes):
    """Row/column indices of the (q, p) pairs of the given modes, in order."""
    return [index for mode in modes for index in (2 * mode, 2 * mode + 1)]


def physicality_tolerance(matrix):
    """
    Tolerance for symplectic eigenvalues dipping below 1.

    Rounding the entries of V moves its symplectic eigenvalues by about
    eps * ||V|| * ||V^-1||, so PHYSICALITY_TOL is widened to 100 machine
    epsilons times the larger of the spectral norm and the condition number.
    A physical CM has smallest eigenvalue >= 1 / largest, which caps the
    condition number at largest^2 when V is numerically singular.
    """
    array = np.asarray(matrix, dtype=float)
    if not array.size:
        return PHYSICALITY_TOL

    eigenvalues = np.linalg.eigvalsh(0.5 * (array + array.T))
    largest = float(np.abs(eigenvalues).max())
    if largest == 0.0:
        return PHYSICALITY_TOL

    smallest = max(float(eigenvalues[0]), 1.0 / largest)
    conditioning = largest / smallest
    return max(PHYSICALITY_TOL, 100.0 * np.finfo(float).eps * max(largest, conditioning))
