"""
Gaussian Operations
===================

Symplectic maps, their action on covariance matrices, and homodyne
conditioning.
"""

import numpy as np

from app.models.conventions import QUADRATURES, mode_indices
from app.models.gaussian import QuadratureCM, SymplecticMap
from app.utils.exceptions import DomainError, UsageError, SingularityError


def _check_single_mode(mode, n_modes):
    if isinstance(mode, bool) or not isinstance(mode, (int, np.integer)):
        raise UsageError(f'Mode index {mode!r} is not an integer.')
    if not 0 <= mode < n_modes:
        raise UsageError(f'Mode {mode} out of range for {n_modes} modes.')


def _embed(block, modes, n_modes):
    """Identity on n modes with `block` acting on the listed modes."""
    matrix = np.eye(2 * n_modes)
    index = mode_indices(modes)
    matrix[np.ix_(index, index)] = block
    return SymplecticMap(matrix)


# =============================================================================
# SYMPLECTIC MAPS
# =============================================================================

def beam_splitter(eta, mode_i, mode_j, n_modes):
    """
    Beam splitter of transmissivity eta on modes (i, j).

    On the two modes it acts as

        T(eta) = [[ sqrt(eta) I,     sqrt(1-eta) I],
                  [-sqrt(1-eta) I,   sqrt(eta) I  ]]

    so mode i becomes sqrt(eta) x_i + sqrt(1-eta) x_j. It is the identity
    on every other mode.

    Args:
        eta (float): Transmissivity in [0, 1]
        mode_i (int): First mode (the transmitted arm)
        mode_j (int): Second mode
        n_modes (int): Total number of modes

    Returns:
        SymplecticMap

    Raises:
        DomainError: If eta is outside [0, 1]
        UsageError: If the modes coincide or are out of range
    """
    if not np.isfinite(eta) or not 0.0 <= eta <= 1.0:
        raise DomainError(f'Beam-splitter transmissivity must lie in [0, 1] (got {eta}).')

    _check_single_mode(mode_i, n_modes)
    _check_single_mode(mode_j, n_modes)
    if mode_i == mode_j:
        raise UsageError('Beam splitter needs two distinct modes.')

    s = np.sqrt(eta)
    t = np.sqrt(1.0 - eta)
    identity = np.eye(2)
    block = np.block([
        [s * identity, t * identity],
        [-t * identity, s * identity]
    ])
    return _embed(block, [mode_i, mode_j], n_modes)


def phase_rotation(theta, mode, n_modes):
    """Phase rotation by theta on one mode."""
    _check_single_mode(mode, n_modes)
    c, s = np.cos(theta), np.sin(theta)
    return _embed(np.array([[c, s], [-s, c]]), [mode], n_modes)


def single_mode_squeezer(r, mode, n_modes):
    """Single-mode squeezer diag(e^-r, e^r) on one mode."""
    _check_single_mode(mode, n_modes)
    return _embed(np.diag([np.exp(-r), np.exp(r)]), [mode], n_modes)


# =============================================================================
# EVOLUTION
# =============================================================================

def apply_symplectic(S, V):
    """
    Evolve a CM under a symplectic map: S V S^T.

    Raises:
        UsageError: If S and V act on different numbers of modes
    """
    if S.n_modes != V.n_modes:
        raise UsageError(
            f'Symplectic map on {S.n_modes} modes cannot act on a {V.n_modes}-mode CM.'
        )

    return QuadratureCM(S.matrix @ V.matrix @ S.matrix.T)


# =============================================================================
# HOMODYNE CONDITIONING
# =============================================================================

def homodyne_condition(V, measured_mode, quadrature='q'):
    """
    Conditional CM of the remaining modes after homodyning one mode.

    With V partitioned as [[A, C], [C^T, B]] (B the measured mode), the
    result is A - C (Pi B Pi)^+ C^T with Pi = diag(1, 0) for q and
    diag(0, 1) for p. The generalized inverse reduces to a rank-1 update
    with the measured quadrature's column of C:

        A - c c^T / B_xx

    Args:
        V (QuadratureCM): Global state (at least 2 modes)
        measured_mode (int): Mode to measure; removed from the output
        quadrature (str): 'q' or 'p'

    Returns:
        QuadratureCM: Conditional CM of the other modes, in their order

    Raises:
        UsageError: Bad mode, bad quadrature, or nothing left after measuring
        SingularityError: If the measured quadrature has zero variance
    """
    quadrature = str(quadrature).lower()
    if quadrature not in QUADRATURES:
        raise UsageError(f"Quadrature must be 'q' or 'p' (got {quadrature!r}).")

    _check_single_mode(measured_mode, V.n_modes)
    if V.n_modes < 2:
        raise UsageError('Homodyne conditioning needs at least one unmeasured mode.')

    others = [mode for mode in range(V.n_modes) if mode != measured_mode]
    rest = mode_indices(others)
    measured = 2 * measured_mode + QUADRATURES.index(quadrature)

    variance = V.matrix[measured, measured]
    if not variance > np.finfo(float).tiny:
        raise SingularityError(
            f'Measured {quadrature}-quadrature of mode {measured_mode} has zero variance.'
        )

    a = V.matrix[np.ix_(rest, rest)]
    column = V.matrix[rest, measured]
    return QuadratureCM(a - np.outer(column, column) / variance)
