"""
Gaussian State Construction
===========================

Entropy function, elementary covariance matrices and the structural
operations that combine or reduce them.

Functions:
    - entropy_h(): entropy in bits of a thermal mode of variance x
    - tmsv_cm(): two-mode squeezed vacuum V_TMSV(mu)
    - thermal_cm(): single-mode thermal state gamma * I
    - direct_sum(): block-diagonal tensor product of CMs
    - reorder_modes(): permute modes in 2x2 blocks
    - partial_trace(): principal submatrix of the kept modes

Usage:
    >>> from app.gaussian.states import tmsv_cm, thermal_cm, direct_sum
    >>> v0 = direct_sum([tmsv_cm(3.0), thermal_cm(1.0)])
    >>> v0.n_modes
    3
"""

import numpy as np
from scipy.linalg import block_diag

from app.models.conventions import mode_indices
from app.models.gaussian import QuadratureCM
from app.utils.exceptions import DomainError, UsageError


LN2 = np.log(2.0)

# Pauli-Z acting on one mode's (q, p)
Z = np.diag([1.0, -1.0])


# =============================================================================
# ENTROPY FUNCTION
# =============================================================================

def entropy_h(x):
    """
    Entropy function h(x) in bits.

        h(x) = (x+1)/2 log2((x+1)/2) - (x-1)/2 log2((x-1)/2)

    Evaluated as log2(m) + (m+1) log2(1 + 1/m) with m = (x-1)/2, which
    avoids the cancellation between two large terms at large x. h(1) = 0
    by continuity.

    Args:
        x (float|array-like): Variance(s), each >= 1

    Returns:
        float|np.ndarray: h(x), a float for scalar input

    Raises:
        DomainError: If any x < 1 or is not finite

    Example:
        >>> entropy_h(3.0)
        2.0
    """
    values = np.asarray(x, dtype=float)

    if not np.all(np.isfinite(values)) or np.any(values < 1.0):
        raise DomainError(f'Entropy function needs x >= 1 (got {x}).')

    m = (values - 1.0) / 2.0
    safe_m = np.where(m > 0.0, m, 1.0)
    result = np.where(
        m > 0.0,
        (np.log(safe_m) + (safe_m + 1.0) * np.log1p(1.0 / safe_m)) / LN2,
        0.0
    )

    if result.ndim == 0:
        return float(result)
    return result


# =============================================================================
# ELEMENTARY STATES
# =============================================================================

def tmsv_cm(mu):
    """
    Two-mode squeezed vacuum with local variance mu.

    Diagonal blocks mu*I, off-diagonal blocks sqrt(mu^2 - 1)*Z.

    Args:
        mu (float): Local variance, mu >= 1 (mu = 1 is two vacua)

    Returns:
        QuadratureCM: 2-mode pure state. Purity holds by construction, so
            no numeric physicality check runs; near mu = 1e8 the stored
            entries cannot resolve the unit symplectic eigenvalues.

    Raises:
        DomainError: If mu < 1
    """
    if not np.isfinite(mu) or mu < 1.0:
        raise DomainError(f'TMSV variance must be >= 1 (got {mu}).')

    mu = float(mu)
    # (mu - 1)(mu + 1) keeps precision for mu close to 1
    c = np.sqrt((mu - 1.0) * (mu + 1.0))
    matrix = np.block([
        [mu * np.eye(2), c * Z],
        [c * Z, mu * np.eye(2)]
    ])
    return QuadratureCM(matrix)


def thermal_cm(gamma):
    """
    Single-mode thermal state gamma*I.

    Raises:
        DomainError: If gamma < 1
    """
    if not np.isfinite(gamma) or gamma < 1.0:
        raise DomainError(f'Thermal variance must be >= 1 (got {gamma}).')

    return QuadratureCM(float(gamma) * np.eye(2), check_physical=True)


# =============================================================================
# STRUCTURAL OPERATIONS
# =============================================================================

def direct_sum(cms):
    """
    Tensor product of independent Gaussian states.

    Args:
        cms (list of QuadratureCM): Non-empty list, in mode order

    Returns:
        QuadratureCM: Block-diagonal CM over the sum of the mode counts

    Raises:
        UsageError: If the list is empty
    """
    cms = list(cms)
    if not cms:
        raise UsageError('direct_sum needs at least one covariance matrix.')

    return QuadratureCM(block_diag(*[cm.matrix for cm in cms]))


def _check_modes(modes, n_modes, what):
    """Validate a list of distinct mode indices in range(n_modes)."""
    modes = list(modes)
    for mode in modes:
        if isinstance(mode, bool) or not isinstance(mode, (int, np.integer)):
            raise UsageError(f'{what}: mode index {mode!r} is not an integer.')
        if not 0 <= mode < n_modes:
            raise UsageError(f'{what}: mode {mode} out of range for {n_modes} modes.')
    if len(set(modes)) != len(modes):
        raise UsageError(f'{what}: repeated mode in {modes}.')
    return [int(mode) for mode in modes]


def reorder_modes(V, perm):
    """
    Permute the modes of a CM.

    Mode k of the result is mode perm[k] of V (0-based), so
    perm = (0, 2, 3, 1, 4) turns V_aAeEv into V_aeEAv.

    Args:
        V (QuadratureCM): State to reorder
        perm (sequence of int): Permutation of range(V.n_modes)

    Returns:
        QuadratureCM: Reordered CM with the same spectrum

    Raises:
        UsageError: If perm is not a permutation of range(V.n_modes)
    """
    perm = _check_modes(perm, V.n_modes, 'reorder_modes')
    if len(perm) != V.n_modes:
        raise UsageError(
            f'reorder_modes: permutation {perm} does not cover all {V.n_modes} modes.'
        )

    index = mode_indices(perm)
    return QuadratureCM(V.matrix[np.ix_(index, index)])


def partial_trace(V, keep):
    """
    Reduced state on the kept modes.

    Args:
        V (QuadratureCM): Global state
        keep (sequence of int): Non-empty list of distinct modes; the
            result lists them in the given order

    Returns:
        QuadratureCM: Principal submatrix on the kept modes' 2x2 blocks

    Raises:
        UsageError: If keep is empty or names an invalid mode
    """
    keep = _check_modes(keep, V.n_modes, 'partial_trace')
    if not keep:
        raise UsageError('partial_trace needs at least one mode to keep.')

    index = mode_indices(keep)
    return QuadratureCM(V.matrix[np.ix_(index, index)])
