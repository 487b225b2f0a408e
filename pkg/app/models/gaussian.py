"""
Gaussian State Models
=====================

Value types for the covariance-matrix algebra.

Classes:
    QuadratureCM        real symmetric 2n x 2n covariance matrix
    SymplecticMap       real 2n x 2n matrix S with S Omega S^T = Omega
    SymplecticSpectrum  sorted symplectic eigenvalues, one per mode

All three wrap read-only numpy arrays, so instances can be shared freely
between threads. Conventions (ordering, vacuum variance, tolerances) live in
app.models.conventions.

Usage:
    >>> from app.models.gaussian import QuadratureCM
    >>> vacuum = QuadratureCM(np.eye(2), check_physical=True)
    >>> vacuum.n_modes
    1
"""

import numpy as np

from app.models.conventions import (
    SYMMETRY_RTOL,
    SYMPLECTIC_ATOL,
    PHYSICALITY_TOL,
    symplectic_form,
    mode_indices
)
from app.utils.exceptions import DomainError, UsageError


def _square_even_matrix(matrix, kind):
    """Copy matrix to a float array and check it is a non-empty 2n x 2n square."""
    array = np.array(matrix, dtype=float)

    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise UsageError(f'{kind} must be a square matrix (got shape {array.shape}).')

    if array.shape[0] == 0 or array.shape[0] % 2:
        raise UsageError(f'{kind} must have even, non-zero size (got {array.shape[0]}).')

    if not np.all(np.isfinite(array)):
        raise DomainError(f'{kind} has non-finite entries.')

    return array


class QuadratureCM:
    """
    Covariance matrix of an n-mode zero-mean Gaussian state.

    The constructor checks symmetry to SYMMETRY_RTOL relative to the largest
    entry and stores the symmetrized matrix. Physicality (all symplectic
    eigenvalues >= 1) is checked on request. Thermal states ask for it;
    TMSV states are pure by construction, and the results of symplectic
    evolution and conditioning inherit physicality from their inputs.

    Attributes:
        n_modes (int): Number of modes
        matrix (np.ndarray): Read-only 2n x 2n entries

    Example:
        >>> cm = QuadratureCM(3.0 * np.eye(2), check_physical=True)
        >>> cm.spectrum().eigenvalues
        (3.0,)
    """

    def __init__(self, matrix, check_physical=False):
        array = _square_even_matrix(matrix, 'Covariance matrix')

        scale = max(1.0, float(np.abs(array).max()))
        if np.abs(array - array.T).max() > SYMMETRY_RTOL * scale:
            raise DomainError('Covariance matrix is not symmetric.')

        array = 0.5 * (array + array.T)
        array.setflags(write=False)

        self._matrix = array
        self.n_modes = array.shape[0] // 2

        if check_physical:
            # Raises DomainError for non-physical matrices
            self.spectrum()

    @property
    def matrix(self):
        """Read-only 2n x 2n entries."""
        return self._matrix

    def block(self, row_mode, col_mode):
        """Return the 2x2 block coupling two modes."""
        rows = mode_indices([row_mode])
        cols = mode_indices([col_mode])
        return self._matrix[np.ix_(rows, cols)]

    def spectrum(self):
        """Symplectic spectrum of this CM."""
        # Imported here to avoid a circular import with the spectrum module
        from app.gaussian.spectrum import symplectic_eigenvalues
        return symplectic_eigenvalues(self)

    def entropy(self):
        """Von Neumann entropy in bits."""
        from app.gaussian.spectrum import von_neumann_entropy
        return von_neumann_entropy(self)

    def allclose(self, other, atol=1e-10):
        """Entrywise comparison with another CM of the same size."""
        other_matrix = other.matrix if isinstance(other, QuadratureCM) else np.asarray(other)
        return (
            other_matrix.shape == self._matrix.shape
            and bool(np.allclose(self._matrix, other_matrix, rtol=0.0, atol=atol))
        )

    def __repr__(self):
        return f'<QuadratureCM n_modes={self.n_modes}>'

    def __eq__(self, other):
        if isinstance(other, QuadratureCM):
            return np.array_equal(self._matrix, other._matrix)
        return False

    def __hash__(self):
        return hash((self.n_modes, self._matrix.tobytes()))


class SymplecticMap:
    """
    Linear symplectic transformation on n modes.

    The constructor rejects matrices with max|S Omega S^T - Omega| above
    SYMPLECTIC_ATOL. Maps compose with the @ operator.
    """

    def __init__(self, matrix):
        array = _square_even_matrix(matrix, 'Symplectic map')
        omega = symplectic_form(array.shape[0] // 2)

        error = np.abs(array @ omega @ array.T - omega).max()
        if error > SYMPLECTIC_ATOL:
            raise DomainError(f'Matrix is not symplectic (max error {error:.3e}).')

        array.setflags(write=False)
        self._matrix = array
        self.n_modes = array.shape[0] // 2

    @property
    def matrix(self):
        return self._matrix

    def __matmul__(self, other):
        if not isinstance(other, SymplecticMap):
            return NotImplemented
        if other.n_modes != self.n_modes:
            raise UsageError(
                f'Cannot compose maps on {self.n_modes} and {other.n_modes} modes.'
            )
        return SymplecticMap(self._matrix @ other._matrix)

    def __repr__(self):
        return f'<SymplecticMap n_modes={self.n_modes}>'

    def __eq__(self, other):
        if isinstance(other, SymplecticMap):
            return np.array_equal(self._matrix, other._matrix)
        return False

    def __hash__(self):
        return hash((self.n_modes, self._matrix.tobytes()))


class SymplecticSpectrum:
    """
    Symplectic eigenvalues of a CM, sorted ascending.

    Args:
        eigenvalues (iterable of float): One value per mode
        tolerance (float): How far an eigenvalue may dip below 1
    """

    def __init__(self, eigenvalues, tolerance=PHYSICALITY_TOL):
        values = np.sort(np.asarray(eigenvalues, dtype=float).ravel())

        if values.size == 0:
            raise UsageError('A symplectic spectrum needs at least one eigenvalue.')

        if not np.all(np.isfinite(values)) or values[0] < 1.0 - tolerance:
            raise DomainError(
                f'Symplectic eigenvalue {values[0]!r} violates the uncertainty principle.'
            )

        self.eigenvalues = tuple(float(v) for v in values)

    @property
    def n_modes(self):
        return len(self.eigenvalues)

    def as_array(self):
        return np.array(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def __getitem__(self, index):
        return self.eigenvalues[index]

    def __repr__(self):
        values = ', '.join(f'{v:.6g}' for v in self.eigenvalues)
        return f'<SymplecticSpectrum [{values}]>'

    def __eq__(self, other):
        if isinstance(other, SymplecticSpectrum):
            return self.eigenvalues == other.eigenvalues
        return False

    def __hash__(self):
        return hash(self.eigenvalues)
