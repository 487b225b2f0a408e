"""
Gaussian Core
=============

Covariance-matrix algebra for multimode Gaussian states: construction,
symplectic evolution, partial trace, homodyne conditioning, symplectic
spectra and entropies.

Conventions are fixed in app.models.conventions: interleaved (q, p)
ordering, vacuum variance 1, Omega = direct sum of [[0, 1], [-1, 0]].
All functions are pure and act on immutable values.
"""

from app.gaussian.states import (
    entropy_h,
    tmsv_cm,
    thermal_cm,
    direct_sum,
    reorder_modes,
    partial_trace
)

from app.gaussian.operations import (
    beam_splitter,
    phase_rotation,
    single_mode_squeezer,
    apply_symplectic,
    homodyne_condition
)

from app.gaussian.spectrum import (
    symplectic_eigenvalues,
    two_mode_symplectic_eigenvalues,
    von_neumann_entropy
)

__all__ = [
    'entropy_h',
    'tmsv_cm',
    'thermal_cm',
    'direct_sum',
    'reorder_modes',
    'partial_trace',
    'beam_splitter',
    'phase_rotation',
    'single_mode_squeezer',
    'apply_symplectic',
    'homodyne_condition',
    'symplectic_eigenvalues',
    'two_mode_symplectic_eigenvalues',
    'von_neumann_entropy'
]
