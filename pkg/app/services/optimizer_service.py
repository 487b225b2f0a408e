"""
Optimizer Service
=================

Maximizes the asymptotic key rate over the detector parameters and sweeps
the channel transmissivity to build bound-comparison tables.

Search Strategy:
    1. Coarse grid: eta_d on a linear grid over [eta_d_min, 1], gamma on a
       log grid over [1, gamma_max], plus the two reference detectors
       (1, 1) and (1/2, 1). Ties within TIE_TOL prefer larger eta_d, then
       smaller gamma.
    2. Refinement: coordinate-wise golden-section search, eta_d on a linear
       scale and gamma on a log scale, each bracketed by one grid step
       around the current point. A move is kept only if it improves the
       objective by more than TIE_TOL, so refinement never loses ground.

Everything is deterministic: fixed grids, no random restarts.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

import numpy as np

from app.models.params import ChannelParams, DetectorParams
from app.models.reports import BoundaryFlags, OptimizationResult, SweepRow
from app.services.bounds_service import BoundsService
from app.services.protocol_service import ProtocolService
from app.utils.exceptions import UsageError
from app.utils.line_search import golden_section_max


# Objective values closer than this count as equal
TIE_TOL = 1e-12

# Detectors every search compares against
REFERENCE_DETECTORS = ((1.0, 1.0), (0.5, 1.0))

# An optimum within BOUNDARY_STEPS * tolerance of an edge is flagged
BOUNDARY_STEPS = 10


@dataclass(frozen=True)
class SearchConfig:
    """
    Search box, grid sizes and refinement tolerance of maximize_rate.

    Attributes:
        eta_d_min (float): Lower eta_d edge, 0 < eta_d_min < 1
        gamma_max (float): Upper gamma edge, > 1
        eta_d_points (int): Coarse grid size along eta_d, >= 2
        gamma_points (int): Coarse grid size along gamma, >= 2
        tolerance (float): Golden-section bracket width, > 0
        max_sweeps (int): Cap on coordinate sweeps, >= 0
    """

    eta_d_min: float = 1e-4
    gamma_max: float = 1e3
    eta_d_points: int = 64
    gamma_points: int = 64
    tolerance: float = 1e-8
    max_sweeps: int = 50

    def __post_init__(self):
        if not 0.0 < self.eta_d_min < 1.0:
            raise UsageError(f'Search box needs 0 < eta_d_min < 1 (got {self.eta_d_min}).')
        if not (math.isfinite(self.gamma_max) and self.gamma_max > 1.0):
            raise UsageError(f'Search box needs a finite gamma_max > 1 (got {self.gamma_max}).')
        if self.eta_d_points < 2 or self.gamma_points < 2:
            raise UsageError(
                f'Coarse grid needs at least 2 points per axis '
                f'(got {self.eta_d_points} x {self.gamma_points}).'
            )
        if not self.tolerance > 0.0:
            raise UsageError(f'Refinement tolerance must be positive (got {self.tolerance}).')
        if self.max_sweeps < 0:
            raise UsageError(f'max_sweeps must be >= 0 (got {self.max_sweeps}).')

    @classmethod
    def from_config(cls, cfg, **overrides):
        """
        Build the search structure from a Config class, with optional
        per-call overrides (None values are ignored).
        """
        values = {
            'eta_d_min': float(getattr(cfg, 'SEARCH_ETA_D_MIN', cls.eta_d_min)),
            'gamma_max': float(getattr(cfg, 'SEARCH_GAMMA_MAX', cls.gamma_max)),
            'eta_d_points': int(getattr(cfg, 'SEARCH_ETA_D_POINTS', cls.eta_d_points)),
            'gamma_points': int(getattr(cfg, 'SEARCH_GAMMA_POINTS', cls.gamma_points)),
            'tolerance': float(getattr(cfg, 'SEARCH_TOLERANCE', cls.tolerance)),
            'max_sweeps': int(getattr(cfg, 'SEARCH_MAX_SWEEPS', cls.max_sweeps)),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def eta_d_grid(self):
        return np.linspace(self.eta_d_min, 1.0, self.eta_d_points)

    def gamma_grid(self):
        return np.geomspace(1.0, self.gamma_max, self.gamma_points)


class _Objective:
    """Asymptotic rate at a fixed channel, counting its evaluations."""

    def __init__(self, ch):
        self.eta = ch.eta
        self.omega = ch.omega
        self.evaluations = 0

    def grid(self, eta_d, gamma):
        values = ProtocolService.rate_asymptotic_grid(self.eta, self.omega, eta_d, gamma)
        self.evaluations += int(np.size(values))
        return values

    def __call__(self, eta_d, gamma):
        return float(self.grid(eta_d, gamma))


def _pick_best(values, eta_d, gamma):
    """Index of the best candidate under the tie-break rule."""
    top = np.max(values)
    tied = np.flatnonzero(values >= top - TIE_TOL)
    # lexsort: last key is primary
    order = np.lexsort((gamma[tied], -eta_d[tied]))
    return int(tied[order[0]])


class OptimizerService:
    """Service class for maximizing the key rate over the detector."""

    @staticmethod
    def maximize_rate(ch, opts=None):
        """
        Maximize rate_asymptotic over eta_d in [eta_d_min, 1] and
        gamma in [1, gamma_max].

        Args:
            ch (ChannelParams): Thermal-loss channel
            opts (SearchConfig|None): Search configuration; defaults apply
                when None

        Returns:
            OptimizationResult

        Raises:
            UsageError: If the search configuration is invalid

        Example:
            >>> result = OptimizerService.maximize_rate(ChannelParams(0.9, 1.0))
            >>> round(result.r_max, 4), result.eta_d_star
            (3.3219, 1.0)
        """
        opts = opts if opts is not None else SearchConfig()
        if not isinstance(opts, SearchConfig):
            raise UsageError(f'Expected a SearchConfig (got {type(opts).__name__}).')

        objective = _Objective(ch)

        # Stage 1: coarse grid and reference detectors
        eta_d_axis = opts.eta_d_grid()
        gamma_axis = opts.gamma_grid()
        eta_d_mesh, gamma_mesh = np.meshgrid(eta_d_axis, gamma_axis, indexing='ij')
        grid_values = objective.grid(eta_d_mesh, gamma_mesh)

        references = [
            (eta_d, gamma) for eta_d, gamma in REFERENCE_DETECTORS
            if eta_d >= opts.eta_d_min and gamma <= opts.gamma_max
        ]
        ref_eta_d = np.array([eta_d for eta_d, _ in references])
        ref_gamma = np.array([gamma for _, gamma in references])
        ref_values = objective.grid(ref_eta_d, ref_gamma)

        candidates_eta_d = np.concatenate([eta_d_mesh.ravel(), ref_eta_d])
        candidates_gamma = np.concatenate([gamma_mesh.ravel(), ref_gamma])
        candidate_values = np.concatenate([grid_values.ravel(), ref_values])

        best = _pick_best(candidate_values, candidates_eta_d, candidates_gamma)
        eta_d = float(candidates_eta_d[best])
        log_gamma = math.log(float(candidates_gamma[best]))
        value = float(candidate_values[best])

        # Stage 2: coordinate-wise golden-section refinement
        eta_d_step = (1.0 - opts.eta_d_min) / (opts.eta_d_points - 1)
        log_gamma_max = math.log(opts.gamma_max)
        log_gamma_step = log_gamma_max / (opts.gamma_points - 1)

        for _ in range(opts.max_sweeps):
            improved = False

            gamma_now = math.exp(log_gamma)
            x, fx = golden_section_max(
                lambda t: objective(t, gamma_now),
                max(opts.eta_d_min, eta_d - eta_d_step),
                min(1.0, eta_d + eta_d_step),
                opts.tolerance
            )
            if fx > value + TIE_TOL:
                eta_d, value, improved = x, fx, True

            eta_d_now = eta_d
            y, fy = golden_section_max(
                lambda s: objective(eta_d_now, math.exp(s)),
                max(0.0, log_gamma - log_gamma_step),
                min(log_gamma_max, log_gamma + log_gamma_step),
                opts.tolerance
            )
            if fy > value + TIE_TOL:
                log_gamma, value, improved = y, fy, True

            if not improved:
                break

        edge = BOUNDARY_STEPS * opts.tolerance
        on_boundary = BoundaryFlags(
            eta_d=(eta_d - opts.eta_d_min <= edge) or (1.0 - eta_d <= edge),
            gamma=(log_gamma <= edge) or (log_gamma_max - log_gamma <= edge)
        )
        gamma = math.exp(log_gamma)

        if eta_d - opts.eta_d_min <= edge:
            logging.warning(
                f"Optimum at the lower eta_d edge {opts.eta_d_min:g} "
                f"(eta={ch.eta}, omega={ch.omega})"
            )
        if log_gamma_max - log_gamma <= edge:
            logging.warning(
                f"Optimum at the upper gamma edge {opts.gamma_max:g} "
                f"(eta={ch.eta}, omega={ch.omega})"
            )

        result = OptimizationResult(
            r_max=max(0.0, value),
            r_max_raw=value,
            eta_d_star=eta_d,
            gamma_star=gamma,
            on_boundary=on_boundary,
            evaluations=objective.evaluations
        )
        logging.info(
            f"Optimized rate for eta={ch.eta}, omega={ch.omega}: "
            f"R_M={result.r_max_raw:.9g} at eta_d={eta_d:.9g}, gamma={gamma:.9g} "
            f"({result.evaluations} evaluations)"
        )
        return result

    @staticmethod
    def sweep(eta_grid, omega, optimize=True, fixed=None, config=None, workers=1):
        """
        One SweepRow per transmissivity, in input order.

        rate_opt is stored raw (not clamped), so fixed (1, 1) rows
        reproduce lower_rc.

        Args:
            eta_grid (sequence of float): Sorted transmissivities in (0, 1)
            omega (float): Channel thermal variance
            optimize (bool): Use maximize_rate when True
            fixed (DetectorParams|None): Detector for optimize=False;
                defaults to (1, 1)
            config (SearchConfig|None): Search configuration when optimizing
            workers (int): Worker processes; 1 runs sequentially

        Returns:
            list of SweepRow

        Raises:
            UsageError: If the grid is empty or unsorted, or workers < 1
            DomainError: If a grid point is not a valid channel
        """
        etas = [float(eta) for eta in eta_grid]
        if not etas:
            raise UsageError('Sweep needs at least one transmissivity.')
        if any(b < a for a, b in zip(etas, etas[1:])):
            raise UsageError('Sweep transmissivities must be sorted ascending.')
        if workers < 1:
            raise UsageError(f'Sweep needs at least one worker (got {workers}).')

        # Fail fast on the whole grid before any work is scheduled
        for eta in etas:
            ChannelParams(eta, omega)

        if optimize:
            detector = None
            search = config if config is not None else SearchConfig()
        else:
            detector = fixed if fixed is not None else DetectorParams()
            search = None

        if workers == 1:
            rows = [sweep_row(eta, omega, detector, search) for eta in etas]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(
                    sweep_row, etas, repeat(omega), repeat(detector), repeat(search)
                ))

        mode = 'optimized' if optimize else f'fixed eta_d={detector.eta_d}, gamma={detector.gamma}'
        logging.info(f"Sweep of {len(rows)} points at omega={omega} done ({mode})")
        return rows


def sweep_row(eta, omega, detector=None, search=None):
    """
    Compute one sweep row. Module-level so worker processes can run it.

    Args:
        eta (float): Transmissivity
        omega (float): Thermal variance
        detector (DetectorParams|None): Fixed detector, or None to optimize
        search (SearchConfig|None): Search configuration when optimizing

    Returns:
        SweepRow
    """
    ch = ChannelParams(eta, omega)
    bounds = BoundsService.bound_set(ch)

    if detector is None:
        result = OptimizerService.maximize_rate(ch, search)
        rate, eta_d, gamma = result.r_max_raw, result.eta_d_star, result.gamma_star
    else:
        rate = ProtocolService.rate_asymptotic(ch, detector)
        eta_d, gamma = detector.eta_d, detector.gamma

    return SweepRow(
        eta=ch.eta,
        lower_rc=bounds.lower_rc,
        r_opt=rate,
        eta_d_star=eta_d,
        gamma_star=gamma,
        upper_phi=bounds.upper_phi
    )
