"""
Sweep Command
=============

Bound-comparison table over a transmissivity grid, written as CSV.
"""

import logging

import click
import numpy as np

from app.commands.common import resolve_channel
from app.models.params import DetectorParams
from app.services.optimizer_service import OptimizerService, SearchConfig
from app.services.report_service import ReportService
from app.utils.decorators import handle_errors, log_activity
from app.utils.exceptions import UsageError
from app.utils.validators import validate_sweep_range


@click.command()
@click.option('--eta-min', 'eta_min', type=float, required=True, help='First transmissivity.')
@click.option('--eta-max', 'eta_max', type=float, required=True, help='Last transmissivity.')
@click.option('--steps', type=int, required=True, help='Number of grid points, >= 2.')
@click.option('--omega', type=float, default=None, help='Environment thermal variance, >= 1.')
@click.option('--nbar', type=float, default=None, help='Mean thermal photon number.')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), required=True,
              help='Destination CSV file.')
@click.option('--fixed', type=(float, float), default=None, metavar='ETA_D GAMMA',
              help='Use this detector instead of optimizing.')
@click.option('--workers', type=int, default=None, help='Worker processes (default from config).')
@click.pass_obj
@handle_errors
@log_activity('ran transmissivity sweep')
def sweep(cfg, eta_min, eta_max, steps, omega, nbar, out_path, fixed, workers):
    """
    Write eta, lower_rc, rate_opt, eta_d_star, gamma_star, upper_phi for
    each of STEPS evenly spaced transmissivities.

    rate_opt is R_M by default, or the rate of the --fixed detector.
    """
    is_valid, error_msg = validate_sweep_range(eta_min, eta_max, steps)
    if not is_valid:
        raise UsageError(error_msg)

    # Checks omega/nbar once, at the first grid point
    ch = resolve_channel(eta_min, omega, nbar)

    detector = DetectorParams(*fixed) if fixed else None
    rows = OptimizerService.sweep(
        np.linspace(eta_min, eta_max, steps),
        ch.omega,
        optimize=detector is None,
        fixed=detector,
        config=SearchConfig.from_config(cfg),
        workers=workers if workers is not None else cfg.SWEEP_WORKERS
    )

    try:
        ReportService.write_sweep_csv(rows, out_path, digits=cfg.CSV_SIGNIFICANT_DIGITS)
    except OSError as e:
        logging.error(f"Could not write sweep file {out_path}: {e}")
        raise click.FileError(out_path, hint=e.strerror or str(e)) from e

    click.echo(f'Wrote {len(rows)} rows to {out_path}')
