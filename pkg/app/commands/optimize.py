"""
Optimize Command
================

Maximized key rate R_M over the detector parameters.
"""

import click

from app.commands.common import channel_options, echo_flag, echo_value, resolve_channel
from app.services.optimizer_service import OptimizerService, SearchConfig
from app.utils.decorators import handle_errors, log_activity


@click.command()
@channel_options
@click.option('--gamma-max', 'gamma_max', type=float, default=None,
              help='Upper edge of the gamma search box.')
@click.option('--grid-points', 'grid_points', type=int, default=None,
              help='Coarse grid points per axis.')
@click.option('--tolerance', type=float, default=None,
              help='Golden-section parameter tolerance.')
@click.pass_obj
@handle_errors
@log_activity('maximized key rate')
def optimize(cfg, eta, omega, nbar, gamma_max, grid_points, tolerance):
    """Print R_M, the optimal detector and the search-box edge flags."""
    ch = resolve_channel(eta, omega, nbar)
    opts = SearchConfig.from_config(
        cfg,
        gamma_max=gamma_max,
        eta_d_points=grid_points,
        gamma_points=grid_points,
        tolerance=tolerance
    )

    result = OptimizerService.maximize_rate(ch, opts)

    echo_value('r_max', result.r_max)
    echo_value('r_max_raw', result.r_max_raw)
    echo_value('eta_d_star', result.eta_d_star)
    echo_value('gamma_star', result.gamma_star)
    echo_flag('edge_eta_d', result.on_boundary.eta_d)
    echo_flag('edge_gamma', result.on_boundary.gamma)
    click.echo(f'{"evaluations":<12} {result.evaluations}')
