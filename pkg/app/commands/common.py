"""
Shared Command Helpers
======================

Channel options used by every sub-command and the value printer.
"""

import click

from app.models.params import ChannelParams
from app.utils.exceptions import UsageError
from app.utils.validators import validate_channel_inputs


def channel_options(f):
    """Add --eta and the mutually exclusive --omega / --nbar options."""
    # Applied innermost first, so --eta is listed first in --help
    f = click.option('--nbar', type=float, default=None,
                     help='Mean thermal photon number (omega = 2 nbar + 1).')(f)
    f = click.option('--omega', type=float, default=None,
                     help='Environment thermal variance, >= 1.')(f)
    f = click.option('--eta', type=float, required=True,
                     help='Channel transmissivity, 0 < eta < 1.')(f)
    return f


def resolve_channel(eta, omega=None, nbar=None):
    """
    ChannelParams from command-line input.

    Raises:
        UsageError: If omega and nbar are both given or both missing
        DomainError: If the channel is out of range
    """
    if (omega is None) == (nbar is None):
        raise UsageError('Give exactly one of --omega or --nbar.')

    is_valid, error_msg = validate_channel_inputs(eta, omega=omega, nbar=nbar)
    if not is_valid:
        raise UsageError(error_msg)

    if nbar is not None:
        return ChannelParams.from_nbar(eta, nbar)
    return ChannelParams(eta, omega)


def echo_value(label, value):
    """Print one labelled number with 6 decimals."""
    click.echo(f'{label:<12} {value:.6f}')


def echo_flag(label, flag):
    click.echo(f'{label:<12} {"yes" if flag else "no"}')
