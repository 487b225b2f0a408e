"""
Bounds Command
==============

Capacity sandwich of a thermal-loss channel.
"""

import click

from app.commands.common import channel_options, echo_value, resolve_channel
from app.services.bounds_service import BoundsService
from app.utils.decorators import handle_errors, log_activity


@click.command()
@channel_options
@click.pass_obj
@handle_errors
@log_activity('computed capacity bounds')
def bounds(cfg, eta, omega, nbar):
    """
    Print the lower and upper bounds on the secret key capacity.

    lower_rc is the reverse coherent information, lower_c the coherent
    information, upper_phi the entanglement-flux bound. For a pure-loss
    channel (omega = 1) the exact capacity is printed as well.
    """
    ch = resolve_channel(eta, omega, nbar)
    result = BoundsService.bound_set(ch)

    echo_value('lower_rc', result.lower_rc)
    echo_value('lower_c', result.lower_c)
    echo_value('upper_phi', result.upper_phi)
    if result.lossy_capacity is not None:
        echo_value('capacity', result.lossy_capacity)
