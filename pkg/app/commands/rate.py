"""
Rate Command
============

Key rate of the trusted-noise protocol at one detector setting.
"""

import click

from app.commands.common import channel_options, echo_value, resolve_channel
from app.models.params import DetectorParams
from app.services.protocol_service import ProtocolService
from app.utils.decorators import handle_errors, log_activity


def _format_spectrum(spectrum):
    return ', '.join(f'{nu:.6f}' for nu in spectrum)


@click.command()
@channel_options
@click.option('--eta-d', 'eta_d', type=float, default=1.0, show_default=True,
              help='Detector transmissivity, 0 < eta_d <= 1.')
@click.option('--gamma', type=float, default=1.0, show_default=True,
              help='Trusted thermal variance, >= 1.')
@click.option('--mu', type=float, default=None,
              help='TMSV variance; the asymptotic rate is used when omitted.')
@click.option('--verbose', '-v', is_flag=True, help='Also print entropies and spectra.')
@click.pass_obj
@handle_errors
@log_activity('computed key rate')
def rate(cfg, eta, omega, nbar, eta_d, gamma, mu, verbose):
    """
    Print I_AB, chi_EB and R = I_AB - chi_EB.

    Without --mu only R is finite and is printed with the large-mu
    conditional eigenvalue nu_bar_2.
    """
    ch = resolve_channel(eta, omega, nbar)
    det = DetectorParams(eta_d, gamma)

    if mu is None:
        echo_value('rate', ProtocolService.rate_asymptotic(ch, det))
        if verbose:
            _, nu_bar_2 = ProtocolService.conditional_spectrum_asymptotic(ch, det, 1.0)
            echo_value('nu_bar_2', nu_bar_2)
        return

    report = ProtocolService.rate_finite(mu, ch, det)
    echo_value('i_ab', report.i_ab)
    echo_value('chi_eb', report.chi_eb)
    echo_value('rate', report.rate)

    if verbose:
        echo_value('v_b', report.v_b)
        echo_value('v_b_given_a', report.v_b_given_a)
        echo_value('s_total', report.s_total)
        echo_value('s_cond', report.s_cond)
        click.echo(f'{"nu_total":<12} {_format_spectrum(report.spectrum_total)}')
        click.echo(f'{"nu_cond":<12} {_format_spectrum(report.spectrum_cond)}')
