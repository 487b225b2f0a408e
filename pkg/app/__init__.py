"""
Key Rate Toolkit Application Factory
====================================

Builds the command-line application: a click group carrying the selected
configuration class, with one sub-command per feature area.

Architecture Overview:
    - app.gaussian: covariance-matrix algebra (states, operations, spectra)
    - app.services: capacity bounds, protocol key rate, optimizer, CSV output
    - app.commands: click sub-commands (bounds, rate, optimize, sweep)

Example Usage:
    >>> from app import create_app
    >>> from app.config import TestingConfig
    >>> cli = create_app(TestingConfig)
    >>> cli(['bounds', '--eta', '0.9', '--nbar', '1'])
"""

import click

from app.config import Config


def create_app(config_class=Config):
    """
    Application factory function: creates the click command group.

    The configuration class is handed to every command as the click
    context object (ctx.obj).

    Args:
        config_class (class): Configuration class to use. Defaults to Config.
            Options: Config, DevelopmentConfig, ProductionConfig, TestingConfig

    Returns:
        click.Group: Command group ready to invoke
    """
    @click.group(context_settings={'obj': config_class, 'help_option_names': ['-h', '--help']})
    def cli():
        """Secret-key bounds and trusted-noise key rates for thermal-loss channels."""

    _register_commands(cli)

    return cli


def _register_commands(cli):
    """
    Attach all sub-commands to the group.

    Note:
        Imports are done inside the function so importing app does not pull
        in the numerical stack.
    """
    from app.commands.bounds import bounds
    from app.commands.rate import rate
    from app.commands.optimize import optimize
    from app.commands.sweep import sweep

    cli.add_command(bounds)
    cli.add_command(rate)
    cli.add_command(optimize)
    cli.add_command(sweep)
