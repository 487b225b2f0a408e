#!/usr/bin/env python
"""
Key Rate Toolkit Entry Point
============================

Main entry point for the command-line application. It uses the application
factory to build the click group for the configured environment.

Usage:
    $ python run.py bounds --eta 0.9 --nbar 1
    $ python run.py rate --eta 0.9 --omega 3 --eta-d 0.5 --gamma 1
    $ python run.py rate --eta 0.9 --omega 3 --mu 1000000 --verbose
    $ python run.py optimize --eta 0.95 --omega 3
    $ python run.py sweep --eta-min 0.01 --eta-max 0.99 --steps 99 --omega 3 --out sweep.csv

Environment Variables:
    KEYRATE_ENV: Environment name ('development', 'production', 'testing')
                 Defaults to 'development' if not set

    See app/config.py for full list of configuration options.

File Structure:
    run.py                 <- You are here (entry point)
    app/
        __init__.py        <- Application factory
        config.py          <- Configuration classes
        commands/          <- Click sub-commands
        services/          <- Bounds, protocol rate, optimizer, CSV output
        gaussian/          <- Covariance-matrix algebra
        models/            <- Domain types
        utils/             <- Validators, errors, decorators
"""

import os
import logging

from app import create_app
from app.config import config


# =============================================================================
# APPLICATION CREATION
# =============================================================================

env = os.environ.get('KEYRATE_ENV', 'development')

# Falls back to DevelopmentConfig if environment not recognized
config_class = config.get(env, config['default'])

app = create_app(config_class)


# =============================================================================
# LOGGING CONFIGURATION
# =============================================================================

def _configure_logging(config_class):
    """Send log records to the configured file, creating its directory."""
    log_dir = os.path.dirname(config_class.LOG_FILE)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)

    logging.basicConfig(
        filename=config_class.LOG_FILE,
        level=getattr(logging, str(config_class.LOG_LEVEL).upper(), logging.INFO),
        # Example: "2025-01-15 10:30:45,123 - INFO - Optimized rate for eta=0.95, ..."
        format='%(asctime)s - %(levelname)s - %(message)s'
    )


# =============================================================================
# MAIN EXECUTION
# =============================================================================

if __name__ == '__main__':
    _configure_logging(config_class)
    logging.info(f"Starting key rate toolkit (environment: {env})")
    app()
