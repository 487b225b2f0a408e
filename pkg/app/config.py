"""
Application Configuration Module
================================

Configuration for all command-line environments.

Configuration Hierarchy:
    Config (Base) <-- DevelopmentConfig
                 <-- ProductionConfig
                 <-- TestingConfig

Environment Variables:
    Every key has a default; none is required. A .env file in the working
    directory is loaded first.

    - KEYRATE_ENV: Environment name (read by run.py)
    - KEYRATE_LOG_FILE: Path to log file
    - KEYRATE_LOG_LEVEL: Logging level (DEBUG, INFO, WARNING, ERROR)
    - KEYRATE_ETA_D_MIN, KEYRATE_GAMMA_MAX: Optimizer search box
    - KEYRATE_GRID_POINTS: Coarse grid size per axis
    - KEYRATE_TOLERANCE: Refinement tolerance
    - KEYRATE_SWEEP_WORKERS: Worker processes for sweeps

Usage:
    >>> from app.config import DevelopmentConfig
    >>> cli = create_app(DevelopmentConfig)
"""

import os

from dotenv import load_dotenv


load_dotenv()


class Config:
    """
    Base configuration class with default settings.

    Attributes:
        LOG_* : Logging configuration
        SEARCH_* : Optimizer search box, grid and refinement settings
        CSV_SIGNIFICANT_DIGITS (int): Digits per value in sweep files
        SWEEP_WORKERS (int): Worker processes for sweeps (1 = sequential)
    """

    # ==========================================================================
    # LOGGING CONFIGURATION
    # ==========================================================================

    LOG_FILE = os.environ.get('KEYRATE_LOG_FILE') or 'logs/keyrate.log'

    # DEBUG, INFO, WARNING, ERROR, CRITICAL
    LOG_LEVEL = os.environ.get('KEYRATE_LOG_LEVEL') or 'INFO'

    # ==========================================================================
    # OPTIMIZER CONFIGURATION
    # ==========================================================================

    # eta_d = 0 is excluded; the search starts just above it
    SEARCH_ETA_D_MIN = float(os.environ.get('KEYRATE_ETA_D_MIN') or 1e-4)

    SEARCH_GAMMA_MAX = float(os.environ.get('KEYRATE_GAMMA_MAX') or 1e3)

    SEARCH_ETA_D_POINTS = int(os.environ.get('KEYRATE_GRID_POINTS') or 64)
    SEARCH_GAMMA_POINTS = int(os.environ.get('KEYRATE_GRID_POINTS') or 64)

    SEARCH_TOLERANCE = float(os.environ.get('KEYRATE_TOLERANCE') or 1e-8)

    SEARCH_MAX_SWEEPS = 50

    # ==========================================================================
    # OUTPUT CONFIGURATION
    # ==========================================================================

    CSV_SIGNIFICANT_DIGITS = 9

    SWEEP_WORKERS = int(os.environ.get('KEYRATE_SWEEP_WORKERS') or 1)


class DevelopmentConfig(Config):
    """
    Development environment configuration.

    Logs at DEBUG unless KEYRATE_LOG_LEVEL says otherwise.
    """

    DEBUG = True
    TESTING = False

    LOG_LEVEL = os.environ.get('KEYRATE_LOG_LEVEL') or 'DEBUG'


class ProductionConfig(Config):
    """
    Production environment configuration.

    Used for long sweeps on a workstation: runs one worker per CPU unless
    KEYRATE_SWEEP_WORKERS is set.
    """

    DEBUG = False
    TESTING = False

    SWEEP_WORKERS = int(os.environ.get('KEYRATE_SWEEP_WORKERS') or os.cpu_count() or 1)


class TestingConfig(Config):
    """
    Testing environment configuration.

    Usage:
        >>> cli = create_app(TestingConfig)
        >>> result = CliRunner().invoke(cli, ['bounds', '--eta', '0.9', '--nbar', '1'])

    Features:
        - Sequential sweeps (deterministic, no process pool)
        - Default search settings regardless of the environment
    """

    DEBUG = True
    TESTING = True

    SEARCH_ETA_D_MIN = 1e-4
    SEARCH_GAMMA_MAX = 1e3
    SEARCH_ETA_D_POINTS = 64
    SEARCH_GAMMA_POINTS = 64
    SEARCH_TOLERANCE = 1e-8

    SWEEP_WORKERS = 1


# =============================================================================
# CONFIGURATION REGISTRY
# =============================================================================

# Used by run.py to select configuration based on KEYRATE_ENV
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
