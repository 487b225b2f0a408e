"""
Commands Module
===============

Click sub-commands registered by the application factory.
"""

from app.commands.bounds import bounds
from app.commands.rate import rate
from app.commands.optimize import optimize
from app.commands.sweep import sweep

__all__ = ['bounds', 'rate', 'optimize', 'sweep']
