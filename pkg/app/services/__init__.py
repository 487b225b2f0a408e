"""
Services Module
===============

Numerical layer between the commands and the Gaussian core.
Services hold the bounds, the protocol rate, the optimizer and CSV output.
"""

from app.services.bounds_service import BoundsService
from app.services.protocol_service import ProtocolService
from app.services.optimizer_service import OptimizerService, SearchConfig
from app.services.report_service import ReportService, SWEEP_HEADER

__all__ = [
    'BoundsService',
    'ProtocolService',
    'OptimizerService',
    'SearchConfig',
    'ReportService',
    'SWEEP_HEADER'
]
