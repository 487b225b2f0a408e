"""
Models Module
=============

Domain value types: Gaussian states, physical parameters and results.
"""

from app.models.gaussian import QuadratureCM, SymplecticMap, SymplecticSpectrum
from app.models.params import ChannelParams, DetectorParams, ModulationParam
from app.models.reports import (
    BoundSet,
    HolevoTerms,
    RateReport,
    BoundaryFlags,
    OptimizationResult,
    SweepRow
)

__all__ = [
    'QuadratureCM',
    'SymplecticMap',
    'SymplecticSpectrum',
    'ChannelParams',
    'DetectorParams',
    'ModulationParam',
    'BoundSet',
    'HolevoTerms',
    'RateReport',
    'BoundaryFlags',
    'OptimizationResult',
    'SweepRow'
]
