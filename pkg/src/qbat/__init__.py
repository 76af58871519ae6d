"""Simulator and dataset pipeline for a cavity-mediated four-level quantum battery."""
from .datagen import (
    COLUMNS,
    DatasetRecord,
    SweepConfig,
    filter_records,
    group_key,
    group_split,
    read_dataset,
    sample_parameters,
    sweep,
    write_dataset,
)
from .dynamics import (
    DEFAULT_INITIAL_STATE,
    IndicatorSet,
    StateVector,
    Trajectory,
    evolve,
    indicators,
    steady_state,
)
from .energetics import EnergeticsRecord, ergotropy, ergotropy_ratio, passive_spectrum, thermo
from .errors import QbatError
from .fcs import CumulantSet, cumulants, dominant_eigenvalue, first_cumulant_flux
from .generator import DEFAULT_VARIANT, GeneratorMatrix, Variant, build_generator
from .params import BatteryParams, Occupations, bose_occupation, occupations, validate_params

__version__ = "0.1.0"

__all__ = [
    "BatteryParams",
    "COLUMNS",
    "CumulantSet",
    "DEFAULT_INITIAL_STATE",
    "DEFAULT_VARIANT",
    "DatasetRecord",
    "EnergeticsRecord",
    "GeneratorMatrix",
    "IndicatorSet",
    "Occupations",
    "QbatError",
    "StateVector",
    "SweepConfig",
    "Trajectory",
    "Variant",
    "bose_occupation",
    "build_generator",
    "cumulants",
    "dominant_eigenvalue",
    "ergotropy",
    "ergotropy_ratio",
    "evolve",
    "filter_records",
    "first_cumulant_flux",
    "group_key",
    "group_split",
    "indicators",
    "occupations",
    "passive_spectrum",
    "read_dataset",
    "sample_parameters",
    "steady_state",
    "sweep",
    "thermo",
    "validate_params",
    "write_dataset",
]
