"""Bound states of a cylindrical quantum well and their quadratic magnetic
corrections. The heavy lifting lives in the compiled ``_core`` module."""

import json

from . import _core
from ._core import (
    BoundState,
    ConfigError,
    MomentSet,
    NumericalError,
    WellGeometry,
    audit_reference_table,
    axial_energy,
    bessel_j,
    bessel_j_zero,
    bessel_k,
    bessel_k_scaled,
    circular_correction,
    compute_moments,
    elliptic_correction,
    energy_to_mev,
    enumerate_states,
    field_from_kOe,
    solve_radial_levels,
)

__all__ = [
    "BoundState",
    "ConfigError",
    "MomentSet",
    "NumericalError",
    "WellGeometry",
    "audit_reference_table",
    "axial_energy",
    "bessel_j",
    "bessel_j_zero",
    "bessel_k",
    "bessel_k_scaled",
    "circular_correction",
    "compute_moments",
    "elliptic_correction",
    "energy_to_mev",
    "enumerate_states",
    "field_from_kOe",
    "solve",
    "solve_radial_levels",
    "spectrum_csv",
]


def solve(**config):
    """Spectrum rows as dicts. Keyword arguments use the config-file keys,
    e.g. ``solve(radius_nm=3.0, field_kOe=50)``."""
    return _core.solve(json.dumps(config))


def spectrum_csv(**config):
    return _core.spectrum_csv(json.dumps(config))
