"""Pairwise entanglement of the cyclic XX chain in a transverse field."""

from ._core import (
    Chain,
    InvalidArgument,
    NumericalError,
    bulk_concurrence,
    bulk_limit_temperature,
    bulk_pair_density,
    concurrence,
    critical_fields,
    ed_concurrence,
    ground_concurrence,
    ground_sector,
    high_field_concurrence,
    limit_temperature,
    log_partition,
    pair_density,
    plateau_limit_temperature,
)

__all__ = [
    "Chain",
    "InvalidArgument",
    "NumericalError",
    "bulk_concurrence",
    "bulk_limit_temperature",
    "bulk_pair_density",
    "concurrence",
    "critical_fields",
    "ed_concurrence",
    "ground_concurrence",
    "ground_sector",
    "high_field_concurrence",
    "limit_temperature",
    "log_partition",
    "pair_density",
    "plateau_limit_temperature",
]
