# SPDX-License-Identifier: Apache-2.0

"""Electromagnetic capacity analysis of UCA-based OAM links."""

from ._core import (
    ConfigError,
    DimensionError,
    Error,
    InconsistentGrid,
    InvalidArgument,
    NonHermitianInput,
    ParseError,
    PhysicalConstants,
    SingularSeparation,
    cit_capacity,
    dyadic_green,
    eit_capacity,
    idft_matrix,
    log_det_capacity,
    lumped_channel,
    oam_correlation_matrix,
    read_sparams,
    run_cli,
)

__all__ = [
    "ConfigError",
    "DimensionError",
    "Error",
    "InconsistentGrid",
    "InvalidArgument",
    "NonHermitianInput",
    "ParseError",
    "PhysicalConstants",
    "SingularSeparation",
    "cit_capacity",
    "dyadic_green",
    "eit_capacity",
    "idft_matrix",
    "log_det_capacity",
    "lumped_channel",
    "oam_correlation_matrix",
    "read_sparams",
    "run_cli",
]
