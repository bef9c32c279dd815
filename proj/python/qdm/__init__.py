"""Distinguishability measures for classical distributions and quantum states.

Matrices are square complex numpy arrays; distributions are sequences of floats.
All information quantities are in bits.
"""
from ._core import *  # noqa: F401,F403
from ._core import QdmError, DimensionMismatch, DimensionOverflow, InvalidValue, DomainError  # noqa: F401

FIGURE_COLUMNS = ("alpha", "sd_lower_pe", "sd_parmi", "sd_upper_k", "sd_lower_b", "sd_upper_b")
