"""Kernels by H-walks in arc-coloured digraphs."""

from .core import (
    ArcPartition,
    ColouredInstance,
    Colouring,
    HostDigraph,
    PatternDigraph,
    Walk,
    colour_sequence,
    induced_subdigraph,
    restrict_arcs,
    validate,
)
from .errors import Counterexample, HKernelError, HypothesisViolation, InvalidArgument, ResourceLimitError

__version__ = "0.1.0"

__all__ = [
    "ArcPartition",
    "ColouredInstance",
    "Colouring",
    "Counterexample",
    "HKernelError",
    "HostDigraph",
    "HypothesisViolation",
    "InvalidArgument",
    "PatternDigraph",
    "ResourceLimitError",
    "Walk",
    "colour_sequence",
    "induced_subdigraph",
    "restrict_arcs",
    "validate",
]
