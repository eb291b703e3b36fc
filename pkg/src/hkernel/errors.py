"""Exception hierarchy shared by every module.

The CLI maps these onto process exit codes, so keep the classes distinct.
"""

from __future__ import annotations

from typing import Any


class HKernelError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(HKernelError, ValueError):
    pass


class ResourceLimitError(HKernelError):
    """A desk-scale guard (vertex count, cycle count, rejection budget) was hit."""

    def __init__(self, message: str, bound: str | None = None):
        super().__init__(message)
        self.bound = bound


class HypothesisViolation(HKernelError):
    """A pipeline's precondition does not hold on the given instance.

    ``witness`` is whatever object demonstrates the failure (an offending
    cycle, a rainbow subgraph, a straddling transition, ...).
    """

    def __init__(self, message: str, witness: Any = None, failed: tuple[str, ...] = ()):
        super().__init__(message)
        self.witness = witness
        self.failed = failed


class Counterexample(HKernelError):
    """A claimed conclusion failed although its hypotheses were verified.

    Carries the instance (and partition) so that the failure can be
    serialized and replayed.
    """

    def __init__(self, message: str, instance: Any = None, partition: Any = None, obj: Any = None):
        super().__init__(message)
        self.instance = instance
        self.partition = partition
        self.obj = obj

    def document(self) -> str | None:
        if self.instance is None:
            return None
        from .io import serialize_instance

        return serialize_instance(self.instance, self.partition)
