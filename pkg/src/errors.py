"""Exception hierarchy shared by every lab module.

All errors derive from ``LabError``, itself a ``ValueError``, so callers that
only care about "bad input" can keep catching ``ValueError``.
"""

from __future__ import annotations

from typing import Any, Optional

import numpy as np


class LabError(ValueError):
    """Base class for all lab errors."""


class JetOrderError(LabError):
    """Requested derivative order exceeds what a jet carries."""


class JetDomainError(LabError):
    """Jet primitive evaluated outside its real domain.

    ``mask`` marks the offending batch points (``None`` for scalar jets),
    so batched callers can drop them and retry.
    """

    def __init__(self, message: str, mask: Optional[np.ndarray] = None):
        super().__init__(message)
        self.mask = mask


class EllipticDomainError(LabError):
    """Elliptic parameter outside [0, 1] or divergent quarter period."""


class UnsupportedReductionError(LabError):
    """The equation variant has no traveling-wave reduction."""


class CoefficientDomainError(LabError):
    """Coefficient table evaluated where it is undefined."""


class BranchError(LabError):
    """G'/G parameters do not select the requested branch."""

    def __init__(self, message: str, expected: Any = None):
        super().__init__(message)
        self.expected = expected


class KernelPoleError(LabError):
    """Denominator of a closed-form kernel vanishes."""


class UnknownEntryError(LabError, KeyError):
    """No catalog entry, claim or preset with the given id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
