"""
hdr-appell
Exact Gelfand-Tsetlin Appell bases for Hodge-de Rham and generalized
Moisil-Theodoresco systems in R^m.
"""

from .client import AppellClient
from .core.bases import BasisLabel
from .core.mvpoly import MVPoly
from .core.clifford import Multivector
from .exceptions import (
    HdrAppellError,
    DomainError,
    UsageError,
    ConfigurationError,
    VerificationError,
    InvariantError,
)

__version__ = "0.1.0"
__all__ = [
    "AppellClient",
    "BasisLabel",
    "MVPoly",
    "Multivector",
    "HdrAppellError",
    "DomainError",
    "UsageError",
    "ConfigurationError",
    "VerificationError",
    "InvariantError",
]
