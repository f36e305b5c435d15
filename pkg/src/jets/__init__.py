from .jet import DIVISION_FLOOR, MAX_NT, MAX_NX, Jet, extract_partial, jet_seed
from .stencils import StencilSpec, central_weights, fd_partial
from . import functions

__all__ = [
    "Jet",
    "jet_seed",
    "extract_partial",
    "MAX_NX",
    "MAX_NT",
    "DIVISION_FLOOR",
    "StencilSpec",
    "central_weights",
    "fd_partial",
    "functions",
]
