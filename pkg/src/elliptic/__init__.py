from .jacobi import (
    ENDPOINT_TOL,
    JacobiTriple,
    check_parameter,
    complete_K,
    jacobi_eval,
    jacobi_jet,
    jacobi_series,
)

__all__ = [
    "ENDPOINT_TOL",
    "JacobiTriple",
    "check_parameter",
    "complete_K",
    "jacobi_eval",
    "jacobi_jet",
    "jacobi_series",
]
