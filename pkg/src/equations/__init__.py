from .forms import REDUCIBLE, ReducedOde, reduce
from .residuals import (
    invariant_surface_check,
    invariant_surface_terms,
    ode_residual,
    ode_terms,
    pde_residual,
    pde_residual_fd,
    pde_terms,
)

__all__ = [
    "REDUCIBLE",
    "ReducedOde",
    "reduce",
    "invariant_surface_check",
    "invariant_surface_terms",
    "ode_residual",
    "ode_terms",
    "pde_residual",
    "pde_residual_fd",
    "pde_terms",
]
