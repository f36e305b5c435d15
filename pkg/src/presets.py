"""Predefined evaluation grids for the verifier."""

from .errors import UnknownEntryError
from .models.settings import Axis, GridSpec

GRID_PRESETS = {
    "default": {
        "description": "41x41 over [-10,10]x[0,5]; 201 z-points over [-10,10]",
        "grid": GridSpec(),
    },
    "fine": {
        "description": "Default grid with every interval halved",
        "grid": GridSpec().refined(2).model_copy(update={"name": "fine"}),
    },
    "coarse": {
        "description": "21x21 over [-10,10]x[0,5]; 101 z-points, for smoke runs",
        "grid": GridSpec(
            name="coarse",
            x=Axis(start=-10.0, stop=10.0, points=21),
            t=Axis(start=0.0, stop=5.0, points=21),
            z=Axis(start=-10.0, stop=10.0, points=101),
        ),
    },
}


def get_grid_preset(name: str) -> GridSpec:
    try:
        return GRID_PRESETS[name]["grid"]
    except KeyError:
        raise UnknownEntryError(f"unknown grid preset '{name}'; choose from {list_grid_presets()}") from None


def list_grid_presets() -> list[str]:
    return list(GRID_PRESETS.keys())
