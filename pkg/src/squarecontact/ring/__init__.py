"""Four squares and five gaps inside a rectangle."""

from .config import RingConfig, RingTargets, classify_config, initial_config
from .construct import fit_ring, properize, subdivide_ring
from .moves import (
    pinwheel_chain, resolve_arrow, resolve_near_pinwheel, resolve_pinwheel, resolve_stacked, slide_scale,
)

__all__ = [
    "RingConfig", "RingTargets", "classify_config", "initial_config", "fit_ring", "properize",
    "subdivide_ring", "pinwheel_chain", "resolve_arrow", "resolve_near_pinwheel", "resolve_pinwheel",
    "resolve_stacked", "slide_scale",
]
