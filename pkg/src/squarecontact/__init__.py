"""Square contact representations with prescribed gap aspect ratios."""

from .geometry import Corner, Rect, Square, aspect_ratio, classify_contact, scale_from_corner
from .graph import BuildProgram, GraphG, InsertCycle, InsertVertex, SplitPair, build_graph, k2n_program
from .layout import SCR, basis_pinwheel, layout, plan_ratios, realize
from .verify import check_spacing, verify_scr
from .forcing import force_ratio

__all__ = [
    "Corner", "Rect", "Square", "aspect_ratio", "classify_contact", "scale_from_corner",
    "BuildProgram", "GraphG", "InsertCycle", "InsertVertex", "SplitPair", "build_graph", "k2n_program",
    "SCR", "basis_pinwheel", "layout", "plan_ratios", "realize",
    "check_spacing", "verify_scr", "force_ratio",
]
