"""Exact computations with colored line arrangements and the curves they force."""

from .arrangements import ColoredArrangement, construct_curve, offgreen_points
from .curvefit import PointSet, conditions_failure, curve_space_dim, unique_curve_through
from .errors import InputError, SyzygyError, TheoremViolation
from .polyring import HomogPoly
from .projgeom import Conic, ProjLine, ProjPoint, join, meet

__version__ = "0.1.0"

__all__ = [
    "ColoredArrangement", "Conic", "HomogPoly", "InputError", "PointSet", "ProjLine",
    "ProjPoint", "SyzygyError", "TheoremViolation", "conditions_failure", "construct_curve",
    "curve_space_dim", "join", "meet", "offgreen_points", "unique_curve_through",
]
