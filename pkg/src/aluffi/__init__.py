"""Exact commutative-algebra toolkit for ideals of points in projective
space and the torsion test of the pair (point ideal, Jacobian ideal)."""

from .orders import (GREVLEX, LEX, Monomial, TermOrder, elimination_order,
                     mon_degree, mon_div, mon_divides, mon_lcm, mon_mul)
from .poly import (ParseError, Polynomial, PolyRing, RingMismatchError,
                   format_poly, parse_poly)
from .groebner import (DegreeCapExceeded, GroebnerBasis, buchberger,
                       initial_ideal, normal_form, reduce_basis, s_polynomial)
from .ideals import (Ideal, NotHomogeneousError, intersect_all,
                     irrelevant_ideal, irrelevant_power)
from .points import (GeneralPositionError, IgpGenerators, PointFormatError,
                     PointSet, ProjectivePoint, apply_matrix, glp_check,
                     hyperplane_position_check, hyperplane_standard_ideal,
                     hyperplane_standard_points, ideal_of_points,
                     igp_construct, normalize_frame, parse_points_text,
                     sample_glp_points, vanishing_ideal_point)
from .jacobian import (CriticalData, DegreeVerdict, PolyMatrix, TorsionReport,
                       critical_ideal, jacobian_contains_power,
                       jacobian_ideal, jacobian_matrix, torsion_free_check,
                       vv_component)

__version__ = "0.1.0"

__all__ = [
    "GREVLEX", "LEX", "Monomial", "TermOrder", "elimination_order",
    "mon_degree", "mon_div", "mon_divides", "mon_lcm", "mon_mul",
    "ParseError", "Polynomial", "PolyRing", "RingMismatchError",
    "format_poly", "parse_poly",
    "DegreeCapExceeded", "GroebnerBasis", "buchberger", "initial_ideal",
    "normal_form", "reduce_basis", "s_polynomial",
    "Ideal", "NotHomogeneousError", "intersect_all", "irrelevant_ideal",
    "irrelevant_power",
    "GeneralPositionError", "IgpGenerators", "PointFormatError", "PointSet",
    "ProjectivePoint", "apply_matrix", "glp_check",
    "hyperplane_position_check", "hyperplane_standard_ideal",
    "hyperplane_standard_points", "ideal_of_points", "igp_construct",
    "normalize_frame", "parse_points_text", "sample_glp_points",
    "vanishing_ideal_point",
    "CriticalData", "DegreeVerdict", "PolyMatrix", "TorsionReport",
    "critical_ideal", "jacobian_contains_power", "jacobian_ideal",
    "jacobian_matrix", "torsion_free_check", "vv_component",
]
