"""Secondary polytopes, GKZ vectors and Chow stability of projective toric varieties."""

from .configuration import ConfigurationError, PointConfiguration, StarViolation, require_star, validate_star
from .ehrhart import EhrhartPolynomial, HVector, ehrhart_polynomial, h_vector, simplex_bound
from .gkz import (
    FacetEquation,
    GKZVector,
    SecondaryPolytope,
    characteristic_section,
    facet_equation,
    gkz_vector,
    pairing_check,
    secondary_polytope,
)
from .hull import HPolytope, VPolytope, convex_hull, point_in_polytope
from .stability import (
    StabilityReport,
    diagonal_point,
    project_to_H,
    stability_verdict,
    verify_main_theorem,
    weight_polytope_H,
)
from .subdivision import (
    EnumerationCapExceeded,
    Subdivision,
    coarse_subdivisions,
    enumerate_triangulations,
    is_regular,
    refines,
    regular_subdivision,
)

__all__ = [
    "ConfigurationError",
    "EhrhartPolynomial",
    "EnumerationCapExceeded",
    "FacetEquation",
    "GKZVector",
    "HPolytope",
    "HVector",
    "PointConfiguration",
    "SecondaryPolytope",
    "StabilityReport",
    "StarViolation",
    "Subdivision",
    "VPolytope",
    "characteristic_section",
    "coarse_subdivisions",
    "convex_hull",
    "diagonal_point",
    "ehrhart_polynomial",
    "enumerate_triangulations",
    "facet_equation",
    "gkz_vector",
    "h_vector",
    "is_regular",
    "pairing_check",
    "point_in_polytope",
    "project_to_H",
    "refines",
    "regular_subdivision",
    "require_star",
    "secondary_polytope",
    "simplex_bound",
    "stability_verdict",
    "validate_star",
    "verify_main_theorem",
    "weight_polytope_H",
]
