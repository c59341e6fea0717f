"""Equidistant triples in the Heisenberg group with the gauge metric.

Core pieces: the Heisenberg group with its similarity group
(`heisenberg`), the complex hyperbolic boundary with Cartan invariants
and cross-ratios (`boundary`), the two-way parametrization of
similarity classes of equidistant triples by the angle surface
cos a + cos b + cos c = 3/2 (`equidistant`), and grid sampling of that
surface (`surface`).
"""

from .errors import (
    DegenerateConfiguration,
    GeometryError,
    NotEquidistant,
    OffSurface,
)
from .heisenberg import (
    IDENTITY,
    ORIGIN,
    HeisPoint,
    Similarity,
    apply_similarity,
    circle_distance,
    compose_similarities,
    heis_inv,
    heis_inversion,
    heis_mul,
    involution_j,
    kc_distance,
    koranyi_gauge,
    random_similarity,
    rotate,
    similarity_inverse,
    wrap_angle,
)
from .boundary import (
    INFINITY,
    REPEATED_POINT_TOL,
    BoundaryPoint,
    CrossRatioTriple,
    Lift,
    QuadrupleRelations,
    as_boundary,
    boundary_point_from_lift,
    cartan_invariant,
    cartan_of_lifts,
    cartan_quadruple_relations,
    cross_ratio,
    cross_ratio_of_lifts,
    cross_ratio_triple,
    hermitian,
    involution_on_boundary,
    similarity_on_boundary,
    standard_lift,
)
from .equidistant import (
    B_POINTS,
    CUBE_BOUND,
    ConstructionAngles,
    EquidistantTriple,
    SurfacePoint,
    TripleClass,
    abc_from_triple,
    classify_triple,
    construction_angles,
    is_equidistant,
    random_equidistant_triple,
    random_surface_point,
    surface_residual,
    triple_from_abc,
)
from .surface import SurfaceMesh, build_surface_mesh, write_csv, write_obj

__version__ = "0.1.0"

__all__ = [
    "B_POINTS",
    "BoundaryPoint",
    "CUBE_BOUND",
    "ConstructionAngles",
    "CrossRatioTriple",
    "DegenerateConfiguration",
    "EquidistantTriple",
    "GeometryError",
    "HeisPoint",
    "IDENTITY",
    "INFINITY",
    "Lift",
    "NotEquidistant",
    "ORIGIN",
    "OffSurface",
    "QuadrupleRelations",
    "REPEATED_POINT_TOL",
    "Similarity",
    "SurfaceMesh",
    "SurfacePoint",
    "TripleClass",
    "abc_from_triple",
    "apply_similarity",
    "as_boundary",
    "boundary_point_from_lift",
    "build_surface_mesh",
    "cartan_invariant",
    "cartan_of_lifts",
    "cartan_quadruple_relations",
    "circle_distance",
    "classify_triple",
    "compose_similarities",
    "construction_angles",
    "cross_ratio",
    "cross_ratio_of_lifts",
    "cross_ratio_triple",
    "heis_inv",
    "heis_inversion",
    "heis_mul",
    "hermitian",
    "involution_j",
    "involution_on_boundary",
    "is_equidistant",
    "kc_distance",
    "koranyi_gauge",
    "random_equidistant_triple",
    "random_similarity",
    "random_surface_point",
    "rotate",
    "similarity_inverse",
    "similarity_on_boundary",
    "standard_lift",
    "surface_residual",
    "triple_from_abc",
    "wrap_angle",
    "write_csv",
    "write_obj",
]
