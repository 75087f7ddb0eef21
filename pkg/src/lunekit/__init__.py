"""lunekit: convex bodies on the unit sphere.

Lunes and their thickness, width determined by supporting hemispheres,
bodies of constant width, reduced-polygon certificates, polar duals, and
smallest enclosing caps, with executable checks for the quantitative
statements the package is built around.
"""

from ._kernels import backend_name
from .bodies import (
    Body,
    ConvexPolygon,
    DiskPolygon,
    Edge,
    SupportSet,
    body_contains,
    boundary_sample,
    convex_hull,
    make_cap,
    make_quarter_disk,
    make_regular_reduced_polygon,
    make_reuleaux_odd_gon,
    supporting_poles_at,
)
from .regions import (
    Cap,
    Hemisphere,
    Lune,
    lune_bounding_centers,
    lune_corners,
    lune_thickness,
    region_contains,
)
from .sphere import (
    DEFAULT_TOL,
    SpherePoint,
    Tolerance,
    antipode,
    circumcircle,
    distance,
    interpolate,
    orient,
)

__version__ = "0.1.0"

__all__ = [
    "SpherePoint",
    "Tolerance",
    "DEFAULT_TOL",
    "distance",
    "antipode",
    "interpolate",
    "orient",
    "circumcircle",
    "Hemisphere",
    "Cap",
    "Lune",
    "lune_thickness",
    "lune_bounding_centers",
    "lune_corners",
    "region_contains",
    "Edge",
    "ConvexPolygon",
    "DiskPolygon",
    "Body",
    "SupportSet",
    "convex_hull",
    "body_contains",
    "boundary_sample",
    "supporting_poles_at",
    "make_cap",
    "make_quarter_disk",
    "make_reuleaux_odd_gon",
    "make_regular_reduced_polygon",
    "backend_name",
    "__version__",
]
