"""Edge-to-edge tilings of the sphere by congruent a2bc quadrilaterals:
exact angle algebra, combinatorial maps, constructors for every tiling
family, numeric spherical realization, and symmetry classification.
"""

from .angles import AngleExpr, AngleSolution, VertexSignature, solve_angle_system
from .combinatorics import (
    AVCCandidate,
    DegreeVector,
    angles_feasible,
    avc_feasibility,
    counting_identities,
    degree_vertex_catalog,
    parity_admissible,
    search_avcs,
)
from .constructors import (
    DomainError,
    FlipInvalidError,
    TimeZoneDisk,
    decompose_time_zones,
    earth_map,
    family_alphadelta,
    family_beta2delta,
    flip_segment,
    pq_earth_map,
    quad_subdivide,
)
from .geometry import (
    ClosureError,
    DegeneracyError,
    DegeneracyWarning,
    GeometryError,
    Realization,
    SingularityError,
    SphericalQuad,
    area,
    closed_form_cube_subdivision,
    closed_form_family,
    convexity_bounds,
    degeneracy_loci,
    export_obj,
    export_svg,
    holonomy_residual,
    lune_quad,
    realize,
    solve_edges,
    trig_residuals,
)
from .symmetry import (
    MapAutomorphism,
    SymmetryClass,
    automorphisms,
    classify,
    vertex_bisecting_cycles,
)
from .tilingmap import (
    TilingError,
    TilingMap,
    balance_pair_counts,
    build,
    extract_avc,
    verify,
)

__all__ = [
    "AngleExpr",
    "AngleSolution",
    "VertexSignature",
    "solve_angle_system",
    "AVCCandidate",
    "DegreeVector",
    "angles_feasible",
    "avc_feasibility",
    "counting_identities",
    "degree_vertex_catalog",
    "parity_admissible",
    "search_avcs",
    "DomainError",
    "FlipInvalidError",
    "TimeZoneDisk",
    "decompose_time_zones",
    "earth_map",
    "family_alphadelta",
    "family_beta2delta",
    "flip_segment",
    "pq_earth_map",
    "quad_subdivide",
    "ClosureError",
    "DegeneracyError",
    "DegeneracyWarning",
    "GeometryError",
    "Realization",
    "SingularityError",
    "SphericalQuad",
    "area",
    "closed_form_cube_subdivision",
    "closed_form_family",
    "convexity_bounds",
    "degeneracy_loci",
    "export_obj",
    "export_svg",
    "holonomy_residual",
    "lune_quad",
    "realize",
    "solve_edges",
    "trig_residuals",
    "MapAutomorphism",
    "SymmetryClass",
    "automorphisms",
    "classify",
    "vertex_bisecting_cycles",
    "TilingError",
    "TilingMap",
    "balance_pair_counts",
    "build",
    "extract_avc",
    "verify",
]

__version__ = "0.1.0"
