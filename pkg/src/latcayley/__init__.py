"""Exact-arithmetic toolkit for Minkowski and Cayley sums of lattice polytopes."""

__version__ = "0.1.0"

from .geometry import (
    CellBudgetExceeded,
    DimensionMismatch,
    DualDescription,
    GeometryError,
    Hyperplane,
    Mode,
    affine_hull,
    arrangement_sample_points,
    contains,
    convex_hull,
    dimension,
)
from .polytope import (
    Edge,
    LatticePolytope,
    PointSet,
    cayley_slice,
    cayley_sum,
    dilate,
    edges,
    from_vertices,
    interior_lattice_points,
    lattice_points,
    minkowski_sum,
    normal_fan_coarsens,
    translate,
)
from .covering import (
    CoverageQuery,
    CoverageResult,
    covers,
    covers_by_sampling,
    has_interior_translate_cover,
    is_2_convex_normal,
)
from .properties import (
    LevelData,
    PropertyReport,
    Verdict,
    edge_length_criterion,
    is_gorenstein,
    is_idp,
    is_tuple_idp,
    level_index,
    level_status,
    point_set_sum,
)
from .campaigns import CampaignConfig, CampaignReport, Violation, THEOREM_IDS, verify_theorem
from .generator import random_lattice_polytope
from .polyfile import PolytopeFileError, load_polytope, save_polytope
from .reproduce import EXAMPLE_NAMES, reproduce_example

__all__ = [
    "CampaignConfig",
    "CampaignReport",
    "CellBudgetExceeded",
    "CoverageQuery",
    "CoverageResult",
    "DimensionMismatch",
    "DualDescription",
    "EXAMPLE_NAMES",
    "Edge",
    "GeometryError",
    "Hyperplane",
    "LatticePolytope",
    "LevelData",
    "Mode",
    "PointSet",
    "PolytopeFileError",
    "PropertyReport",
    "THEOREM_IDS",
    "Verdict",
    "Violation",
    "affine_hull",
    "arrangement_sample_points",
    "cayley_slice",
    "cayley_sum",
    "contains",
    "convex_hull",
    "covers",
    "covers_by_sampling",
    "dilate",
    "dimension",
    "edge_length_criterion",
    "edges",
    "from_vertices",
    "has_interior_translate_cover",
    "interior_lattice_points",
    "is_2_convex_normal",
    "is_gorenstein",
    "is_idp",
    "is_tuple_idp",
    "lattice_points",
    "level_index",
    "level_status",
    "load_polytope",
    "minkowski_sum",
    "normal_fan_coarsens",
    "point_set_sum",
    "random_lattice_polytope",
    "reproduce_example",
    "save_polytope",
    "translate",
    "verify_theorem",
    "__version__",
]
