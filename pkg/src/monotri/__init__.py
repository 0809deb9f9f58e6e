"""Minimum monochromatic triangles in 2-colored incidence geometries and graphs.

The package covers two settings that share one question -- how few
monochromatic triangles a red/blue 2-coloring can leave:

* line-colorings of point-line configurations (parsing, triangle enumeration,
  exhaustive and branch-and-bound searches, connected sums, cliques of
  mutually intersecting lines, a catalog of named geometries);
* edge-colorings of complete graphs (the closed-form counting minimum, small
  brute-force searches, and minima for vertex-disjoint triangle packings).
"""

from .catalog import (
    CatalogEntry,
    are_isomorphic,
    builtin,
    entry,
    enumerate_v3,
    find_isomorphism,
    names,
)
from .cliques import (
    CliqueReport,
    ConjectureReport,
    SixLineBoundReport,
    SixLineBoundViolation,
    all_six_cliques,
    check_conjecture,
    disjoint_six_clique_packing,
    max_mutually_intersecting,
    six_line_bound_report,
    verify_six_line_bound,
)
from .coloring import (
    LineColoring,
    SearchResult,
    count_monochromatic,
    min_monochromatic,
    min_monochromatic_on_line_subset,
    optimal_color_balance,
)
from .errors import CapExceededError, GeometryError, SearchBudgetExceeded
from .incidence import (
    ClassifyDiagnostic,
    Configuration,
    Graph,
    IncidenceGeometry,
    as_geometry,
    classify,
    geometry_from_lines,
    line_intersection_graph,
    menger_graph,
    parse_configuration,
    serialize_braces,
    serialize_plain,
)
from .ramsey import (
    EdgeColoring,
    PackingResult,
    brute_force_min_mono,
    count_mono_triangles,
    edges_form_cycle,
    goodman_min,
    guaranteed_disjoint_triangles,
    lower_bound_construction,
    max_disjoint_mono,
    min_max_disjoint,
    triangle_free_colorings,
)
from .sums import ConnectedSum, SumSpec, connected_sum, cross_triangle_count, enumerate_flag_sums
from .triangles import (
    Triangle,
    enumerate_triangles,
    triangle_line_index_triples,
    triangles_by_line_triples,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CatalogEntry",
    "ClassifyDiagnostic",
    "CliqueReport",
    "Configuration",
    "ConjectureReport",
    "ConnectedSum",
    "EdgeColoring",
    "GeometryError",
    "Graph",
    "IncidenceGeometry",
    "LineColoring",
    "PackingResult",
    "SearchBudgetExceeded",
    "SearchResult",
    "SixLineBoundReport",
    "SixLineBoundViolation",
    "SumSpec",
    "Triangle",
    "__version__",
    "all_six_cliques",
    "are_isomorphic",
    "as_geometry",
    "brute_force_min_mono",
    "builtin",
    "check_conjecture",
    "classify",
    "connected_sum",
    "count_mono_triangles",
    "count_monochromatic",
    "cross_triangle_count",
    "disjoint_six_clique_packing",
    "edges_form_cycle",
    "entry",
    "enumerate_flag_sums",
    "enumerate_triangles",
    "enumerate_v3",
    "find_isomorphism",
    "geometry_from_lines",
    "goodman_min",
    "guaranteed_disjoint_triangles",
    "line_intersection_graph",
    "lower_bound_construction",
    "max_disjoint_mono",
    "max_mutually_intersecting",
    "menger_graph",
    "min_max_disjoint",
    "min_monochromatic",
    "min_monochromatic_on_line_subset",
    "names",
    "optimal_color_balance",
    "parse_configuration",
    "serialize_braces",
    "serialize_plain",
    "six_line_bound_report",
    "triangle_free_colorings",
    "triangle_line_index_triples",
    "triangles_by_line_triples",
    "verify_six_line_bound",
]
