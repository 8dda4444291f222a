"""Exact laboratory for extremal problems on pairs of triangles in convex position."""

from .classify import (
    ConfigType,
    CopyCensus,
    FreenessResult,
    classify_pair,
    count_copies,
    is_free,
    parse_forbidden,
)
from .constructions import (
    FAMILIES,
    Design,
    ExpandedDesign,
    build_family,
    d2_expand_design,
    d2_fan,
    d2_fano7,
    d2_from_triangulation,
    delta,
    h_plus,
    h_prime,
    h_star,
    load_design,
    m2_extremal,
    m3_extremal,
    parse_design,
    s2_split,
    s3_h0,
)
from .core import (
    CentroidPosition,
    Cgh,
    Symmetry,
    all_symmetries,
    all_triples,
    apply_symmetry,
    canonical_form,
    centroid_position,
    gaps,
    load_cgh,
    save_cgh,
    triple_rank,
    triple_unrank,
)
from .geometry import (
    ConvexRealization,
    centroid_inside,
    oracle_classify,
    orientation,
    realization_for,
    realize,
)
from .search import (
    ConflictGraph,
    EnumerationResult,
    SearchResult,
    SearchStatus,
    brute_force_mis,
    build_conflict_graph,
    enumerate_extremal,
    ex_number,
    max_independent_set,
)
from .tournaments import (
    D1BoundReport,
    D1ViolationError,
    Tournament,
    count_directed_triangles,
    max_triangle_tournament,
    orient_shadow,
    rotational_tournament,
    triangles_by_formula,
    verify_d1_bound,
)

__version__ = "0.1.0"
