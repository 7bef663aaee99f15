"""graphenergy: exact adjacency spectra, graph energy, and small-graph censuses.

The public surface re-exports the main value types and operations; see the
README for the CLI.
"""

from .canon import CanonicalForm, aut_order, canonical_label, canonicalize
from .census import (
    GraphClassCensus,
    census_cache_load,
    census_cache_store,
    enumerate_connected,
    get_census,
)
from .classify import (
    BipartiteCheck,
    ClassKind,
    ClassLabel,
    bridges,
    classify,
    is_bipartite,
    is_edge_cut,
    simple_cycles,
)
from .errors import (
    CacheMissError,
    CorruptCacheError,
    FamilyParseError,
    GraphEnergyError,
    Graph6ParseError,
    InvalidFamilyError,
    NotAnEdgeError,
    QuadratureAccuracyError,
    ScaleError,
    SizeOverflowError,
)
from .graph6 import graph6_decode, graph6_encode
from .graphs import (
    FamilySpec,
    Graph,
    count_triangles,
    delete_edges,
    disjoint_union,
    family_graph,
    make_b_graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_named,
    make_s_graph,
    make_star,
    make_wheel,
    parse_family,
)
from .spectral import (
    BCoeffs,
    CharPoly,
    CoulsonEnergy,
    Spectrum,
    b_coeffs,
    char_poly,
    closed_form_charpoly,
    eigenvalues,
    energy,
    energy_coulson,
    poly_mul,
)
from .verify import CheckResult, RankReport, rank_class, run_checks

__version__ = "0.1.0"

__all__ = [
    "BCoeffs",
    "BipartiteCheck",
    "CacheMissError",
    "CanonicalForm",
    "CharPoly",
    "CheckResult",
    "ClassKind",
    "ClassLabel",
    "CorruptCacheError",
    "CoulsonEnergy",
    "FamilyParseError",
    "FamilySpec",
    "Graph",
    "Graph6ParseError",
    "GraphClassCensus",
    "GraphEnergyError",
    "InvalidFamilyError",
    "NotAnEdgeError",
    "QuadratureAccuracyError",
    "RankReport",
    "ScaleError",
    "SizeOverflowError",
    "Spectrum",
    "aut_order",
    "b_coeffs",
    "bridges",
    "canonical_label",
    "canonicalize",
    "census_cache_load",
    "census_cache_store",
    "char_poly",
    "classify",
    "closed_form_charpoly",
    "count_triangles",
    "delete_edges",
    "disjoint_union",
    "eigenvalues",
    "energy",
    "energy_coulson",
    "enumerate_connected",
    "family_graph",
    "get_census",
    "graph6_decode",
    "graph6_encode",
    "is_bipartite",
    "is_edge_cut",
    "make_b_graph",
    "make_complete",
    "make_complete_bipartite",
    "make_cycle",
    "make_named",
    "make_s_graph",
    "make_star",
    "make_wheel",
    "parse_family",
    "poly_mul",
    "rank_class",
    "run_checks",
    "simple_cycles",
]
