"""Orientable ribbon graphs, partial duality, plane-biseparations and link diagrams."""

from .errors import (
    BoundsError,
    MalformedPresentationError,
    NonOrientableError,
    NonPrimeError,
    NotADiagramError,
    NotASummandError,
    NotPlaneError,
    ParseError,
    RibbonError,
    UnknownEdgeError,
)
from .ribbon import (
    Arrow,
    ArrowPresentation,
    BoundaryStep,
    RibbonGraph,
    boundary_walks,
    canonical_code,
    components,
    disjoint_union,
    from_arrows,
    genus,
    geometric_dual,
    induced,
    is_isomorphic,
    is_plane,
    join,
    one_sum,
    partial_dual,
    to_arrows,
)
from .decomp import (
    biseparation_candidates_prime,
    dual_of_join_summand,
    enumerate_plane_subsets,
    find_plane_biseparation,
    interlacement,
    is_one_sum,
    join_split,
    prime_factorization,
    sim_equivalent,
    toggle,
    verify_plane_biseparation,
    verify_plane_join_biseparation,
    vertex_blocks,
)
from .linkdiag import (
    LinkDiagram,
    all_state_graphs,
    checkerboard,
    diagram_of,
    diagrams_of,
    parse_pd,
    same_link_diagram_set,
    state_graph,
    summand_flip,
    tait,
)

__version__ = "0.1.0"
