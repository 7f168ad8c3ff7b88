"""Toric ideals of graphs: circuits, Graver and universal Groebner bases,
indispensable binomials and robustness, with a brute-force oracle."""

from .bases import (
    BasisElement,
    EngineBoundError,
    circuits,
    graver,
    indispensables,
    iter_circuits,
    universal_groebner,
)
from .chords import (
    Chord,
    ChordKind,
    IndispensabilityReport,
    chords_of,
    classified_chords,
    classify_chord,
    effective_crossings,
    indispensability,
)
from .enumeration import (
    AtlasEntry,
    enumerate_graphs,
    enumerate_robust_atlas,
    group_by_ideal_isomorphism,
    has_full_support,
    ideal_isomorphism,
)
from .graph import (
    BlockDecomposition,
    Cycle,
    Graph,
    GraphError,
    ParseError,
    blocks_and_cut_vertices,
    canonical_label,
    enumerate_simple_cycles,
    parse_graph,
)
from .oracle import (
    circuits_oracle,
    graver_oracle,
    mu_and_indispensables_oracle,
    ugb_oracle,
    walk_of_vector,
)
from .robustness import (
    RobustnessReport,
    RouteDisagreement,
    check_r_conditions,
    dividing_pair,
    is_robust,
    quadratic_circuit_condition,
    robustness_report,
    subdivide_edge,
)
from .walks import (
    Binomial,
    ClosedEvenWalk,
    NotPrimitiveError,
    WalkError,
    binomial_of_walk,
    circuit_type,
    classify_primitive,
    cyclic_blocks_with_parity,
    in_universal_groebner,
    is_strongly_primitive,
)

__version__ = "0.1.0"

__all__ = [
    "BasisElement",
    "EngineBoundError",
    "circuits",
    "graver",
    "indispensables",
    "iter_circuits",
    "universal_groebner",
    "Chord",
    "ChordKind",
    "IndispensabilityReport",
    "chords_of",
    "classified_chords",
    "classify_chord",
    "effective_crossings",
    "indispensability",
    "AtlasEntry",
    "enumerate_graphs",
    "enumerate_robust_atlas",
    "group_by_ideal_isomorphism",
    "has_full_support",
    "ideal_isomorphism",
    "BlockDecomposition",
    "Cycle",
    "Graph",
    "GraphError",
    "ParseError",
    "blocks_and_cut_vertices",
    "canonical_label",
    "enumerate_simple_cycles",
    "parse_graph",
    "circuits_oracle",
    "graver_oracle",
    "mu_and_indispensables_oracle",
    "ugb_oracle",
    "walk_of_vector",
    "RobustnessReport",
    "RouteDisagreement",
    "check_r_conditions",
    "dividing_pair",
    "is_robust",
    "quadratic_circuit_condition",
    "robustness_report",
    "subdivide_edge",
    "Binomial",
    "ClosedEvenWalk",
    "NotPrimitiveError",
    "WalkError",
    "binomial_of_walk",
    "circuit_type",
    "classify_primitive",
    "cyclic_blocks_with_parity",
    "in_universal_groebner",
    "is_strongly_primitive",
]
