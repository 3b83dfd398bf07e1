"""Exact combinatorics for scroll-matrix extensions of clique complexes.

The package computes, with integer arithmetic only:

* Betti tables of quadratic squarefree monomial ideals through reduced
  simplicial homology of induced clique complexes, and the p2 invariant
  both from the table and from the chordless-cycle census;
* validation and Groebner verification of scroll-matrix extension data,
  including the initial complex obtained by deleting matrix diagonals;
* admissible orders of matrix families and the induced variable orders;
* lower, upper and (under explicit hypotheses) exact values of p2 for the
  extended binomial system, with homology-backed witnesses.
"""

__version__ = "0.1.0"

from .graphs import (
    CliqueComplex,
    CycleCapExceeded,
    Graph,
    GraphError,
    build_graph,
    canonical_cycle,
    chordless_cycles,
    clique_complex,
    cycle_edges,
    induced,
    is_chordal,
    maximal_cliques,
    proper_edges,
)
from .homology import (
    INFINITE,
    QQ,
    BettiTable,
    FieldSpec,
    GuardExceeded,
    P2Result,
    betti_table,
    clique_homology,
    cycle_betti_table,
    gf,
    hochster_betti,
    is_2_linear_monomial,
    p2_from_table,
    p2_monomial,
    reduced_homology_rank,
    stanley_reisner_generators,
)
from .extension import (
    Extension,
    ExtensionError,
    GeneratorSystem,
    ScrollBlock,
    ScrollMatrix,
    ToricityReport,
    generator_system,
    matrix_minors,
    primary_components,
    toricity_gate,
    validate_extension,
)
from .ordering import (
    HeadsDigraph,
    NotOrderableError,
    OrderCycle,
    OrderFound,
    VarOrder,
    check_admissible_order,
    find_admissible_order,
    heads_digraph,
    identity_permutation,
    is_admissible_permutation,
    is_scroll_shape,
    pi_star,
    scroll_permutation,
    variable_order,
)
from .groebner import (
    Binomial,
    GroebnerCheck,
    InitialComplex,
    LeadTieError,
    SquareLeadError,
    buchberger_is_groebner,
    initial_complex,
    lead_deletions,
    lex_compare,
    monomial,
    normal_form,
    orient_minor,
    s_polynomial,
)
from .bounds import (
    EdgeClass,
    Interval,
    NotApplicable,
    P2Report,
    VirtualCycle,
    classify_edge,
    expand_cycle,
    homology_witness,
    is_2_linear_extension,
    lower_bound,
    p2_report,
    upper_bound,
    virtual_edges,
    virtual_minimal_cycles,
)
from .instance import InstanceError, instance_digest, parse_instance
