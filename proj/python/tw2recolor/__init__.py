from ._core import (
    AuditReport,
    Coloring,
    EliminationOrdering,
    Graph,
    RecolorError,
    RecoloringSequence,
    TreeDecomposition,
    audit,
    best_choice_recoloring,
    bfs_distance,
    degeneracy_order,
    gen_2tree,
    gen_chordal_omega3,
    gen_partial_2tree,
    greedy_coloring,
    is_chordal,
    is_proper,
    mcs_order,
    pipeline,
    random_proper_coloring,
    reduce_width2,
    two_phase_transform,
    verify_sequence,
)

__version__ = "0.1.0"
