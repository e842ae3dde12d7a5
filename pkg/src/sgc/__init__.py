"""Spanning generalized caterpillars: invariants, exact searches with
budgets, constructive pipelines, and a theorem-verification harness."""

from .construct import (
    ConstructResult,
    CycleWitness,
    Fan,
    construct_sgc_theorem1,
    construct_sgc_theorem3,
    cycle_through,
    merge_and_prune,
    spanning_3tree_bounded,
    vertex_disjoint_fan,
)
from .covers import (
    CycleCover,
    PathCover,
    cycle_cover_number,
    min_cycle_cover,
    min_disjoint_path_cover,
    path_cover_number,
)
from .errors import CertificateError, FormatError, GraphError
from .families import (
    Theorem2Instance,
    counterexample_bipartite,
    theorem2_family,
    validate_theorem2_instance,
)
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_edgelist,
    emit_graph6,
    is_bipartite,
    is_connected,
    new_graph,
    parse_edgelist,
    parse_graph6,
    path_graph,
    random_connected,
    standard_graphs,
)
from .invariants import (
    ConnectivityCertificate,
    IndependenceCertificate,
    independence_number,
    vertex_connectivity,
)
from .search import Budget, Decision, OutOfBudget
from .trees import (
    CaterpillarCertificate,
    SpanningTree,
    TREE_KINDS,
    branch_profile,
    classify_tree,
    decide_sgc,
    hamiltonian_path,
    min_branch_spanning_tree,
    spanning_tree,
    spanning_tree_enumerate,
)
from .verify import (
    THEOREM_IDS,
    Corpus,
    TheoremReport,
    Violation,
    refute_lemma4,
    replay_violation,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CaterpillarCertificate",
    "CertificateError",
    "ConnectivityCertificate",
    "ConstructResult",
    "Corpus",
    "CycleCover",
    "CycleWitness",
    "Decision",
    "Fan",
    "FormatError",
    "Graph",
    "GraphError",
    "IndependenceCertificate",
    "OutOfBudget",
    "PathCover",
    "SpanningTree",
    "THEOREM_IDS",
    "TREE_KINDS",
    "Theorem2Instance",
    "TheoremReport",
    "Violation",
    "branch_profile",
    "classify_tree",
    "complete_bipartite",
    "complete_graph",
    "construct_sgc_theorem1",
    "construct_sgc_theorem3",
    "counterexample_bipartite",
    "cycle_cover_number",
    "cycle_graph",
    "cycle_through",
    "decide_sgc",
    "emit_edgelist",
    "emit_graph6",
    "hamiltonian_path",
    "independence_number",
    "is_bipartite",
    "is_connected",
    "merge_and_prune",
    "min_branch_spanning_tree",
    "min_cycle_cover",
    "min_disjoint_path_cover",
    "new_graph",
    "parse_edgelist",
    "parse_graph6",
    "path_cover_number",
    "path_graph",
    "random_connected",
    "refute_lemma4",
    "replay_violation",
    "spanning_3tree_bounded",
    "spanning_tree",
    "spanning_tree_enumerate",
    "standard_graphs",
    "theorem2_family",
    "validate_theorem2_instance",
    "verify_theorem",
    "vertex_connectivity",
    "vertex_disjoint_fan",
]
