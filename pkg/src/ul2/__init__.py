"""Normalized-Laplacian spectra of unicyclic graphs and the
classification of those with second-smallest eigenvalue at least
1 - sqrt(6)/3.
"""

from .classifier import Verdict, classify, girth_prefilter, match_structure, threshold
from .config import DEFAULT_TOLERANCES, Tolerances
from .families import (
    FAMILIES,
    FamilyInstance,
    family_order,
    instance_from_spec,
    make_family,
    parse_family_spec,
    sweep_family,
)
from .graphs import (
    Graph,
    cycle_graph,
    delete_pendant,
    format_graph_text,
    girth_and_cycle,
    graph_from_edges,
    is_connected,
    is_unicyclic,
    parse_graph_text,
    path_graph,
    separate_edge,
    star_graph,
)
from .spectra import (
    Spectrum,
    broom_root_deleted_spectrum,
    check_interlacing,
    cycle_lambda2_closed_form,
    eigenvalues_sym,
    eigensystem_sym,
    graph_spectrum,
    harmonic_eigenfunction,
    lambda2,
    lambda_k,
    normalized_laplacian,
    principal_submatrix,
    rayleigh_quotient,
    spectrum_csv,
)
from .trees import BroomSpec, RootedTree, broom_tree, path_tree, star_tree
from .unicyclic import (
    UnicyclicDesc,
    cycle_with_pendant,
    decompose_unicyclic,
    realize_unicyclic,
    star_composition,
)
from .enumeration import enumerate_unicyclic, rooted_trees
from .canon import are_isomorphic, canonical_form

__version__ = "0.1.0"

__all__ = [
    "BroomSpec",
    "DEFAULT_TOLERANCES",
    "FAMILIES",
    "FamilyInstance",
    "Graph",
    "RootedTree",
    "Spectrum",
    "Tolerances",
    "UnicyclicDesc",
    "Verdict",
    "are_isomorphic",
    "broom_root_deleted_spectrum",
    "broom_tree",
    "canonical_form",
    "check_interlacing",
    "classify",
    "cycle_graph",
    "cycle_lambda2_closed_form",
    "cycle_with_pendant",
    "decompose_unicyclic",
    "delete_pendant",
    "eigensystem_sym",
    "eigenvalues_sym",
    "enumerate_unicyclic",
    "family_order",
    "format_graph_text",
    "girth_and_cycle",
    "girth_prefilter",
    "graph_from_edges",
    "graph_spectrum",
    "harmonic_eigenfunction",
    "instance_from_spec",
    "is_connected",
    "is_unicyclic",
    "lambda2",
    "lambda_k",
    "make_family",
    "match_structure",
    "normalized_laplacian",
    "parse_family_spec",
    "parse_graph_text",
    "path_graph",
    "path_tree",
    "principal_submatrix",
    "rayleigh_quotient",
    "realize_unicyclic",
    "rooted_trees",
    "separate_edge",
    "spectrum_csv",
    "star_composition",
    "star_graph",
    "star_tree",
    "sweep_family",
    "threshold",
]
