"""Exact circuit counting and extremal-structure verification for
strongly connected tournaments."""

from .analysis import StructureReport, analyze, distance, is_strong, strong_components
from .core import (
    MAX_ORDER,
    MoonlabError,
    ParameterError,
    ResourceGuardError,
    Tournament,
    TrnFormatError,
    build_extremal,
    build_extremal_minus,
    build_hatted,
    build_path_extremal,
    build_transitive,
    compose,
    converse,
    flip_arc,
    format_trn,
    induced_subtournament,
    parse_trn,
    relabel,
)
from .counting import (
    CycleCensus,
    cycle_counts,
    cycle_counts_through,
    hamiltonian_path_count,
    is_vertex_pancyclic,
    strong_sub_counts,
)
from .extremal import (
    DouglasParams,
    build_douglas,
    enumerate_h_family,
    formula_c,
    formula_c_through,
    h_family_size_nminus3,
)
from .iso import (
    CanonicalForm,
    ClassFilter,
    are_isomorphic,
    canonical_form,
    count_classes,
    enumerate_tournaments,
    iter_trnset,
    read_trnset,
    write_trnset,
)
from .verify import (
    CheckReport,
    Counterexample,
    check,
    check_all,
    replay_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "MoonlabError",
    "ParameterError",
    "ResourceGuardError",
    "TrnFormatError",
    "Tournament",
    "StructureReport",
    "CycleCensus",
    "CanonicalForm",
    "ClassFilter",
    "CheckReport",
    "Counterexample",
    "DouglasParams",
    "analyze",
    "are_isomorphic",
    "build_douglas",
    "build_extremal",
    "build_extremal_minus",
    "build_hatted",
    "build_path_extremal",
    "build_transitive",
    "canonical_form",
    "check",
    "check_all",
    "compose",
    "converse",
    "count_classes",
    "cycle_counts",
    "cycle_counts_through",
    "distance",
    "enumerate_h_family",
    "enumerate_tournaments",
    "flip_arc",
    "format_trn",
    "formula_c",
    "formula_c_through",
    "h_family_size_nminus3",
    "hamiltonian_path_count",
    "induced_subtournament",
    "is_strong",
    "is_vertex_pancyclic",
    "iter_trnset",
    "parse_trn",
    "read_trnset",
    "relabel",
    "replay_counterexample",
    "strong_components",
    "strong_sub_counts",
    "write_trnset",
    "__version__",
]
