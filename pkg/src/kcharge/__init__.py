"""k-tableau combinatorics: affine charge and cocharge statistics.

The library enumerates k-tableaux (semistandard fillings of (k+1)-cores
whose letters span prescribed residue counts), computes their charge and
cocharge under two provably equal formulations, and produces shape-grouped
generating polynomials that degenerate to Kostka-Foulkes polynomials for
large k.
"""

from .cores import (
    Cell,
    Partition,
    addable_corners,
    enumerate_cores,
    hook_length,
    is_n_core,
    k_bounded_hooks,
    k_interior,
    n_stat,
    parse_partition,
    partitions,
    removable_corners,
    residue,
)
from .ktableaux import (
    KTableau,
    StandardSequence,
    ValidationReport,
    enumerate_k_tableaux,
    highest_occurrence,
    lowest_occurrence,
    parse_json,
    parse_text,
    restrict_sequence,
    standard_sequences,
    to_json,
    to_text,
    validate,
)
from .statistics import (
    ResidueOrder,
    TPolynomial,
    charge_table,
    classical_charge,
    classical_cocharge,
    diag,
    enumerate_ssyt,
    high_order,
    highest_addable,
    index_I,
    index_J,
    index_L,
    index_M,
    k_charge,
    k_cocharge,
    kostka_foulkes_table,
    low_order,
    lowest_addable,
    sequence_reports,
)

__all__ = [
    "Cell",
    "KTableau",
    "Partition",
    "ResidueOrder",
    "StandardSequence",
    "TPolynomial",
    "ValidationReport",
    "addable_corners",
    "charge_table",
    "classical_charge",
    "classical_cocharge",
    "diag",
    "enumerate_cores",
    "enumerate_k_tableaux",
    "enumerate_ssyt",
    "high_order",
    "highest_addable",
    "highest_occurrence",
    "hook_length",
    "index_I",
    "index_J",
    "index_L",
    "index_M",
    "is_n_core",
    "k_bounded_hooks",
    "k_charge",
    "k_cocharge",
    "k_interior",
    "kostka_foulkes_table",
    "low_order",
    "lowest_addable",
    "lowest_occurrence",
    "n_stat",
    "parse_json",
    "parse_partition",
    "parse_text",
    "partitions",
    "removable_corners",
    "residue",
    "restrict_sequence",
    "sequence_reports",
    "standard_sequences",
    "to_json",
    "to_text",
    "validate",
]
