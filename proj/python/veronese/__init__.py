"""Generalized Veronese bi-type monomial ideals.

Ideals are passed as a block-size list plus a list of exponent lists. Variable
indices are 0-based and flattened block by block.
"""

from ._veronese import (
    Error,
    GuardError,
    ParameterError,
    ass_formula,
    ass_oracle,
    betti_numbers,
    colon,
    dim_formula,
    dim_oracle,
    gb_evidence,
    generators,
    is_sortable,
    is_unmixed,
    minimal_vertex_covers,
    minimalize,
    regularity,
    run,
    sort_pair,
    unmixed_predicate,
    walk_ideal,
    witness_monomial,
)

__all__ = [
    "Error",
    "GuardError",
    "ParameterError",
    "ass_formula",
    "ass_oracle",
    "betti_numbers",
    "colon",
    "dim_formula",
    "dim_oracle",
    "gb_evidence",
    "generators",
    "is_sortable",
    "is_unmixed",
    "minimal_vertex_covers",
    "minimalize",
    "regularity",
    "run",
    "sort_pair",
    "unmixed_predicate",
    "walk_ideal",
    "witness_monomial",
]
