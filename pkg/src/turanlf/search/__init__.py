"""Ground truth by exhaustive search: enumeration, extremal values, theorem checks, lemma fuzzing."""
from .canon import are_isomorphic, canonical_form, canonical_graph6, canonical_labeling
from .enumeration import (
    EXHAUSTIVE_CAP,
    GRAPH_COUNTS,
    CapExceeded,
    ConstraintSpec,
    count_graphs,
    enumerate_graphs,
    level_counts,
)
from .extremal import ExtremalRecord, Objective, extremal_profile, extremal_search
from .fuzz import LEMMAS, PROVEN, FuzzReport, lemma_fuzz, replay
from .verify import DEFAULT_RANGES, VerifyReport, VerifyRow, search_setup, verify_theorem

__all__ = [
    "DEFAULT_RANGES", "EXHAUSTIVE_CAP", "GRAPH_COUNTS", "LEMMAS", "PROVEN", "CapExceeded", "ConstraintSpec",
    "ExtremalRecord", "FuzzReport", "Objective", "VerifyReport", "VerifyRow", "are_isomorphic",
    "canonical_form", "canonical_graph6", "canonical_labeling", "count_graphs", "enumerate_graphs",
    "extremal_profile", "extremal_search", "lemma_fuzz", "level_counts", "replay", "search_setup",
    "verify_theorem",
]
