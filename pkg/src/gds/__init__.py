"""Exact character degree sums, commuting probabilities, and structure tests
for finite permutation groups."""

from .analysis import AnalysisConfig, AnalysisRecord, analyze_group
from .builders import builtin_group, direct_product
from .chartable import CharacterData, character_degrees, character_table_mod_p
from .groups import (
    PermutationGroup,
    StructuralProfile,
    Subgroup,
    group_from_generators,
    quotient_group,
    structural_predicates,
)
from .isoclinism import are_isoclinic, rusin_case_classify, stem_check
from .metrics import GroupMetrics, commuting_pairs_bruteforce, compute_metrics
from .verifier import CLAIM_IDS, ClaimReport, verify_claims

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "AnalysisRecord",
    "analyze_group",
    "builtin_group",
    "direct_product",
    "CharacterData",
    "character_degrees",
    "character_table_mod_p",
    "PermutationGroup",
    "StructuralProfile",
    "Subgroup",
    "group_from_generators",
    "quotient_group",
    "structural_predicates",
    "are_isoclinic",
    "rusin_case_classify",
    "stem_check",
    "GroupMetrics",
    "commuting_pairs_bruteforce",
    "compute_metrics",
    "CLAIM_IDS",
    "ClaimReport",
    "verify_claims",
    "__version__",
]
