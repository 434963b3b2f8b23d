"""Enumeration and classification of small semigroups and doppelsemigroups."""

from .core import (
    CayleyTable, DoppelTable, EncodingError, MonogenicParams, Structure, dual,
    interassociate_from_left_translation, is_associative, is_commutative,
    is_doppelsemigroup, is_inflation, is_interassociative, is_left_translation,
    is_strong, is_strong_pair, monogenic_params, parse_table, structural_probe, variant,
)
from .iso import (
    AutGroup, CanonicalForm, Permutation, apply_perm, are_anti_isomorphic, are_isomorphic,
    automorphisms, canonical_doppel, canonical_semigroup, dual_doppel,
)
from .search import (
    BudgetExceeded, SearchBudget, doppel_classes, enumerate_associative,
    interassociates_of, left_translations, semigroup_classes, strong_interassociates_of,
)
from .catalog import ModelName, build, doppel_adjoin_zero, doppel_name, recognize
from .classify import ClassificationReport, ClassRecord, classify

__version__ = "0.1.0"
