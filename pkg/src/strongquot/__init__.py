"""Largest strong quotient rings of finite rings, computed against brute-force oracles."""
from .closed_form import (
    ArtinianAnalysis,
    artinian_analysis,
    compare_closed_form_vs_bruteforce,
    lift_idempotents,
    triangular_strong_quotient,
)
from .corpus import CORPUS, corpus_ring, corpus_rings
from .errors import (
    CapacityError,
    InternalConsistencyError,
    NotOreError,
    RingError,
    SpecParseError,
    StrongQuotError,
    ZeroAbsorbedError,
)
from .localization import LocalizedRing, classical_left_quotient, induced_map, largest_left_quotient, localize
from .ore import (
    DenominatorCatalog,
    MultSet,
    enumerate_denominator_sets,
    enumerate_left_denominator_sets,
    largest_denominator_set_for,
    max_denominator_sets,
    max_left_denominator_sets,
    monoid_closure,
)
from .ring import (
    FiniteRing,
    Ideal,
    RingMap,
    direct_product,
    is_semiprime,
    is_semisimple,
    jacobson_radical,
    left_regular_elements,
    make_cyclic_ring,
    make_finite_field,
    make_matrix_ring,
    opposite_ring,
    quotient_ring,
    regular_elements,
    units,
    validate_ring_axioms,
)
from .ringspec import load_ring, parse_ring_text
from .strong import (
    StrongProfile,
    largest_strong_denominator_set,
    localization_radical,
    semisimplicity_criterion,
    strong_profile,
    strong_quotient_ring,
    strong_radical,
    strongly_localizable_set,
    weak_regular_sets,
)
from .theorems import verify_theorem_suite
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "ArtinianAnalysis",
    "CORPUS",
    "CapacityError",
    "DenominatorCatalog",
    "FiniteRing",
    "Ideal",
    "InternalConsistencyError",
    "LocalizedRing",
    "MultSet",
    "NotOreError",
    "RingError",
    "RingMap",
    "SpecParseError",
    "StrongProfile",
    "StrongQuotError",
    "Verdict",
    "ZeroAbsorbedError",
    "artinian_analysis",
    "classical_left_quotient",
    "compare_closed_form_vs_bruteforce",
    "corpus_ring",
    "corpus_rings",
    "direct_product",
    "enumerate_denominator_sets",
    "enumerate_left_denominator_sets",
    "induced_map",
    "is_semiprime",
    "is_semisimple",
    "jacobson_radical",
    "largest_denominator_set_for",
    "largest_left_quotient",
    "largest_strong_denominator_set",
    "left_regular_elements",
    "lift_idempotents",
    "load_ring",
    "localization_radical",
    "localize",
    "make_cyclic_ring",
    "make_finite_field",
    "make_matrix_ring",
    "max_denominator_sets",
    "max_left_denominator_sets",
    "monoid_closure",
    "opposite_ring",
    "parse_ring_text",
    "quotient_ring",
    "regular_elements",
    "semisimplicity_criterion",
    "strong_profile",
    "strong_quotient_ring",
    "strong_radical",
    "strongly_localizable_set",
    "triangular_strong_quotient",
    "units",
    "validate_ring_axioms",
    "verify_theorem_suite",
    "weak_regular_sets",
]
