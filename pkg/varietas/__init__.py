"""
Finite-instance algebra of regular languages: canonical DFAs, finite
distributive lattices, lattice bimodules, U-quotients, local basic varieties,
their duality, and a measure-many quantum automaton simulator.
"""

from .bimodule import (
    AxiomReport,
    BimoduleCongruence,
    BimoduleHom,
    FreeHomSpec,
    LatticeBimodule,
    LawViolation,
    canonical_collapse,
    check_axioms,
    compose_homs,
    diamond_example,
    eval_hom,
    eval_hom_diamond,
    generated_congruence,
    image_factorization,
    iota_kernel,
    is_congruence,
    is_homomorphism,
    is_reduced,
    is_star_embedded,
    is_star_generated,
    kernel,
    product,
    projections,
    quotient,
    quotient_le,
    recognizer_from_monoid,
    reduce,
    subbimodule,
)
from .codec import DotWriter, JsonCodec
from .corpus import enumerate_bimodules, set_partitions
from .duality import (
    dual_of_hom_square,
    dual_of_variety,
    verify_local_duality,
    verify_subvariety_correspondence,
)
from .enums import (
    BimoduleLaw,
    ErrorCodes,
    MeasurementMode,
    Provenance,
    StateKind,
    VarietasConstants,
)
from .exceptions import (
    AlphabetError,
    BoundExceededError,
    CongruenceError,
    LatticeError,
    QfaError,
    RegexSyntaxError,
    StructureError,
    VarietasError,
    VarietyError,
)
from .languages import (
    Alphabet,
    Context,
    Dfa,
    DiamondTerm,
    FreeMonoidHom,
    Machine,
    RegularLanguage,
    derivative,
    enumerate_words,
    eval_diamond,
    is_subset,
    membership,
    minimize,
    preimage,
    transition_monoid,
)
from .monoid import FiniteMonoid
from .order import (
    TWO,
    Fdl,
    FinitePoset,
    LatticeMorphism,
    compose,
    downset_lattice,
    dualize_monotone,
    free_cdl,
    is_lattice_morphism,
    join_primes,
    lattice_iso,
    points,
    poset_iso,
    sublattice,
    upset_lattice,
)
from .qfa import (
    Kwqfa,
    MarginReport,
    ProbeReport,
    SimTrace,
    accept_probability,
    basic_variety_probe,
    from_permutation_dfa,
    margin_report,
    parity_machine,
    rotation_machine,
    simulate,
    validate,
)
from .recognition import (
    minimal_recognizer,
    rec_of_uquotient,
    recognized_languages,
    recognizes,
    uquotient_of_hom,
)
from .regex import compile_regex, parse_regex
from .uquotient import UQuotient, check_uquotient, lifting
from .varieties import (
    CotheoryReport,
    CotheorySample,
    LocalBasicVariety,
    check_cotheory,
    derivative_closure,
    generated_local_variety,
    is_local_basic_variety,
    quotient_order,
    subvarieties,
)

__version__ = "1.0.1"

__all__ = [
    # Languages
    "Alphabet",
    "Machine",
    "Dfa",
    "RegularLanguage",
    "FreeMonoidHom",
    "Context",
    "DiamondTerm",
    "minimize",
    "membership",
    "derivative",
    "preimage",
    "transition_monoid",
    "eval_diamond",
    "is_subset",
    "enumerate_words",
    "compile_regex",
    "parse_regex",
    # Monoids, posets and lattices
    "FiniteMonoid",
    "FinitePoset",
    "Fdl",
    "LatticeMorphism",
    "TWO",
    "downset_lattice",
    "upset_lattice",
    "join_primes",
    "free_cdl",
    "points",
    "dualize_monotone",
    "lattice_iso",
    "poset_iso",
    "sublattice",
    "is_lattice_morphism",
    "compose",
    # Bimodules
    "LatticeBimodule",
    "AxiomReport",
    "LawViolation",
    "FreeHomSpec",
    "BimoduleHom",
    "BimoduleCongruence",
    "check_axioms",
    "eval_hom",
    "eval_hom_diamond",
    "product",
    "projections",
    "is_congruence",
    "quotient",
    "subbimodule",
    "image_factorization",
    "is_star_generated",
    "is_star_embedded",
    "canonical_collapse",
    "is_reduced",
    "reduce",
    "iota_kernel",
    "kernel",
    "quotient_le",
    "is_homomorphism",
    "compose_homs",
    "generated_congruence",
    "recognizer_from_monoid",
    "diamond_example",
    "enumerate_bimodules",
    "set_partitions",
    # Recognition and U-quotients
    "UQuotient",
    "lifting",
    "check_uquotient",
    "recognized_languages",
    "recognizes",
    "uquotient_of_hom",
    "rec_of_uquotient",
    "minimal_recognizer",
    # Varieties and duality
    "LocalBasicVariety",
    "CotheorySample",
    "CotheoryReport",
    "derivative_closure",
    "generated_local_variety",
    "is_local_basic_variety",
    "check_cotheory",
    "quotient_order",
    "subvarieties",
    "dual_of_variety",
    "verify_local_duality",
    "dual_of_hom_square",
    "verify_subvariety_correspondence",
    # Quantum automata
    "Kwqfa",
    "SimTrace",
    "MarginReport",
    "ProbeReport",
    "validate",
    "simulate",
    "accept_probability",
    "margin_report",
    "basic_variety_probe",
    "parity_machine",
    "rotation_machine",
    "from_permutation_dfa",
    # Serialization
    "JsonCodec",
    "DotWriter",
    # Enums
    "BimoduleLaw",
    "ErrorCodes",
    "MeasurementMode",
    "Provenance",
    "StateKind",
    "VarietasConstants",
    # Exceptions
    "VarietasError",
    "AlphabetError",
    "StructureError",
    "RegexSyntaxError",
    "LatticeError",
    "BoundExceededError",
    "CongruenceError",
    "VarietyError",
    "QfaError",
]
