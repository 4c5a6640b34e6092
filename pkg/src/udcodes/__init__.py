"""Uniquely decodable codes with prescribed word lengths: decision
procedures, exact counts, witness constructions, and exhaustive
verification."""

from .words import (
    Alphabet,
    Code,
    CodeFileError,
    CodesError,
    LengthProfile,
    Word,
    WordParseError,
    as_profile,
    code_to_text,
    common_prefix_length,
    is_prefix,
    length_profile,
    parse_code_file,
    parse_word,
    reverse_code,
    reverse_word,
    word_to_text,
)
from .decide import (
    AmbiguityGraph,
    DelayReport,
    InfiniteWitness,
    SPTrace,
    ambiguity_graph,
    delay_analysis,
    factorize,
    has_finite_delay,
    is_prefix_code,
    sardinas_patterson,
)
from .kraft import (
    AnchoredFamily,
    ConstructionError,
    InfiniteDelayWitnessSpec,
    KraftTrace,
    anchored_prefix_code,
    canonical_prefix_code,
    count_anchored_prefix_codes,
    count_prefix_codes,
    infinite_delay_witness,
    is_feasible,
    kraft_sum,
    ud_nonprefix_witness,
)
from .census import (
    BoundReport,
    CodeCounts,
    closed_form_counts,
    count_233,
    count_all_a_then_b,
    count_pr_pair,
    fd_matches_ud_condition,
    is_fd_eq_ud,
    is_pr_eq_ud,
    theorem1_bound,
)
from .enumeration import (
    BUILTIN_SUITE,
    DEFAULT_UNIVERSE_CAP,
    CensusReport,
    Classification,
    ProbeResult,
    UniverseTooLarge,
    bounded_delay_probe,
    census,
    classify,
    enumerate_codes,
    safe_bound,
    two_factorization_search,
    universe_size,
    write_classification_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AmbiguityGraph",
    "AnchoredFamily",
    "BoundReport",
    "BUILTIN_SUITE",
    "CensusReport",
    "Classification",
    "Code",
    "CodeCounts",
    "CodeFileError",
    "CodesError",
    "ConstructionError",
    "DEFAULT_UNIVERSE_CAP",
    "DelayReport",
    "InfiniteDelayWitnessSpec",
    "InfiniteWitness",
    "KraftTrace",
    "LengthProfile",
    "ProbeResult",
    "SPTrace",
    "UniverseTooLarge",
    "Word",
    "WordParseError",
    "ambiguity_graph",
    "anchored_prefix_code",
    "as_profile",
    "bounded_delay_probe",
    "canonical_prefix_code",
    "census",
    "classify",
    "closed_form_counts",
    "code_to_text",
    "common_prefix_length",
    "count_233",
    "count_all_a_then_b",
    "count_anchored_prefix_codes",
    "count_pr_pair",
    "count_prefix_codes",
    "delay_analysis",
    "enumerate_codes",
    "factorize",
    "fd_matches_ud_condition",
    "has_finite_delay",
    "infinite_delay_witness",
    "is_fd_eq_ud",
    "is_feasible",
    "is_pr_eq_ud",
    "is_prefix",
    "is_prefix_code",
    "kraft_sum",
    "length_profile",
    "parse_code_file",
    "parse_word",
    "reverse_code",
    "reverse_word",
    "safe_bound",
    "sardinas_patterson",
    "theorem1_bound",
    "two_factorization_search",
    "ud_nonprefix_witness",
    "universe_size",
    "word_to_text",
    "write_classification_csv",
]
