"""oligoforge: design and screen DNA codewords that resist folding."""

from .seqcore import (
    BASES,
    COMPLEMENT,
    BinaryImage,
    DnaSequence,
    SequenceParseError,
    binary_image,
    complement,
    complement_sequence,
    decode_binary_image,
    gc_content,
    hamming_distance,
    mu,
    read_sequence_file,
    sequence_from_even_odd,
    shift_profile,
    wc_distance,
    wc_distance_via_binary,
    write_sequence_file,
)
from .folding import (
    DEFAULT_ENERGY_PARAMS,
    DEFAULT_LINEAR_MODEL,
    DEFAULT_STRUCTURE_THRESHOLD,
    EnergyParams,
    EnergyTable,
    LinearEnergyModel,
    SecondaryStructure,
    dot_bracket,
    format_table_csv,
    format_table_text,
    has_structure,
    linear_energy,
    min_free_energy,
    nussinov_table,
    traceback,
)
from .enumeration import (
    BivariateSeries,
    CountTable,
    GrowthAnalysis,
    OracleCapError,
    complement_free_predicate,
    count_brute_force,
    count_mu1,
    dominant_root,
    g_boundary,
    g_recursive,
    g_series,
    gj_coefficients,
    growth_check,
    iter_sequences,
    mu1_equals_predicate,
    mu_zero_predicate,
    psi,
)
from .codegen import (
    CodeProperties,
    DnaCode,
    SimplexCode,
    SimplexCodeError,
    VerificationReport,
    build_dna_code,
    code_properties,
    default_generator,
    load_dna_code,
    simplex_code,
    verify_code,
)

__version__ = "0.1.0"
