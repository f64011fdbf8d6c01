"""Björck CAZAC sequences, their ambiguity functions, and sidelobe bounds.

Library layout:

* numtheory     -- primality, Legendre symbols, inverses, per-prime context
* sequences     -- Björck / chirp construction, CAZAC and DFT-flatness checks
* transform     -- prime-length DFTs (naive + Bluestein) and ambiguity evaluation
* expsums       -- Kloosterman / Gauss sums, character-sum identities, Weil audit
* decomposition -- character split of the Björck ambiguity and the proven bounds
* scan          -- parallel prime-range sweeps with deterministic CSV/JSONL output
* cli           -- the `cazac` command-line front end
"""

from .decomposition import (
    ErrorTerms,
    MixCoefficients,
    RealboundCheck,
    error_terms,
    mbound,
    mix_coefficients,
    realbound,
    reconstruct_ambiguity,
    reconstruction_residual,
)
from .expsums import (
    KloostermanValue,
    WeilAudit,
    char_ambiguity,
    gauss_sum,
    jacobsthal_count,
    kloosterman,
    salie_form,
    weil_audit,
)
from .numtheory import (
    NotOddPrimeError,
    PrimeContext,
    ResidueClass,
    is_prime,
    legendre,
    mod_inverse,
    quadratic_residues,
)
from .scan import (
    BoundViolationError,
    ScanRecord,
    figure_csv,
    figure_data,
    find_exceedances,
    primes_in_range,
    scan_csv,
    scan_jsonl,
    scan_range,
)
from .sequences import (
    BjorckAngles,
    CazacReport,
    DegenerateChirpError,
    UnimodularSequence,
    autocorrelation,
    bjorck,
    bjorck_angles,
    chirp,
    sequence_from_text,
    sequence_to_text,
    verify_biunimodular,
    verify_cazac,
)
from .transform import (
    AmbiguityMax,
    AmbiguityRow,
    TableTooLargeError,
    ambiguity_max,
    ambiguity_row,
    ambiguity_table,
    ambiguity_table_csv,
    dft,
    dft_naive,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityMax",
    "AmbiguityRow",
    "BjorckAngles",
    "BoundViolationError",
    "CazacReport",
    "DegenerateChirpError",
    "ErrorTerms",
    "KloostermanValue",
    "MixCoefficients",
    "NotOddPrimeError",
    "PrimeContext",
    "RealboundCheck",
    "ResidueClass",
    "ScanRecord",
    "TableTooLargeError",
    "UnimodularSequence",
    "WeilAudit",
    "ambiguity_max",
    "ambiguity_row",
    "ambiguity_table",
    "ambiguity_table_csv",
    "autocorrelation",
    "bjorck",
    "bjorck_angles",
    "char_ambiguity",
    "chirp",
    "dft",
    "dft_naive",
    "error_terms",
    "figure_csv",
    "figure_data",
    "find_exceedances",
    "gauss_sum",
    "is_prime",
    "jacobsthal_count",
    "kloosterman",
    "legendre",
    "mbound",
    "mix_coefficients",
    "mod_inverse",
    "primes_in_range",
    "quadratic_residues",
    "realbound",
    "reconstruct_ambiguity",
    "reconstruction_residual",
    "salie_form",
    "scan_csv",
    "scan_jsonl",
    "scan_range",
    "sequence_from_text",
    "sequence_to_text",
    "verify_biunimodular",
    "verify_cazac",
    "weil_audit",
]
