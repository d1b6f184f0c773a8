"""Computable colorings, monochromatic-set search and decoders for
Hindman's theorem restricted to sums of bounded length."""

from .colorings import (
    ColorName,
    Coloring,
    color_label,
    constant_coloring,
    delta2_coloring,
    eval_color,
    four_coloring,
    parity_coloring,
    three_coloring,
)
from .decoders import (
    BSets,
    MembershipVerdict,
    decodable_limit,
    decode_delta2,
    decode_range_membership,
    decode_range_table,
    replay_verdict,
)
from .errors import (
    DecodeRangeError,
    DomainError,
    FormatError,
    HindmanError,
    PrivilegedAccessError,
    StructureError,
    UnsatisfiableError,
)
from .numerals import Decomposition, Gap, ResidueClass, decompose, pm_class, residue_class
from .solver import (
    MonoCertificate,
    SolutionCandidate,
    fs_bounded,
    is_chain,
    is_monochromatic,
    search_monochromatic,
    synthesize_delta2_solution,
    synthesize_power_solution,
    thin_chain,
    thin_first_digit,
)
from .stages import (
    EnumeratedFunction,
    GapVerdict,
    InstrumentedFunction,
    LimitApproximation,
    approx_eval,
    bounded_range_query,
    classify_gap,
    evaluate,
    is_fresh,
    limit_value,
    range_oracle,
    sg,
    stabilization_stage,
    vsg,
    witness_bound,
)

__version__ = "0.1.0"
