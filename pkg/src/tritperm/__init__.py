"""Matrix permanents over GF(3) on packed trit planes.

A trit vector is stored as two bit planes (magnitude and sign), which
turns GF(3) vector arithmetic into a handful of word-wide Boolean
operations and makes the inclusion-exclusion permanent sum effectively
one machine operation per subset step.  On top of that sit exact and
Monte Carlo studies of how often the permanent vanishes, a benchmark
harness, and an exhaustive search for the minimal Boolean circuits
behind the packed arithmetic.
"""

from .circuit_search import (
    Circuit,
    PartialTruthTable,
    build_partial_table,
    core_formula_circuit,
    eval_circuit,
    render_circuit,
    search_min_circuit,
    verify_circuit,
)
from .core_f3 import (
    PackedF3Vec,
    add_reps,
    decode,
    div_reps,
    encode,
    is_full_magnitude,
    mul_reps,
    sign_parity,
    sub_reps,
)
from .experiments import (
    BenchResult,
    BenchRow,
    ExactCountResult,
    McResult,
    bench,
    exact_zero_count,
    montecarlo_zero,
    pi_matrix,
    sample_trial_matrix,
)
from .graycode import Direction, GrayCursor, TraversalExhausted, advance, jump, next_flip
from .permanent import (
    ChunkResult,
    MatrixF3,
    cmod3,
    perm_chunk,
    perm_mod3_fast,
    perm_mod3_parallel,
    perm_naive,
    perm_ryser_reference,
    resolve_jobs,
    split_steps,
)

__version__ = "0.1.0"

__all__ = [
    "BenchResult",
    "BenchRow",
    "ChunkResult",
    "Circuit",
    "Direction",
    "ExactCountResult",
    "GrayCursor",
    "MatrixF3",
    "McResult",
    "PackedF3Vec",
    "PartialTruthTable",
    "TraversalExhausted",
    "add_reps",
    "advance",
    "bench",
    "build_partial_table",
    "cmod3",
    "core_formula_circuit",
    "decode",
    "div_reps",
    "encode",
    "eval_circuit",
    "exact_zero_count",
    "is_full_magnitude",
    "jump",
    "montecarlo_zero",
    "mul_reps",
    "next_flip",
    "perm_chunk",
    "perm_mod3_fast",
    "perm_mod3_parallel",
    "perm_naive",
    "perm_ryser_reference",
    "pi_matrix",
    "render_circuit",
    "resolve_jobs",
    "sample_trial_matrix",
    "search_min_circuit",
    "sign_parity",
    "split_steps",
    "sub_reps",
    "verify_circuit",
]
