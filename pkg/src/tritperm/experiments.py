"""Distribution studies, Monte Carlo sampling, timing fits, and the
pi-digit matrix family.

Three experiment drivers live here:

* ``exact_zero_count``   enumerate every n-by-n trit matrix (n <= 4) and
                         count the permanent values exactly
* ``montecarlo_zero``    estimate the zero-permanent probability from
                         uniform random matrices, reproducibly
* ``bench``              wall-clock the engines across a range of n and
                         fit the growth-model constant

plus ``pi_matrix``, which builds test matrices from decimal digits of pi.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import sqrt
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels, rng
from .permanent import (
    MatrixF3,
    cmod3,
    perm_mod3_fast,
    perm_mod3_parallel,
    perm_naive,
    perm_ryser_reference,
    resolve_jobs,
)
from .pi_digits import PI_DIGITS, pi_digit

EXACT_MAX_N = 4

MC_MAX_N = 63


@dataclass(frozen=True)
class ExactCountResult:
    """Exact census of permanent values over all n-by-n trit matrices.

    ``z`` counts matrices with permanent 0; ``plus_ones`` and
    ``minus_ones`` split the rest by sign, which lets the negation
    symmetry (flip one row, flip the permanent) be checked directly.
    """

    n: int
    z: int
    plus_ones: int
    minus_ones: int
    total: int

    @property
    def ratio(self) -> float:
        """Fraction of matrices with zero permanent."""
        return self.z / self.total


@dataclass(frozen=True)
class McResult:
    """Tally of one Monte Carlo run; fixed (n, trials, seed) always
    reproduces the identical zero_count, whatever the worker count."""

    n: int
    trials: int
    zero_count: int
    seed: int

    @property
    def p_hat(self) -> float:
        """Estimated probability of a zero permanent."""
        return self.zero_count / self.trials

    @property
    def stderr(self) -> float:
        """Binomial standard error of p_hat."""
        p = self.p_hat
        return sqrt(p * (1.0 - p) / self.trials)


@dataclass(frozen=True)
class BenchRow:
    """Mean wall-clock seconds for one (method, n) cell."""

    n: int
    seconds: float
    reps: int


@dataclass(frozen=True)
class BenchResult:
    """Timings for one engine plus the least-squares growth constant.

    ``model`` names the cost shape the constant is fitted against:
    ``n * 2**n`` for the unpacked reference engine, ``2**n`` for the
    packed ones.  ``residuals`` aligns with ``rows`` (measured minus
    modeled seconds); ``rms_rel`` is the root-mean-square relative
    residual.  With reps=0 the rows are empty and no fit is made.
    """

    method: str
    model: str
    rows: Tuple[BenchRow, ...]
    fit_constant: Optional[float]
    residuals: Tuple[float, ...]
    rms_rel: Optional[float]


def exact_zero_count(n: int) -> ExactCountResult:
    """Census of permanent values over all 3**(n*n) trit matrices.

    Feasible only for n <= 4 (n=4 already walks ~4.3e7 matrices); larger
    n is refused because the enumeration grows as 3**(n*n) and n=5 asks
    for roughly 8.5e11 permanents.  For n <= 2 the census is recomputed
    with the permutation-expansion oracle and must agree.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > EXACT_MAX_N:
        raise ValueError(
            f"exact enumeration walks 3**(n*n) = 3**{n * n} matrices; "
            f"n <= {EXACT_MAX_N} only (n={n} is far beyond desk scale)"
        )
    zeros, plus, minus = map(int, _kernels.exact_count_kernel(n))
    if n <= 2:
        naive = [0, 0, 0]
        for flat in product((-1, 0, 1), repeat=n * n):
            m = MatrixF3([flat[i * n : (i + 1) * n] for i in range(n)])
            naive[perm_naive(m)] += 1
        if (naive[0], naive[1], naive[-1]) != (zeros, plus, minus):
            raise RuntimeError(
                f"enumeration self-check failed for n={n}: "
                f"fast census {(zeros, plus, minus)} vs oracle census "
                f"{(naive[0], naive[1], naive[-1])}"
            )
    return ExactCountResult(n=n, z=zeros, plus_ones=plus, minus_ones=minus, total=3 ** (n * n))


def _split_trials(trials: int, jobs: int) -> List[Tuple[int, int]]:
    edges = [(trials * k) // jobs for k in range(jobs + 1)]
    return [(edges[k], edges[k + 1]) for k in range(jobs)]


def sample_trial_matrix(n: int, trial: int, seed: int) -> MatrixF3:
    """The exact matrix that ``montecarlo_zero`` evaluates as `trial`.

    Built from the plain-integer sampler, so it doubles as an audit
    hook: recomputing any trial's permanent with any engine must
    reproduce that trial's contribution to the tally.
    """
    return MatrixF3(rng.sample_square(seed & rng.MASK64, trial, n))


def montecarlo_zero(n: int, trials: int, seed: int = 0, jobs=None) -> McResult:
    """Zero-permanent frequency over uniform random trit matrices.

    Trial t's matrix depends only on (seed, t), never on the worker
    layout, so the tally is bit-identical for every jobs value.  The
    compiled path covers n <= 62; n = 63 falls back to the big-int
    engine and is supported for contract completeness only.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MC_MAX_N:
        raise ValueError(f"montecarlo_zero is limited to n <= {MC_MAX_N}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    jobs = resolve_jobs(jobs)
    seed64 = seed & rng.MASK64
    if n > 62:
        zeros = 0
        for t in range(trials):
            if perm_mod3_fast(sample_trial_matrix(n, t, seed64)) == 0:
                zeros += 1
    elif jobs == 1:
        zeros = int(_kernels.mc_zero_count(n, 0, trials, np.uint64(seed64)))
    else:
        blocks = _split_trials(trials, jobs)
        _kernels.mc_zero_count(n, 0, 0, np.uint64(seed64))
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_kernels.mc_zero_count, n, t0, t1, np.uint64(seed64))
                for t0, t1 in blocks
            ]
            zeros = sum(int(f.result()) for f in futures)
    return McResult(n=n, trials=trials, zero_count=zeros, seed=seed64)


def pi_matrix(n: int, skip_integer_part: bool = False) -> MatrixF3:
    """n-by-n matrix of consecutive decimal digits of pi, reduced mod 3.

    Digits fill the matrix row by row starting from the leading "3"
    (so row one of n=3 comes from digits 3, 1, 4).  With
    ``skip_integer_part`` the count starts at the first fractional
    digit instead.  Only 10,000 digits are embedded, which caps n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    offset = 1 if skip_integer_part else 0
    need = n * n + offset
    if need > len(PI_DIGITS):
        raise ValueError(
            f"pi_matrix(n={n}) needs {need} digits but only {len(PI_DIGITS)} are embedded"
        )
    rows = [
        [cmod3(pi_digit(i * n + j + 1 + offset)) for j in range(n)]
        for i in range(n)
    ]
    return MatrixF3(rows)


_BENCH_ENGINES = {
    "reference": ("n * 2**n", lambda m, jobs: perm_ryser_reference(m)),
    "fast": ("2**n", lambda m, jobs: perm_mod3_fast(m)),
    "parallel": ("2**n", lambda m, jobs: perm_mod3_parallel(m, jobs)),
}


def _model_size(model: str, n: int) -> float:
    if model == "n * 2**n":
        return float(n) * float(2**n)
    return float(2**n)


def bench(
    methods: Sequence[str],
    n_min: int,
    n_max: int,
    reps: int = 3,
    step: int = 2,
    seed: int = 0,
    jobs=None,
) -> List[BenchResult]:
    """Wall-clock the engines on one random matrix per size.

    Runs one untimed warmup call per (method, n) and reports the mean
    of `reps` timed calls.  Each method's means are then least-squares
    fitted to its cost model (constant c minimizing the squared error
    of c * model(n)), with residuals reported next to the rows.
    reps=0 skips timing entirely and yields empty results.
    """
    if n_min < 1 or n_min > n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if step < 1:
        raise ValueError("step must be >= 1")
    if reps < 0:
        raise ValueError("reps must be >= 0")
    for method in methods:
        if method not in _BENCH_ENGINES:
            raise ValueError(f"unknown method {method!r}; choose from {sorted(_BENCH_ENGINES)}")
    sizes = list(range(n_min, n_max + 1, step))
    matrices = {n: MatrixF3(rng.sample_square(seed & rng.MASK64, n, n)) for n in sizes}
    results = []
    for method in methods:
        model, engine = _BENCH_ENGINES[method]
        rows: List[BenchRow] = []
        if reps > 0:
            for n in sizes:
                m = matrices[n]
                engine(m, jobs)
                elapsed = 0.0
                for _ in range(reps):
                    t0 = time.perf_counter()
                    engine(m, jobs)
                    elapsed += time.perf_counter() - t0
                rows.append(BenchRow(n=n, seconds=elapsed / reps, reps=reps))
        fit = None
        residuals: Tuple[float, ...] = ()
        rms_rel = None
        if rows:
            ms = [_model_size(model, r.n) for r in rows]
            ts = [r.seconds for r in rows]
            denom = sum(m * m for m in ms)
            fit = sum(t * m for t, m in zip(ts, ms)) / denom
            residuals = tuple(t - fit * m for t, m in zip(ts, ms))
            rel = [(t - fit * m) / t for t, m in zip(ts, ms) if t > 0]
            if rel:
                rms_rel = sqrt(sum(r * r for r in rel) / len(rel))
        results.append(
            BenchResult(
                method=method,
                model=model,
                rows=tuple(rows),
                fit_constant=fit,
                residuals=residuals,
                rms_rel=rms_rel,
            )
        )
    return results
