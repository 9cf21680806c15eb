"""Permanent engines for square matrices over GF(3).

The matrix lives in two forms at once: centered integer rows (entries
-1, 0, 1) for the plain engines, and packed magnitude/sign planes for
the bitsliced ones.  All engines agree on the returned value, which is
always centered: one of -1, 0, 1.

Engines, slowest to fastest:

* ``perm_naive``       permutation expansion, for tiny n only
* ``perm_ryser_reference``  subset-sum inclusion-exclusion with plain
                       integer column sums; the semantic baseline the
                       packed engines are audited against
* ``perm_mod3_fast``   packed planes, whole traversal in one call
* ``perm_mod3_parallel``    packed planes, traversal split across a
                       thread pool; exact same answer for any split

``perm_chunk`` exposes the unit of work behind the parallel engine: the
partial sum over a half-open range of traversal steps.  Partial sums of
adjacent ranges add, so any partition of the full range reassembles the
single-call answer exactly.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from . import _kernels
from .core_f3 import (
    PackedF3Vec,
    add_reps,
    encode,
    is_full_magnitude,
    sign_parity,
    sub_reps,
)
from .graycode import Direction, GrayCursor, advance, jump

# Widest matrix whose subset indicator and packed row planes fit one
# 64-bit word; beyond this the engines switch to big-int arithmetic.
SINGLE_LIMB_MAX_N = 62

NAIVE_MAX_N = 9

ENV_THREADS = "TRITPERM_THREADS"


def cmod3(k: int) -> int:
    """Centered residue of k modulo 3: one of -1, 0, 1."""
    r = k % 3
    return -1 if r == 2 else r


class MatrixF3:
    """Square matrix over GF(3), normalized to centered entries.

    Accepts any integer entries and reduces them mod 3, so rows given
    over {0, 1, 2} and over {-1, 0, 1} describe the same matrix.  Rows
    are also kept packed (one magnitude and one sign plane per row) for
    the bitsliced engines.
    """

    __slots__ = ("n", "rows", "packed_rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        centered = tuple(tuple(cmod3(int(v)) for v in row) for row in rows)
        n = len(centered)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in centered:
            if len(row) != n:
                raise ValueError(f"matrix must be square, got a row of length {len(row)} for n={n}")
        self.n = n
        self.rows = centered
        self.packed_rows: Tuple[PackedF3Vec, ...] = tuple(encode(row) for row in centered)

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixF3) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"MatrixF3({list(map(list, self.rows))!r})"

    def to_numpy(self) -> np.ndarray:
        """Centered entries as an int64 array (for the reference kernel)."""
        return np.array(self.rows, dtype=np.int64)

    def planes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Per-row magnitude and sign planes as uint64 arrays."""
        if self.n > SINGLE_LIMB_MAX_N:
            raise ValueError(f"packed planes only fit uint64 for n <= {SINGLE_LIMB_MAX_N}")
        mags = np.array([r.mag for r in self.packed_rows], dtype=np.uint64)
        sgns = np.array([r.sgn for r in self.packed_rows], dtype=np.uint64)
        return mags, sgns


@dataclass(frozen=True)
class ChunkResult:
    """Partial sum over traversal steps lo..hi-1 (half-open, 1-based)."""

    lo: int
    hi: int
    partial_sum: int


def _as_matrix(m) -> MatrixF3:
    return m if isinstance(m, MatrixF3) else MatrixF3(m)


def _finalize(n: int, s: int) -> int:
    if n & 1:
        s = -s
    return cmod3(s)


def perm_naive(m) -> int:
    """Permanent mod 3 by direct permutation expansion.

    Exponential-factorial cost; refuses n > 9.  Exists purely as the
    independent oracle for everything else.
    """
    m = _as_matrix(m)
    if m.n > NAIVE_MAX_N:
        raise ValueError(f"perm_naive is limited to n <= {NAIVE_MAX_N}")
    total = 0
    for sigma in permutations(range(m.n)):
        p = 1
        for i, j in enumerate(sigma):
            p *= m.rows[i][j]
            if p == 0:
                break
        total += p
    return cmod3(total)


def perm_ryser_reference(m) -> int:
    """Permanent mod 3 by subset-sum inclusion-exclusion, unpacked.

    Maintains plain integer column sums over a reflected-binary subset
    walk and multiplies centered residues column by column on every
    step.  Does the same traversal as the packed engines but none of
    the bit-plane tricks, which is what makes it a fair baseline.
    """
    m = _as_matrix(m)
    if m.n > SINGLE_LIMB_MAX_N:
        raise ValueError(f"perm_ryser_reference is limited to n <= {SINGLE_LIMB_MAX_N}")
    s = int(_kernels.ryser_sum(m.to_numpy()))
    return _finalize(m.n, s)


def _chunk_sum_pure(packed_rows: Sequence[PackedF3Vec], n: int, lo: int, hi: int) -> int:
    """Big-int twin of the compiled chunk kernel, built from the public
    packed operations and the traversal helpers.  Works for any n; the
    kernel is required to match it wherever both apply.
    """
    cursor = GrayCursor(i=lo - 1, x=jump(lo - 1))
    acc = encode([0] * n)
    x = cursor.x
    for j in range(n):
        if (x >> j) & 1:
            acc = add_reps(acc, packed_rows[j])
    s = 0
    while cursor.i + 1 < hi:
        t, direction, cursor = advance(cursor, n)
        if direction is Direction.LEAVE:
            acc = sub_reps(acc, packed_rows[t])
        else:
            acc = add_reps(acc, packed_rows[t])
        if is_full_magnitude(acc):
            term = sign_parity(acc)
            s += -term if cursor.i & 1 else term
    return s


def perm_chunk(m, lo: int, hi: int) -> ChunkResult:
    """Partial sum of the packed traversal over steps lo..hi-1.

    Steps are 1-based and the range is half-open, so the full job is
    (1, 2**n).  Results over adjacent ranges are additive; feed the
    grand total through the same finalization as ``perm_mod3_fast``.
    """
    m = _as_matrix(m)
    last = 1 << m.n
    if not 1 <= lo <= hi <= last:
        raise ValueError(f"need 1 <= lo <= hi <= 2**n, got lo={lo} hi={hi} n={m.n}")
    if m.n <= SINGLE_LIMB_MAX_N:
        mags, sgns = m.planes()
        s = int(_kernels.chunk_sum(mags, sgns, m.n, lo, hi))
    else:
        s = _chunk_sum_pure(m.packed_rows, m.n, lo, hi)
    return ChunkResult(lo=lo, hi=hi, partial_sum=s)


def perm_mod3_fast(m) -> int:
    """Permanent mod 3 over packed planes, single-threaded."""
    m = _as_matrix(m)
    res = perm_chunk(m, 1, 1 << m.n)
    return _finalize(m.n, res.partial_sum)


def resolve_jobs(jobs=None) -> int:
    """Worker count: explicit argument, else TRITPERM_THREADS, else CPUs."""
    if jobs is None:
        env = os.environ.get(ENV_THREADS)
        if env is not None:
            jobs = int(env)
        else:
            jobs = os.cpu_count() or 1
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs


def split_steps(n: int, jobs: int) -> List[Tuple[int, int]]:
    """Partition traversal steps 1..2**n-1 into `jobs` contiguous ranges.

    The split depends only on (n, jobs), and empty ranges are kept so
    the result always has exactly `jobs` entries.
    """
    total = (1 << n) - 1
    edges = [1 + (total * k) // jobs for k in range(jobs + 1)]
    return [(edges[k], edges[k + 1]) for k in range(jobs)]


def perm_mod3_parallel(m, jobs=None) -> int:
    """Permanent mod 3 with the traversal split across a thread pool.

    Every chunk's partial sum is an exact integer and addition is the
    only combination step, so the answer is identical for every jobs
    value, including 1.
    """
    m = _as_matrix(m)
    jobs = resolve_jobs(jobs)
    ranges = split_steps(m.n, jobs)
    if jobs == 1 or m.n > SINGLE_LIMB_MAX_N:
        partials = [perm_chunk(m, lo, hi).partial_sum for lo, hi in ranges]
    else:
        # Touch the kernel once so compilation happens before the pool
        # fans out; compiled code then runs with the GIL released.
        mags, sgns = m.planes()
        _kernels.chunk_sum(mags, sgns, m.n, 1, 1)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_kernels.chunk_sum, mags, sgns, m.n, lo, hi)
                for lo, hi in ranges
            ]
            partials = [int(f.result()) for f in futures]
    return _finalize(m.n, sum(partials))
