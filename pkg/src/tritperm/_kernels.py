"""Compiled hot loops behind the permanent engines and the experiments.

Every kernel here has a pure-Python twin next to its caller (the twin is
the reference, the kernel is the fast path) and the test suite holds the
two in lockstep.  Kernels stay single-limb: subset indicators and packed
row planes live in one uint64, which caps them at n <= 62 rows; callers
fall back to the big-int twins above that.

All kernels release the GIL so a thread pool gets real parallelism.
"""

import numba as nb
import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)

_MIX_A = np.uint64(0xBF58476D1CE4E5B9)
_MIX_B = np.uint64(0x94D049BB133111EB)

_PC_33 = np.uint64(0x3333333333333333)
_PC_55 = np.uint64(0x5555555555555555)
_PC_0F = np.uint64(0x0F0F0F0F0F0F0F0F)
_PC_01 = np.uint64(0x0101010101010101)


@nb.njit(cache=True, inline="always")
def _mix64(z):
    z ^= z >> 30
    z *= _MIX_A
    z ^= z >> 27
    z *= _MIX_B
    z ^= z >> 31
    return z


@nb.njit(cache=True, inline="always")
def _popcount64(u):
    u = u - ((u >> 1) & _PC_55)
    u = (u & _PC_33) + ((u >> 2) & _PC_33)
    u = (u + (u >> 4)) & _PC_0F
    return (u * _PC_01) >> 56


@nb.njit(cache=True, inline="always")
def _trailing_zeros(i):
    t = 0
    while i & 1 == 0:
        i >>= 1
        t += 1
    return t


@nb.njit(cache=True, nogil=True)
def ryser_sum(a):
    """Signed subset-sum accumulation over centered entries, kept unpacked.

    Walks subsets in reflected-binary order, maintains the running column
    sums as plain integers, and reduces each column to a centered residue
    only when the subset product is taken.  Returns the raw signed sum;
    the caller applies the global sign and the final reduction.
    """
    n = a.shape[0]
    v = np.zeros(n, dtype=np.int64)
    x = np.uint64(0)
    s = 0
    for i in range(1, 1 << n):
        t = _trailing_zeros(i)
        bit = np.uint64(1) << np.uint64(t)
        if x & bit:
            x ^= bit
            for k in range(n):
                v[k] -= a[t, k]
        else:
            x ^= bit
            for k in range(n):
                v[k] += a[t, k]
        p = 1
        for k in range(n):
            r = v[k] % 3
            if r == 2:
                r = -1
            p *= r
        if i & 1:
            s -= p
        else:
            s += p
    return s


@nb.njit(cache=True, nogil=True)
def chunk_sum(mags, sgns, n, lo, hi):
    """Packed-plane partial sum over subset steps lo..hi-1 (1-based steps).

    Seeds the traversal at the reflected-binary code of lo-1, replays the
    single-bit flips, and counts +-1 only on full-magnitude steps.  The
    result is additive over adjacent step ranges, which is what makes the
    parallel engine's answer independent of how the range is split.
    """
    mask = (np.uint64(1) << np.uint64(n)) - np.uint64(1)
    g = np.uint64(lo - 1)
    x = g ^ (g >> 1)
    mag = np.uint64(0)
    sgn = np.uint64(0)
    for j in range(n):
        if (x >> np.uint64(j)) & np.uint64(1):
            m2 = mags[j]
            s2 = sgns[j]
            c = m2 & (mag ^ sgn ^ s2)
            mag, sgn = c | (mag ^ m2), c ^ sgn
    s = 0
    for i in range(lo, hi):
        t = _trailing_zeros(i)
        bit = np.uint64(1) << np.uint64(t)
        m2 = mags[t]
        s2 = sgns[t]
        if x & bit:
            c = mag & (sgn ^ s2)
            mag, sgn = c | (mag ^ m2), c ^ (m2 ^ s2)
        else:
            c = m2 & (mag ^ sgn ^ s2)
            mag, sgn = c | (mag ^ m2), c ^ sgn
        x ^= bit
        if mag == mask:
            if (np.int64(_popcount64(sgn)) + i) & 1:
                s -= 1
            else:
                s += 1
    return s


@nb.njit(cache=True, inline="always")
def _perm_centered(mags, sgns, n):
    """Centered permanent value of the packed matrix: one of -1, 0, 1."""
    mask = (np.uint64(1) << np.uint64(n)) - np.uint64(1)
    x = np.uint64(0)
    mag = np.uint64(0)
    sgn = np.uint64(0)
    s = 0
    for i in range(1, 1 << n):
        t = _trailing_zeros(i)
        bit = np.uint64(1) << np.uint64(t)
        m2 = mags[t]
        s2 = sgns[t]
        if x & bit:
            c = mag & (sgn ^ s2)
            mag, sgn = c | (mag ^ m2), c ^ (m2 ^ s2)
        else:
            c = m2 & (mag ^ sgn ^ s2)
            mag, sgn = c | (mag ^ m2), c ^ sgn
        x ^= bit
        if mag == mask:
            if (np.int64(_popcount64(sgn)) + i) & 1:
                s -= 1
            else:
                s += 1
    if n & 1:
        s = -s
    r = s % 3
    if r == 2:
        r = -1
    return r


@nb.njit(cache=True, nogil=True)
def exact_count_kernel(n):
    """Count permanent values over every length-n**2 trit matrix.

    Runs a base-3 odometer over the n*n entries (digit 2 means entry -1),
    patching the packed row planes one entry per tick, and evaluates the
    permanent of each matrix.  Returns (zeros, plus_ones, minus_ones).
    """
    nn = n * n
    digits = np.zeros(nn, dtype=np.int8)
    mags = np.zeros(n, dtype=np.uint64)
    sgns = np.zeros(n, dtype=np.uint64)
    total = 1
    for _ in range(nn):
        total *= 3
    zeros = 0
    plus = 0
    minus = 0
    for idx in range(total):
        p = _perm_centered(mags, sgns, n)
        if p == 0:
            zeros += 1
        elif p == 1:
            plus += 1
        else:
            minus += 1
        if idx + 1 == total:
            break
        k = 0
        while True:
            i = k // n
            bit = np.uint64(1) << np.uint64(n - 1 - k % n)
            d = digits[k] + 1
            if d == 3:
                digits[k] = 0
                mags[i] &= ~bit
                sgns[i] &= ~bit
                k += 1
            else:
                digits[k] = d
                if d == 1:
                    mags[i] |= bit
                else:
                    sgns[i] |= bit
                break
    return zeros, plus, minus


@nb.njit(cache=True, inline="always")
def _sample_packed(mags, sgns, n, seed, trial):
    """Fill the packed planes with one trial's uniform trit matrix.

    Each trial owns a private counter stream keyed by (seed, trial), so
    trial results do not depend on which worker draws them.  Entries come
    from 2-bit slices of the stream, low bits first, value 3 rejected.
    """
    state = _mix64(_mix64(seed) ^ (np.uint64(trial + 1) * GOLDEN))
    word = np.uint64(0)
    pairs = 0
    for i in range(n):
        mags[i] = np.uint64(0)
        sgns[i] = np.uint64(0)
    for k in range(n * n):
        while True:
            if pairs == 0:
                state += GOLDEN
                word = _mix64(state)
                pairs = 32
            v = word & np.uint64(3)
            word >>= 2
            pairs -= 1
            if v != np.uint64(3):
                break
        if v != np.uint64(0):
            i = k // n
            bit = np.uint64(1) << np.uint64(n - 1 - k % n)
            mags[i] |= bit
            if v == np.uint64(2):
                sgns[i] |= bit


@nb.njit(cache=True, nogil=True)
def mc_zero_count(n, t0, t1, seed):
    """Zero-permanent count over trials t0..t1-1 with per-trial streams."""
    mags = np.zeros(n, dtype=np.uint64)
    sgns = np.zeros(n, dtype=np.uint64)
    zeros = 0
    for trial in range(t0, t1):
        _sample_packed(mags, sgns, n, seed, trial)
        if _perm_centered(mags, sgns, n) == 0:
            zeros += 1
    return zeros


@nb.njit(cache=True, nogil=True)
def mc_sample_entries(n, trial, seed):
    """Centered entries of one trial's matrix, row-major (for auditing)."""
    mags = np.zeros(n, dtype=np.uint64)
    sgns = np.zeros(n, dtype=np.uint64)
    _sample_packed(mags, sgns, n, seed, trial)
    out = np.zeros(n * n, dtype=np.int8)
    for k in range(n * n):
        bit = np.uint64(1) << np.uint64(n - 1 - k % n)
        if mags[k // n] & bit:
            if sgns[k // n] & bit:
                out[k] = -1
            else:
                out[k] = 1
    return out
