"""Counter-based trit sampling with independent per-trial streams.

The generator is a 64-bit mix function over an additive counter.  Trial
number t gets its own stream whose starting counter is derived from
(seed, t) alone, so any worker can produce trial t's matrix without
coordinating with the others; splitting a trial range across threads
cannot change what each trial draws.

Trits come from successive 2-bit slices of each output word, low bits
first.  Slice values 0, 1, 2 map to trits 0, 1, -1 and value 3 is
rejected, leaving the three trits exactly equally likely.  A matrix is
filled row by row.

This module is the plain-integer reference; the compiled sampler in
_kernels mirrors it bit for bit and the tests compare the two streams.
"""

from typing import List, Tuple

MASK64 = (1 << 64) - 1

GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Finalizing 64-bit mixer (the splitmix64 output function)."""
    z &= MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK64
    z ^= z >> 31
    return z


def trial_state(seed: int, trial: int) -> int:
    """Starting counter for one trial's private stream."""
    if trial < 0:
        raise ValueError("trial must be nonnegative")
    return mix64(mix64(seed) ^ (((trial + 1) * GOLDEN) & MASK64))


def next_word(state: int) -> Tuple[int, int]:
    """Advance the counter one step; returns (output word, new state)."""
    state = (state + GOLDEN) & MASK64
    return mix64(state), state


def sample_trits(seed: int, trial: int, count: int) -> Tuple[int, ...]:
    """First `count` trits of the (seed, trial) stream, each in {-1, 0, 1}."""
    state = trial_state(seed, trial)
    out: List[int] = []
    word = 0
    pairs = 0
    while len(out) < count:
        if pairs == 0:
            word, state = next_word(state)
            pairs = 32
        v = word & 3
        word >>= 2
        pairs -= 1
        if v == 3:
            continue
        out.append(-1 if v == 2 else v)
    return tuple(out)


def sample_square(seed: int, trial: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """One trial's uniform n-by-n trit matrix, rows in sampling order."""
    flat = sample_trits(seed, trial, n * n)
    return tuple(flat[i * n : (i + 1) * n] for i in range(n))
