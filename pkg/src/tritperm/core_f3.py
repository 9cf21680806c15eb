"""Packed GF(3) vector arithmetic on magnitude/sign bit planes.

A length-n vector over {-1, 0, 1} is stored as a pair of n-bit masks: ``mag``
has a 1 wherever the element is nonzero, and ``sgn`` distinguishes -1 from 1.
Elementwise field operations on two packed vectors then reduce to a handful
of word-wide boolean operations (6 for add/sub, 2 for mul, 1 for div),
independent of n up to word granularity.

Zero has two admissible encodings per position: (mag=0, sgn=0) and
(mag=0, sgn=1).  ``encode`` always produces the canonical (0, 0) form, but
every operation accepts and may produce the alternate form; ``decode`` maps
both back to 0.

Bit layout: element j (1-based) of a length-n vector occupies bit n-j, so
element 1 is the most significant bit of the n-bit window and element n is
bit 0.  For example (1, 1, 0, -1) encodes as (mag=0xd, sgn=0x1).

Masks are held as arbitrary-width Python integers, so vectors are not capped
at machine-word length; ``mag_limbs``/``sgn_limbs`` expose the 64-bit limb
view used by the compiled permanent kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

TritVec = Tuple[int, ...]

LIMB_BITS = 64
_LIMB_MASK = (1 << LIMB_BITS) - 1


@dataclass(frozen=True)
class PackedF3Vec:
    """A length-n GF(3) vector packed into (mag, sgn) bit masks.

    Invariants: n >= 1 and both masks fit in n bits (no padding bits set
    above position n-1).  A sgn bit may be set where mag is clear; that
    position is an alternate encoding of zero.
    """

    n: int
    mag: int
    sgn: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vector length must be >= 1, got {self.n}")
        window = (1 << self.n) - 1
        if not 0 <= self.mag <= window:
            raise ValueError(f"mag has bits outside the {self.n}-bit window")
        if not 0 <= self.sgn <= window:
            raise ValueError(f"sgn has bits outside the {self.n}-bit window")

    @property
    def num_limbs(self) -> int:
        return (self.n + LIMB_BITS - 1) // LIMB_BITS

    def mag_limbs(self) -> Tuple[int, ...]:
        """mag as little-endian 64-bit limbs (limb 0 holds bits 0..63)."""
        return _to_limbs(self.mag, self.num_limbs)

    def sgn_limbs(self) -> Tuple[int, ...]:
        """sgn as little-endian 64-bit limbs."""
        return _to_limbs(self.sgn, self.num_limbs)

    @classmethod
    def from_limbs(cls, n: int, mag_limbs: Sequence[int], sgn_limbs: Sequence[int]) -> "PackedF3Vec":
        return cls(n, _from_limbs(mag_limbs), _from_limbs(sgn_limbs))


def _to_limbs(value: int, count: int) -> Tuple[int, ...]:
    return tuple((value >> (LIMB_BITS * i)) & _LIMB_MASK for i in range(count))


def _from_limbs(limbs: Sequence[int]) -> int:
    value = 0
    for i, limb in enumerate(limbs):
        value |= limb << (LIMB_BITS * i)
    return value


def encode(values: Sequence[int]) -> PackedF3Vec:
    """Pack a {-1, 0, 1} sequence into its canonical (mag, sgn) form.

    Element j (1-based) lands on bit n-j.  Raises ValueError on elements
    outside {-1, 0, 1} or an empty sequence.
    """
    n = len(values)
    if n == 0:
        raise ValueError("cannot encode an empty vector")
    mag = 0
    sgn = 0
    for k, v in enumerate(values):
        if v not in (-1, 0, 1):
            raise ValueError(f"element {k + 1} is {v!r}, expected -1, 0 or 1")
        if v != 0:
            bit = 1 << (n - 1 - k)
            mag |= bit
            if v == -1:
                sgn |= bit
    return PackedF3Vec(n, mag, sgn)


def decode(r: PackedF3Vec) -> TritVec:
    """Unpack to the {-1, 0, 1} tuple; both zero encodings decode to 0."""
    out = []
    for k in range(r.n):
        bit = r.n - 1 - k
        if (r.mag >> bit) & 1:
            out.append(-1 if (r.sgn >> bit) & 1 else 1)
        else:
            out.append(0)
    return tuple(out)


def _check_same_length(r1: PackedF3Vec, r2: PackedF3Vec) -> None:
    if r1.n != r2.n:
        raise ValueError(f"length mismatch: {r1.n} vs {r2.n}")


def add_reps(r1: PackedF3Vec, r2: PackedF3Vec) -> PackedF3Vec:
    """Elementwise GF(3) sum; 6 word operations per limb pair.

    The subterm mag2 & (mag1 ^ sgn1 ^ sgn2) is shared between the mag and
    sgn outputs.  Zero-result positions may come out in either zero form.
    """
    _check_same_length(r1, r2)
    x = r2.mag & (r1.mag ^ r1.sgn ^ r2.sgn)
    return PackedF3Vec(r1.n, x | (r1.mag ^ r2.mag), x ^ r1.sgn)


def sub_reps(r1: PackedF3Vec, r2: PackedF3Vec) -> PackedF3Vec:
    """Elementwise GF(3) difference; 6 word operations per limb pair."""
    _check_same_length(r1, r2)
    x = r1.mag & (r1.sgn ^ r2.sgn)
    return PackedF3Vec(r1.n, x | (r1.mag ^ r2.mag), x ^ (r2.mag ^ r2.sgn))


def mul_reps(r1: PackedF3Vec, r2: PackedF3Vec) -> PackedF3Vec:
    """Elementwise GF(3) product; 2 word operations per limb pair."""
    _check_same_length(r1, r2)
    return PackedF3Vec(r1.n, r1.mag & r2.mag, r1.sgn ^ r2.sgn)


def div_reps(r1: PackedF3Vec, r2: PackedF3Vec) -> PackedF3Vec:
    """Elementwise GF(3) quotient; 1 word operation per limb pair.

    Only positions where r2 is nonzero (its mag bit set) carry a defined
    quotient.  Positions dividing by zero produce unspecified trits rather
    than raising: a packed operation has no way to signal a single bad
    position.
    """
    _check_same_length(r1, r2)
    return PackedF3Vec(r1.n, r1.mag, r1.sgn ^ r2.sgn)


def is_full_magnitude(r: PackedF3Vec) -> bool:
    """True iff no element is zero (every mag bit in the window is set)."""
    return r.mag == (1 << r.n) - 1


def sign_parity(r: PackedF3Vec) -> int:
    """(-1) to the number of set sgn bits: the sign of the product of a
    full-magnitude vector's elements."""
    return -1 if r.sgn.bit_count() & 1 else 1
