"""Reflected binary Gray code traversal over subsets of {1, ..., n}.

State i of the code is i ^ (i >> 1); step i flips bit tz(i), the number of
trailing zero bits of i.  Consecutive states differ in exactly one bit, and
the popcount of state i has the parity of i, which is what lets a subset-sum
iteration carry the (-1)^|S| inclusion-exclusion sign as (-1)^(i & 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Direction(enum.Enum):
    """Whether the flipped row joins or leaves the current subset."""

    ENTER = "enter"
    LEAVE = "leave"


class TraversalExhausted(Exception):
    """Raised when advancing past the last Gray code state."""


@dataclass(frozen=True)
class GrayCursor:
    """Position in the traversal: step counter i and subset indicator x = gray(i)."""

    i: int = 0
    x: int = 0


def next_flip(i: int) -> int:
    """Bit flipped at step i, i.e. the number of trailing zeros of i (i >= 1)."""
    if i < 1:
        raise ValueError("step counter must be >= 1; step 0 flips nothing")
    return (i & -i).bit_length() - 1


def jump(i: int) -> int:
    """Random access: the subset indicator after i steps, gray(i) = i ^ (i >> 1)."""
    if i < 0:
        raise ValueError("step counter must be >= 0")
    return i ^ (i >> 1)


def advance(c: GrayCursor, n: int) -> tuple[int, Direction, GrayCursor]:
    """One Gray step: returns (flipped bit, enter/leave, updated cursor).

    ENTER means bit t was 0 before the flip (row t+1 joins the subset, so its
    vector is added); LEAVE means it was 1 (the row drops out, so subtract).
    Raises TraversalExhausted once all 2^n - 1 steps have been taken.
    """
    i = c.i + 1
    if i >= (1 << n):
        raise TraversalExhausted(f"all {(1 << n) - 1} steps taken for n={n}")
    t = next_flip(i)
    was_set = (c.x >> t) & 1
    direction = Direction.LEAVE if was_set else Direction.ENTER
    return t, direction, GrayCursor(i, c.x ^ (1 << t))
