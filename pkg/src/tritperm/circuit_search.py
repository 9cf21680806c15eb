"""Exhaustive search for minimal {and, or, xor} circuits computing the
packed trit operations, exploiting the freedom left by the dual zero
encoding.

Truth tables are 16-bit integers over the four packed input bits.  Row
k of a table assigns mag1 = bit 0 of k, sgn1 = bit 1, mag2 = bit 2,
sgn2 = bit 3, and bit k of the table is the output on that row.  A row
whose result trit is zero leaves the output sign bit free (either zero
encoding is acceptable), so search targets are partial tables: a care
mask plus the required values on cared rows.

The search enumerates straight-line programs in a canonical form only
(no duplicate node function, commutative operands in increasing index
order, runs of independent adjacent gates in increasing encoding, a
budget on gates that can still become useful, and a final gate that
must realize a still-unrealized output).  Every circuit is reachable
from some canonical representative of the same size, so deepening the
gate budget one level at a time makes the first hit minimal and an
exhausted level a proof that no circuit of that size exists.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .permanent import cmod3

INPUT_NAMES = ("mag1", "sgn1", "mag2", "sgn2")

OPS = ("and", "or", "xor")

_OP_SYMBOL = {"and": "&", "or": "|", "xor": "^"}

ROWS = 16

TABLE_MASK = (1 << ROWS) - 1

MAX_SEARCH_GATES = 8

Gate = Tuple[str, int, int]


@dataclass(frozen=True)
class PartialTruthTable:
    """Target for the circuit search: two partially specified outputs.

    ``*_value`` bits are meaningful only where the matching ``*_care``
    bit is set; every other row may come out either way.
    """

    name: str
    mag_value: int
    mag_care: int
    sgn_value: int
    sgn_care: int

    def __post_init__(self):
        for field in ("mag_value", "mag_care", "sgn_value", "sgn_care"):
            v = getattr(self, field)
            if not 0 <= v <= TABLE_MASK:
                raise ValueError(f"{field} must be a 16-bit table, got {v}")
        if self.mag_value & ~self.mag_care or self.sgn_value & ~self.sgn_care:
            raise ValueError("value bits set outside the care mask")

    def mag_matches(self, table: int) -> bool:
        return (table ^ self.mag_value) & self.mag_care == 0

    def sgn_matches(self, table: int) -> bool:
        return (table ^ self.sgn_value) & self.sgn_care == 0


@dataclass(frozen=True)
class Circuit:
    """Straight-line program over the four packed input bits.

    Gate g may reference inputs 0..3 and gates 0..g-1 (as node indices
    4+i); the two outputs may reference any node, inputs included, so
    an output that is just a wire costs no gates.
    """

    gates: Tuple[Gate, ...]
    out_mag: int
    out_sgn: int

    def __post_init__(self):
        for g, (op, a, b) in enumerate(self.gates):
            if op not in OPS:
                raise ValueError(f"gate {g}: unknown op {op!r}")
            limit = 4 + g
            if not (0 <= a < limit and 0 <= b < limit):
                raise ValueError(f"gate {g}: operand out of range: {(op, a, b)}")
        limit = 4 + len(self.gates)
        if not (0 <= self.out_mag < limit and 0 <= self.out_sgn < limit):
            raise ValueError("output index out of range")

    @property
    def gate_count(self) -> int:
        return len(self.gates)


def _input_tables() -> Tuple[int, ...]:
    return tuple(
        sum(1 << k for k in range(ROWS) if (k >> v) & 1) for v in range(4)
    )


def _apply(op: str, ta: int, tb: int) -> int:
    if op == "and":
        return ta & tb
    if op == "or":
        return ta | tb
    return ta ^ tb


def eval_circuit(c: Circuit) -> Tuple[int, int]:
    """Truth tables of the circuit's two outputs over all 16 rows."""
    nodes = list(_input_tables())
    for op, a, b in c.gates:
        nodes.append(_apply(op, nodes[a], nodes[b]))
    return nodes[c.out_mag], nodes[c.out_sgn]


def render_circuit(c: Circuit) -> str:
    """Readable straight-line listing, one gate per line."""

    def name(idx: int) -> str:
        return INPUT_NAMES[idx] if idx < 4 else f"t{idx - 4}"

    lines = [
        f"t{g} = {name(a)} {_OP_SYMBOL[op]} {name(b)}"
        for g, (op, a, b) in enumerate(c.gates)
    ]
    lines.append(f"mag <- {name(c.out_mag)}")
    lines.append(f"sgn <- {name(c.out_sgn)}")
    return "\n".join(lines)


def _psi(mag: int, sgn: int) -> int:
    """Trit denoted by a packed bit pair; both zero encodings map to 0."""
    if mag == 0:
        return 0
    return -1 if sgn else 1


def build_partial_table(op: str) -> PartialTruthTable:
    """Partial truth table of one packed trit operation.

    Magnitude outputs are fully specified (whether a result is zero is
    never free); sign outputs are don't-care exactly on zero results.
    For div, rows with a zero denominator are entirely don't-care: the
    packed engines never evaluate them.
    """
    if op not in ("add", "sub", "mul", "div"):
        raise ValueError(f"op must be add/sub/mul/div, got {op!r}")
    mag_value = mag_care = sgn_value = sgn_care = 0
    for k in range(ROWS):
        x = _psi(k & 1, (k >> 1) & 1)
        y = _psi((k >> 2) & 1, (k >> 3) & 1)
        if op == "add":
            r = cmod3(x + y)
        elif op == "sub":
            r = cmod3(x - y)
        elif op == "mul":
            r = cmod3(x * y)
        else:
            if y == 0:
                continue
            # over GF(3) the nonzero elements are their own inverses,
            # so x / y = x * y
            r = cmod3(x * y)
        bit = 1 << k
        mag_care |= bit
        if r != 0:
            mag_value |= bit
            sgn_care |= bit
            if r == -1:
                sgn_value |= bit
    return PartialTruthTable(
        name=op,
        mag_value=mag_value,
        mag_care=mag_care,
        sgn_value=sgn_value,
        sgn_care=sgn_care,
    )


def verify_circuit(c: Circuit, t: PartialTruthTable) -> bool:
    """True iff the circuit meets every specified entry of the table."""
    mag_table, sgn_table = eval_circuit(c)
    return t.mag_matches(mag_table) and t.sgn_matches(sgn_table)


def _search_exact(t: PartialTruthTable, k: int) -> Optional[Circuit]:
    """Find some canonical k-gate circuit for t, or None.

    Beyond the canonical-form restrictions, the walk tracks how many
    nodes already realize each output.  An output with no realizer yet
    needs a dedicated future gate (two distinct gates when the two
    outputs admit no common table), so a branch dies as soon as the
    gate budget drops below that demand, and once the budget exactly
    meets it every further gate must realize a missing output.
    """
    vm, cm = t.mag_value, t.mag_care
    vs, cs = t.sgn_value, t.sgn_care
    # can one table serve both outputs?
    compatible = (vm ^ vs) & cm & cs == 0
    nodes = list(_input_tables())
    node_set = set(nodes)
    gates_enc: list = []  # (op << 10) | (a << 5) | b
    refcnt: list = []
    mag_hits0 = sum(1 for x in nodes if (x ^ vm) & cm == 0)
    sgn_hits0 = sum(1 for x in nodes if (x ^ vs) & cs == 0)

    def finish() -> Optional[Circuit]:
        mi = si = None
        for idx, table in enumerate(nodes):
            if mi is None and (table ^ vm) & cm == 0:
                mi = idx
            if si is None and (table ^ vs) & cs == 0:
                si = idx
        if mi is None or si is None:
            return None
        gates = tuple(
            (OPS[enc >> 10], (enc >> 5) & 31, enc & 31) for enc in gates_enc
        )
        return Circuit(gates=gates, out_mag=mi, out_sgn=si)

    def dfs(placed: int, unused: int, mag_hits: int, sgn_hits: int) -> Optional[Circuit]:
        remaining = k - placed
        if remaining == 0:
            return finish()
        if mag_hits == 0 and sgn_hits == 0:
            needed = 1 if compatible else 2
        elif mag_hits == 0 or sgn_hits == 0:
            needed = 1
        else:
            needed = 0
        if remaining < needed:
            return None
        must_match = needed > 0 and remaining == needed
        both_needed = must_match and mag_hits == 0 and sgn_hits == 0 and compatible
        budget = remaining + 1
        prev_enc = gates_enc[-1] if gates_enc else -1
        prev_idx = 3 + placed
        size = len(nodes)
        for b in range(1, size):
            tb = nodes[b]
            for a in range(b):
                ta = nodes[a]
                indep = prev_enc >= 0 and a != prev_idx and b != prev_idx
                base = (a << 5) | b
                for op in (0, 1, 2):
                    if indep and (op << 10) | base <= prev_enc:
                        continue
                    if op == 0:
                        table = ta & tb
                    elif op == 1:
                        table = ta | tb
                    else:
                        table = ta ^ tb
                    if table in node_set:
                        continue
                    m_match = (table ^ vm) & cm == 0
                    s_match = (table ^ vs) & cs == 0
                    if must_match:
                        if both_needed:
                            if not (m_match and s_match):
                                continue
                        elif not (
                            (mag_hits == 0 and m_match)
                            or (sgn_hits == 0 and s_match)
                        ):
                            continue
                    delta = 1
                    if a >= 4 and refcnt[a - 4] == 0:
                        delta -= 1
                    if b >= 4 and refcnt[b - 4] == 0:
                        delta -= 1
                    if unused + delta > budget:
                        continue
                    gates_enc.append((op << 10) | base)
                    nodes.append(table)
                    node_set.add(table)
                    if a >= 4:
                        refcnt[a - 4] += 1
                    if b >= 4:
                        refcnt[b - 4] += 1
                    refcnt.append(0)
                    found = dfs(
                        placed + 1,
                        unused + delta,
                        mag_hits + (1 if m_match else 0),
                        sgn_hits + (1 if s_match else 0),
                    )
                    refcnt.pop()
                    if a >= 4:
                        refcnt[a - 4] -= 1
                    if b >= 4:
                        refcnt[b - 4] -= 1
                    node_set.discard(table)
                    nodes.pop()
                    gates_enc.pop()
                    if found is not None:
                        return found
        return None

    if k == 0:
        return finish()
    return dfs(0, 0, mag_hits0, sgn_hits0)


def search_min_circuit(t: PartialTruthTable, max_gates: int = MAX_SEARCH_GATES) -> Optional[Circuit]:
    """Smallest circuit meeting the table, or None within the budget.

    Deepens the exact gate count from 0 to max_gates, so the returned
    circuit is minimal and a None means the whole space up to the
    budget was exhausted.  Ties are broken by enumeration order.
    """
    if not 0 <= max_gates <= MAX_SEARCH_GATES:
        raise ValueError(f"max_gates must be in 0..{MAX_SEARCH_GATES}, got {max_gates}")
    for k in range(max_gates + 1):
        found = _search_exact(t, k)
        if found is not None:
            return found
    return None


def core_formula_circuit(op: str) -> Circuit:
    """Circuit form of the word-level formulas used by the packed
    arithmetic in core_f3 (shared subterm included), for conformance
    checks against the searched minima."""
    if op == "add":
        return Circuit(
            gates=(
                ("xor", 0, 1),  # mag1 ^ sgn1
                ("xor", 4, 3),  # ... ^ sgn2
                ("and", 2, 5),  # c = mag2 & (mag1 ^ sgn1 ^ sgn2)
                ("xor", 0, 2),  # mag1 ^ mag2
                ("or", 6, 7),   # mag out
                ("xor", 6, 1),  # sgn out = c ^ sgn1
            ),
            out_mag=8,
            out_sgn=9,
        )
    if op == "sub":
        return Circuit(
            gates=(
                ("xor", 1, 3),  # sgn1 ^ sgn2
                ("and", 0, 4),  # d = mag1 & (sgn1 ^ sgn2)
                ("xor", 0, 2),  # mag1 ^ mag2
                ("or", 5, 6),   # mag out
                ("xor", 2, 3),  # mag2 ^ sgn2
                ("xor", 5, 8),  # sgn out = d ^ (mag2 ^ sgn2)
            ),
            out_mag=7,
            out_sgn=9,
        )
    if op == "mul":
        return Circuit(
            gates=(
                ("and", 0, 2),  # mag out
                ("xor", 1, 3),  # sgn out
            ),
            out_mag=4,
            out_sgn=5,
        )
    if op == "div":
        return Circuit(
            gates=(("xor", 1, 3),),  # sgn out; mag out is the wire mag1
            out_mag=0,
            out_sgn=4,
        )
    raise ValueError(f"op must be add/sub/mul/div, got {op!r}")
