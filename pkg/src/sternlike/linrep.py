"""Linear representations of Stern-like sequences.

For any spec there are integers A(e, r), B(e, r), 0 <= r <= 2^e, with

    v(2^e * n + r) = A(e, r) * v(n) + B(e, r) * v(n+1)      for n >= n0.

The coefficients satisfy A(0,0)=1, B(0,0)=0, A(0,1)=0, B(0,1)=1 and double
level by level:

    A(e+1, 2r)   = a * A(e, r)          B(e+1, 2r)   = a * B(e, r)
    A(e+1, 2r+1) = b * A(e, r) + c * A(e, r+1)
    B(e+1, 2r+1) = b * B(e, r) + c * B(e, r+1)

Equivalently, the pair state (v(k), v(k+1)) is advanced along the binary
digits of the index by two fixed 2x2 integer matrices, which makes any term
computable in O(log n) exact matrix steps and exhibits the sequence as
2-regular.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, RangeError, SingularSystemError
from .recurrence import SternLikeSpec, evaluator

__all__ = [
    "CoeffTable",
    "MatrixPair",
    "LinearRepresentation",
    "coeff_table",
    "coeff_at",
    "coeffs",
    "transition_matrices",
    "eval_fast",
    "recover_coefficients",
    "linear_representation",
]

Row = tuple[int, ...]

# Coefficient rows per spec, grown on demand; row e has 2^e + 1 entries.
_LEVELS: dict[SternLikeSpec, list[tuple[Row, Row]]] = {}


def _levels(spec: SternLikeSpec, e_max: int) -> list[tuple[Row, Row]]:
    rows = _LEVELS.setdefault(spec, [((1, 0), (0, 1))])
    a, b, c = spec.a, spec.b, spec.c
    while len(rows) <= e_max:
        prev_a, prev_b = rows[-1]
        size = 2 * (len(prev_a) - 1) + 1
        next_a, next_b = [0] * size, [0] * size
        for r in range(len(prev_a)):
            next_a[2 * r] = a * prev_a[r]
            next_b[2 * r] = a * prev_b[r]
            if 2 * r + 1 < size:
                next_a[2 * r + 1] = b * prev_a[r] + c * prev_a[r + 1]
                next_b[2 * r + 1] = b * prev_b[r] + c * prev_b[r + 1]
        rows.append((tuple(next_a), tuple(next_b)))
    return rows


def coeff_at(spec: SternLikeSpec, e: int, r: int) -> tuple[int, int]:
    """(A(e, r), B(e, r)) computed on demand (rows are cached per spec)."""
    if e < 0:
        raise RangeError(f"e must be >= 0, got {e}")
    row_a, row_b = _levels(spec, e)[e]
    if not 0 <= r < len(row_a):
        raise RangeError(f"r must lie in [0, 2^{e}], got {r}")
    return row_a[r], row_b[r]


@dataclass(frozen=True)
class CoeffTable:
    """Materialized coefficient rows A(e, .), B(e, .) for e = 0..e_max."""

    spec: SternLikeSpec
    e_max: int
    A: tuple[Row, ...]
    B: tuple[Row, ...]


def coeff_table(spec: SternLikeSpec, e_max: int) -> CoeffTable:
    if e_max < 0:
        raise RangeError(f"e_max must be >= 0, got {e_max}")
    rows = _levels(spec, e_max)
    return CoeffTable(
        spec,
        e_max,
        tuple(rows[e][0] for e in range(e_max + 1)),
        tuple(rows[e][1] for e in range(e_max + 1)),
    )


def coeffs(table: CoeffTable, e: int, r: int) -> tuple[int, int]:
    """Table lookup; RangeError outside e <= e_max, 0 <= r <= 2^e."""
    if not 0 <= e <= table.e_max:
        raise RangeError(f"e must lie in [0, {table.e_max}], got {e}")
    if not 0 <= r < len(table.A[e]):
        raise RangeError(f"r must lie in [0, 2^{e}], got {r}")
    return table.A[e][r], table.B[e][r]


Matrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class MatrixPair:
    """Digit matrices acting on the column state (v(k), v(k+1)).

    m0 maps it to (v(2k), v(2k+1)); m1 maps it to (v(2k+1), v(2k+2)).
    """

    m0: Matrix
    m1: Matrix


def transition_matrices(spec: SternLikeSpec) -> MatrixPair:
    a, b, c = spec.a, spec.b, spec.c
    return MatrixPair(((a, 0), (b, c)), ((b, c), (0, a)))


def eval_fast(spec: SternLikeSpec, n: int) -> int:
    """v(n) in O(log n): peel bits down to a base index, then replay.

    Bits are peeled least-significant first until the running index is at
    most 2*n_eff; the state pair there is seeded from the direct evaluator
    and the recorded bits are replayed most-significant first.  The cutoff
    keeps every replayed index >= n0, where the recurrence is valid.
    """
    if n < 0:
        raise DomainError(f"sequence index must be >= 0, got {n}")
    value = evaluator(spec)
    cutoff = 2 * spec.n_eff
    m = n
    bits: list[int] = []
    while m > cutoff:
        bits.append(m & 1)
        m >>= 1
    x, y = value(m), value(m + 1)
    a, b, c = spec.a, spec.b, spec.c
    for bit in reversed(bits):
        if bit:
            x, y = b * x + c * y, a * y
        else:
            x, y = a * x, b * x + c * y
    return x


def recover_coefficients(spec: SternLikeSpec, e: int, r: int,
                         x0: int, y0: int) -> tuple[int, int]:
    """Solve for (A(e, r), B(e, r)) from four sequence values.

    Uses the 2x2 system v(2^e*x + r) = A*v(x) + B*v(x+1) at x = x0, y0,
    both >= n0.  Raises SingularSystemError when the determinant
    v(x0)*v(y0+1) - v(y0)*v(x0+1) vanishes.
    """
    if e < 0:
        raise RangeError(f"e must be >= 0, got {e}")
    if not 0 <= r <= 1 << e:
        raise RangeError(f"r must lie in [0, 2^{e}], got {r}")
    if x0 < spec.n0 or y0 < spec.n0:
        raise RangeError(f"x0, y0 must be >= n0 = {spec.n0}, got {x0}, {y0}")
    v = evaluator(spec)
    det = v(x0) * v(y0 + 1) - v(y0) * v(x0 + 1)
    if det == 0:
        raise SingularSystemError(
            f"rows ({v(x0)}, {v(x0 + 1)}) and ({v(y0)}, {v(y0 + 1)}) are dependent"
        )
    w_x = v((1 << e) * x0 + r)
    w_y = v((1 << e) * y0 + r)
    a_num = -(v(x0 + 1) * w_y - v(y0 + 1) * w_x)
    b_num = v(x0) * w_y - v(y0) * w_x
    a_val, a_rem = divmod(a_num, det)
    b_val, b_rem = divmod(b_num, det)
    if a_rem or b_rem:
        # cannot happen when the representation exists; guards impl bugs
        raise SingularSystemError("system is inconsistent over the integers")
    return a_val, b_val


@dataclass(frozen=True)
class LinearRepresentation:
    """Everything an external consumer needs to evaluate the sequence.

    `base_states[k] = (v(k), v(k+1))` for 0 <= k < 2*n_eff, the two digit
    matrices, and the projection (first coordinate of the state).
    """

    spec: SternLikeSpec
    base_states: tuple[tuple[int, int], ...]
    matrices: MatrixPair
    projection: str = "first"

    def evaluate(self, n: int) -> int:
        """Replay the binary digits of n using only the exported data."""
        if n < 0:
            raise DomainError(f"sequence index must be >= 0, got {n}")
        m = n
        bits: list[int] = []
        while m >= len(self.base_states):
            bits.append(m & 1)
            m >>= 1
        x, y = self.base_states[m]
        (a00, a01), (a10, a11) = self.matrices.m0
        (b00, b01), (b10, b11) = self.matrices.m1
        for bit in reversed(bits):
            if bit:
                x, y = b00 * x + b01 * y, b10 * x + b11 * y
            else:
                x, y = a00 * x + a01 * y, a10 * x + a11 * y
        return x

    def render(self) -> str:
        """Stable, diff-friendly plain-text export (`key value...` lines)."""
        lines = []
        if self.spec.name:
            lines.append(f"name {self.spec.name}")
        lines.append(f"a {self.spec.a}")
        lines.append(f"b {self.spec.b}")
        lines.append(f"c {self.spec.c}")
        lines.append(f"n_eff {self.spec.n_eff}")
        for k, (x, y) in enumerate(self.base_states):
            lines.append(f"base {k} {x} {y}")
        m0, m1 = self.matrices.m0, self.matrices.m1
        lines.append(f"M0 {m0[0][0]} {m0[0][1]} {m0[1][0]} {m0[1][1]}")
        lines.append(f"M1 {m1[0][0]} {m1[0][1]} {m1[1][0]} {m1[1][1]}")
        lines.append(f"projection {self.projection}")
        return "\n".join(lines) + "\n"


def linear_representation(spec: SternLikeSpec) -> LinearRepresentation:
    value = evaluator(spec)
    states = tuple((value(k), value(k + 1)) for k in range(2 * spec.n_eff))
    return LinearRepresentation(spec, states, transition_matrices(spec))
