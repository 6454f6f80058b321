"""Normal ordering of generator words from the q-commutation tables alone.

This is an independent oracle for the cocycle-based product: a word in the
generators is sorted into the canonical order U1 < V1 < U2 < V2 < U3 < V3 by
adjacent swaps, each swap contributing the phase read off the relation table
of the ambient algebra.  Nothing here touches the cocycle matrices, so
agreement between :func:`normal_order` and ``AlgebraElement.__mul__`` is a
genuine cross-check.

Every relation is a pure q-commutation g_i g_j = s**e g_j g_i, so swap phases
compose multiplicatively and the result does not depend on the sorting
schedule (the suite verifies this confluence rather than assuming it).

All functions here are pure and operate on immutable values; they are safe
to call from multiple threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .phases import PhaseScalar, phase_pow
from .algebra import AlgebraDescriptor, MultiIndex

__all__ = [
    "GeneratorSymbol",
    "Word",
    "RELATION_ROWS",
    "SWAP_TABLES",
    "swap_exponent",
    "word_of_index",
    "normal_order",
    "normal_order_exponent",
]


@dataclass(frozen=True)
class GeneratorSymbol:
    """One letter of a word: generator position and a nonzero integer power."""

    position: int
    power: int

    def __post_init__(self):
        if self.power == 0:
            raise ValueError("generator power must be nonzero")


@dataclass(frozen=True)
class Word:
    """An ordered product of generator powers in one algebra."""

    algebra: AlgebraDescriptor
    letters: tuple[GeneratorSymbol, ...]

    def __post_init__(self):
        d = self.algebra.d
        for g in self.letters:
            if not 0 <= g.position < d:
                raise ValueError(
                    f"generator position {g.position} out of range for {self.algebra.name!r}"
                )

    def __mul__(self, other: "Word") -> "Word":
        if self.algebra != other.algebra:
            raise ValueError(
                f"cannot concatenate words over {self.algebra.name!r} and {other.algebra.name!r}"
            )
        return Word(self.algebra, self.letters + other.letters)

    def __str__(self) -> str:
        names = self.algebra.generator_names
        return " ".join(
            names[g.position] if g.power == 1 else f"{names[g.position]}^{g.power}"
            for g in self.letters
        ) or "1"


# Relation rows (i, j, e) with i < j in the generator order, meaning
#   g_i g_j = s**e g_j g_i.
# These are literal data, one row per generator pair.

_TORUS_ROWS = (
    (0, 1, 2),    # U V = q V U
)

_P2_ROWS = (
    (0, 1, 2),    # U1 V1 = q V1 U1
    (2, 3, 2),    # U2 V2 = q V2 U2
    (0, 3, -1),   # U1 V2 = q^(-1/2) V2 U1
    (1, 2, 1),    # V1 U2 = q^(1/2) U2 V1
    (0, 2, 0),    # U1 U2 = U2 U1
    (1, 3, 0),    # V1 V2 = V2 V1
)

_P3_ROWS = (
    (0, 1, 2),    # U1 V1 = q V1 U1
    (2, 3, 2),    # U2 V2 = q V2 U2
    (4, 5, 2),    # U3 V3 = q V3 U3
    (0, 3, -1),   # U1 V2 = q^(-1/2) V2 U1
    (2, 5, -1),   # U2 V3 = q^(-1/2) V3 U2
    (1, 4, 0),    # U3 V1 = V1 U3
    (1, 2, 1),    # V1 U2 = q^(1/2) U2 V1
    (3, 4, 1),    # V2 U3 = q^(1/2) U3 V2
    (0, 5, 0),    # V3 U1 = U1 V3
    (0, 2, 0),    # U1 U2 = U2 U1
    (2, 4, 0),    # U2 U3 = U3 U2
    (0, 4, 0),    # U3 U1 = U1 U3
    (1, 3, 0),    # V1 V2 = V2 V1
    (3, 5, 0),    # V2 V3 = V3 V2
    (1, 5, 0),    # V3 V1 = V1 V3
)

RELATION_ROWS: dict[str, tuple[tuple[int, int, int], ...]] = {
    "circle": (),
    "torus": _TORUS_ROWS,
    "p2": _P2_ROWS,
    "p3": _P3_ROWS,
}


def _swap_table(rows: tuple[tuple[int, int, int], ...]) -> dict[tuple[int, int], int]:
    # rows give g_i g_j = s**e g_j g_i for i < j; moving the later generator
    # left past the earlier one therefore costs s**(-e).
    return {(j, i): -e for i, j, e in rows}


SWAP_TABLES: dict[str, dict[tuple[int, int], int]] = {
    name: _swap_table(rows) for name, rows in RELATION_ROWS.items()
}


def swap_exponent(algebra: AlgebraDescriptor, a: int, b: int) -> int:
    """s-exponent e with g_a g_b = s**e g_b g_a (antisymmetric in a, b)."""
    if a == b:
        return 0
    table = SWAP_TABLES[algebra.name]
    if a > b:
        return table[(a, b)]
    return -table[(b, a)]


def word_of_index(algebra: AlgebraDescriptor, idx: MultiIndex) -> Word:
    """The normal-ordered word with delta^idx = 1 * (that word)."""
    idx = algebra.check_index(idx)
    letters = tuple(
        GeneratorSymbol(pos, power) for pos, power in enumerate(idx) if power
    )
    return Word(algebra, letters)


def normal_order_exponent(
    algebra: AlgebraDescriptor, seq: list[tuple[int, int]]
) -> tuple[int, MultiIndex]:
    """Core routine on raw (position, power) pairs; returns (s-exponent, index).

    Stable insertion sort: only strictly out-of-order adjacent letters are
    swapped, and a swap of powers p, r across positions a > b contributes
    e(a, b) * p * r to the accumulated exponent.  Inverses are negative
    powers; like generators merge by adding powers at the end.
    """
    table = SWAP_TABLES[algebra.name]
    arr = list(seq)
    exponent = 0
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1][0] > arr[j][0]:
            a, p = arr[j - 1]
            b, r = arr[j]
            exponent += table[(a, b)] * p * r
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            j -= 1
    powers = [0] * algebra.d
    for pos, power in arr:
        powers[pos] += power
    return exponent, tuple(powers)


def normal_order(word: Word) -> tuple[PhaseScalar, MultiIndex]:
    """Express a word as s**e * delta^idx; returns (s**e, idx)."""
    seq = [(g.position, g.power) for g in word.letters]
    exponent, idx = normal_order_exponent(word.algebra, seq)
    return phase_pow(exponent), idx
