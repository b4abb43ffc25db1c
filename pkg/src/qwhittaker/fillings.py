"""Fillings of Young diagrams and their statistics.

Cells are ``(row, col)`` pairs, 1-based, English convention. The triple
statistics (quinv, inv, zcount, zcb) are defined only on column strict
fillings.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .algebra import conjugate, partition
from .patterns import GTPattern, gt_from_ssyt

Cell = tuple[int, int]
INFINITY = float("inf")


class NotColumnStrictError(ValueError):
    """Raised when an operation that needs a column strict filling gets something else."""


@dataclass(frozen=True)
class Filling:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows if len(r))
        partition(len(r) for r in rows)
        for r in rows:
            for v in r:
                if not 1 <= v <= self.n:
                    raise ValueError(f"entry {v} outside [1, {self.n}]")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1])

    def below(self, cell: Cell) -> float:
        """Entry directly below ``cell``, or infinity in the augmented diagram."""
        r, c = cell
        return self[r + 1, c] if (r + 1, c) in self else INFINITY

    def cells(self) -> Iterator[Cell]:
        for r, row in enumerate(self.rows, start=1):
            for c in range(1, len(row) + 1):
                yield r, c

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[c] for row in self.rows if c < len(row)) for c in range(len(self.rows[0]) if self.rows else 0)]

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence[int]]) -> Filling:
        height = max((len(col) for col in columns), default=0)
        rows = [[col[r] for col in columns if r < len(col)] for r in range(height)]
        return cls(n, tuple(tuple(r) for r in rows))

    def xweight(self) -> tuple[int, ...]:
        counts = Counter(v for row in self.rows for v in row)
        return tuple(counts[v] for v in range(1, self.n + 1))

    def __str__(self):
        return " / ".join("".join(map(str, r)) if self.n < 10 else ",".join(map(str, r)) for r in self.rows)


def is_csf(F: Filling) -> bool:
    return all(F[r, c] < F[r + 1, c] for r, c in F.cells() if (r + 1, c) in F)


def is_wdf(F: Filling) -> bool:
    return all(F[r, c] >= F[r + 1, c] for r, c in F.cells() if (r + 1, c) in F)


def _require_csf(F: Filling):
    if not is_csf(F):
        raise NotColumnStrictError(f"{F} is not column strict")


def maj(F: Filling) -> int:
    """Sum of legs over cells whose lower neighbour holds a strictly larger entry."""
    heights = conjugate(F.shape)
    return sum(
        heights[c - 1] - r
        for r, c in F.cells()
        if (r + 1, c) in F and F[r, c] < F[r + 1, c]
    )


# ---------------------------------------------------------------------------
# Triples
# ---------------------------------------------------------------------------

def quinv_triples(F: Filling) -> list[tuple[Cell, Cell, Cell]]:
    """Triples ``(x, y, z)``: z right of x in its row, y below x, F(x) < F(z) < F(y)."""
    _require_csf(F)
    out = []
    for r, row in enumerate(F.rows, start=1):
        for cx in range(1, len(row) + 1):
            fx, fy = row[cx - 1], F.below((r, cx))
            for cz in range(cx + 1, len(row) + 1):
                if fx < row[cz - 1] < fy:
                    out.append(((r, cx), (r + 1, cx), (r, cz)))
    return out


def refinv_triples(F: Filling) -> list[tuple[Cell, Cell, Cell]]:
    """Same as :func:`quinv_triples` with z to the left of x."""
    _require_csf(F)
    out = []
    for r, row in enumerate(F.rows, start=1):
        for cx in range(1, len(row) + 1):
            fx, fy = row[cx - 1], F.below((r, cx))
            for cz in range(1, cx):
                if fx < row[cz - 1] < fy:
                    out.append(((r, cx), (r + 1, cx), (r, cz)))
    return out


def quinv(F: Filling) -> int:
    return len(quinv_triples(F))


def inv(F: Filling) -> int:
    return len(refinv_triples(F))


def _z_count(F: Filling, cell: Cell, left: bool) -> int:
    if cell not in F:
        raise IndexError(f"cell {cell} is outside the shape {F.shape}")
    _require_csf(F)
    r, cz = cell
    fz = F[cell]
    xs = range(1, cz) if left else range(cz + 1, len(F.rows[r - 1]) + 1)
    return sum(1 for cx in xs if F[r, cx] < fz < F.below((r, cx)))


def zcount(cell: Cell, F: Filling) -> int:
    """Number of quinv-triples whose third cell is ``cell``."""
    return _z_count(F, cell, left=True)


def zcb(cell: Cell, F: Filling) -> int:
    """Number of refinv-triples whose third cell is ``cell``."""
    return _z_count(F, cell, left=False)


def zcount_table(F: Filling) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(zcount((r, c), F) for c in range(1, len(row) + 1))
                 for r, row in enumerate(F.rows, start=1))


def zcb_table(F: Filling) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(zcb((r, c), F) for c in range(1, len(row) + 1))
                 for r, row in enumerate(F.rows, start=1))


def cells(i: int, j: int, F: Filling) -> list[Cell]:
    """Cells of row ``i`` holding ``j + 1``, left to right."""
    if i > len(F.rows):
        return []
    return [(i, c) for c, v in enumerate(F.rows[i - 1], start=1) if v == j + 1]


# ---------------------------------------------------------------------------
# Projection and branching
# ---------------------------------------------------------------------------

def row_sorted(F: Filling) -> Filling:
    return Filling(F.n, tuple(tuple(sorted(r)) for r in F.rows))


def rsort(F: Filling) -> GTPattern:
    _require_csf(F)
    return gt_from_ssyt(row_sorted(F).rows, F.n)


def splice(sigma: Sequence[int], tau: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    sigma, tau = tuple(sigma), tuple(tau)
    ell = len(tau)
    if ell < 1 or len(sigma) != ell - 1:
        raise ValueError(f"splice needs lengths (l-1, l), got ({len(sigma)}, {ell})")
    for col in (sigma, tau):
        if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
            raise ValueError(f"{col} is not strictly increasing")
    padded = (0,) + sigma
    k = max(i for i in range(1, ell + 1) if padded[i - 1] < tau[i - 1])
    new_sigma = sigma[:k - 1] + tau[k - 1:]
    new_tau = tau[:k - 1] + sigma[k - 1:]
    return new_sigma, new_tau


def dsplice(F: Filling, rng: random.Random | None = None) -> Filling:
    """Delete every entry ``n`` and splice columns back into partition shape.

    By default the leftmost eligible column pair is spliced; pass ``rng`` to
    pick uniformly among eligible pairs instead. The result is over ``[n-1]``.
    """
    _require_csf(F)
    if F.n < 1:
        raise ValueError("dsplice needs n >= 1")
    cols = [tuple(v for v in col if v != F.n) for col in F.columns()]
    while True:
        eligible = [j for j in range(len(cols) - 1) if len(cols[j + 1]) == len(cols[j]) + 1]
        if not eligible:
            break
        j = rng.choice(eligible) if rng is not None else eligible[0]
        cols[j], cols[j + 1] = splice(cols[j], cols[j + 1])
    lengths = [len(c) for c in cols]
    if any(lengths[j] < lengths[j + 1] for j in range(len(lengths) - 1)):
        raise AssertionError(f"dsplice stuck at column lengths {lengths}")
    return Filling.from_columns(F.n - 1, [c for c in cols if c])


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_csf(lam: Sequence[int], n: int) -> Iterator[Filling]:
    """All column strict fillings of ``lam`` with entries in ``[n]``."""
    heights = conjugate(lam)
    per_column = [list(combinations(range(1, n + 1), h)) for h in heights]
    for cols in product(*per_column):
        yield Filling.from_columns(n, cols)


def enumerate_fillings(lam: Sequence[int], n: int) -> Iterator[Filling]:
    """Every map from the cells of ``lam`` to ``[n]``."""
    lam = partition(lam)
    size = sum(lam)
    for values in product(range(1, n + 1), repeat=size):
        rows, pos = [], 0
        for part in lam:
            rows.append(values[pos:pos + part])
            pos += part
        yield Filling(n, tuple(rows))


def enumerate_fiber(T: GTPattern) -> Iterator[Filling]:
    """Column strict fillings whose row-sorted form is the tableau of ``T``.

    Rows are filled from the bottom up, each as an arrangement of its fixed
    multiset that sits strictly above the row beneath it.
    """
    n = T.n
    contents = []
    for i in range(1, n + 1):
        counts = Counter()
        for j in range(i, n + 1):
            counts[j] = T.entry(j, i) - T.entry(j - 1, i)
        if sum(counts.values()):
            contents.append(counts)

    def arrangements(counts: Counter, below: tuple[int, ...], pos: int, length: int):
        if pos == length:
            yield ()
            return
        ceiling = below[pos] if pos < len(below) else INFINITY
        for v in sorted(counts):
            if counts[v] and v < ceiling:
                counts[v] -= 1
                for rest in arrangements(counts, below, pos + 1, length):
                    yield (v,) + rest
                counts[v] += 1

    def build(idx: int, below: tuple[int, ...]):
        if idx < 0:
            yield ()
            return
        counts = contents[idx]
        length = sum(counts.values())
        for row in arrangements(Counter(counts), below, 0, length):
            for upper in build(idx - 1, row):
                yield upper + (row,)

    for rows in build(len(contents) - 1, ()):
        yield Filling(n, rows)
