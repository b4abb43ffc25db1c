"""Gelfand-Tsetlin patterns and partition overlaid patterns (POPs)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .algebra import ONE, BoxedPartition, QPoly, boxed_partitions, pad, partition, qbinom

Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GTPattern:
    """Triangular array; ``rows[j-1]`` is the partition ``(T^j_1, ..., T^j_j)``.

    All indices in the public methods are 1-based, as in the usual notation.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows:
            raise ValueError("a GT pattern needs at least one row")
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise ValueError(f"row {j} has length {len(row)}, expected {j}")
        object.__setattr__(self, "rows", rows)
        for j in range(1, self.n):
            for i in range(1, j + 2):
                if self.ne(i, j) < 0 or self.se(i, j) < 0:
                    raise ValueError(f"GT inequalities fail at (i, j) = ({i}, {j}) in {rows}")
        if any(v < 0 for v in rows[-1]):
            raise ValueError("negative entry in bounding row")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return partition(self.rows[-1])

    def entry(self, j: int, i: int) -> int:
        """``T^j_i``; zero when ``i == j + 1`` or ``j == 0``."""
        if j == 0 or i == j + 1:
            return 0
        if not (1 <= i <= j <= self.n):
            raise IndexError(f"T^{j}_{i} is outside an n={self.n} pattern")
        return self.rows[j - 1][i - 1]

    def _check(self, i: int, j: int):
        if not (1 <= i <= j + 1 <= self.n):
            raise IndexError(f"(i, j) = ({i}, {j}) outside 1 <= i <= j+1 <= {self.n}")

    def ne(self, i: int, j: int) -> int:
        self._check(i, j)
        return self.entry(j + 1, i) - self.entry(j, i)

    def se(self, i: int, j: int) -> int:
        self._check(i, j)
        return self.entry(j, i) - self.entry(j + 1, i + 1)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Index pairs ``(i, j)`` with ``1 <= i <= j < n``, in ``(j, i)`` order."""
        for j in range(1, self.n):
            for i in range(1, j + 1):
                yield i, j

    def __str__(self):
        return " / ".join(",".join(map(str, r)) for r in self.rows)


def ne_diff(T: GTPattern, i: int, j: int) -> int:
    return T.ne(i, j)


def se_diff(T: GTPattern, i: int, j: int) -> int:
    return T.se(i, j)


def wtq(T: GTPattern) -> QPoly:
    out = ONE
    for i, j in T.boxes():
        out = out * qbinom(T.ne(i, j), T.se(i, j))
    return out


def area(T: GTPattern) -> int:
    return sum(T.ne(i, j) * T.se(i, j) for i, j in T.boxes())


def xweight_gt(T: GTPattern) -> tuple[int, ...]:
    sums = [0] + [sum(r) for r in T.rows]
    return tuple(sums[j] - sums[j - 1] for j in range(1, T.n + 1))


def gt_from_ssyt(tab: Sequence[Sequence[int]], n: int) -> GTPattern:
    tab = tuple(tuple(r) for r in tab if len(r))
    if not is_ssyt(tab, n):
        raise ValueError(f"{tab} is not a semistandard tableau with entries <= {n}")
    rows = []
    for j in range(1, n + 1):
        counts = [sum(1 for v in r if v <= j) for r in tab[:j]]
        rows.append(tuple(counts) + (0,) * (j - len(counts)))
    return GTPattern(tuple(rows))


def ssyt_from_gt(T: GTPattern) -> Tableau:
    tab = []
    for i in range(1, T.n + 1):
        row = []
        for j in range(i, T.n + 1):
            row.extend([j] * (T.entry(j, i) - T.entry(j - 1, i)))
        if row:
            tab.append(tuple(row))
    return tuple(tab)


def is_ssyt(tab: Sequence[Sequence[int]], n: int) -> bool:
    tab = [tuple(r) for r in tab]
    try:
        partition(len(r) for r in tab)
    except ValueError:
        return False
    for r, row in enumerate(tab):
        if any(not 1 <= v <= n for v in row):
            return False
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r and any(tab[r - 1][c] >= v for c, v in enumerate(row)):
            return False
    return True


def _interlacing_rows(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    yield from product(*ranges)


def enumerate_gt(lam: Sequence[int], n: int) -> Iterator[GTPattern]:
    """Every GT pattern with bounding row ``lam``, lexicographic by rows top-down."""
    bottom = pad(lam, n)

    def build(row):
        if len(row) == 1:
            yield (row,)
            return
        for above in _interlacing_rows(row):
            for upper in build(above):
                yield upper + (row,)

    for rows in sorted(build(bottom)):
        yield GTPattern(rows)


# ---------------------------------------------------------------------------
# POPs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class POP:
    """A GT pattern with one boxed partition per ``(i, j)``, ``1 <= i <= j < n``."""

    pattern: GTPattern
    overlay: Mapping[tuple[int, int], BoxedPartition]

    def __post_init__(self):
        T = self.pattern
        expected = list(T.boxes())
        overlay = dict(self.overlay)
        if sorted(overlay) != sorted(expected):
            raise ValueError(f"overlay keys {sorted(overlay)} do not match {sorted(expected)}")
        for (i, j), lam in overlay.items():
            if (lam.k, lam.l) != (T.ne(i, j), T.se(i, j)):
                raise ValueError(
                    f"overlay ({i},{j}) lives in a {lam.k}x{lam.l} box, "
                    f"expected {T.ne(i, j)}x{T.se(i, j)}"
                )
        object.__setattr__(self, "overlay", {key: overlay[key] for key in expected})

    @classmethod
    def from_parts(cls, pattern: GTPattern, parts: Mapping[tuple[int, int], Sequence[int]]) -> POP:
        return cls(pattern, {
            (i, j): BoxedPartition(tuple(parts[i, j]), pattern.ne(i, j), pattern.se(i, j))
            for i, j in pattern.boxes()
        })

    @property
    def n(self) -> int:
        return self.pattern.n

    @property
    def size(self) -> int:
        return sum(p.size for p in self.overlay.values())

    def __hash__(self):
        return hash((self.pattern, tuple(self.overlay.items())))

    def __eq__(self, other):
        if not isinstance(other, POP):
            return NotImplemented
        return self.pattern == other.pattern and self.overlay == other.overlay


def enumerate_overlays(T: GTPattern) -> Iterator[dict[tuple[int, int], BoxedPartition]]:
    keys = list(T.boxes())
    choices = [list(boxed_partitions(T.ne(i, j), T.se(i, j))) for i, j in keys]
    for combo in product(*choices):
        yield dict(zip(keys, combo))


def enumerate_pops(lam: Sequence[int], n: int) -> Iterator[POP]:
    for T in enumerate_gt(lam, n):
        for overlay in enumerate_overlays(T):
            yield POP(T, overlay)


def bcomp(p: POP) -> POP:
    return POP(p.pattern, {key: lam.complement() for key, lam in p.overlay.items()})


def pr(p: POP) -> GTPattern:
    return p.pattern


def br(p: POP) -> POP:
    """Delete the bottom row of the pattern and every overlay with ``j = n-1``."""
    if p.n < 2:
        raise ValueError("branching needs n >= 2")
    T = GTPattern(p.pattern.rows[:-1])
    return POP(T, {(i, j): lam for (i, j), lam in p.overlay.items() if j < p.n - 1})
