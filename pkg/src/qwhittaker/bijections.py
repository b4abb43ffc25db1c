"""Weight-preserving bijections between column strict fillings and POPs."""

from __future__ import annotations

from typing import Literal, Sequence

from .algebra import BoxedPartition, partition
from .fillings import Filling, cells, dsplice, enumerate_csf, rsort, zcb, zcount
from .patterns import POP, bcomp, br, pr

Stat = Literal["inv", "quinv"]


class InconsistentPOPError(RuntimeError):
    """The candidate-cell count disagreed with the box size while inverting."""


def psi_quinv(F: Filling) -> POP:
    T = rsort(F)
    overlay = {}
    for i, j in T.boxes():
        seq = [zcount(c, F) for c in reversed(cells(i, j, F))]
        overlay[i, j] = BoxedPartition(tuple(seq), T.ne(i, j), T.se(i, j))
    return POP(T, overlay)


def psi_inv(F: Filling) -> POP:
    T = rsort(F)
    overlay = {}
    for i, j in T.boxes():
        seq = [zcb(c, F) for c in cells(i, j, F)]
        overlay[i, j] = BoxedPartition(tuple(seq), T.ne(i, j), T.se(i, j))
    return POP(T, overlay)


def psi(F: Filling, stat: Stat) -> POP:
    if stat == "inv":
        return psi_inv(F)
    if stat == "quinv":
        return psi_quinv(F)
    raise ValueError(f"unknown statistic {stat!r}")


def psi_inverse(p: POP, stat: Stat) -> Filling:
    """Rebuild the filling row by row from the bottom.

    In row ``i`` the entries ``j + 1`` are placed for ``j = n-1, ..., i``;
    the candidate cells for ``j + 1`` are the still-empty cells whose lower
    neighbour (if any) exceeds ``j + 1``. Leftover cells get ``i``.
    """
    if stat not in ("inv", "quinv"):
        raise ValueError(f"unknown statistic {stat!r}")
    T = p.pattern
    n = T.n
    shape = partition(T.rows[-1])
    grid: list[list[int | None]] = [[None] * length for length in shape]

    for i in range(len(shape), 0, -1):
        row = grid[i - 1]
        below = grid[i] if i < len(shape) else []
        for j in range(n - 1, i - 1, -1):
            k, ell = T.ne(i, j), T.se(i, j)
            candidates = [
                c for c in range(len(row))
                if row[c] is None and (c >= len(below) or below[c] > j + 1)
            ]
            if len(candidates) != k + ell:
                raise InconsistentPOPError(
                    f"row {i}, entry {j + 1}: {len(candidates)} candidate cells, "
                    f"expected {k} + {ell}"
                )
            if stat == "inv":
                candidates.reverse()
            for label in p.overlay[i, j].to_strict_tuple():
                row[candidates[label]] = j + 1
        for c in range(len(row)):
            if row[c] is None:
                row[c] = i

    return Filling(n, tuple(tuple(r) for r in grid))


def omega(F: Filling) -> Filling:
    """Involution on column strict fillings exchanging inv and quinv."""
    return psi_inverse(psi_quinv(F), "inv")


# ---------------------------------------------------------------------------
# Commutative diagram checks
# ---------------------------------------------------------------------------

def _report(checked: int, failures: list) -> dict:
    return {"checked": checked, "failures": failures}


def check_projection(lam: Sequence[int], n: int) -> dict:
    """pr . psi_v == rsort for both statistics."""
    checked, failures = 0, []
    for F in enumerate_csf(lam, n):
        checked += 1
        T = rsort(F)
        for stat in ("inv", "quinv"):
            if pr(psi(F, stat)) != T:
                failures.append({"stat": stat, "filling": [list(r) for r in F.rows]})
    return _report(checked, failures)


def check_branching(lam: Sequence[int], n: int) -> dict:
    """psi_v . dsplice == br . psi_v, the branched filling read over ``[n-1]``."""
    checked, failures = 0, []
    if n < 2:
        return _report(0, [])
    for F in enumerate_csf(lam, n):
        checked += 1
        D = dsplice(F)
        for stat in ("inv", "quinv"):
            if psi(D, stat) != br(psi(F, stat)):
                failures.append({"stat": stat, "filling": [list(r) for r in F.rows]})
    return _report(checked, failures)


def check_complement(lam: Sequence[int], n: int) -> dict:
    """bcomp . psi_inv == psi_quinv."""
    checked, failures = 0, []
    for F in enumerate_csf(lam, n):
        checked += 1
        if bcomp(psi_inv(F)) != psi_quinv(F):
            failures.append({"filling": [list(r) for r in F.rows]})
    return _report(checked, failures)
