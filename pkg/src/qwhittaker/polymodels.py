"""Three polynomial models of the q-Whittaker polynomial and identities among them."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import ONE, QPoly, SymPoly, interlaces, pad, partition, qbinom
from .fillings import Filling, enumerate_csf, enumerate_fiber, inv, quinv
from .patterns import GTPattern, enumerate_gt, wtq, xweight_gt


class ModelTag(str, enum.Enum):
    FERMIONIC = "fermionic"
    INV = "inv"
    QUINV = "quinv"


def _check_shape(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = partition(lam)
    if n < 1:
        raise ValueError("need at least one variable")
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} nonzero parts")
    return lam


def whittaker(lam: Sequence[int], n: int, model: ModelTag | str = ModelTag.FERMIONIC) -> SymPoly:
    lam = _check_shape(lam, n)
    model = ModelTag(model)
    if model is ModelTag.FERMIONIC:
        return SymPoly(n, [(xweight_gt(T), wtq(T)) for T in enumerate_gt(lam, n)])
    stat = inv if model is ModelTag.INV else quinv
    return SymPoly.accumulate(n, ((F.xweight(), stat(F)) for F in enumerate_csf(lam, n)))


def schur(lam: Sequence[int], n: int) -> SymPoly:
    return whittaker(lam, n, ModelTag.FERMIONIC).eval_q_zero()


def branching_rhs(lam: Sequence[int], n: int) -> SymPoly:
    """Sum over ``mu`` interlacing ``lam`` of the q-binomial products times W_mu."""
    lam = pad(_check_shape(lam, n), n)
    total = SymPoly(n - 1)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]
    for mu in product(*ranges):
        assert interlaces(mu, lam, n)
        coeff = ONE
        for i in range(n - 1):
            coeff = coeff * qbinom(lam[i] - mu[i], mu[i] - lam[i + 1])
        total = total + whittaker(mu, n - 1).scale(coeff)
    return total


def check_branching_identity(lam: Sequence[int], n: int) -> dict:
    if n < 2:
        raise ValueError("branching needs n >= 2")
    lhs = whittaker(lam, n).specialize_last_var_to_one()
    rhs = branching_rhs(lam, n)
    failures = []
    if lhs != rhs:
        for exp in sorted(set(lhs) | set(rhs)):
            a, b = lhs.coefficient(exp), rhs.coefficient(exp)
            if a != b:
                failures.append({"x": list(exp), "lhs": list(a.coeffs), "rhs": list(b.coeffs)})
    return {"checked": 1, "failures": failures}


def fiber_qgen(T: GTPattern, stat: str) -> QPoly:
    fn = {"inv": inv, "quinv": quinv}[stat]
    degs = Counter(fn(F) for F in enumerate_fiber(T))
    if not degs:
        return QPoly()
    return QPoly(degs[d] for d in range(max(degs) + 1))


# ---------------------------------------------------------------------------
# Partial sums for the basic representation of affine sl_n
# ---------------------------------------------------------------------------

def theta_shape(n: int) -> tuple[int, ...]:
    """``(2, 1, ..., 1)`` with ``n - 1`` nonzero parts."""
    if n < 2:
        raise ValueError("need n >= 2")
    return (2,) + (1,) * (n - 2)


def in_c_k(F: Filling) -> bool:
    """1 in the first column, or no 1 in the last column."""
    if not F.rows:
        return True
    cols = F.columns()
    return 1 in cols[0] or 1 not in cols[-1]


def reduce_weight(exp: Sequence[int]) -> tuple[int, ...]:
    """Identify x-exponents modulo the all-ones vector (last coordinate to zero)."""
    return tuple(e - exp[-1] for e in exp)


@dataclass
class CharacterCoefficient:
    d: int
    stable_at_k: int
    weights: dict[tuple[int, ...], int]


@dataclass
class CharacterResult:
    n: int
    k_max: int
    q_cap: int
    coefficients: list[CharacterCoefficient]
    violations: list[dict] = field(default_factory=list)

    def as_counters(self) -> dict[int, Counter]:
        return {c.d: Counter(c.weights) for c in self.coefficients}

    def stable(self) -> bool:
        """Every degree settled strictly before the last k computed."""
        return all(c.stable_at_k < self.k_max for c in self.coefficients)


def character_term(n: int, k: int, q_cap: int, violations: list | None = None) -> dict[int, Counter]:
    """Contribution of ``C_k`` to each q-degree up to ``q_cap``."""
    shape = tuple(k * p for p in theta_shape(n))
    out: dict[int, Counter] = {d: Counter() for d in range(q_cap + 1)}
    for F in enumerate_csf(shape, n):
        if not in_c_k(F):
            continue
        d = k * k - inv(F)
        if d < 0:
            if violations is not None:
                violations.append({"k": k, "rows": [list(r) for r in F.rows], "exponent": d})
            continue
        if d <= q_cap:
            out[d][reduce_weight(F.xweight())] += 1
    return out


def basic_character_partial(n: int, k_max: int, q_cap: int) -> CharacterResult:
    if n < 2 or k_max < 0 or q_cap < 0:
        raise ValueError("need n >= 2, k_max >= 0, q_cap >= 0")
    violations: list[dict] = []
    running = {d: Counter() for d in range(q_cap + 1)}
    history: list[dict[int, Counter]] = []
    for k in range(k_max + 1):
        for d, cnt in character_term(n, k, q_cap, violations).items():
            running[d].update(cnt)
        history.append({d: +Counter(c) for d, c in running.items()})

    coefficients = []
    for d in range(q_cap + 1):
        final = history[-1][d]
        stable_at = k_max
        while stable_at > 0 and history[stable_at - 1][d] == final:
            stable_at -= 1
        coefficients.append(CharacterCoefficient(d, stable_at, dict(sorted(final.items(), reverse=True))))
    return CharacterResult(n, k_max, q_cap, coefficients, violations)
