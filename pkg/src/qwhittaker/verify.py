"""Exhaustive verification suites over all small shapes.

Each suite returns ``{"suite", "cases", "checked", "failures"}``; a case is
one ``(lambda, n)`` pair, ``checked`` counts the objects examined.
"""

from __future__ import annotations

import random
from collections import defaultdict
from typing import Callable, Iterator

from .algebra import QPoly, eta, interlaces, partition, partitions_of
from .bijections import (
    check_branching,
    check_complement,
    check_projection,
    omega,
    psi,
    psi_inverse,
)
from .fillings import (
    dsplice,
    enumerate_csf,
    enumerate_fillings,
    inv,
    is_csf,
    is_wdf,
    maj,
    quinv,
    rsort,
)
from .patterns import area, bcomp, enumerate_gt, enumerate_pops, wtq, xweight_gt
from .polymodels import ModelTag, check_branching_identity, whittaker

SUITES = ("equality", "bijections", "diagrams", "fibers", "maj", "dsplice", "branching")


def shapes(max_size: int, max_vars: int, min_vars: int = 1) -> Iterator[tuple[tuple[int, ...], int]]:
    for n in range(min_vars, max_vars + 1):
        for size in range(max_size + 1):
            for lam in sorted(partitions_of(size, n)):
                yield lam, n


def _rows(F) -> list[list[int]]:
    return [list(r) for r in F.rows]


def suite_equality(max_size: int, max_vars: int, **_) -> dict:
    cases, failures = 0, []
    for lam, n in shapes(max_size, max_vars):
        cases += 1
        polys = {m.value: whittaker(lam, n, m) for m in ModelTag}
        if len(set(polys.values())) != 1:
            failures.append({"shape": list(lam), "n": n, "reason": "models disagree"})
        if not polys["fermionic"].is_symmetric():
            failures.append({"shape": list(lam), "n": n, "reason": "not symmetric"})
    return {"cases": cases, "checked": cases, "failures": failures}


def suite_bijections(max_size: int, max_vars: int, **_) -> dict:
    cases, checked, failures = 0, 0, []

    def fail(lam, n, reason, F=None, stat=None):
        item = {"shape": list(lam), "n": n, "reason": reason}
        if F is not None:
            item["filling"] = _rows(F)
        if stat:
            item["stat"] = stat
        failures.append(item)

    for lam, n in shapes(max_size, max_vars):
        cases += 1
        csf_count = 0
        images = {"inv": set(), "quinv": set()}
        for F in enumerate_csf(lam, n):
            csf_count += 1
            checked += 1
            values = {"inv": inv(F), "quinv": quinv(F)}
            pops = {}
            for stat in ("inv", "quinv"):
                p = pops[stat] = psi(F, stat)
                images[stat].add(p)
                if xweight_gt(p.pattern) != F.xweight():
                    fail(lam, n, "x-weight", F, stat)
                if p.size != values[stat]:
                    fail(lam, n, "q-weight", F, stat)
                if psi_inverse(p, stat) != F:
                    fail(lam, n, "left inverse", F, stat)
            if bcomp(pops["inv"]) != pops["quinv"]:
                fail(lam, n, "bcomp", F)
            W = omega(F)
            if omega(W) != F:
                fail(lam, n, "omega not involutive", F)
            if inv(W) != values["quinv"] or quinv(W) != values["inv"]:
                fail(lam, n, "omega statistics", F)
            if rsort(W) != rsort(F):
                fail(lam, n, "omega moves rsort", F)
        pop_count = 0
        for p in enumerate_pops(lam, n):
            pop_count += 1
            for stat in ("inv", "quinv"):
                if psi(psi_inverse(p, stat), stat) != p:
                    fail(lam, n, "right inverse", stat=stat)
        if pop_count != csf_count or any(len(s) != csf_count for s in images.values()):
            fail(lam, n, f"cardinality: {csf_count} CSFs, {pop_count} POPs")
        if sum(wtq(T)(1) for T in enumerate_gt(lam, n)) != csf_count:
            fail(lam, n, "sum of wt_q(T) at q=1 differs from CSF count")
    return {"cases": cases, "checked": checked, "failures": failures}


def suite_diagrams(max_size: int, max_vars: int, **_) -> dict:
    cases, checked, failures = 0, 0, []
    for lam, n in shapes(max_size, max_vars):
        cases += 1
        for name, check in (("projection", check_projection), ("branching", check_branching),
                            ("complement", check_complement)):
            report = check(lam, n)
            checked += report["checked"]
            failures += [dict(f, diagram=name, shape=list(lam), n=n) for f in report["failures"]]
    return {"cases": cases, "checked": checked, "failures": failures}


def suite_fibers(max_size: int, max_vars: int, **_) -> dict:
    """Fibers of rsort, built by grouping every CSF by its row-sorted pattern."""
    cases, checked, failures = 0, 0, []
    for lam, n in shapes(max_size, max_vars):
        cases += 1
        fibers = defaultdict(list)
        for F in enumerate_csf(lam, n):
            fibers[rsort(F)].append(F)
        patterns = list(enumerate_gt(lam, n))
        if set(fibers) != set(patterns):
            failures.append({"shape": list(lam), "n": n, "reason": "rsort is not onto GT(lambda)"})
        for T in patterns:
            checked += 1
            target = wtq(T)
            a = area(T)
            for stat, fn in (("inv", inv), ("quinv", quinv)):
                degs = defaultdict(int)
                for F in fibers[T]:
                    degs[fn(F)] += 1
                got = QPoly(degs[d] for d in range(max(degs) + 1)) if degs else QPoly()
                if got != target:
                    failures.append({"pattern": [list(r) for r in T.rows], "stat": stat,
                                     "got": list(got.coeffs), "expected": list(target.coeffs)})
            for F in fibers[T]:
                if inv(F) + quinv(F) != a:
                    failures.append({"pattern": [list(r) for r in T.rows], "filling": _rows(F),
                                     "reason": "inv + quinv != area"})
    return {"cases": cases, "checked": checked, "failures": failures}


def suite_maj(max_size: int, max_vars: int, **_) -> dict:
    cases, checked, failures = 0, 0, []
    for lam, n in shapes(max_size, max_vars):
        cases += 1
        target = eta(lam)
        for F in enumerate_fillings(lam, n):
            checked += 1
            m = maj(F)
            if (m == target) != is_csf(F) or (m == 0) != is_wdf(F):
                failures.append({"shape": list(lam), "n": n, "filling": _rows(F), "maj": m})
    return {"cases": cases, "checked": checked, "failures": failures}


def suite_dsplice(max_size: int, max_vars: int, seed: int = 0, trials: int = 10, **_) -> dict:
    rng = random.Random(seed)
    cases, checked, failures = 0, 0, []
    for lam, n in shapes(max_size, max_vars, min_vars=2):
        cases += 1
        for F in enumerate_csf(lam, n):
            checked += 1
            D = dsplice(F)
            mu = partition(D.shape)
            for _ in range(trials):
                if dsplice(F, rng) != D:
                    failures.append({"filling": _rows(F), "reason": "depends on splice order"})
                    break
            if not is_csf(D):
                failures.append({"filling": _rows(F), "reason": "result not column strict"})
            if not interlaces(mu, lam, n):
                failures.append({"filling": _rows(F), "reason": f"shape {mu} does not interlace"})
            if rsort(D).rows != rsort(F).rows[:-1]:
                failures.append({"filling": _rows(F), "reason": "rsort not compatible"})
    return {"cases": cases, "checked": checked, "failures": failures}


def suite_branching(max_size: int, max_vars: int, **_) -> dict:
    cases, failures = 0, []
    for lam, n in shapes(max_size, max_vars, min_vars=2):
        cases += 1
        report = check_branching_identity(lam, n)
        failures += [dict(f, shape=list(lam), n=n) for f in report["failures"]]
    return {"cases": cases, "checked": cases, "failures": failures}


RUNNERS: dict[str, Callable[..., dict]] = {
    "equality": suite_equality,
    "bijections": suite_bijections,
    "diagrams": suite_diagrams,
    "fibers": suite_fibers,
    "maj": suite_maj,
    "dsplice": suite_dsplice,
    "branching": suite_branching,
}


def run_suite(name: str, max_size: int, max_vars: int, seed: int = 0, trials: int = 10) -> dict:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    report = RUNNERS[name](max_size=max_size, max_vars=max_vars, seed=seed, trials=trials)
    return {"suite": name, **report}
