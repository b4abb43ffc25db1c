"""Exact arithmetic: partitions, boxed partitions, q-polynomials and
symmetric x-polynomials with q-polynomial coefficients.

Python integers are unbounded, so no coefficient ever wraps around.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate ``parts`` and return the canonical form (trailing zeros stripped)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    if len(partition(parts)) > length:
        raise ValueError(f"{tuple(parts)} has more than {length} nonzero parts")
    parts = tuple(parts)[:length]
    return parts + (0,) * (length - len(parts))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def eta(lam: Sequence[int]) -> int:
    return sum(comb(h, 2) for h in conjugate(lam))


def interlaces(mu: Sequence[int], lam: Sequence[int], n: int) -> bool:
    """True iff ``lam[i] >= mu[i] >= lam[i+1]`` for ``0 <= i < n-1``."""
    lam = pad(lam, n)
    mu = pad(mu, n - 1) if n > 1 else ()
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(n - 1))


def partitions_of(size: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``size`` with at most ``max_parts`` parts, reverse lex order."""

    def rec(remaining, largest, parts_left):
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, parts_left - 1):
                yield (first,) + rest

    limit = size if max_parts is None else max_parts
    yield from rec(size, size, limit)


# ---------------------------------------------------------------------------
# Partitions in a box
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxedPartition:
    """A partition with at most ``k`` parts, each at most ``l``.

    ``parts`` always has length exactly ``k`` (zero padded).
    """

    parts: tuple[int, ...]
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("box dimensions must be non-negative")
        parts = pad(tuple(self.parts), self.k)
        if parts and parts[0] > self.l:
            raise ValueError(f"{parts} does not fit in a {self.k} x {self.l} box")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def complement(self) -> BoxedPartition:
        return BoxedPartition(tuple(self.l - p for p in reversed(self.parts)), self.k, self.l)

    def to_strict_tuple(self) -> tuple[int, ...]:
        return tuple(p + self.k - 1 - idx for idx, p in enumerate(self.parts))

    @classmethod
    def from_strict_tuple(cls, t: Sequence[int], k: int, l: int) -> BoxedPartition:
        t = tuple(t)
        if len(t) != k:
            raise ValueError(f"expected a {k}-tuple, got {t}")
        if any(t[i] <= t[i + 1] for i in range(k - 1)):
            raise ValueError(f"{t} is not strictly decreasing")
        if t and (t[-1] < 0 or t[0] > k + l - 1):
            raise ValueError(f"{t} has entries outside [0, {k + l - 1}]")
        return cls(tuple(v - (k - 1 - idx) for idx, v in enumerate(t)), k, l)


def box_complement(p: BoxedPartition) -> BoxedPartition:
    return p.complement()


def to_strict_tuple(p: BoxedPartition) -> tuple[int, ...]:
    return p.to_strict_tuple()


def from_strict_tuple(t: Sequence[int], k: int, l: int) -> BoxedPartition:
    return BoxedPartition.from_strict_tuple(t, k, l)


def boxed_partitions(k: int, l: int) -> Iterator[BoxedPartition]:
    """Every partition in the ``k x l`` box, in lexicographic order of parts."""

    def rec(length, bound):
        if length == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in rec(length - 1, first):
                yield (first,) + rest

    for parts in sorted(rec(k, l)):
        yield BoxedPartition(parts, k, l)


# ---------------------------------------------------------------------------
# Polynomials in q
# ---------------------------------------------------------------------------

class QPoly:
    """Univariate polynomial in q with exact integer coefficients.

    ``coeffs[d]`` is the coefficient of ``q**d``; trailing zeros are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        if degree < 0:
            raise ValueError("negative q-degree")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, d: int) -> QPoly:
        """Multiply by ``q**d``."""
        if not self.coeffs:
            return self
        return QPoly((0,) * d + self.coeffs)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(c)
            else:
                mono = "q" if d == 1 else f"q^{d}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}{mono}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")


ZERO = QPoly()
ONE = QPoly((1,))


@lru_cache(maxsize=None)
def qbinom(k: int, l: int) -> QPoly:
    """Generating function of partitions in a ``k x l`` box."""
    if k < 0 or l < 0:
        raise ValueError("box dimensions must be non-negative")
    if k == 0 or l == 0:
        return ONE
    # either the last row is empty, or every row is non-empty
    return qbinom(k - 1, l) + qbinom(k, l - 1).shift(k)


# ---------------------------------------------------------------------------
# Symmetric x-polynomials with QPoly coefficients
# ---------------------------------------------------------------------------

Exponent = tuple[int, ...]


class SymPoly:
    """Sparse polynomial in ``x_1..x_n`` whose coefficients are QPolys.

    Despite the name, symmetry is not enforced; see :meth:`is_symmetric`.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, QPoly] | Iterable[tuple[Exponent, QPoly]] = ()):
        if n < 0:
            raise ValueError("number of variables must be non-negative")
        self.n = n
        acc: dict[Exponent, QPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {n} variables")
            if isinstance(coeff, int):
                coeff = QPoly((coeff,))
            acc[exp] = acc[exp] + coeff if exp in acc else coeff
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def accumulate(cls, n: int, pairs: Iterable[tuple[Exponent, int | QPoly]]) -> SymPoly:
        """Sum many ``(exponent, weight)`` pairs; ints are read as q-degrees."""
        by_exp: dict[Exponent, dict[int, int]] = defaultdict(lambda: defaultdict(int))
        poly_terms: list[tuple[Exponent, QPoly]] = []
        for exp, w in pairs:
            if isinstance(w, QPoly):
                poly_terms.append((exp, w))
            else:
                by_exp[tuple(exp)][w] += 1
        terms = []
        for exp, degs in by_exp.items():
            coeffs = [0] * (max(degs) + 1)
            for d, c in degs.items():
                coeffs[d] += c
            terms.append((exp, QPoly(coeffs)))
        return cls(n, terms + poly_terms)

    @classmethod
    def one(cls, n: int) -> SymPoly:
        return cls(n, {(0,) * n: ONE})

    def items(self) -> list[tuple[Exponent, QPoly]]:
        """Terms sorted by exponent vector (ascending lexicographic)."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def coefficient(self, exp: Sequence[int]) -> QPoly:
        return self._terms.get(tuple(exp), ZERO)

    def _check_n(self, other: SymPoly):
        if not isinstance(other, SymPoly):
            raise TypeError(f"expected SymPoly, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check_n(other)
        return SymPoly(self.n, list(self._terms.items()) + list(other._terms.items()))

    def scale(self, c: QPoly | int) -> SymPoly:
        return SymPoly(self.n, [(e, v * c) for e, v in self._terms.items()])

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def specialize_last_var_to_one(self) -> SymPoly:
        if self.n == 0:
            raise ValueError("no variable to specialize")
        return SymPoly(self.n - 1, [(e[:-1], c) for e, c in self._terms.items()])

    def eval_q_zero(self) -> SymPoly:
        return SymPoly(self.n, [(e, QPoly((c[0],))) for e, c in self._terms.items()])

    def eval_q(self, q: int) -> dict[Exponent, int]:
        return {e: c(q) for e, c in sorted(self._terms.items())}

    def is_symmetric(self) -> bool:
        for i in range(self.n - 1):
            for e, c in self._terms.items():
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if self._terms.get(swapped) != c:
                    return False
        return True

    def monomial_coefficients(self) -> dict[tuple[int, ...], QPoly]:
        """Coefficients of the monomial symmetric functions (dominant exponents)."""
        return {e: c for e, c in sorted(self._terms.items())
                if all(e[i] >= e[i + 1] for i in range(self.n - 1))}

    def __repr__(self):
        return f"SymPoly({self.n}, {dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}" for i, p in enumerate(e) if p
            )
            coeff = str(c)
            if not mono:
                out.append(coeff)
            elif c == ONE:
                out.append(mono)
            elif len(c.coeffs) == 1 or sum(1 for v in c.coeffs if v) == 1:
                out.append(f"{coeff}*{mono}")
            else:
                out.append(f"({coeff})*{mono}")
        return " + ".join(out)


def sympoly_add(a: SymPoly, b: SymPoly) -> SymPoly:
    return a + b


def sympoly_scale(a: SymPoly, c: QPoly | int) -> SymPoly:
    return a.scale(c)


def sympoly_equal(a: SymPoly, b: SymPoly) -> bool:
    return a == b


def monomial_symmetric(lam: Sequence[int], n: int) -> SymPoly:
    """m_lambda in ``n`` variables with coefficient 1."""
    exps = set(permutations(pad(lam, n)))
    return SymPoly(n, {e: ONE for e in exps})
