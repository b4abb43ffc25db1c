"""Independent reference computations.

Nothing here imports the combinatorial models; these are the ground truth
the models are checked against.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from math import isqrt

import sympy


def colored_partition_counts(colors: int, q_cap: int) -> list[int]:
    """Coefficients of ``prod_{i>=1} (1 - q^i)^(-colors)`` up to ``q^q_cap``."""
    series = [1] + [0] * q_cap
    for _ in range(colors):
        for part in range(1, q_cap + 1):
            for d in range(part, q_cap + 1):
                series[d] += series[d - part]
    return series


def lattice_character(n: int, q_cap: int) -> dict[int, Counter]:
    """Truncated character of the basic representation of affine sl_n.

    Sums ``e^beta q^(|beta|^2 / 2)`` over the root lattice (integer vectors in
    ``Z^n`` with zero sum) and divides by ``phi(q)^(n-1)``. Weights are
    returned with the last coordinate shifted to zero.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    bound = isqrt(2 * q_cap)
    theta: dict[int, Counter] = {d: Counter() for d in range(q_cap + 1)}
    for head in product(range(-bound, bound + 1), repeat=n - 1):
        beta = head + (-sum(head),)
        norm2 = sum(b * b for b in beta)
        if norm2 % 2:
            raise AssertionError("root lattice vectors have even norm")
        d = norm2 // 2
        if d <= q_cap:
            theta[d][tuple(b - beta[-1] for b in beta)] += 1
    eta_inv = colored_partition_counts(n - 1, q_cap)
    out: dict[int, Counter] = {}
    for d in range(q_cap + 1):
        acc = Counter()
        for d0 in range(d + 1):
            for w, m in theta[d0].items():
                acc[w] += m * eta_inv[d - d0]
        out[d] = +acc
    return out


def bialternant_schur(lam, n: int) -> dict[tuple[int, ...], int]:
    """Schur polynomial as ``det(x_i^(lam_j + n - j)) / det(x_i^(n - j))``.

    Returns the monomial coefficients keyed by exponent vector.
    """
    lam = tuple(lam) + (0,) * (n - len(lam))
    xs = sympy.symbols(f"x1:{n + 1}")
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    quotient, remainder = sympy.div(sympy.Poly(num, *xs), sympy.Poly(den, *xs))
    if not remainder.is_zero:
        raise AssertionError("alternant division left a remainder")
    return {tuple(m): int(c) for m, c in quotient.terms()}
