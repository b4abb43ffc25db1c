from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwhittaker.algebra import (
    BoxedPartition,
    QPoly,
    SymPoly,
    box_complement,
    boxed_partitions,
    conjugate,
    eta,
    from_strict_tuple,
    interlaces,
    partition,
    partitions_of,
    qbinom,
    to_strict_tuple,
)


def brute_box_gf(k, l):
    """Sum q^|gamma| over weakly decreasing k-tuples in [0, l], by enumeration."""
    coeffs = [0] * (k * l + 1)
    for parts in product(range(l + 1), repeat=k):
        if all(parts[i] >= parts[i + 1] for i in range(k - 1)):
            coeffs[sum(parts)] += 1
    return coeffs


def brute_conjugate(lam):
    cells = {(r, c) for r, part in enumerate(lam) for c in range(part)}
    width = max((c for _, c in cells), default=-1) + 1
    return tuple(sum(1 for r, c in cells if c == col) for col in range(width))


# ---------------------------------------------------------------------------
# qbinom
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k,l,expected", [
    (0, 5, [1]),
    (3, 0, [1]),
    (2, 2, [1, 1, 2, 1, 1]),
])
def test_qbinom_examples(k, l, expected):
    assert qbinom(k, l) == QPoly(expected)


def test_qbinom_2x2_matches_enumeration():
    assert brute_box_gf(2, 2) == [1, 1, 2, 1, 1]


@pytest.mark.parametrize("k,l", [(k, l) for k in range(7) for l in range(7)])
def test_qbinom_against_box_enumeration(k, l):
    assert list(qbinom(k, l).coeffs) == brute_box_gf(k, l)


@pytest.mark.parametrize("k,l", [(k, l) for k in range(9) for l in range(9)])
def test_qbinom_symmetries(k, l):
    p = qbinom(k, l)
    assert p == qbinom(l, k)
    assert p.coeffs == tuple(reversed(p.coeffs))
    assert p.degree == k * l
    assert p(1) == comb(k + l, k)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("lam,expected", [
    ((), ()),
    ((3, 1), (2, 1, 1)),
    ((10, 6, 4), (3, 3, 3, 3, 2, 2, 1, 1, 1, 1)),
])
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected
    assert brute_conjugate(lam) == expected


@pytest.mark.parametrize("lam,expected", [((1,), 0), ((1, 1, 1), 3), ((10, 6, 4), 14)])
def test_eta(lam, expected):
    assert eta(lam) == expected
    assert sum(h * (h - 1) // 2 for h in brute_conjugate(lam)) == expected


def test_conjugate_is_involution_up_to_size_10():
    for size in range(11):
        for lam in partitions_of(size):
            assert conjugate(conjugate(lam)) == lam
            assert conjugate(lam) == brute_conjugate(lam)


def test_partition_canonical_form():
    assert partition((10, 6, 4, 0)) == partition((10, 6, 4)) == (10, 6, 4)
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_partitions_of_counts():
    # p(n) for n = 0..10
    assert [len(list(partitions_of(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert sorted(partitions_of(4, 2)) == [(2, 2), (3, 1), (4,)]


@pytest.mark.parametrize("mu,lam,n,expected", [
    ((), (5,), 2, True),
    ((8, 5, 2), (10, 6, 4, 0), 4, True),
    ((7,), (5, 1), 2, False),
    ((), (5,), 1, True),
])
def test_interlaces(mu, lam, n, expected):
    assert interlaces(mu, lam, n) is expected


# ---------------------------------------------------------------------------
# Boxed partitions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("parts,k,l,expected", [
    ((2, 2), 2, 2, (0, 0)),
    ((2, 1, 0), 3, 2, (2, 1, 0)),
    ((2,), 1, 2, (0,)),
])
def test_box_complement_examples(parts, k, l, expected):
    assert box_complement(BoxedPartition(parts, k, l)).parts == expected


@pytest.mark.parametrize("parts,k,l,expected", [
    ((), 0, 4, ()),
    ((2, 1, 0), 3, 2, (4, 2, 0)),
    ((1, 1), 2, 3, (2, 1)),
])
def test_strict_tuple_examples(parts, k, l, expected):
    p = BoxedPartition(parts, k, l)
    assert to_strict_tuple(p) == expected
    assert from_strict_tuple(expected, k, l) == p


def test_boxed_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        BoxedPartition((3,), 1, 2)
    with pytest.raises(ValueError):
        BoxedPartition((1, 1, 1), 2, 2)
    with pytest.raises(ValueError):
        from_strict_tuple((1, 1), 2, 2)
    with pytest.raises(ValueError):
        from_strict_tuple((4, 0), 2, 2)


@pytest.mark.parametrize("k,l", [(k, l) for k in range(6) for l in range(6)])
def test_box_properties(k, l):
    boxed = list(boxed_partitions(k, l))
    assert len(boxed) == comb(k + l, k) == qbinom(k, l)(1)
    assert len(set(boxed)) == len(boxed)
    tuples = set()
    for p in boxed:
        c = p.complement()
        assert c.complement() == p
        assert p.size + c.size == k * l
        t = p.to_strict_tuple()
        assert all(0 <= v <= k + l - 1 for v in t)
        assert from_strict_tuple(t, k, l) == p
        tuples.add(t)
    assert len(tuples) == comb(k + l, k)


# ---------------------------------------------------------------------------
# QPoly
# ---------------------------------------------------------------------------

small_polys = st.lists(st.integers(-50, 50), max_size=6).map(QPoly)


@given(small_polys, small_polys, small_polys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPoly()


@given(small_polys, small_polys, st.integers(-5, 5))
def test_qpoly_evaluation_is_a_homomorphism(a, b, q):
    assert (a * b)(q) == a(q) * b(q)
    assert (a + b)(q) == a(q) + b(q)


def test_qpoly_is_exact_for_huge_coefficients():
    big = QPoly([10**40, 1])
    assert (big * big)[0] == 10**80
    assert qbinom(30, 30)(1) == comb(60, 30)


def test_qpoly_normalization_and_str():
    assert QPoly([1, 0, 0]).coeffs == (1,)
    assert QPoly([0, 0]) == QPoly() == 0
    assert str(QPoly([1, 1, 2, 1, 1])) == "1 + q + 2q^2 + q^3 + q^4"
    assert QPoly.monomial(2).shift(1) == QPoly([0, 0, 0, 1])


# ---------------------------------------------------------------------------
# SymPoly
# ---------------------------------------------------------------------------

def w2():
    return SymPoly(2, {(2, 0): QPoly([1]), (1, 1): QPoly([1, 1]), (0, 2): QPoly([1])})


def test_sympoly_add_zero_and_scale():
    P = w2()
    assert P + SymPoly(2) == P
    assert P.scale(QPoly([0, 1])).coefficient((1, 1)) == QPoly([0, 1, 1])
    assert P.scale(0) == SymPoly(2)


def test_sympoly_eval_q_zero():
    P = SymPoly(2, {(1, 1): QPoly([1, 1])})
    assert P.eval_q_zero() == SymPoly(2, {(1, 1): QPoly([1])})


def test_sympoly_symmetry():
    assert w2().is_symmetric()
    assert not SymPoly(2, {(2, 0): QPoly([1])}).is_symmetric()


def test_sympoly_specialize_last_var():
    P = w2().specialize_last_var_to_one()
    assert P.n == 1
    assert dict(P.items()) == {(0,): QPoly([1]), (1,): QPoly([1, 1]), (2,): QPoly([1])}


def test_sympoly_rejects_mixed_n():
    with pytest.raises(ValueError):
        w2() + SymPoly(3)


def test_sympoly_order_is_lexicographic():
    assert [e for e, _ in w2().items()] == [(0, 2), (1, 1), (2, 0)]


def test_sympoly_accumulate_matches_direct_construction():
    pairs = [((1, 0), 0), ((1, 0), 2), ((0, 1), 1), ((1, 0), 2)]
    P = SymPoly.accumulate(2, pairs)
    assert P == SymPoly(2, {(1, 0): QPoly([1, 0, 2]), (0, 1): QPoly([0, 1])})
