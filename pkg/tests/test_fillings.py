import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwhittaker.algebra import eta, interlaces, partition
from qwhittaker.fillings import (
    Filling,
    NotColumnStrictError,
    cells,
    dsplice,
    enumerate_csf,
    enumerate_fiber,
    enumerate_fillings,
    inv,
    is_csf,
    is_wdf,
    maj,
    quinv,
    refinv_triples,
    row_sorted,
    rsort,
    splice,
    zcb,
    zcb_table,
    zcount,
    zcount_table,
)
from qwhittaker.patterns import GTPattern, area, enumerate_gt

from conftest import REF_PATTERN_ROWS, REF_FILLING_ROWS


def naive_triples(F, right):
    """Direct O(cells^2) triple count straight from the definition."""
    count = 0
    for r, row in enumerate(F.rows):
        for cx, fx in enumerate(row):
            below = F.rows[r + 1][cx] if r + 1 < len(F.rows) and cx < len(F.rows[r + 1]) else float("inf")
            for cz, fz in enumerate(row):
                if (cz > cx) == right and cz != cx and fx < fz < below:
                    count += 1
    return count


def test_ref_filling_statistics(ref_filling):
    F = ref_filling
    assert is_csf(F) and not is_wdf(F)
    assert quinv(F) == 12
    assert inv(F) == 5
    assert maj(F) == 14 == eta((10, 6, 4))
    assert rsort(F).rows == REF_PATTERN_ROWS


def test_ref_filling_zcount_table(ref_filling):
    assert zcount_table(ref_filling) == (
        (0, 0, 0, 0, 1, 0, 2, 1, 1, 2),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 2, 2),
    )
    assert zcount((1, 7), ref_filling) == 2
    assert zcount((3, 3), ref_filling) == 2


def test_ref_filling_zcb(ref_filling):
    assert zcb((1, 10), ref_filling) == 0
    assert zcb((1, 8), ref_filling) == 1
    assert sum(map(sum, zcb_table(ref_filling))) == 5


def test_ref_filling_cells(ref_filling):
    assert [c for _, c in cells(1, 1, ref_filling)] == [3, 5, 7]
    assert [c for _, c in cells(2, 2, ref_filling)] == [3, 4, 5]


def test_row_sorted_tableau_statistics():
    T = Filling(4, tuple(tuple(sorted(r)) for r in REF_FILLING_ROWS))
    assert row_sorted(T) == T
    assert inv(T) == 0
    assert quinv(T) == 17 == area(GTPattern(REF_PATTERN_ROWS))
    assert all(v == 0 for row in zcb_table(T) for v in row)


def test_small_inv(small_filling):
    assert inv(small_filling) == 3
    assert len(refinv_triples(small_filling)) == 3


@pytest.mark.parametrize("rows,n,expected", [
    (((1, 2),), 2, 1),
    (((2, 1),), 2, 0),
    (((1,), (2,)), 2, 0),
])
def test_small_quinv(rows, n, expected):
    assert quinv(Filling(n, rows)) == expected


def test_predicates():
    assert is_csf(Filling(3, ((2, 1, 3),))) and is_wdf(Filling(3, ((2, 1, 3),)))
    col = Filling(2, ((2,), (2,)))
    assert not is_csf(col) and is_wdf(col)
    assert maj(Filling(2, ((1,), (2,)))) == 1


def test_statistics_reject_non_csf():
    F = Filling(2, ((2,), (1,)))
    for fn in (inv, quinv):
        with pytest.raises(NotColumnStrictError):
            fn(F)


def test_filling_validation():
    with pytest.raises(ValueError):
        Filling(2, ((3,),))
    with pytest.raises(ValueError):
        Filling(2, ((1,), (1, 2)))


@pytest.mark.parametrize("sigma,tau,expected", [
    ((1, 5), (2, 3, 4), ((1, 3, 4), (2, 5))),
    ((), (7,), ((7,), ())),
    ((2,), (1, 3), ((2, 3), (1,))),
])
def test_splice_examples(sigma, tau, expected):
    assert splice(sigma, tau) == expected


@pytest.mark.parametrize("rows,n,expected", [
    (((3, 1), (4, 2)), 4, ((1, 3), (2,))),
    (((1, 3), (3,)), 3, ((1,),)),
    (((1, 2), (2,)), 3, ((1, 2), (2,))),
])
def test_dsplice_examples(rows, n, expected):
    D = dsplice(Filling(n, rows))
    assert D.rows == expected
    assert D.n == n - 1


def test_triples_match_naive_count():
    for lam in [(3, 2), (4, 1, 1), (2, 2, 2)]:
        for F in enumerate_csf(lam, 3):
            assert inv(F) == naive_triples(F, right=False)
            assert quinv(F) == naive_triples(F, right=True)


@pytest.mark.parametrize("lam,n", [((2, 1), 3), ((3, 2), 3), ((2, 2, 1), 4)])
def test_fiber_enumeration_matches_grouping(lam, n):
    grouped = {}
    for F in enumerate_csf(lam, n):
        grouped.setdefault(rsort(F), set()).add(F)
    for T in enumerate_gt(lam, n):
        assert set(enumerate_fiber(T)) == grouped[T]


def test_enumerate_fillings_count():
    assert sum(1 for _ in enumerate_fillings((2, 1), 3)) == 27


csf_strategy = st.sampled_from(
    [F for lam in [(3, 2, 1), (4, 2), (3, 3), (2, 2, 1, 1)] for F in enumerate_csf(lam, 4)]
)


@settings(max_examples=200, deadline=None)
@given(csf_strategy, st.integers(0, 2**32))
def test_dsplice_properties(F, seed):
    D = dsplice(F)
    assert dsplice(F, random.Random(seed)) == D
    assert is_csf(D)
    assert interlaces(partition(D.shape), partition(F.shape), F.n)
    assert rsort(D).rows == rsort(F).rows[:-1]


@settings(max_examples=200, deadline=None)
@given(csf_strategy)
def test_inv_plus_quinv_is_area(F):
    assert inv(F) + quinv(F) == area(rsort(F))
    assert maj(F) == eta(partition(F.shape))
