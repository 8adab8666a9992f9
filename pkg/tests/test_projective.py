from collections import Counter
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from frobcok.projective import ScanRangeError, fstar_decompose_pn, fstar_positivity, threshold_scan
from frobcok.verdict import Positivity


def oracle_twists(n, p, d):
    """Twist multiset from the monomial factorisation x^a (x^b)^p, by enumeration."""
    out = Counter()
    for a in product(range(p), repeat=n + 1):
        if (d - sum(a)) % p == 0:
            out[(d - sum(a)) // p] += 1
    return dict(out)


def test_examples():
    # the first one was fixed by running the oracle: monomials 1 and x0*x1
    assert oracle_twists(1, 2, 0) == {0: 1, -1: 1}
    assert fstar_decompose_pn(1, 2, 0).summands == {0: 1, -1: 1}
    assert fstar_decompose_pn(1, 2, 1).summands == {0: 2}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_matches_oracle(n, p):
    for d in range(-12, 30):
        dec = fstar_decompose_pn(n, p, d)
        assert dec.summands == oracle_twists(n, p, d)
        assert dec.rank == p ** n


@pytest.mark.parametrize("n,p,d", [(2, 3, 5), (3, 2, -4), (1, 7, 11)])
def test_section_count(n, p, d):
    dec = fstar_decompose_pn(n, p, d)
    h0 = lambda e: comb(e + n, n) if e >= 0 else 0
    for k in range(6):
        assert sum(m * h0(t + k) for t, m in dec.summands.items()) == h0(d + p * k)


def test_positivity_examples():
    assert fstar_positivity(1, 2, 1) is Positivity.NEF_NOT_AMPLE
    v = fstar_positivity(2, 3, 6)
    assert v.is_nef  # 6 >= n(p-1) = 4 with p > n
    assert v is Positivity.NEF_NOT_AMPLE
    assert fstar_positivity(2, 3, 8) is Positivity.AMPLE


def test_threshold_examples():
    assert threshold_scan(1, 3, range(-5, 20)).min_nef_d == 2
    assert threshold_scan(1, 2, range(-5, 20)).min_nef_d == 1
    assert threshold_scan(2, 5, range(-5, 30)).min_nef_d == 8


def test_threshold_small_p_recorded():
    # p <= n: no asserted closed form, just stable data
    s = threshold_scan(3, 2, range(-5, 20))
    assert (s.min_nef_d, s.min_ample_d) == (3, 5)


def test_scan_range_errors():
    with pytest.raises(ScanRangeError):
        threshold_scan(1, 3, range(5, 20))
    with pytest.raises(ScanRangeError):
        threshold_scan(1, 3, range(-5, 2))
    with pytest.raises(ScanRangeError):
        threshold_scan(1, 3, [])


@given(n=st.integers(1, 4), p=st.sampled_from([2, 3, 5, 7]), d=st.integers(-20, 40))
def test_duality_and_monotone(n, p, d):
    dec = fstar_decompose_pn(n, p, d)
    dual = fstar_decompose_pn(n, p, (n + 1) * (p - 1) - d)
    assert sorted(-m for m in dec.twists()) == dual.twists()
    assert fstar_decompose_pn(n, p, d + 1).min_twist >= dec.min_twist


def test_rejects():
    with pytest.raises(ValueError):
        fstar_decompose_pn(0, 2, 1)
    with pytest.raises(ValueError):
        fstar_decompose_pn(2, 6, 1)
