import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckegaps.gaussian_split import (
    SplitTable,
    canonical_split,
    cornacchia,
    hecke_angle,
    in_P_eps,
    split_range,
    theta_of,
)
from heckegaps.prime_engine import primes_in

SPLIT_PRIMES_BELOW_1000 = [int(p) for p in primes_in(2, 1000) if p % 4 == 1]


def brute_two_squares(p):
    """Exhaustive oracle for p = a^2 + b^2 with a odd, b even, both > 0."""
    a = 1
    while a * a <= p:
        b2 = p - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return (a, b) if a % 2 == 1 else (b, a)
        a += 1
    return None


def test_cornacchia_frozen_values():
    assert cornacchia(5, 1) == (1, 2)
    assert cornacchia(13, 1) == (3, 2)
    assert cornacchia(29, 1) == (5, 2)
    assert cornacchia(2, 1) == (1, 1)
    assert cornacchia(7, 1) is None
    assert cornacchia(29, 7) == (1, 2)   # 1 + 7*4 = 29
    assert cornacchia(31, 3) == (2, 3)   # 4 + 3*9 = 31
    assert cornacchia(11, 3) is None     # 11 = x^2+3y^2 has no solution


def test_cornacchia_rejects_bad_inputs():
    with pytest.raises(ValueError):
        cornacchia(13, 0)
    with pytest.raises(ValueError):
        cornacchia(13, 164)
    with pytest.raises(ValueError):
        cornacchia(15, 1)


@pytest.mark.parametrize("D", [1, 2, 3, 7, 11, 19, 43, 67, 163])
def test_cornacchia_solutions_verify(D):
    for p in primes_in(2, 500):
        got = cornacchia(int(p), D)
        if got is not None:
            a, b = got
            assert a * a + D * b * b == p


def test_canonical_split_frozen():
    s5 = canonical_split(5)
    assert (s5.a, s5.b) == (1, 2)
    assert s5.ratio == pytest.approx(1 / math.sqrt(5))
    s13 = canonical_split(13)
    assert (s13.a, s13.b) == (-3, 2)
    assert s13.theta == pytest.approx(0.6256659163780025)
    s17 = canonical_split(17)
    assert (s17.a, s17.b) == (1, 4)
    assert canonical_split(2) is None
    assert canonical_split(7) is None
    assert canonical_split(3) is None


@given(st.sampled_from(SPLIT_PRIMES_BELOW_1000))
def test_canonical_split_invariants(p):
    s = canonical_split(p)
    assert s is not None
    assert s.a * s.a + s.b * s.b == p
    assert s.a % 4 == 1
    assert s.b > 0 and s.b % 2 == 0
    assert abs(s.ratio) <= 1.0
    assert 0.0 <= s.theta < 1.0
    # same magnitudes as the exhaustive oracle; sign fixed by a = 1 mod 4
    oa, ob = brute_two_squares(p)
    assert (abs(s.a), s.b) == (oa, ob)


@given(st.sampled_from(SPLIT_PRIMES_BELOW_1000))
def test_theta_matches_scalar_angle(p):
    s = canonical_split(p)
    assert hecke_angle(s) == s.theta
    assert theta_of(np.array([s.a]), np.array([s.b]))[0] == pytest.approx(s.theta)


def test_hecke_angle_rejects_other_discriminants():
    from heckegaps.gaussian_split import SplitPrime
    s = SplitPrime(p=29, D=7, a=1, b=2, ratio=1 / math.sqrt(29))
    with pytest.raises(ValueError):
        hecke_angle(s)


def test_in_P_eps_frozen():
    assert in_P_eps(5, 0.5)          # |1| <= 0.5*sqrt(5)
    assert not in_P_eps(13, 0.5)     # |-3| > 0.5*sqrt(13)
    assert not in_P_eps(7, 0.5)      # not split at all
    assert in_P_eps(13, 1.0)
    with pytest.raises(ValueError):
        in_P_eps(5, 0.0)
    with pytest.raises(ValueError):
        in_P_eps(5, 1.5)


def test_split_table_small():
    t = SplitTable.build(100)
    assert t.p.tolist() == [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]
    assert np.all(t.a * t.a + t.b * t.b == t.p)
    assert np.all(t.a % 4 == 1)
    assert np.all(t.b > 0)
    assert np.all(np.abs(t.ratios()) <= 1.0)
    ang = t.angles()
    assert np.all((ang >= 0.0) & (ang < 1.0))


def test_split_range_matches_scalar():
    p, a, b = split_range(2, 20000)
    for i in range(p.size):
        s = canonical_split(int(p[i]))
        assert (s.a, s.b) == (int(a[i]), int(b[i]))


@given(st.integers(min_value=2, max_value=5000), st.integers(min_value=100, max_value=3000))
def test_split_range_windows_consistent(lo, width):
    p, a, b = split_range(lo, lo + width)
    assert np.all(a * a + b * b == p)
    assert np.all(a % 4 == 1)
    assert np.all(b % 2 == 0)
    want = [int(q) for q in primes_in(lo, lo + width) if q % 4 == 1]
    assert p.tolist() == want
