import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckwreath.binomial import binom
from dyckwreath.dyck import catalan, stat_brute_row
from dyckwreath.errors import DomainError
from dyckwreath.formulas import (
    stat,
    stat_alternative,
    stat_m_eq_k,
    stat_m_eq_k_minus_1,
    stat_m_eq_k_plus_1,
    stat_row,
    stat_theorem1,
)


def test_theorem1_examples():
    # d=0 term (2-1)(3-1) plus d=1 term (2-0)(1-0)
    assert stat_theorem1(2, 2, 1) == 4
    assert stat_theorem1(2, 4, 2) == 2 == catalan(2)
    assert stat_theorem1(3, 3, 1) == 9


def test_theorem1_empty_sum():
    # k + l - m < 0 leaves no terms
    assert stat_theorem1(3, 6, 0) == 0
    assert stat_theorem1(4, 7, 0) == 0


def test_alternative_examples():
    assert stat_alternative(2, 2, 1) == 4
    assert stat_alternative(2, 2, 0) == 1


def test_special_cases():
    assert stat_m_eq_k(4, 2) == 36
    assert stat_m_eq_k(5, 0) == 1
    assert stat_m_eq_k_plus_1(3, 1) == 3
    assert stat_m_eq_k_plus_1(3, 0) == 0
    assert stat_m_eq_k_minus_1(2, 0) == 4
    assert stat_m_eq_k_minus_1(3, 1) == 20 - 3 - 2


def test_dispatcher_examples():
    assert stat(2, 2, 2) == 1
    assert stat(3, 0, 0) == 35 == binom(7, 3)
    assert stat(0, 0, 0) == 1
    assert stat(10, 13, 4) == stat_theorem1(10, 13, 4) == stat_alternative(10, 13, 4)
    assert stat_row(4, 4) == [1, 16, 36, 16, 1]


@pytest.mark.parametrize(
    "fn, args",
    [
        (stat_theorem1, (2, 2, 2)),
        (stat_theorem1, (2, 5, 1)),
        (stat_alternative, (1, 1, 1)),
        (stat_m_eq_k, (3, 4)),
        (stat_m_eq_k_plus_1, (3, 3)),
        (stat_m_eq_k_minus_1, (0, 0)),
        (stat_m_eq_k_minus_1, (4, 2)),
        (stat, (2, 5, 1)),
        (stat, (2, 2, 3)),
        (stat, (2, 2, -1)),
    ],
)
def test_domain_errors(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


@pytest.mark.parametrize("k", range(9))
def test_dispatcher_matches_oracle(k):
    for m in range(2 * k + 1):
        assert stat_row(k, m) == stat_brute_row(k, m)


def test_m_zero_degenerate():
    for k in range(10):
        assert stat(k, 0, 0) == binom(2 * k + 1, k)


triple = st.integers(0, 12).flatmap(
    lambda k: st.integers(0, 2 * k).flatmap(lambda m: st.tuples(st.just(k), st.just(m), st.integers(0, m)))
)


@given(triple)
def test_symmetry(kml):
    k, m, l = kml
    assert stat(k, m, l) == stat(k, m, m - l)


@given(triple)
def test_theorem_equals_alternative(kml):
    k, m, l = kml
    l = min(l, m - l)
    assert stat_theorem1(k, m, l) == stat_alternative(k, m, l)


@pytest.mark.parametrize("k", range(13))
def test_row_sums(k):
    for m in range(2 * k + 1):
        assert sum(stat_row(k, m)) == catalan(k) * (2 * k - m + 1)


@pytest.mark.parametrize("k", range(1, 13))
def test_specialisations_agree_with_dispatcher(k):
    for l in range(k + 1):
        assert stat(k, k, l) == stat_m_eq_k(k, l)
    for l in range((k + 1) // 2 + 1):
        assert stat(k, k + 1, l) == stat_m_eq_k_plus_1(k, l)
    for l in range((k - 1) // 2 + 1):
        assert stat(k, k - 1, l) == stat_m_eq_k_minus_1(k, l)
