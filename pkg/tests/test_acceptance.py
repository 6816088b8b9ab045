"""Exit criteria for the package.

Every comparison is exact integer or set equality; there are no tolerances.
Each test appends one PASS/FAIL line that pytest prints in the terminal
summary under "acceptance criteria".
"""

import itertools
import time
from contextlib import contextmanager

import pytest
from conftest import ACCEPTANCE_LINES

from dyckwreath.binomial import binom
from dyckwreath.bijections import interval_subset_map
from dyckwreath.checks import (
    check_claim_bijection,
    check_claim_identity,
    check_lemma4,
    check_reflection,
)
from dyckwreath.dyck import catalan, enumerate_dyck, intervals, reflect, stat_brute_row
from dyckwreath.formulas import (
    stat,
    stat_alternative,
    stat_m_eq_k_minus_1,
    stat_m_eq_k_plus_1,
    stat_theorem1,
)
from dyckwreath.search import search_witness
from dyckwreath.wreath import (
    Permutation,
    check_necessary_condition,
    verify_decomposition,
    verify_witness,
    wreath_from_permutation,
)


@contextmanager
def criterion(label):
    t0 = time.monotonic()
    state = {"detail": ""}
    try:
        yield state
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {label}  {state['detail']}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label}  ({time.monotonic() - t0:.2f}s) {state['detail']}")


def test_ac01_oracle_equals_theorem():
    with criterion("AC1  brute force == closed form, all 0<=l<=m<=2k, k<=8") as c:
        cells = 0
        for k in range(9):
            for m in range(2 * k + 1):
                oracle = stat_brute_row(k, m)
                for l in range(m + 1):
                    assert stat(k, m, l) == oracle[l], (k, m, l)
                    cells += 1
        c["detail"] = f"{cells} cells"


def test_ac02_corollary():
    with criterion("AC2  N_k(k,l) == C(k,l)^2 for k<=12, oracle-confirmed for k<=8"):
        for k in range(13):
            for l in range(k + 1):
                assert stat(k, k, l) == binom(k, l) ** 2, (k, l)
            if k <= 8:
                assert stat_brute_row(k, k) == [binom(k, l) ** 2 for l in range(k + 1)], k


def test_ac03_remark_formulas():
    with criterion("AC3  m=k+1 and m=k-1 formulas == closed form == oracle, k<=8"):
        for k in range(1, 9):
            up = stat_brute_row(k, k + 1)
            for l in range((k + 1) // 2 + 1):
                v = stat_m_eq_k_plus_1(k, l)
                assert v == binom(k, l - 1) * binom(k, l)
                assert v == stat_theorem1(k, k + 1, l) == up[l], (k, l)
            down = stat_brute_row(k, k - 1)
            for l in range((k - 1) // 2 + 1):
                v = stat_m_eq_k_minus_1(k, l)
                assert v == stat_theorem1(k, k - 1, l) == down[l], (k, l)


def test_ac04_alternative_formula():
    with criterion("AC4  closed form == alternative form, all 2l<=m<=2k, k<=12") as c:
        n = 0
        for k in range(13):
            for m in range(2 * k + 1):
                for l in range(m // 2 + 1):
                    assert stat_theorem1(k, m, l) == stat_alternative(k, m, l), (k, m, l)
                    n += 1
        c["detail"] = f"{n} cells"


def test_ac05_lemma4_counts():
    with criterion("AC5  NE upper path count == enumeration, alpha+beta<=14"):
        assert check_lemma4(14) is None


def test_ac06_reflection_bijection():
    with criterion("AC6  reflection flip bijective with image C(a+b, b-delta-1), alpha+beta<=12"):
        assert check_reflection(12) is None


def test_ac07_claim():
    with criterion("AC7  claim sum identity k<=8; claim bijection round-trips k<=5"):
        assert check_claim_identity(8) is None
        assert check_claim_bijection(5) is None


def test_ac08_necessary_condition():
    with criterion("AC8  interval counts == zero-free subset split counts, k<=6"):
        for k in range(7):
            assert check_necessary_condition(k), k


def test_ac09_worked_example():
    with criterion("AC9  the two Z_5 wreaths of 3-sets decompose all C(5,3) sets"):
        w1 = wreath_from_permutation(Permutation.identity(5), 3)
        w2 = wreath_from_permutation(Permutation((0, 2, 4, 1, 3)), 3)
        assert {tuple(sorted(s)) for s in w1} == {(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)}
        assert {tuple(sorted(s)) for s in w2} == {(0, 2, 4), (1, 2, 4), (1, 3, 4), (0, 1, 3), (0, 2, 3)}
        assert verify_decomposition([w1, w2], 5, 3)


WITNESS_CASES = [(k, v) for k in (1, 2, 3, 4) for v in ("weak", "strong")]


@pytest.mark.parametrize("k, variant", WITNESS_CASES)
def test_ac10_conjecture_reproduction(k, variant, witness):
    with criterion(f"AC10 search finds + verifier confirms {variant} witness, k={k}") as c:
        t0 = time.monotonic()
        w = witness(k, variant)
        assert len(w.assignments) == catalan(k)
        assert verify_witness(w, variant)
        c["detail"] = f"{len(w.assignments)} permutations, search {time.monotonic() - t0:.1f}s"


def test_ac10_strong_k4_under_a_minute():
    with criterion("AC10 strong k=4 search within 60s"):
        res = search_witness(4, "strong", time_limit=60)
        assert res.stats.elapsed < 60


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_ac11_strong_implies_weak(k, witness):
    with criterion(f"AC11 strong witness passes weak check and reflection identity, k={k}"):
        w = witness(k, "strong")
        assert verify_witness(w, "weak")
        n = 2 * k + 1
        for path in enumerate_dyck(k):
            pi, rho = w.permutation_for(path), w.permutation_for(reflect(path))
            for j in range(n):
                assert (pi(j) + rho(-j)) % n == 0, (path, j)


@pytest.mark.parametrize("k, variant", WITNESS_CASES)
def test_ac12_interval_subset_bijection(k, variant, witness):
    with criterion(f"AC12 interval -> zero-free subset bijection, {variant} witness, k={k}"):
        w = witness(k, variant)
        mapping = interval_subset_map(w)
        zero_free = {frozenset(c) for c in itertools.combinations(range(1, 2 * k + 1), k)}
        assert len(mapping) == len(set(mapping.values())) == binom(2 * k, k)
        assert set(mapping.values()) == zero_free
        per_l = [0] * (k + 1)
        for path in w.paths():
            for iv in intervals(path, k):
                s = mapping[(path, iv.start)]
                assert sum(1 for x in s if x > k) == iv.fall_count
                per_l[iv.fall_count] += 1
        assert per_l == [stat(k, k, l) for l in range(k + 1)] == [binom(k, l) ** 2 for l in range(k + 1)]
