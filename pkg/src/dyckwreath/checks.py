"""Invariant sweeps over small parameter ranges.

Each ``check_*`` function returns ``None`` when every case passes, or a short
description of the first counterexample.  The lattice-path sweeps are sized
by the number of steps ``alpha + beta``; the Dyck-path sweeps by ``k``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator

from .ballot import EAST, NORTH, LatticePoint, NEPath, count_ne_free, count_ne_upper, enumerate_ne_upper
from .binomial import binom
from .bijections import (
    claim_backward,
    claim_endpoints,
    claim_forward,
    flipped_endpoint,
    reflect_flip,
    reflect_flip_inverse,
)
from .dyck import catalan, stat_brute_row
from .formulas import (
    stat,
    stat_alternative,
    stat_m_eq_k,
    stat_m_eq_k_minus_1,
    stat_m_eq_k_plus_1,
    stat_theorem1,
)
from .wreath import check_necessary_condition

#: Above this ``k`` the Dyck-path oracle is skipped by the formula suites.
BRUTE_MAX_K = 10


def _triples(max_k: int) -> Iterator[tuple[int, int, int]]:
    for k in range(max_k + 1):
        for m in range(2 * k + 1):
            for l in range(m + 1):
                yield k, m, l


def check_theorem(max_k: int) -> str | None:
    """Closed form against direct counting over every Dyck path."""
    for k in range(min(max_k, BRUTE_MAX_K) + 1):
        for m in range(2 * k + 1):
            row = stat_brute_row(k, m)
            for l, expected in enumerate(row):
                got = stat(k, m, l)
                if got != expected:
                    return f"N_{k}({m},{l}): formula {got} != brute {expected}"
    return None


def check_alternative(max_k: int) -> str | None:
    for k, m, l in _triples(max_k):
        if 2 * l <= m and stat_theorem1(k, m, l) != stat_alternative(k, m, l):
            return f"k={k} m={m} l={l}: {stat_theorem1(k, m, l)} != {stat_alternative(k, m, l)}"
    return None


def check_corollary(max_k: int) -> str | None:
    for k in range(max_k + 1):
        brute = stat_brute_row(k, k) if k <= BRUTE_MAX_K else None
        for l in range(k + 1):
            want = binom(k, l) ** 2
            if stat(k, k, l) != want or stat_m_eq_k(k, l) != want:
                return f"N_{k}({k},{l}) = {stat(k, k, l)}, expected {want}"
            if brute is not None and brute[l] != want:
                return f"oracle N_{k}({k},{l}) = {brute[l]}, expected {want}"
    return None


def check_remarks(max_k: int) -> str | None:
    """The m = k + 1 and m = k - 1 specialisations on their stated domains."""
    for k in range(max_k + 1):
        if k == 0:
            continue
        up = stat_brute_row(k, k + 1) if k <= BRUTE_MAX_K else None
        for l in range((k + 1) // 2 + 1):
            v = stat_m_eq_k_plus_1(k, l)
            if v != stat(k, k + 1, l) or (up is not None and v != up[l]):
                return f"m=k+1 formula fails at k={k}, l={l}"
        down = stat_brute_row(k, k - 1) if k <= BRUTE_MAX_K else None
        for l in range((k - 1) // 2 + 1):
            v = stat_m_eq_k_minus_1(k, l)
            if v != stat(k, k - 1, l) or (down is not None and v != down[l]):
                return f"m=k-1 formula fails at k={k}, l={l}"
    return None


def check_symmetry(max_k: int) -> str | None:
    for k, m, l in _triples(max_k):
        if stat(k, m, l) != stat(k, m, m - l):
            return f"N_{k}({m},{l}) != N_{k}({m},{m - l})"
    return None


def check_rowsum(max_k: int) -> str | None:
    for k in range(max_k + 1):
        for m in range(2 * k + 1):
            total = sum(stat(k, m, l) for l in range(m + 1))
            if total != catalan(k) * (2 * k - m + 1):
                return f"row k={k}, m={m} sums to {total}"
    return None


def _claim_cells(max_k: int) -> Iterator[tuple[int, int, int, int]]:
    for k in range(max_k + 1):
        for m in range(2 * k + 1):
            for l in range(m // 2 + 1):
                for d in range(k + l - m + 1):
                    yield k, m, l, d


def _claim_rhs(k: int, m: int, l: int, d: int) -> int:
    return binom(2 * k - m + 1, k - m + l - d) - binom(2 * k - m + 1, k - m + l - d - 1)


def check_claim_identity(max_k: int) -> str | None:
    for k, m, l, d in _claim_cells(max_k):
        lhs = sum(
            count_ne_upper((0, 0), (i, i + d)) * count_ne_upper((i + l, i + d + m - l), (k, k))
            for i in range(k + l - m - d + 1)
        )
        if lhs != _claim_rhs(k, m, l, d):
            return f"claim sum fails at k={k} m={m} l={l} d={d}: {lhs} != {_claim_rhs(k, m, l, d)}"
    return None


def check_claim_bijection(max_k: int) -> str | None:
    """Round-trip and image set of the ``(W, i) -> W'`` map on every cell."""
    for k, m, l, d in _claim_cells(max_k):
        params = (k, m, l, d)
        start, new_start, end = claim_endpoints(*params)
        images = set()
        pairs = 0
        for w in enumerate_ne_upper(start, end):
            visited = set(w.points())
            for i in range(k + l - m - d + 1):
                if (-i, -i) not in visited:
                    continue
                pairs += 1
                w2 = claim_forward(w, i, params)
                if claim_backward(w2, params) != (w, i):
                    return f"claim round trip fails at {params}, i={i}, W={w.steps}"
                if w2 in images:
                    return f"claim map not injective at {params}"
                images.add(w2)
        touching = {p for p in enumerate_ne_upper(new_start, end) if any(q.x == q.y for q in p.points())}
        if images != touching:
            return f"claim image is not the set of diagonal-touching paths at {params}"
        if pairs != _claim_rhs(*params):
            return f"claim pair count {pairs} != {_claim_rhs(*params)} at {params}"
    return None


def _step_words(alpha: int, beta: int) -> Iterator[str]:
    for easts in itertools.combinations(range(alpha + beta), beta):
        word = [NORTH] * (alpha + beta)
        for j in easts:
            word[j] = EAST
        yield "".join(word)


def _stays_upper(delta: int, word: str) -> bool:
    for s in word:
        delta += 1 if s == NORTH else -1
        if delta < 0:
            return False
    return True


def _boxes(max_steps: int) -> Iterator[tuple[LatticePoint, int, int]]:
    """Origins ``(0, delta)`` with displacement ``(beta, alpha)``, ``delta`` from 0 to ``beta + 1``."""
    for total in range(max_steps + 1):
        for beta in range(total + 1):
            alpha = total - beta
            for delta in range(beta + 2):
                yield LatticePoint(0, delta), alpha, beta


def check_lemma4(max_steps: int) -> str | None:
    """Counting formula against enumeration, plus the zero cases and diagonal shifts."""
    for origin, alpha, beta in _boxes(max_steps):
        end = origin.shift(beta, alpha)
        got = count_ne_upper(origin, end)
        expected = sum(1 for w in _step_words(alpha, beta) if _stays_upper(origin.y - origin.x, w))
        if got != expected:
            return f"count_ne_upper{(origin, end)} = {got}, enumeration gives {expected}"
        if len(enumerate_ne_upper(origin, end)) != expected:
            return f"enumerate_ne_upper{(origin, end)} length differs from {expected}"
        for j in (-3, -1, 2, 5):
            if count_ne_upper(origin.shift(j, j), end.shift(j, j)) != got:
                return f"diagonal shift by {j} changes count at {(origin, end)}"
        # reversed displacement and a below-diagonal origin both give zero
        if (alpha or beta) and count_ne_upper(end, origin) != 0:
            return f"count_ne_upper{(end, origin)} should vanish"
        below = LatticePoint(origin.y + 1, origin.y)
        if count_ne_upper(below, below.shift(beta, alpha + 2)) != 0:
            return f"count from below-diagonal origin {below} should vanish"
    return None


def check_reflection(max_steps: int) -> str | None:
    """The flip is a bijection from dipping paths onto all free paths to the flipped endpoint.

    Only boxes whose endpoint is on or above the diagonal qualify.
    """
    for origin, alpha, beta in _boxes(max_steps):
        end = origin.shift(beta, alpha)
        if end.x > end.y:
            continue
        target = flipped_endpoint(origin, end)
        images = set()
        for word in _step_words(alpha, beta):
            w = NEPath(origin, word)
            if _stays_upper(origin.y, word):
                continue
            img = reflect_flip(w)
            if img.end != target:
                return f"flip of {word} from {origin} ends at {img.end}, expected {target}"
            if reflect_flip_inverse(img) != w:
                return f"flip round trip fails for {word} from {origin}"
            images.add(img.steps)
        expected = count_ne_free(origin, target)
        if len(images) != expected or expected != binom(alpha + beta, beta - origin.y - 1):
            return f"flip image size {len(images)} != {expected} for box {(origin, end)}"
    return None


def check_necessary(max_k: int) -> str | None:
    for k in range(max_k + 1):
        if not check_necessary_condition(k):
            return f"necessary condition fails at k={k}"
    return None


def _bijections(max_k: int) -> str | None:
    return check_reflection(2 * max_k) or check_claim_bijection(max_k)


def _claim(max_k: int) -> str | None:
    return check_claim_identity(max_k) or check_claim_bijection(min(max_k, 5))


SUITES: dict[str, Callable[[int], "str | None"]] = {
    "theorem": lambda k: check_theorem(k) or check_alternative(k),
    "corollary": lambda k: check_corollary(k) or check_remarks(k),
    "symmetry": check_symmetry,
    "rowsum": check_rowsum,
    "claim": _claim,
    "lemma4": lambda k: check_lemma4(2 * k),
    "bijections": _bijections,
    "necessary": check_necessary,
}
