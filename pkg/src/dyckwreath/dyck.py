"""Dyck paths, their reflections, and the interval fall-count statistic by direct counting.

A path of semilength ``k`` is stored as an integer bit mask of its ``2k`` steps:
bit ``j - 1`` is set when step ``j`` is a rise.  The text form uses ``U`` for a
rise and ``D`` for a fall, e.g. ``"UUDD"``.

Paths are ordered lexicographically with rise before fall, so for ``k = 2``
the canonical order is ``UUDD, UDUD``.  Step indices are 1-based everywhere in
the public API.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .binomial import binom
from .errors import CapacityError, DomainError

RISE = "U"
FALL = "D"

#: Largest semilength :func:`enumerate_dyck` accepts (C_14 = 2 674 440 paths).
MAX_ENUM_K = 14


@functools.total_ordering
@dataclass(frozen=True)
class DyckPath:
    bits: int
    semilength: int

    def __post_init__(self):
        k = self.semilength
        if k < 0:
            raise DomainError(f"negative semilength {k}")
        if self.bits < 0 or self.bits >> (2 * k):
            raise DomainError(f"bit mask {self.bits:#x} does not fit {2 * k} steps")
        height = 0
        for j in range(2 * k):
            height += 1 if (self.bits >> j) & 1 else -1
            if height < 0:
                raise DomainError(f"path {self.word!r} goes below the axis at step {j + 1}")
        if height != 0:
            raise DomainError(f"path {self.word!r} does not return to the axis")

    @classmethod
    def from_string(cls, word: str) -> DyckPath:
        if len(word) % 2 or set(word) - {RISE, FALL}:
            raise DomainError(f"not a Dyck word over {{U,D}} of even length: {word!r}")
        bits = 0
        for j, c in enumerate(word):
            if c == RISE:
                bits |= 1 << j
        return cls(bits, len(word) // 2)

    @property
    def word(self) -> str:
        return "".join(RISE if (self.bits >> j) & 1 else FALL for j in range(2 * self.semilength))

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return 2 * self.semilength

    def is_rise(self, j: int) -> bool:
        """Whether step ``j`` (1-based) is a rise."""
        if not 1 <= j <= 2 * self.semilength:
            raise DomainError(f"step index {j} outside 1..{2 * self.semilength}")
        return bool((self.bits >> (j - 1)) & 1)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(0 if (self.bits >> j) & 1 else 1 for j in range(2 * self.semilength))

    def __lt__(self, other: DyckPath) -> bool:
        if not isinstance(other, DyckPath):
            return NotImplemented
        return (self.semilength, self.sort_key()) < (other.semilength, other.sort_key())


@dataclass(frozen=True)
class Interval:
    """``length`` consecutive steps of a path starting at 1-based step ``start``."""

    start: int
    length: int
    fall_count: int


def _words(k: int) -> Iterator[str]:
    buf: list[str] = []

    def rec(rises: int, falls: int):
        if rises == falls == k:
            yield "".join(buf)
            return
        if rises < k:
            buf.append(RISE)
            yield from rec(rises + 1, falls)
            buf.pop()
        if falls < rises:
            buf.append(FALL)
            yield from rec(rises, falls + 1)
            buf.pop()

    yield from rec(0, 0)


def iter_dyck(k: int) -> Iterator[DyckPath]:
    """Yield every Dyck ``k``-path in canonical order (rise before fall)."""
    if k < 0:
        raise DomainError(f"negative semilength {k}")
    if k > MAX_ENUM_K:
        raise CapacityError(f"enumeration ceiling is k={MAX_ENUM_K}, got k={k}")
    for w in _words(k):
        yield DyckPath.from_string(w)


@functools.lru_cache(maxsize=16)
def _dyck_tuple(k: int) -> tuple[DyckPath, ...]:
    return tuple(iter_dyck(k))


def enumerate_dyck(k: int) -> list[DyckPath]:
    """All Dyck ``k``-paths in canonical order; there are :func:`catalan` ``(k)`` of them."""
    return list(_dyck_tuple(k))


def catalan(k: int) -> int:
    if k < 0:
        raise DomainError(f"negative index {k}")
    return binom(2 * k, k) // (k + 1)


def reflect(path: DyckPath) -> DyckPath:
    """Mirror ``path`` in the vertical line through its midpoint.

    Step ``j`` of the result is the opposite of step ``2k + 1 - j``.
    """
    n = 2 * path.semilength
    bits = 0
    for j in range(n):
        if not (path.bits >> (n - 1 - j)) & 1:
            bits |= 1 << j
    return DyckPath(bits, path.semilength)


def _check_window(k: int, m: int, l: int) -> None:
    if not 0 <= l <= m <= 2 * k:
        raise DomainError(f"need 0 <= l <= m <= 2k, got k={k}, m={m}, l={l}")


def intervals(path: DyckPath, m: int) -> Iterator[Interval]:
    """Every length-``m`` window of ``path``, left to right."""
    _check_window(path.semilength, m, 0)
    mask = (1 << m) - 1
    for s in range(1, 2 * path.semilength - m + 2):
        rises = ((path.bits >> (s - 1)) & mask).bit_count()
        yield Interval(s, m, m - rises)


def stat_path(path: DyckPath, m: int, l: int) -> int:
    """Number of length-``m`` windows of ``path`` holding exactly ``l`` falls.

    Empty windows count: with ``m = l = 0`` the answer is ``2k + 1``.
    """
    _check_window(path.semilength, m, l)
    return sum(1 for iv in intervals(path, m) if iv.fall_count == l)


def _fall_histogram(path: DyckPath, m: int) -> list[int]:
    hist = [0] * (m + 1)
    for iv in intervals(path, m):
        hist[iv.fall_count] += 1
    return hist


def stat_brute(k: int, m: int, l: int) -> int:
    """Sum of :func:`stat_path` over all Dyck ``k``-paths."""
    _check_window(k, m, l)
    return sum(stat_path(p, m, l) for p in _dyck_tuple(k))


def stat_brute_row(k: int, m: int) -> list[int]:
    """``[stat_brute(k, m, l) for l in 0..m]`` in a single pass over the paths."""
    _check_window(k, m, 0)
    row = [0] * (m + 1)
    for p in _dyck_tuple(k):
        for l, c in enumerate(_fall_histogram(p, m)):
            row[l] += c
    return row
