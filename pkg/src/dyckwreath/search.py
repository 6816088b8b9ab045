"""Backtracking search for wreath witnesses with n = 2k + 1.

The problem is an exact cover.  The universe is the C(2k+1, k) subsets of
size ``k``; each Dyck path picks one permutation from its candidate list (0
fixed, ``1..k`` placed on the rises, ``k+1..2k`` on the falls, so ``(k!)^2``
candidates) and that candidate covers the ``2k + 1`` sets of its wreath.

Variables are the Dyck paths in canonical order and values are candidates
in lexicographic order of ``(pi(0), ..., pi(2k))``.  A depth-first search in
that order returns the lexicographically least witness, which is what
``deterministic=True`` promises regardless of the worker count.

For the strong variant only one path of each mirror pair is branched on; its
partner's permutation is ``j -> -pi(-j)``.  Self-mirrored paths keep only the
candidates with ``pi(-j) = -pi(j)``.

Each subset is a bit in a big-int cover mask (indexed by its rank), so a
collision test is a single ``&``.  After every placement the remaining
paths' candidate lists are filtered against the cover, and the search
backtracks when a list runs dry or some uncovered subset can no longer be
reached.  A subset that only one remaining path can reach narrows that path's
list to the candidates containing it.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

from .dyck import DyckPath, enumerate_dyck, reflect
from .errors import CapacityError, DomainError
from .wreath import VARIANTS, Permutation, Variant, WreathWitness, verify_witness

#: Largest ``k`` accepted by :func:`search_witness`; a k = 5 strong search ran past five minutes.
MAX_SEARCH_K = 4

#: Environment variable holding the default worker count for the CLI.
WORKERS_ENV = "DYCKWREATH_WORKERS"


class SearchTimeout(CapacityError):
    def __init__(self, message: str, stats: SearchStats):
        super().__init__(message)
        self.stats = stats


@dataclass
class SearchStats:
    k: int
    variant: str
    branch_paths: int = 0
    candidates: list[int] = field(default_factory=list)
    nodes: int = 0
    dead_ends: int = 0
    nodes_per_depth: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    workers: int = 1

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.dead_ends += other.dead_ends
        if len(self.nodes_per_depth) < len(other.nodes_per_depth):
            self.nodes_per_depth += [0] * (len(other.nodes_per_depth) - len(self.nodes_per_depth))
        for i, c in enumerate(other.nodes_per_depth):
            self.nodes_per_depth[i] += c

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "variant": self.variant,
            "branch_paths": self.branch_paths,
            "candidates_per_path": self.candidates,
            "nodes": self.nodes,
            "dead_ends": self.dead_ends,
            "nodes_per_depth": self.nodes_per_depth,
            "elapsed_seconds": round(self.elapsed, 3),
            "workers": self.workers,
        }


@dataclass
class SearchResult:
    witness: WreathWitness | None
    stats: SearchStats

    @property
    def exhausted(self) -> bool:
        return self.witness is None


def _negate(images: tuple[int, ...]) -> tuple[int, ...]:
    n = len(images)
    return tuple((-images[-j % n]) % n for j in range(n))


class _Problem:
    """Candidate tables for one ``(k, variant)``; cheap enough to rebuild per worker."""

    def __init__(self, k: int, variant: Variant):
        self.k = k
        self.variant = variant
        n = self.n = 2 * k + 1
        ranks = {}
        for r, c in enumerate(itertools.combinations(range(n), k)):
            ranks[sum(1 << x for x in c)] = r
        self.universe = (1 << len(ranks)) - 1

        paths = enumerate_dyck(k)
        self.paths = paths
        if variant == "strong":
            self.branch = [p for p in paths if p <= reflect(p)]
        else:
            self.branch = paths

        self.domains: list[list[tuple[int, tuple[int, ...]]]] = []
        for p in self.branch:
            mirrored = variant == "strong"
            self_mirror = mirrored and reflect(p) == p
            dom = []
            for images in self._candidates(p):
                mask = self._cover(images, ranks)
                if mask is None:
                    continue
                if mirrored:
                    partner = _negate(images)
                    if self_mirror:
                        if partner != images:
                            continue
                    else:
                        pmask = self._cover(partner, ranks)
                        if pmask is None or pmask & mask:
                            continue
                        mask |= pmask
                dom.append((mask, images))
            self.domains.append(dom)

    def _candidates(self, path: DyckPath) -> list[tuple[int, ...]]:
        k = self.k
        rises = [j for j in range(1, 2 * k + 1) if path.is_rise(j)]
        falls = [j for j in range(1, 2 * k + 1) if not path.is_rise(j)]
        out = []
        for low in itertools.permutations(range(1, k + 1)):
            for high in itertools.permutations(range(k + 1, 2 * k + 1)):
                images = [0] * (2 * k + 1)
                for j, v in zip(rises, low):
                    images[j] = v
                for j, v in zip(falls, high):
                    images[j] = v
                out.append(tuple(images))
        out.sort()
        return out

    def _cover(self, images: tuple[int, ...], ranks: dict[int, int]) -> int | None:
        """Cover mask of the wreath, or ``None`` if two windows coincide."""
        n, k = self.n, self.k
        mask = 0
        for i in range(n):
            bit = 1 << ranks[sum(1 << images[(i + t) % n] for t in range(1, k + 1))]
            if mask & bit:
                return None
            mask |= bit
        return mask

    def witness(self, choice: list[tuple[int, ...]]) -> WreathWitness:
        perms: dict[DyckPath, tuple[int, ...]] = {}
        for p, images in zip(self.branch, choice):
            perms[p] = images
            if self.variant == "strong":
                perms[reflect(p)] = _negate(images)
        return WreathWitness(self.k, tuple((p, Permutation(perms[p])) for p in self.paths))

    def _propagate(self, covered: int, doms):
        """Filter the remaining domains against ``covered``; ``None`` on a dead end.

        Beyond dropping colliding candidates, two sound rules run to a fixed
        point: every uncovered subset must lie in some remaining candidate, and
        a subset that only one path can still cover must be covered by that
        path's choice.  Neither rule removes a solution, so the first solution
        in search order is unchanged.
        """
        doms = [[c for c in dom if not c[0] & covered] for dom in doms]
        need = self.universe & ~covered
        while True:
            unions = []
            for dom in doms:
                if not dom:
                    return None
                u = 0
                for c in dom:
                    u |= c[0]
                unions.append(u)
            suffix = [0] * (len(doms) + 1)
            for i in range(len(doms) - 1, -1, -1):
                suffix[i] = suffix[i + 1] | unions[i]
            if need & ~suffix[0]:
                return None
            changed = False
            prefix = 0
            for i, dom in enumerate(doms):
                only = need & unions[i] & ~(prefix | suffix[i + 1])
                prefix |= unions[i]
                if only:
                    kept = [c for c in dom if c[0] & only == only]
                    if len(kept) != len(dom):
                        if not kept:
                            return None
                        doms[i] = kept
                        changed = True
            if not changed:
                return doms

    def solve(self, first: range | None = None, deadline: float | None = None):
        """DFS over the branch paths; ``first`` restricts the top-level candidate indices."""
        depth_total = len(self.branch)
        stats = SearchStats(self.k, self.variant, nodes_per_depth=[0] * (depth_total + 1))
        choice: list[tuple[int, ...]] = []
        top = self.domains[0] if first is None else [self.domains[0][i] for i in first]

        def rec(depth: int, covered: int, doms: list[list[tuple[int, tuple[int, ...]]]]) -> bool:
            stats.nodes += 1
            stats.nodes_per_depth[depth] += 1
            if deadline is not None and stats.nodes & 0x3FF == 0 and time.monotonic() > deadline:
                raise SearchTimeout("search deadline reached", stats)
            if depth == depth_total:
                return covered == self.universe
            for mask, images in doms[0]:
                now = covered | mask
                rest = self._propagate(now, doms[1:])
                if rest is None:
                    stats.dead_ends += 1
                    continue
                choice.append(images)
                if rec(depth + 1, now, rest):
                    return True
                choice.pop()
            return False

        start = self._propagate(0, [top] + self.domains[1:])
        found = start is not None and rec(0, 0, start)
        return (list(choice) if found else None), stats


def _solve_chunk(k: int, variant: Variant, first: range, deadline: float | None):
    return _Problem(k, variant).solve(first, deadline)


def search_witness(
    k: int,
    variant: Variant = "weak",
    *,
    deterministic: bool = True,
    workers: int = 1,
    time_limit: float | None = None,
) -> SearchResult:
    """Find a witness for ``k``, or report that the ordered search space is exhausted.

    Every returned witness has passed :func:`verify_witness` independently of
    the search.  Raises :class:`SearchTimeout` (carrying the statistics so
    far) when ``time_limit`` seconds elapse.
    """
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if k > MAX_SEARCH_K:
        raise CapacityError(f"search ceiling is k={MAX_SEARCH_K}, got k={k}")
    t0 = time.monotonic()
    deadline = None if time_limit is None else t0 + time_limit
    problem = _Problem(k, variant)

    def finish(stats: SearchStats) -> SearchStats:
        stats.branch_paths = len(problem.branch)
        stats.candidates = [len(d) for d in problem.domains]
        stats.workers = max(1, workers)
        stats.elapsed = time.monotonic() - t0
        return stats

    try:
        if workers <= 1 or len(problem.domains[0]) < 2:
            choice, stats = problem.solve(None, deadline)
        else:
            choice, stats = _solve_parallel(problem, deterministic, workers, deadline)
    except SearchTimeout as exc:
        finish(exc.stats)
        raise
    finish(stats)
    if choice is None:
        return SearchResult(None, stats)
    witness = problem.witness(choice)
    verdict = verify_witness(witness, variant)
    if not verdict:
        raise AssertionError(f"search produced an invalid witness: {verdict.reason}")
    return SearchResult(witness, stats)


def _solve_parallel(problem: _Problem, deterministic: bool, workers: int, deadline: float | None):
    total = len(problem.domains[0])
    size = max(1, total // (4 * workers))
    chunks = [range(a, min(a + size, total)) for a in range(0, total, size)]
    merged = SearchStats(problem.k, problem.variant)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_solve_chunk, problem.k, problem.variant, c, deadline) for c in chunks]
        try:
            if deterministic:
                # lowest chunk with a solution wins, so wait on them in order
                for fut in futures:
                    choice, stats = fut.result()
                    merged.merge(stats)
                    if choice is not None:
                        return choice, merged
                return None, merged
            pending = set(futures)
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    choice, stats = fut.result()
                    merged.merge(stats)
                    if choice is not None:
                        return choice, merged
            return None, merged
        except SearchTimeout as exc:
            merged.merge(exc.stats)
            raise SearchTimeout(str(exc), merged) from None
        finally:
            for fut in futures:
                fut.cancel()


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return value
