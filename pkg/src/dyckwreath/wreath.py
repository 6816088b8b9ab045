"""Wreaths over Z_n and verification of wreath decompositions for n = 2k + 1.

The wreath of a permutation ``pi`` of ``Z_n`` is the set of ``k``-subsets

    {pi((i - 1)k + 1), ..., pi(ik)}    for i in 0..n-1, indices mod n,

which has ``n / gcd(n, k)`` members.  A witness for ``n = 2k + 1`` assigns
one permutation to every Dyck ``k``-path such that

* every permutation fixes 0,
* step ``j`` of the path is a rise exactly when ``pi(j)`` lies in ``1..k``,
* the wreaths of all the permutations partition the ``k``-subsets of ``Z_n``

(the *weak* conditions), and, for the *strong* variant, additionally
``pi_D(j) + pi_R(-j) = 0 (mod n)`` for every path ``D`` with mirror image ``R``.

Witness files are JSON::

    {"k": 2, "variant": "strong",
     "assignments": [{"dyck": "UUDD", "perm": [0, 1, 2, 3, 4]}, ...]}

with assignments sorted in canonical path order.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from math import comb, gcd
from pathlib import Path
from typing import Iterable, Literal, Sequence

from .dyck import DyckPath, catalan, enumerate_dyck, reflect
from .errors import DomainError
from .formulas import stat

Variant = Literal["weak", "strong"]
VARIANTS = ("weak", "strong")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise DomainError(f"not a permutation of 0..{len(self.images) - 1}: {list(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j % self.n]


@dataclass(frozen=True)
class Wreath:
    n: int
    k: int
    sets: frozenset[frozenset[int]]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def windows(perm: Permutation, k: int) -> list[frozenset[int]]:
    """The ``n`` windows of ``perm`` in generation order, duplicates kept."""
    n = perm.n
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return [frozenset(perm((i - 1) * k + 1 + t) for t in range(k)) for i in range(n)]


def wreath_from_permutation(perm: Permutation, k: int) -> Wreath:
    sets = frozenset(windows(perm, k))
    assert len(sets) == perm.n // gcd(perm.n, k)
    return Wreath(perm.n, k, sets)


def _fmt(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def verify_decomposition(
    wreaths: Iterable[Wreath], n: int, k: int, labels: Sequence[str] | None = None
) -> Verdict:
    """Whether ``wreaths`` are pairwise disjoint and together cover every ``k``-subset of ``Z_n``.

    ``labels`` name the wreaths in diagnostics; by default they are numbered.
    """
    seen: dict[frozenset[int], str] = {}
    for w_idx, w in enumerate(wreaths):
        name = f"wreath {w_idx}" if labels is None else labels[w_idx]
        for s in sorted(w.sets, key=sorted):
            if len(s) != k or not all(0 <= x < n for x in s):
                return Verdict(False, f"{name} holds {_fmt(s)}, not a {k}-subset of Z_{n}")
            if s in seen:
                return Verdict(False, f"duplicate set {_fmt(s)} in {name} (already in {seen[s]})")
            seen[s] = name
    for c in itertools.combinations(range(n), k):
        if frozenset(c) not in seen:
            return Verdict(False, f"missing set {_fmt(c)} ({len(seen)} of {comb(n, k)} covered)")
    return Verdict(True)


@dataclass(frozen=True)
class WreathWitness:
    """An assignment of one permutation of ``Z_{2k+1}`` to each Dyck ``k``-path.

    No validity is enforced on construction; see :func:`verify_witness`.
    """

    k: int
    assignments: tuple[tuple[DyckPath, Permutation], ...]

    @property
    def n(self) -> int:
        return 2 * self.k + 1

    def paths(self) -> list[DyckPath]:
        return [p for p, _ in self.assignments]

    def permutation_for(self, path: DyckPath) -> Permutation:
        for p, perm in self.assignments:
            if p == path:
                return perm
        raise DomainError(f"path {path} has no assignment")

    def to_json(self, variant: Variant) -> dict:
        return {
            "k": self.k,
            "variant": variant,
            "assignments": [{"dyck": p.word, "perm": list(perm.images)} for p, perm in self.assignments],
        }

    @classmethod
    def from_json(cls, data: dict) -> tuple[WreathWitness, Variant]:
        """Parse a witness document; raises :class:`DomainError` on malformed content."""
        try:
            k = data["k"]
            variant = data["variant"]
            rows = data["assignments"]
            if not isinstance(k, int) or isinstance(k, bool) or variant not in VARIANTS:
                raise DomainError(f"bad header k={k!r}, variant={variant!r}")
            pairs = tuple((DyckPath.from_string(r["dyck"]), Permutation(tuple(r["perm"]))) for r in rows)
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed witness document: {exc!r}") from exc
        return cls(k, pairs), variant


def dump_witness(witness: WreathWitness, variant: Variant) -> str:
    """JSON text with one assignment per line."""
    doc = witness.to_json(variant)
    rows = ",\n".join("    " + json.dumps(a) for a in doc["assignments"])
    return (
        "{\n"
        f'  "k": {doc["k"]},\n'
        f'  "variant": {json.dumps(doc["variant"])},\n'
        f'  "assignments": [\n{rows}\n  ]\n'
        "}\n"
    )


def save_witness(witness: WreathWitness, variant: Variant, path: str | Path) -> None:
    Path(path).write_text(dump_witness(witness, variant))


def load_witness(path: str | Path) -> tuple[WreathWitness, Variant]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: not JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise DomainError(f"{path}: top level must be an object")
    return WreathWitness.from_json(data)


def _check_structure(w: WreathWitness) -> Verdict:
    k, n = w.k, w.n
    if k < 1:
        return Verdict(False, f"k must be positive, got {k}")
    expected = enumerate_dyck(k)
    got = w.paths()
    if len(got) != len(expected):
        return Verdict(False, f"expected {catalan(k)} assignments, got {len(got)}")
    if sorted(got) != expected:
        missing = sorted(set(expected) - set(got))
        detail = f"missing {missing[0]}" if missing else "duplicate or foreign path"
        return Verdict(False, f"assigned paths are not exactly the Dyck {k}-paths ({detail})")
    if got != expected:
        return Verdict(False, "assignments are not in canonical path order")
    for path, perm in w.assignments:
        if perm.n != n:
            return Verdict(False, f"{path}: permutation acts on Z_{perm.n}, expected Z_{n}")
        if perm(0) != 0:
            return Verdict(False, f"{path}: permutation does not fix 0 (pi(0)={perm(0)})")
        for j in range(1, 2 * k + 1):
            low = 1 <= perm(j) <= k
            if low != path.is_rise(j):
                kind = "rise" if path.is_rise(j) else "fall"
                return Verdict(False, f"{path}: step {j} is a {kind} but pi({j})={perm(j)}")
    return Verdict(True)


def _check_reflection(w: WreathWitness) -> Verdict:
    n = w.n
    for path, perm in w.assignments:
        mirror = w.permutation_for(reflect(path))
        for j in range(n):
            if (perm(j) + mirror(-j)) % n:
                return Verdict(
                    False,
                    f"reflection condition fails at {path}, j={j}: "
                    f"{perm(j)} + {mirror(-j)} != 0 mod {n}",
                )
    return Verdict(True)


@functools.lru_cache(maxsize=64)
def verify_witness(witness: WreathWitness, variant: Variant = "weak") -> Verdict:
    """Check a witness, returning the first violated condition.

    Order of checks: structure (paths, fixed point, rise/fall placement),
    then coverage, then, for ``variant="strong"``, the reflection identity.
    """
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}, got {variant!r}")
    v = _check_structure(witness)
    if not v:
        return v
    wreaths = [wreath_from_permutation(perm, witness.k) for _, perm in witness.assignments]
    labels = [f"wreath of {p}" for p in witness.paths()]
    v = verify_decomposition(wreaths, witness.n, witness.k, labels)
    if not v:
        return Verdict(False, f"coverage: {v.reason}")
    if variant == "strong":
        return _check_reflection(witness)
    return Verdict(True)


def zero_free_split_counts(k: int) -> list[int]:
    """For each ``l``, how many ``k``-subsets of ``1..2k`` have ``l`` elements above ``k``.

    Counted by listing the subsets, not by formula.
    """
    counts = [0] * (k + 1)
    for c in itertools.combinations(range(1, 2 * k + 1), k):
        counts[sum(1 for x in c if x > k)] += 1
    return counts


def check_necessary_condition(k: int) -> bool:
    """Whether N_k(k, l) equals the matching zero-free subset count for every ``l``."""
    if k < 0:
        raise DomainError(f"negative k={k}")
    direct = zero_free_split_counts(k)
    return all(stat(k, k, l) == direct[l] for l in range(k + 1))
