"""Executable versions of the bijections behind the lattice-path counts.

* :func:`reflect_flip` / :func:`reflect_flip_inverse`: the reflection
  argument.  NE paths that dip below ``y = x`` correspond one-to-one with free
  paths to a reflected endpoint, which is where the subtracted binomial in
  :func:`~dyckwreath.ballot.count_ne_upper` comes from.
* :func:`claim_forward` / :func:`claim_backward`: pairs ``(W, i)`` of an upper
  path through the diagonal point ``(-i, -i)`` correspond to upper paths that
  start one column further left and touch the diagonal.
* :func:`interval_to_set`: given a wreath witness, maps each length-``k``
  window of a Dyck path to a ``k``-subset of ``Z_{2k+1}`` avoiding 0.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .ballot import EAST, NORTH, LatticePoint, NEPath
from .dyck import DyckPath
from .errors import DomainError

if TYPE_CHECKING:
    from .wreath import WreathWitness

_SWAP = str.maketrans({NORTH: EAST, EAST: NORTH})


def _first_below(path: NEPath) -> int | None:
    """Number of steps taken when ``path`` first visits a point with ``x > y``."""
    for t, p in enumerate(path.points()):
        if p.x > p.y:
            return t
    return None


def _flip_after_first_dip(path: NEPath) -> NEPath:
    if path.origin.x > path.origin.y:
        raise DomainError(f"origin {path.origin} is below the diagonal")
    t = _first_below(path)
    if t is None:
        raise DomainError("path never visits a point below the diagonal")
    return NEPath(path.origin, path.steps[:t] + path.steps[t:].translate(_SWAP))


def reflect_flip(path: NEPath) -> NEPath:
    """Swap North and East in every step after the first dip below ``y = x``.

    A path ``(x1, y1) -> (x1 + beta, y1 + alpha)`` lands on
    ``(x1 + alpha + delta + 1, y1 + beta - delta - 1)`` where
    ``delta = y1 - x1``.
    """
    return _flip_after_first_dip(path)


def reflect_flip_inverse(path: NEPath) -> NEPath:
    """Undo :func:`reflect_flip`.

    Images of upper-ending paths end strictly below the diagonal, which
    guarantees the dip the inverse needs; any dipping path is accepted.
    """
    return _flip_after_first_dip(path)


def flipped_endpoint(origin: LatticePoint, end: LatticePoint) -> LatticePoint:
    x1, y1 = origin
    alpha, beta, delta = end[1] - y1, end[0] - x1, y1 - x1
    return LatticePoint(x1 + alpha + delta + 1, y1 + beta - delta - 1)


def claim_endpoints(k: int, m: int, l: int, d: int) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
    """``(start of W, start of W', common end)`` for one parameter cell."""
    if not (0 <= l and 2 * l <= m <= 2 * k and 0 <= d <= k + l - m):
        raise DomainError(f"need 2l <= m <= 2k and 0 <= d <= k+l-m, got {(k, m, l, d)}")
    return (
        LatticePoint(l - k, d + m - l - k),
        LatticePoint(l - k - 1, d + m - l - k),
        LatticePoint(0, d),
    )


def claim_forward(path: NEPath, i: int, params: tuple[int, int, int, int]) -> NEPath:
    """Insert an East step right where ``path`` reaches ``(-i, -i)``.

    The result starts one column to the left, stays on or above the diagonal,
    and first touches it at ``(-i, -i)``.
    """
    k, m, l, d = params
    start, new_start, end = claim_endpoints(k, m, l, d)
    if path.origin != start or path.end != end:
        raise DomainError(f"path must run {start} -> {end}, runs {path.origin} -> {path.end}")
    if not path.is_upper():
        raise DomainError("path dips below the diagonal")
    if not 0 <= i <= k + l - m - d:
        raise DomainError(f"i={i} outside 0..{k + l - m - d}")
    target = LatticePoint(-i, -i)
    for t, p in enumerate(path.points()):
        if p == target:
            return NEPath(new_start, path.steps[:t] + EAST + path.steps[t:], upper=True)
    raise DomainError(f"path does not pass through {target}")


def claim_backward(path: NEPath, params: tuple[int, int, int, int]) -> tuple[NEPath, int]:
    """Delete the East step onto the first diagonal point; returns ``(W, i)``."""
    k, m, l, d = params
    start, new_start, end = claim_endpoints(k, m, l, d)
    if path.origin != new_start or path.end != end:
        raise DomainError(f"path must run {new_start} -> {end}, runs {path.origin} -> {path.end}")
    if not path.is_upper():
        raise DomainError("path dips below the diagonal")
    for t, p in enumerate(path.points()):
        if p.x == p.y:
            # t >= 1 since the origin is strictly above; the step in must be East
            return NEPath(start, path.steps[: t - 1] + path.steps[t:], upper=True), -p.x
    raise DomainError("path never touches the diagonal")


def interval_to_set(path: DyckPath, s: int, witness: WreathWitness) -> frozenset[int]:
    """The residues ``pi(s), ..., pi(s + k - 1)`` for ``pi`` the permutation of ``path``.

    ``witness`` must be a valid weak witness; the window start ``s`` runs
    over ``1..k+1``.
    """
    from .wreath import verify_witness

    k = witness.k
    if not verify_witness(witness, "weak"):
        raise DomainError("witness does not satisfy the weak conditions")
    if not 1 <= s <= k + 1:
        raise DomainError(f"window start {s} outside 1..{k + 1}")
    perm = witness.permutation_for(path)
    return frozenset(perm(j) for j in range(s, s + k))


def interval_subset_map(witness: WreathWitness) -> dict[tuple[DyckPath, int], frozenset[int]]:
    """:func:`interval_to_set` for every ``(path, start)`` pair of the witness."""
    return {
        (path, s): interval_to_set(path, s, witness)
        for path in witness.paths()
        for s in range(1, witness.k + 2)
    }
