"""North/East lattice paths above the diagonal ``y = x`` and their counts.

Rotating a Dyck path by 45 degrees turns rises into North steps and falls
into East steps, so Dyck ``k``-paths are exactly the upper NE paths from
``(0, 0)`` to ``(k, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .binomial import binom
from .dyck import FALL, RISE, DyckPath
from .errors import CapacityError, DomainError

NORTH = "N"
EAST = "E"

#: Largest number of steps :func:`enumerate_ne_upper` will walk.
MAX_ENUM_STEPS = 24


class LatticePoint(NamedTuple):
    x: int
    y: int

    def shift(self, dx: int, dy: int) -> LatticePoint:
        return LatticePoint(self.x + dx, self.y + dy)


def _step(p: LatticePoint, s: str) -> LatticePoint:
    return LatticePoint(p.x, p.y + 1) if s == NORTH else LatticePoint(p.x + 1, p.y)


@dataclass(frozen=True)
class NEPath:
    """A sequence of North/East steps from ``origin``.

    With ``upper=True`` every visited point must satisfy ``x <= y``; the
    unrestricted form is what the reflection argument manipulates.
    """

    origin: LatticePoint
    steps: str
    upper: bool = False

    def __post_init__(self):
        object.__setattr__(self, "origin", LatticePoint(*self.origin))
        if set(self.steps) - {NORTH, EAST}:
            raise DomainError(f"steps must be over {{N,E}}: {self.steps!r}")
        if self.upper:
            for p in self.points():
                if p.x > p.y:
                    raise DomainError(f"upper path visits {p} below the diagonal")

    def points(self) -> Iterator[LatticePoint]:
        """Every visited point, origin and endpoint included."""
        p = self.origin
        yield p
        for s in self.steps:
            p = _step(p, s)
            yield p

    @property
    def end(self) -> LatticePoint:
        return self.origin.shift(self.steps.count(EAST), self.steps.count(NORTH))

    @property
    def alpha(self) -> int:
        return self.steps.count(NORTH)

    @property
    def beta(self) -> int:
        return self.steps.count(EAST)

    @property
    def delta(self) -> int:
        return self.origin.y - self.origin.x

    def is_upper(self) -> bool:
        return all(p.x <= p.y for p in self.points())


def count_ne_free(p1: LatticePoint, p2: LatticePoint) -> int:
    """Number of unrestricted NE paths from ``p1`` to ``p2``."""
    alpha, beta = p2[1] - p1[1], p2[0] - p1[0]
    if alpha < 0 or beta < 0:
        return 0
    return binom(alpha + beta, beta)


def count_ne_upper(p1: LatticePoint, p2: LatticePoint) -> int:
    """Number of NE paths from ``p1`` to ``p2`` never visiting a point with ``x > y``.

    Total: configurations with no such path give 0.
    """
    (x1, y1), (x2, y2) = p1, p2
    if not (x1 <= x2 and y1 <= y2 and x1 <= y1 and x2 <= y2):
        return 0
    delta, alpha, beta = y1 - x1, y2 - y1, x2 - x1
    return binom(alpha + beta, beta) - binom(alpha + beta, beta - delta - 1)


def enumerate_ne_free(p1: LatticePoint, p2: LatticePoint) -> list[NEPath]:
    """All NE paths from ``p1`` to ``p2``, in lexicographic order with North first."""
    return _enumerate(LatticePoint(*p1), LatticePoint(*p2), upper=False)


def enumerate_ne_upper(p1: LatticePoint, p2: LatticePoint) -> list[NEPath]:
    """All upper NE paths from ``p1`` to ``p2``, North-first lexicographic order."""
    return _enumerate(LatticePoint(*p1), LatticePoint(*p2), upper=True)


def _enumerate(p1: LatticePoint, p2: LatticePoint, upper: bool) -> list[NEPath]:
    alpha, beta = p2.y - p1.y, p2.x - p1.x
    if alpha < 0 or beta < 0:
        return []
    if alpha + beta > MAX_ENUM_STEPS:
        raise CapacityError(f"path enumeration ceiling is {MAX_ENUM_STEPS} steps, got {alpha + beta}")
    if upper and p1.x > p1.y:
        return []
    out: list[NEPath] = []
    buf: list[str] = []

    def rec(x: int, y: int):
        if (x, y) == (p2.x, p2.y):
            out.append(NEPath(p1, "".join(buf), upper=upper))
            return
        if y < p2.y:
            buf.append(NORTH)
            rec(x, y + 1)
            buf.pop()
        if x < p2.x and not (upper and x + 1 > y):
            buf.append(EAST)
            rec(x + 1, y)
            buf.pop()

    rec(p1.x, p1.y)
    return out


def dyck_to_ne(path: DyckPath) -> NEPath:
    steps = "".join(NORTH if path.is_rise(j) else EAST for j in range(1, len(path) + 1))
    return NEPath(LatticePoint(0, 0), steps, upper=True)


def ne_to_dyck(path: NEPath) -> DyckPath:
    """Inverse of :func:`dyck_to_ne`; ``path`` must be upper and run ``(0,0) -> (k,k)``."""
    if path.origin != (0, 0):
        raise DomainError(f"path must start at (0, 0), starts at {path.origin}")
    end = path.end
    if end.x != end.y:
        raise DomainError(f"path must end on the diagonal, ends at {end}")
    if not path.is_upper():
        raise DomainError("path dips below the diagonal")
    return DyckPath.from_string(path.steps.replace(NORTH, RISE).replace(EAST, FALL))
