"""Independent geometric ground truth for the pair classifier.

Omega_n is realized as a strictly convex integer polygon (a regular n-gon
scaled to a large radius and rounded).  Triangle pairs are then classified
by exact integer predicates: proper segment crossings for vertex-disjoint
and vertex-sharing pairs, side-of-line tests for pairs sharing an edge.
Floating point appears only while generating candidate coordinates; every
classification decision is integer arithmetic.

Intersection patterns of chords depend only on the cyclic order of the
endpoints for points in strictly convex position, so any validated strictly
convex realization is a faithful model of the regular polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, pi, sin

from .classify import ConfigType
from .core import CentroidPosition, Triple, check_triple

Point = tuple[int, int]

DEFAULT_RADIUS = 10 ** 6
# All predicate inputs fit in 128-bit intermediates at this bound.
COORD_BOUND = 2 ** 31


class OracleInconsistencyError(RuntimeError):
    """A crossing count outside the possible values for convex position.

    Signals a predicate bug; must be unreachable for validated realizations.
    """


@dataclass(frozen=True)
class ConvexRealization:
    """Integer coordinates for Omega_n in clockwise cyclic order."""

    n: int
    points: tuple[Point, ...]
    radius: int


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p); +1 is counterclockwise."""
    for pt in (p, q, r):
        if abs(pt[0]) > COORD_BOUND or abs(pt[1]) > COORD_BOUND:
            raise ValueError(f"coordinate {pt!r} exceeds bound {COORD_BOUND}")
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether the open segments ab and cd intersect (both straddle strictly).

    Endpoint contact is never a proper crossing.
    """
    if orientation(a, b, c) * orientation(a, b, d) >= 0:
        return False
    return orientation(c, d, a) * orientation(c, d, b) < 0


def _validate(points: tuple[Point, ...]) -> bool:
    n = len(points)
    if len(set(points)) != n:
        return False
    signs = set()
    for j in range(n):
        signs.add(orientation(points[j], points[(j + 1) % n], points[(j + 2) % n]))
    if len(signs) != 1 or 0 in signs:
        return False
    # No 3 collinear anywhere, so side-of-line tests never return 0.
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(points[i], points[j], points[k]) == 0:
                    return False
    return True


def realize(n: int, radius: int = DEFAULT_RADIUS) -> ConvexRealization:
    """Round a regular n-gon to integer coordinates, validating exactly.

    Points are generated clockwise with a half-step phase to avoid axis
    ties; if rounding breaks strict convexity or general position the radius
    is doubled and the construction retried.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    r = int(radius)
    if r < 1:
        raise ValueError(f"radius must be positive, got {radius}")
    while r <= COORD_BOUND:
        phase = pi / n
        pts = tuple(
            (round(r * cos(-2 * pi * j / n + phase)), round(r * sin(-2 * pi * j / n + phase)))
            for j in range(n)
        )
        if _validate(pts):
            return ConvexRealization(n, pts, r)
        r *= 2
    raise ValueError(f"no valid realization for n={n} within coordinate bound")


@lru_cache(maxsize=None)
def realization_for(n: int) -> ConvexRealization:
    """Shared default realization per ground-set size."""
    return realize(n)


_M_BY_CROSSINGS = {0: ConfigType.M1, 4: ConfigType.M2, 6: ConfigType.M3}
_S_BY_CROSSINGS = {0: ConfigType.S1, 2: ConfigType.S2, 3: ConfigType.S3}


def oracle_classify(rz: ConvexRealization, s: Triple, t: Triple) -> ConfigType:
    """Classify a pair of distinct triples from exact incidence predicates."""
    check_triple(rz.n, s)
    check_triple(rz.n, t)
    if s == t:
        raise ValueError("oracle_classify requires two distinct triples")
    pts = rz.points
    sset, tset = set(s), set(t)
    shared = sset & tset

    if len(shared) == 2:
        u, v = sorted(shared)
        ws = (sset - shared).pop()
        wt = (tset - shared).pop()
        side_s = orientation(pts[u], pts[v], pts[ws])
        side_t = orientation(pts[u], pts[v], pts[wt])
        if side_s == 0 or side_t == 0:
            raise OracleInconsistencyError("collinear vertices in realization")
        return ConfigType.D1 if side_s != side_t else ConfigType.D2

    edges_s = [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]
    edges_t = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
    crossings = 0
    for a, b in edges_s:
        for c, d in edges_t:
            # Edge pairs meeting at a shared endpoint never properly cross.
            if segments_properly_cross(pts[a], pts[b], pts[c], pts[d]):
                crossings += 1

    table = _S_BY_CROSSINGS if len(shared) == 1 else _M_BY_CROSSINGS
    try:
        return table[crossings]
    except KeyError:
        raise OracleInconsistencyError(
            f"impossible crossing count {crossings} for |s∩t|={len(shared)}"
        ) from None


def centroid_inside(rz: ConvexRealization, t: Triple) -> CentroidPosition:
    """Exact point-in-triangle test of the polygon centroid.

    The centroid is the rational average of the n vertices; denominators are
    cleared so every comparison stays in integer arithmetic.
    """
    check_triple(rz.n, t)
    pts = rz.points
    n = rz.n
    sx = sum(p[0] for p in pts)
    sy = sum(p[1] for p in pts)

    def side(p: Point, q: Point) -> int:
        d = (q[0] - p[0]) * (sy - n * p[1]) - (q[1] - p[1]) * (sx - n * p[0])
        return (d > 0) - (d < 0)

    a, b, c = (pts[v] for v in t)
    signs = (side(a, b), side(b, c), side(c, a))
    if all(x > 0 for x in signs) or all(x < 0 for x in signs):
        return CentroidPosition.INTERIOR
    if all(x >= 0 for x in signs) or all(x <= 0 for x in signs):
        return CentroidPosition.BOUNDARY
    return CentroidPosition.EXTERIOR
