"""Cyclic ground set, triples, families, and dihedral symmetries.

Everything here is exact integer combinatorics on the vertex set
Omega_n = {0, 1, ..., n-1} taken in clockwise cyclic order.  A triple is an
ascending 3-tuple of vertex indices; a family (Cgh, "convex geometric
hypergraph") is a duplicate-free set of triples on a fixed ground set.
Triples are ranked colexicographically, which fixes the vertex numbering of
conflict graphs and the order of file output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, NamedTuple

Triple = tuple[int, int, int]
Pair = tuple[int, int]


class CentroidPosition(Enum):
    """Position of the polygon centroid relative to a triangle."""

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def check_triple(n: int, t: Triple) -> None:
    """Raise ValueError unless t is a strictly ascending triple on Omega_n."""
    if n < 3:
        raise ValueError(f"ground set needs n >= 3, got n={n}")
    if len(t) != 3:
        raise ValueError(f"triple must have 3 vertices, got {t!r}")
    a, b, c = t
    if not (0 <= a < b < c < n):
        raise ValueError(f"triple {t!r} is not strictly ascending in range(0, {n})")


def as_triple(vertices: Iterable[int]) -> Triple:
    """Sort three distinct vertex indices into canonical ascending order."""
    vs = sorted(vertices)
    if len(vs) != 3 or vs[0] == vs[1] or vs[1] == vs[2]:
        raise ValueError(f"need 3 distinct vertices, got {vertices!r}")
    return (vs[0], vs[1], vs[2])


def gaps(n: int, t: Triple) -> tuple[int, int, int]:
    """Arc lengths between consecutive vertices of t; they sum to n."""
    check_triple(n, t)
    a, b, c = t
    return (b - a, c - b, n - c + a)


def centroid_position(n: int, t: Triple) -> CentroidPosition:
    """Classify where the centroid of the regular n-gon sits relative to t.

    Purely combinatorial: the centroid is interior iff every gap is shorter
    than half the cycle, and on the boundary iff some gap equals exactly
    half (possible only for even n, when t contains a diameter).
    """
    g = max(gaps(n, t))
    if 2 * g < n:
        return CentroidPosition.INTERIOR
    if 2 * g == n:
        return CentroidPosition.BOUNDARY
    return CentroidPosition.EXTERIOR


# ---------------------------------------------------------------------------
# Colexicographic ranking
# ---------------------------------------------------------------------------

def num_triples(n: int) -> int:
    return comb(n, 3)


def triple_rank(n: int, t: Triple) -> int:
    """Colex rank of t among all triples on Omega_n (0-based)."""
    check_triple(n, t)
    a, b, c = t
    return comb(c, 3) + comb(b, 2) + a


def triple_unrank(n: int, rank: int) -> Triple:
    """Inverse of triple_rank."""
    if not 0 <= rank < comb(n, 3):
        raise ValueError(f"rank {rank} out of range for n={n}")
    c = 2
    while comb(c + 1, 3) <= rank:
        c += 1
    rem = rank - comb(c, 3)
    b = 1
    while comb(b + 1, 2) <= rem:
        b += 1
    a = rem - comb(b, 2)
    return (a, b, c)


def all_triples(n: int) -> list[Triple]:
    """All triples on Omega_n in colex order (index == rank)."""
    if n < 3:
        raise ValueError(f"ground set needs n >= 3, got n={n}")
    return [(a, b, c) for c in range(2, n) for b in range(1, c) for a in range(b)]


# ---------------------------------------------------------------------------
# Dihedral symmetries
# ---------------------------------------------------------------------------

class Symmetry(NamedTuple):
    """Rotation by `rotation` steps followed (optionally) by reflection.

    The reflection is fixed as i -> (n - i) mod n, i.e. the mirror fixing
    vertex 0; together with the n rotations this generates the full dihedral
    group of order 2n.
    """

    rotation: int
    reflect: bool


IDENTITY = Symmetry(0, False)


def all_symmetries(n: int) -> list[Symmetry]:
    return [Symmetry(r, f) for f in (False, True) for r in range(n)]


def apply_vertex(n: int, s: Symmetry, v: int) -> int:
    w = (v + s.rotation) % n
    return (n - w) % n if s.reflect else w


def apply_symmetry(n: int, s: Symmetry, t: Triple) -> Triple:
    check_triple(n, t)
    return as_triple(apply_vertex(n, s, v) for v in t)


def compose(n: int, outer: Symmetry, inner: Symmetry) -> Symmetry:
    """The symmetry acting as outer∘inner (inner applied first)."""
    reflect = outer.reflect != inner.reflect
    image0 = apply_vertex(n, outer, apply_vertex(n, inner, 0))
    rotation = (n - image0) % n if reflect else image0
    return Symmetry(rotation, reflect)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cgh:
    """A duplicate-free family of triples on the cyclic ground set Omega_n."""

    n: int
    triples: frozenset[Triple]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"ground set needs n >= 3, got n={self.n}")
        for t in self.triples:
            check_triple(self.n, t)

    @classmethod
    def of(cls, n: int, triples: Iterable[Iterable[int]]) -> "Cgh":
        """Build a family, normalizing each triple to ascending order."""
        return cls(n, frozenset(as_triple(t) for t in triples))

    @classmethod
    def complete(cls, n: int) -> "Cgh":
        return cls(n, frozenset(all_triples(n)))

    @property
    def size(self) -> int:
        return len(self.triples)

    def sorted_triples(self) -> list[Triple]:
        """Triples in colex-rank order."""
        return sorted(self.triples, key=lambda t: (t[2], t[1], t[0]))

    def shadow(self) -> set[Pair]:
        """All vertex pairs covered by some triple."""
        out: set[Pair] = set()
        for a, b, c in self.triples:
            out.add((a, b))
            out.add((a, c))
            out.add((b, c))
        return out

    def link(self, v: int) -> set[Pair]:
        """Pairs completing vertex v to a triple of the family."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        out: set[Pair] = set()
        for t in self.triples:
            if v in t:
                u, w = (x for x in t if x != v)
                out.add((u, w))
        return out

    def apply(self, s: Symmetry) -> "Cgh":
        return Cgh(self.n, frozenset(apply_symmetry(self.n, s, t) for t in self.triples))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "triples": [list(t) for t in self.sorted_triples()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Cgh":
        if not isinstance(data, dict) or "n" not in data or "triples" not in data:
            raise ValueError("cgh JSON must be an object with 'n' and 'triples'")
        n = data["n"]
        if not isinstance(n, int):
            raise ValueError(f"'n' must be an integer, got {n!r}")
        raw = data["triples"]
        if not isinstance(raw, list):
            raise ValueError("'triples' must be a list")
        seen: set[Triple] = set()
        for item in raw:
            if not isinstance(item, list) or len(item) != 3:
                raise ValueError(f"triple entry {item!r} is not a 3-element list")
            t = (item[0], item[1], item[2])
            check_triple(n, t)
            if t in seen:
                raise ValueError(f"duplicate triple {item!r}")
            seen.add(t)
        return cls(n, frozenset(seen))


def canonical_form(h: Cgh) -> Cgh:
    """Lexicographically smallest dihedral image of h, as sorted rank lists.

    Constant on each orbit of the dihedral group, hence usable for isomorph
    rejection when enumerating extremal families.
    """
    best_key: tuple[int, ...] | None = None
    best: list[Triple] = []
    for s in all_symmetries(h.n):
        img = [apply_symmetry(h.n, s, t) for t in h.triples]
        key = tuple(sorted(triple_rank(h.n, t) for t in img))
        if best_key is None or key < best_key:
            best_key, best = key, img
    return Cgh(h.n, frozenset(best))


# ---------------------------------------------------------------------------
# File format: {"n": <int>, "triples": [[a,b,c], ...]}
# ---------------------------------------------------------------------------

def load_cgh(path: str) -> Cgh:
    with open(path) as f:
        data = json.load(f)
    return Cgh.from_json_dict(data)


def save_cgh(h: Cgh, path: str) -> None:
    with open(path, "w") as f:
        json.dump(h.to_json_dict(), f)
        f.write("\n")
