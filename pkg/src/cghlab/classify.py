"""Classify pairs of triangles on the cyclic ground set.

Two distinct triples realize exactly one of eight configurations, determined
by their intersection size and the interleaving of the remaining vertices:

* disjoint (M-types): read the six vertices as a cyclic word over {A, B};
  2 maximal blocks -> M1, 4 -> M2, 6 -> M3.
* one shared vertex (S-types): read the other four vertices clockwise
  starting after the shared vertex; 2 blocks -> S1, 3 -> S2, 4 -> S3.
* shared pair (D-types): the chord through the shared pair splits the cycle
  into two arcs; third vertices in different arcs -> D1, same arc -> D2.

The block-count rule is the normative definition here; the geometry module
provides an independent check via exact crossing counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

from .core import Cgh, Triple, check_triple


class ConfigType(Enum):
    """The eight two-triangle configurations."""

    M1 = "M1"  # two separated triangles
    M2 = "M2"  # stabbing triangles
    M3 = "M3"  # crossing triangles
    S1 = "S1"  # touching triangles
    S2 = "S2"  # touching triangles with parallel sides
    S3 = "S3"  # crossing triangles with a common vertex
    D1 = "D1"  # tangent triangles (shared side, thirds on opposite sides)
    D2 = "D2"  # triangles sharing a side (thirds on the same side)

    @classmethod
    def parse(cls, name: str) -> "ConfigType":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown configuration type {name!r}") from None


def parse_forbidden(names: str | Iterable[str | ConfigType]) -> frozenset[ConfigType]:
    """Parse a comma-separated string or iterable into a forbidden set."""
    if isinstance(names, str):
        parts: Iterable[str | ConfigType] = names.split(",")
    else:
        parts = names
    out = frozenset(p if isinstance(p, ConfigType) else ConfigType.parse(p) for p in parts)
    if not out:
        raise ValueError("forbidden set must be nonempty")
    return out


_S_BY_BLOCKS = {2: ConfigType.S1, 3: ConfigType.S2, 4: ConfigType.S3}
_M_BY_BLOCKS = {2: ConfigType.M1, 4: ConfigType.M2, 6: ConfigType.M3}


def classify_pair(n: int, s: Triple, t: Triple) -> ConfigType:
    """Which of the eight configurations two distinct triples realize."""
    check_triple(n, s)
    check_triple(n, t)
    if s == t:
        raise ValueError("classify_pair requires two distinct triples")
    sset, tset = set(s), set(t)
    shared = sset & tset

    if len(shared) == 2:
        u, v = sorted(shared)
        ws = (sset - shared).pop()
        wt = (tset - shared).pop()
        span = (v - u) % n
        same_arc = (((ws - u) % n) < span) == (((wt - u) % n) < span)
        return ConfigType.D2 if same_arc else ConfigType.D1

    if len(shared) == 1:
        v0 = shared.pop()
        order = sorted((x for x in sset | tset if x != v0), key=lambda x: (x - v0) % n)
        word = [x in sset for x in order]
        blocks = 1 + sum(word[i] != word[i + 1] for i in range(3))
        return _S_BY_BLOCKS[blocks]

    order = sorted(sset | tset)
    word = [x in sset for x in order]
    blocks = sum(word[i] != word[(i + 1) % 6] for i in range(6))
    return _M_BY_BLOCKS[blocks]


@dataclass
class CopyCensus:
    """Counts of unordered triple pairs per configuration within a family."""

    counts: dict[ConfigType, int] = field(default_factory=dict)
    identical: int = 0  # pairs sharing all 3 vertices; always 0 in a set

    def total(self) -> int:
        return sum(self.counts.values()) + self.identical

    def to_json_dict(self) -> dict:
        return {
            "pairs": self.total(),
            "identical": self.identical,
            "counts": {c.value: self.counts.get(c, 0) for c in ConfigType},
        }


def count_copies(h: Cgh) -> CopyCensus:
    """Classify all C(|H|, 2) pairs of triples in h."""
    census = CopyCensus({c: 0 for c in ConfigType})
    for s, t in combinations(h.sorted_triples(), 2):
        census.counts[classify_pair(h.n, s, t)] += 1
    assert census.total() == comb(h.size, 2)
    return census


class FreenessResult(NamedTuple):
    free: bool
    witness: tuple[Triple, Triple] | None
    violation: ConfigType | None


def is_free(h: Cgh, forbidden: Iterable[ConfigType]) -> FreenessResult:
    """Whether no pair of triples in h realizes a forbidden configuration.

    The witness, when present, is the first violating pair in lexicographic
    order of colex-ranked triple pairs, so reruns are reproducible.
    """
    forb = frozenset(forbidden)
    if not forb:
        raise ValueError("forbidden set must be nonempty")
    ordered = h.sorted_triples()
    for i, s in enumerate(ordered):
        for t in ordered[i + 1:]:
            c = classify_pair(h.n, s, t)
            if c in forb:
                return FreenessResult(False, (s, t), c)
    return FreenessResult(True, None, None)
