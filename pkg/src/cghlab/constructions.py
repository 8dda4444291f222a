"""Named extremal constructions with their exact size formulas.

Each generator returns a Cgh whose size matches a closed form and which
avoids its target configuration set; both properties are machine-checked in
the test suite for every valid ground-set size up to 12.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, NamedTuple, Sequence

from .classify import ConfigType, is_free
from .core import (
    CentroidPosition,
    Cgh,
    Pair,
    Triple,
    all_triples,
    as_triple,
    centroid_position,
)


def delta(n: int) -> int:
    """Size of the centroid family: n(n^2-1)/24 odd, n(n^2-4)/24 even."""
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if n % 2:
        prod = n * (n - 1) * (n + 1)
    else:
        prod = n * (n - 2) * (n + 2)
    assert prod % 24 == 0
    return prod // 24


def _interior(n: int) -> list[Triple]:
    return [t for t in all_triples(n) if centroid_position(n, t) is CentroidPosition.INTERIOR]


def _triples_through_pair(n: int, u: int, v: int) -> set[Triple]:
    if u == v:
        raise ValueError("pair endpoints must differ")
    return {as_triple((u, v, w)) for w in range(n) if w != u and w != v}


def _chords_intersect(n: int, p: Pair, q: Pair) -> bool:
    """Whether two chords share an endpoint or properly cross."""
    a, b = p
    c, d = q
    if {a, b} & {c, d}:
        return True
    span = (b - a) % n
    c_in = 0 < (c - a) % n < span
    d_in = 0 < (d - a) % n < span
    return c_in != d_in


# ---------------------------------------------------------------------------
# Centroid families
# ---------------------------------------------------------------------------

def h_star(n: int, side_bits: Sequence[int] | None = None) -> Cgh:
    """The canonical intersecting family of size delta(n).

    Odd n: all triangles whose interior contains the polygon centroid.
    Even n: all centroid-interior triangles, plus for each of the n/2
    diameters every triangle through it with third vertex in the arc
    selected by the corresponding side bit (0 = clockwise arc from the
    lower diameter endpoint).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if n % 2:
        if side_bits is not None:
            raise ValueError("side_bits apply only to even n")
        return Cgh.of(n, _interior(n))
    if side_bits is None:
        raise ValueError("side_bits (length n/2) are required for even n")
    bits = tuple(int(b) for b in side_bits)
    half = n // 2
    if len(bits) != half or any(b not in (0, 1) for b in bits):
        raise ValueError(f"side_bits must be {half} zeros/ones, got {side_bits!r}")
    triples = set(_interior(n))
    for i, bit in enumerate(bits):
        lo, hi = i, i + half
        anchor = lo if bit == 0 else hi
        for k in range(1, half):
            triples.add(as_triple((lo, (anchor + k) % n, hi)))
    return Cgh(n, frozenset(triples))


def h_prime(n: int) -> Cgh:
    """The M1-free family of size delta(n) + n(n-3)/2.

    Odd n: h_star(n) plus all triangles through a pair {v_i, v_{i+(n-1)/2}}
    for every i.  Even n: the centroid-interior triangles, all triangles
    through a diameter, and all triangles through one of the n/2 pairwise
    intersecting chords {v_i, v_{i+n/2-1}}.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if n % 2:
        fam = set(h_star(n).triples)
        k = (n - 1) // 2
        for i in range(n):
            fam |= _triples_through_pair(n, i, (i + k) % n)
        return Cgh(n, frozenset(fam))
    half = n // 2
    fam = set(_interior(n))
    for i in range(half):
        fam |= _triples_through_pair(n, i, i + half)
    chords = [(i, (i + half - 1) % n) for i in range(half)]
    for i in range(half):
        for j in range(i + 1, half):
            assert _chords_intersect(n, chords[i], chords[j])
    for u, v in chords:
        fam |= _triples_through_pair(n, u, v)
    return Cgh(n, frozenset(fam))


def h_plus(n: int, start: int | None = None) -> Cgh:
    """The {M1, S1}-free family.

    Odd n: h_star(n) plus all triangles through the (n-1)/2 pairs
    {v_{start+j}, v_{start+j+(n-1)/2}} for 0 <= j <= (n-3)/2; size
    delta(n) + (n-1)(n-3)/4.  Even n: all triangles with the centroid in
    their interior or on their boundary; size delta(n) + n(n-2)/4.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if n % 2:
        s = 0 if start is None else start % n
        fam = set(h_star(n).triples)
        k = (n - 1) // 2
        for j in range((n - 1) // 2):
            fam |= _triples_through_pair(n, (s + j) % n, (s + j + k) % n)
        return Cgh(n, frozenset(fam))
    if start is not None:
        raise ValueError("start applies only to odd n")
    return Cgh.of(
        n,
        (t for t in all_triples(n) if centroid_position(n, t) is not CentroidPosition.EXTERIOR),
    )


# ---------------------------------------------------------------------------
# Matching-type extremal families
# ---------------------------------------------------------------------------

def m3_extremal(n: int, swaps: Iterable[int] = ()) -> Cgh:
    """Star at v0 plus all triples with a cyclically consecutive pair.

    Size C(n,3) - C(n-3,3); M3-free.  Each admissible swap k (1 <= k,
    2k+4 < n) exchanges {v0, v_{2k+1}, v_{2k+3}} for {v_{2k}, v_{2k+2},
    v_{2k+4}}, preserving size and M3-freeness.  k = 0 is inadmissible:
    its replacement triple contains v0 and is already in the star.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    fam = {t for t in all_triples(n) if 0 in t}
    for i in range(n):
        a, b = i, (i + 1) % n
        for w in range(n):
            if w != a and w != b:
                fam.add(as_triple((a, b, w)))
    for k in sorted(set(swaps)):
        if k < 1 or 2 * k + 4 >= n:
            raise ValueError(f"inadmissible swap index {k} for n={n}")
        removed = (0, 2 * k + 1, 2 * k + 3)
        added = (2 * k, 2 * k + 2, 2 * k + 4)
        fam.remove(removed)
        assert added not in fam
        fam.add(added)
    return Cgh(n, frozenset(fam))


def m2_extremal(n: int) -> Cgh:
    """Star at v0 plus the n consecutive triples; size C(n,2) - 2; M2-free."""
    if n < 5:
        raise ValueError(f"need n >= 5, got n={n}")
    fam = {t for t in all_triples(n) if 0 in t}
    for i in range(n):
        fam.add(as_triple((i, (i + 1) % n, (i + 2) % n)))
    return Cgh(n, frozenset(fam))


# ---------------------------------------------------------------------------
# Star-type extremal families
# ---------------------------------------------------------------------------

def s3_h0(n: int) -> Cgh:
    """Every triple through one of the n/2 matching pairs {v_{2i-1}, v_{2i}}.

    Defined for even n; size n(n-2)/2; S3-free.
    """
    if n < 4 or n % 2:
        raise ValueError(f"need even n >= 4, got n={n}")
    fam: set[Triple] = set()
    for i in range(n // 2):
        fam |= _triples_through_pair(n, (2 * i - 1) % n, (2 * i) % n)
    return Cgh(n, frozenset(fam))


def s2_split(n: int) -> Cgh:
    """Interval split construction; size floor(n^2/4) - 1; S2-free.

    The cycle is split into segments A = {v_0, ..., v_{|A|-1}} and B with
    |A| = ceil(n/2) - 1; the family takes each A-vertex with each pair of
    consecutive B-vertices, plus every three consecutive B-vertices.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got n={n}")
    a_size = (n + 1) // 2 - 1
    fam: list[Triple] = []
    for j in range(a_size, n - 1):
        for x in range(a_size):
            fam.append(as_triple((x, j, j + 1)))
    for j in range(a_size, n - 2):
        fam.append((j, j + 1, j + 2))
    return Cgh.of(n, fam)


# ---------------------------------------------------------------------------
# Shared-side (D2) families
# ---------------------------------------------------------------------------

def _strictly_cross(n: int, p: Pair, q: Pair) -> bool:
    a, b = p
    c, d = q
    if {a, b} & {c, d}:
        return False
    span = (b - a) % n
    c_in = 0 < (c - a) % n < span
    d_in = 0 < (d - a) % n < span
    return c_in != d_in


def d2_from_triangulation(n: int, diagonals: Iterable[Pair]) -> Cgh:
    """The n-2 triangles of a polygon triangulation; D2-free.

    The diagonals plus the polygon sides must form a full triangulation:
    n-3 pairwise non-crossing diagonals (2n-3 edges total).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    diags: list[Pair] = []
    seen: set[Pair] = set()
    for d in diagonals:
        u, v = d
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"invalid chord {d!r} for n={n}")
        u, v = min(u, v), max(u, v)
        if (v - u) % n in (1, n - 1):
            raise ValueError(f"chord {d!r} is a polygon side, not a diagonal")
        if (u, v) in seen:
            raise ValueError(f"duplicate diagonal {d!r}")
        seen.add((u, v))
        diags.append((u, v))
    if len(diags) != n - 3:
        raise ValueError(f"a triangulation of an {n}-gon needs {n - 3} diagonals, got {len(diags)}")
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            if _strictly_cross(n, diags[i], diags[j]):
                raise ValueError(f"diagonals {diags[i]} and {diags[j]} cross")
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)} | set(diags)
    tris = [t for t in all_triples(n)
            if (t[0], t[1]) in edges and (t[0], t[2]) in edges and (t[1], t[2]) in edges]
    if len(tris) != n - 2:
        raise ValueError(f"diagonal set does not triangulate the {n}-gon")
    return Cgh.of(n, tris)


def d2_fan(n: int) -> Cgh:
    """Fan triangulation at v0."""
    return d2_from_triangulation(n, [(0, j) for j in range(2, n - 1)])


_FANO_REQUIRED: tuple[Triple, ...] = ((0, 1, 2), (2, 3, 4), (0, 4, 5))
_FANO_BONUS: Triple = (0, 2, 4)


def _fano_lines() -> tuple[Triple, ...]:
    """A Fano decomposition of K_7 containing the three required lines.

    Found by exact-cover search over the remaining pairs rather than
    hard-coded, eliminating transcription risk; deterministic first result.
    """
    uncovered = {(i, j) for i in range(7) for j in range(i + 1, 7)}
    for line in _FANO_REQUIRED:
        a, b, c = line
        uncovered -= {(a, b), (a, c), (b, c)}
    lines = list(_FANO_REQUIRED)

    def rec() -> bool:
        if not uncovered:
            return True
        u, v = min(uncovered)
        for w in range(7):
            if w in (u, v):
                continue
            p1 = tuple(sorted((u, w)))
            p2 = tuple(sorted((v, w)))
            if p1 in uncovered and p2 in uncovered:
                uncovered.difference_update(((u, v), p1, p2))
                lines.append(as_triple((u, v, w)))
                if rec():
                    return True
                lines.pop()
                uncovered.update(((u, v), p1, p2))
        return False

    if not rec():
        raise RuntimeError("no Fano decomposition found; search is broken")
    return tuple(lines)


def d2_fano7() -> Cgh:
    """Eight triples on Omega_7: a Fano line set plus {0, 2, 4}; D2-free."""
    fam = Cgh.of(7, _fano_lines() + (_FANO_BONUS,))
    assert fam.size == 8
    assert is_free(fam, {ConfigType.D2}).free
    return fam


# ---------------------------------------------------------------------------
# Pair designs and their D2-free expansion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Design:
    """An S(n,7,2) design: blocks of 7 points covering every pair once."""

    n: int
    blocks: tuple[tuple[int, ...], ...]


def parse_design(data: dict) -> Design:
    """Validate the design file structure and exact pair coverage."""
    if not isinstance(data, dict) or "n" not in data or "blocks" not in data:
        raise ValueError("design JSON must be an object with 'n' and 'blocks'")
    n = data["n"]
    if not isinstance(n, int) or n < 7:
        raise ValueError(f"design needs integer n >= 7, got {n!r}")
    blocks = []
    covered: set[Pair] = set()
    for raw in data["blocks"]:
        if not isinstance(raw, list) or len(raw) != 7:
            raise ValueError(f"block {raw!r} must list exactly 7 points")
        if len(set(raw)) != 7:
            raise ValueError(f"block {raw!r} repeats a point")
        for x in raw:
            if not isinstance(x, int) or not 0 <= x < n:
                raise ValueError(f"point {x!r} out of range for n={n}")
        block = tuple(sorted(raw))
        for i in range(7):
            for j in range(i + 1, 7):
                pair = (block[i], block[j])
                if pair in covered:
                    raise ValueError(f"pair {pair} covered by more than one block")
                covered.add(pair)
        blocks.append(block)
    if len(covered) != comb(n, 2):
        missing = next(
            (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in covered
        )
        raise ValueError(f"pair {missing} is not covered by any block")
    return Design(n, tuple(blocks))


def load_design(path: str) -> Design:
    with open(path) as f:
        return parse_design(json.load(f))


class ExpandedDesign(NamedTuple):
    family: Cgh
    d2_free: bool


def d2_expand_design(design: Design) -> ExpandedDesign:
    """Plant the 8-triangle gadget in each block; size (8/21) C(n,2).

    Each block is read in its induced cyclic order (ascending indices).
    The result is re-checked for D2-freeness and the outcome reported.
    """
    gadget = _fano_lines() + (_FANO_BONUS,)
    fam: set[Triple] = set()
    for block in design.blocks:
        for tr in gadget:
            fam.add(as_triple(block[i] for i in tr))
    h = Cgh(design.n, frozenset(fam))
    expected = 8 * comb(design.n, 2) // 21
    assert h.size == expected
    return ExpandedDesign(h, is_free(h, {ConfigType.D2}).free)


# ---------------------------------------------------------------------------
# Family registry (shared by the CLI and the verification suites)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyInfo:
    id: str
    forbidden: frozenset[ConfigType]
    parity: str | None  # "odd", "even", or None
    min_n: int
    fixed_n: int | None
    expected_size: Callable[[int], int]

    def valid_n(self, n: int) -> bool:
        if self.fixed_n is not None:
            return n == self.fixed_n
        if n < self.min_n:
            return False
        if self.parity == "odd" and n % 2 == 0:
            return False
        if self.parity == "even" and n % 2 == 1:
            return False
        return True


def _hplus_size(n: int) -> int:
    if n % 2:
        return delta(n) + (n - 1) * (n - 3) // 4
    return delta(n) + n * (n - 2) // 4


FAMILIES: dict[str, FamilyInfo] = {
    info.id: info
    for info in (
        FamilyInfo("HSTAR", frozenset({ConfigType.M1, ConfigType.S1, ConfigType.D1}),
                   None, 3, None, delta),
        FamilyInfo("HPRIME", frozenset({ConfigType.M1}),
                   None, 3, None, lambda n: delta(n) + n * (n - 3) // 2),
        FamilyInfo("HPLUS", frozenset({ConfigType.M1, ConfigType.S1}),
                   None, 3, None, _hplus_size),
        FamilyInfo("M3X", frozenset({ConfigType.M3}),
                   None, 4, None, lambda n: comb(n, 3) - comb(n - 3, 3)),
        FamilyInfo("M2X", frozenset({ConfigType.M2}),
                   None, 5, None, lambda n: comb(n, 2) - 2),
        FamilyInfo("S3H0", frozenset({ConfigType.S3}),
                   "even", 4, None, lambda n: n * (n - 2) // 2),
        FamilyInfo("S2SPLIT", frozenset({ConfigType.S2}),
                   None, 5, None, lambda n: n * n // 4 - 1),
        FamilyInfo("D2FAN", frozenset({ConfigType.D2}),
                   None, 3, None, lambda n: n - 2),
        FamilyInfo("D2TRI", frozenset({ConfigType.D2}),
                   None, 3, None, lambda n: n - 2),
        FamilyInfo("D2FANO7", frozenset({ConfigType.D2}),
                   None, 7, 7, lambda n: 8),
        FamilyInfo("D2DESIGN", frozenset({ConfigType.D2}),
                   None, 7, None, lambda n: 8 * comb(n, 2) // 21),
    )
}


def build_family(
    family_id: str,
    n: int,
    side_bits: Sequence[int] | None = None,
    start: int | None = None,
    swaps: Iterable[int] = (),
    diagonals: Iterable[Pair] | None = None,
    design: Design | None = None,
) -> Cgh:
    """Dispatch a family id and its parameters to the right generator.

    For HSTAR at even n the side bits default to all zeros when omitted.
    """
    fid = family_id.strip().upper()
    if fid not in FAMILIES:
        raise ValueError(f"unknown family {family_id!r}")
    if fid == "HSTAR":
        if n % 2 == 0 and side_bits is None:
            side_bits = (0,) * (n // 2)
        return h_star(n, side_bits)
    if fid == "HPRIME":
        return h_prime(n)
    if fid == "HPLUS":
        return h_plus(n, start)
    if fid == "M3X":
        return m3_extremal(n, swaps)
    if fid == "M2X":
        return m2_extremal(n)
    if fid == "S3H0":
        return s3_h0(n)
    if fid == "S2SPLIT":
        return s2_split(n)
    if fid == "D2FAN":
        return d2_fan(n)
    if fid == "D2TRI":
        if diagonals is None:
            raise ValueError("D2TRI needs a diagonal list")
        return d2_from_triangulation(n, diagonals)
    if fid == "D2FANO7":
        if n != 7:
            raise ValueError("D2FANO7 is defined on n = 7 only")
        return d2_fano7()
    if design is None:
        raise ValueError("D2DESIGN needs a design file")
    if design.n != n:
        raise ValueError(f"design is on {design.n} points, requested n={n}")
    return d2_expand_design(design).family


# Closed forms for the solver comparison table.
FORMULAS: dict[str, Callable[[int], int]] = {
    "delta": delta,
    "m1": lambda n: delta(n) + n * (n - 3) // 2,
    "m1s1": lambda n: delta(n) + (n // 2) * ((n - 2) // 2),
    "m2": lambda n: comb(n, 2) - 2,
    "m3": lambda n: comb(n, 3) - comb(n - 3, 3),
    "s3": lambda n: n * (n - 2) // 2,
    "s1conj": lambda n: delta(n) + (n // 2) * ((n - 2) // 2),
    "s2conj": lambda n: n * n // 4 - 1,
}
