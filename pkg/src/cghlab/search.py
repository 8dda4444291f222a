"""Exact extremal numbers via maximum independent set in conflict graphs.

The conflict graph for (n, F) has one vertex per triple of Omega_n (numbered
by colex rank) and an edge for every pair realizing a configuration in F;
F-free families are exactly its independent sets.  The solver is a
deterministic branch and bound over candidate bitsets: branch on the
candidate of maximum residual degree (ties to the lowest rank), bound with a
greedy clique cover, seed with a greedy independent set.  Runs are
reproducible bit for bit; the search is single-process.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from time import perf_counter
from typing import Iterable, NamedTuple, Sequence

from .classify import ConfigType, classify_pair, is_free
from .core import Cgh, all_triples, canonical_form, triple_unrank


DEFAULT_BUDGET_S = 300.0


class SearchStatus(Enum):
    OPTIMAL = "Optimal"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


class BudgetExceeded(RuntimeError):
    """Raised where an optimal answer is required but the budget ran out."""


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on all C(n,3) triples; edges are forbidden configurations.

    Adjacency rows are arbitrary-precision int bitsets, so there is no hard
    vertex cap; C(16,3) = 560 vertices is comfortable, and the practical
    solve target is C(12,3) = 220.
    """

    n: int
    forbidden: frozenset[ConfigType]
    adj: tuple[int, ...]  # adjacency bitsets, vertex = colex rank

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2


@dataclass
class SearchResult:
    size: int
    witness: Cgh
    status: SearchStatus
    nodes: int
    elapsed_s: float


def build_conflict_graph(n: int, forbidden: Iterable[ConfigType]) -> ConflictGraph:
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    forb = frozenset(forbidden)
    if not forb:
        raise ValueError("forbidden set must be nonempty")
    trips = all_triples(n)
    v_count = len(trips)
    adj = [0] * v_count
    for i in range(v_count):
        ti = trips[i]
        for j in range(i + 1, v_count):
            if classify_pair(n, ti, trips[j]) in forb:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return ConflictGraph(n, forb, tuple(adj))


def _greedy_independent_set(adj: Sequence[int], full: int) -> tuple[int, int]:
    """Take a minimum-residual-degree vertex repeatedly; returns (size, mask)."""
    cand, mask, size = full, 0, 0
    while cand:
        best_v, best_d = -1, 1 << 62
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (adj[v] & cand).bit_count()
            if d < best_d:
                best_d, best_v = d, v
        bit = 1 << best_v
        mask |= bit
        size += 1
        cand &= ~(adj[best_v] | bit)
    return size, mask


def _clique_cover_count(adj: Sequence[int], cand: int) -> int:
    """Greedy clique cover of the candidate subgraph; its size bounds any
    independent set within the candidates."""
    covers: list[int] = []  # per clique: vertices adjacent to all members
    m = cand
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        for i in range(len(covers)):
            if covers[i] & b:
                covers[i] &= adj[v]
                break
        else:
            covers.append(adj[v])
    return len(covers)


class RawSearchResult(NamedTuple):
    size: int
    mask: int
    nodes: int
    elapsed_s: float
    timed_out: bool


def solve_adjacency(adj: Sequence[int], budget_s: float | None = None) -> RawSearchResult:
    """Branch and bound on a bare adjacency-bitset graph."""
    v_count = len(adj)
    full = (1 << v_count) - 1
    start = perf_counter()
    deadline = None if budget_s is None else start + budget_s

    best_size, best_mask = _greedy_independent_set(adj, full)
    nodes = 0
    timed_out = False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * v_count + 100))

    def expand(cand: int, size: int, mask: int) -> None:
        nonlocal best_size, best_mask, nodes, timed_out
        if timed_out:
            return
        nodes += 1
        if deadline is not None and nodes & 127 == 0 and perf_counter() > deadline:
            timed_out = True
            return
        if not cand:
            if size > best_size:
                best_size, best_mask = size, mask
            return
        branch_v, branch_d = -1, -1
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (adj[v] & cand).bit_count()
            if d > branch_d:
                branch_d, branch_v = d, v
        if branch_d == 0:
            # Edgeless candidates are all forced in.
            total = size + cand.bit_count()
            if total > best_size:
                best_size, best_mask = total, mask | cand
            return
        if size + _clique_cover_count(adj, cand) <= best_size:
            return
        bit = 1 << branch_v
        expand(cand & ~(adj[branch_v] | bit), size + 1, mask | bit)
        expand(cand ^ bit, size, mask)

    expand(full, 0, 0)
    return RawSearchResult(best_size, best_mask, nodes, perf_counter() - start, timed_out)


def max_independent_set(
    g: ConflictGraph, budget_s: float | None = DEFAULT_BUDGET_S
) -> SearchResult:
    """Exact maximum independent set; degrades to a lower bound on timeout."""
    raw = solve_adjacency(g.adj, budget_s)
    witness = _mask_to_cgh(g.n, raw.mask)
    status = SearchStatus.LOWER_BOUND_ONLY if raw.timed_out else SearchStatus.OPTIMAL
    return SearchResult(raw.size, witness, status, raw.nodes, raw.elapsed_s)


def _mask_to_cgh(n: int, mask: int) -> Cgh:
    trips = []
    m = mask
    while m:
        b = m & -m
        trips.append(triple_unrank(n, b.bit_length() - 1))
        m ^= b
    return Cgh.of(n, trips)


def brute_force_mis(g: ConflictGraph | Sequence[int]) -> int:
    """Maximum independent set by exhaustive enumeration with pruning.

    Correctness oracle only; refuses more than 24 vertices.
    """
    adj: Sequence[int] = g.adj if isinstance(g, ConflictGraph) else g
    v_count = len(adj)
    if v_count > 24:
        raise ValueError(f"brute force limited to 24 vertices, got {v_count}")
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        b = cand & -cand
        v = b.bit_length() - 1
        rec(cand & ~(adj[v] | b), size + 1)
        rec(cand ^ b, size)

    rec((1 << v_count) - 1, 0)
    return best


def ex_number(
    n: int, forbidden: Iterable[ConfigType], budget_s: float | None = DEFAULT_BUDGET_S
) -> SearchResult:
    """Compute ex(n, F) and a witness family, re-validated for freeness."""
    g = build_conflict_graph(n, forbidden)
    result = max_independent_set(g, budget_s)
    report = is_free(result.witness, g.forbidden)
    if not report.free:
        raise AssertionError(
            f"solver witness violates freeness: {report.violation} on {report.witness}"
        )
    return result


@dataclass
class EnumerationResult:
    size: int
    families: list[Cgh]
    truncated: bool


class _Stop(Exception):
    pass


def enumerate_extremal(
    n: int,
    forbidden: Iterable[ConfigType],
    cap: int | None = None,
    up_to_symmetry: bool = False,
    budget_s: float | None = DEFAULT_BUDGET_S,
) -> EnumerationResult:
    """All maximum independent sets (or their canonical forms) in order.

    Requires the optimum to be provable within the budget.  Families are
    produced by an include-first DFS over ascending ranks, so the output
    order is deterministic; hitting the cap sets the truncated flag.
    """
    g = build_conflict_graph(n, forbidden)
    opt = max_independent_set(g, budget_s)
    if opt.status is not SearchStatus.OPTIMAL:
        raise BudgetExceeded(f"optimum for n={n} not proven within budget")
    target = opt.size
    adj = g.adj
    full = (1 << g.vertex_count) - 1

    families: list[Cgh] = []
    seen_keys: set[frozenset] = set()
    truncated = False

    def record(mask: int) -> None:
        nonlocal truncated
        fam = _mask_to_cgh(n, mask)
        if up_to_symmetry:
            fam = canonical_form(fam)
            key = fam.triples
            if key in seen_keys:
                return
            seen_keys.add(key)
        if cap is not None and len(families) >= cap:
            truncated = True
            raise _Stop
        families.append(fam)

    def rec(cand: int, size: int, mask: int) -> None:
        if size == target:
            record(mask)
            return
        if not cand or size + cand.bit_count() < target:
            return
        if size + _clique_cover_count(adj, cand) < target:
            return
        b = cand & -cand
        v = b.bit_length() - 1
        rec(cand & ~(adj[v] | b), size + 1, mask | b)
        rec(cand ^ b, size, mask)

    try:
        rec(full, 0, 0)
    except _Stop:
        pass
    return EnumerationResult(target, families, truncated)
