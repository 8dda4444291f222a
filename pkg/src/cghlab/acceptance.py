"""The verification suite: every exit criterion as a runnable check.

Each criterion is exact (zero tolerance); a criterion fails if any of its
comparisons fail, and the failure lines say which.  `run_all` prints one
PASS/FAIL line per criterion.  The same functions back the pytest
acceptance module and the `verify-all` CLI command.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from time import perf_counter
from typing import Callable

from .classify import ConfigType, classify_pair, is_free
from .constructions import (
    FAMILIES,
    Design,
    build_family,
    d2_fano7,
    delta,
    h_prime,
    h_star,
    s2_split,
)
from .core import Cgh, all_triples, canonical_form
from .geometry import oracle_classify, realization_for
from .search import (
    DEFAULT_BUDGET_S,
    SearchStatus,
    brute_force_mis,
    build_conflict_graph,
    enumerate_extremal,
    ex_number,
    max_independent_set,
    solve_adjacency,
)
from .tournaments import (
    Tournament,
    count_directed_triangles,
    max_triangle_tournament,
    triangles_by_formula,
    verify_d1_bound,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0


_REGISTRY: list[tuple[int, str, Callable]] = []


def _criterion(number: int, name: str):
    def wrap(fn):
        _REGISTRY.append((number, name, fn))
        return fn

    return wrap


def _cap(n: int, max_n: int | None) -> int:
    return n if max_n is None else min(n, max_n)


def _check_ex(
    fails: list[str],
    lines: list[str],
    forbidden: set[ConfigType],
    expected: dict[int, int],
    max_n: int | None,
    budget_s: float,
) -> None:
    names = "{" + ",".join(sorted(c.value for c in forbidden)) + "}"
    for n, want in expected.items():
        if max_n is not None and n > max_n:
            continue
        res = ex_number(n, forbidden, budget_s)
        lines.append(f"ex({n}, {names}) = {res.size} (expected {want}, {res.nodes} nodes)")
        if res.status is not SearchStatus.OPTIMAL:
            fails.append(f"ex({n}, {names}): optimum not proven within budget")
        elif res.size != want:
            fails.append(f"ex({n}, {names}) = {res.size}, expected {want}")


@_criterion(1, "classifier agrees with geometric oracle (4 <= n <= 9, exhaustive)")
def _c1(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    total = 0
    for n in range(4, _cap(9, max_n) + 1):
        rz = realization_for(n)
        trips = all_triples(n)
        for s, t in combinations(trips, 2):
            total += 1
            a = classify_pair(n, s, t)
            b = oracle_classify(rz, s, t)
            if a is not b:
                fails.append(f"n={n}: {s} vs {t}: classifier {a.value}, oracle {b.value}")
    lines.append(f"{total} pairs compared, {len(fails)} mismatches")


@_criterion(2, "delta(n) table and h_star sizes over all side-bit choices")
def _c2(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    expected = {3: 1, 4: 2, 5: 5, 6: 8, 7: 14, 8: 20, 9: 30, 10: 40, 11: 55}
    for n, want in expected.items():
        got = delta(n)
        if got != want:
            fails.append(f"delta({n}) = {got}, expected {want}")
    lines.append(f"delta(3..11) = {[delta(n) for n in range(3, 12)]}")
    for n in (4, 6, 8):
        if max_n is not None and n > max_n:
            continue
        want = delta(n)
        for bits in product((0, 1), repeat=n // 2):
            got = h_star(n, bits).size
            if got != want:
                fails.append(f"|h_star({n}, {bits})| = {got}, expected {want}")
        lines.append(f"h_star({n}): all {2 ** (n // 2)} side-bit choices have size {want}")


def _sample_triangulation(n: int) -> list[tuple[int, int]]:
    """A zig-zag ("snake") triangulation, distinct from the fan for n >= 5."""
    diags = []
    lo, hi = 0, n - 1
    while hi - lo >= 2:
        if len(diags) % 2 == 0:
            diags.append((lo, hi - 1))
            hi -= 1
        else:
            diags.append((lo + 1, hi))
            lo += 1
    return diags[: n - 3]


@_criterion(3, "construction sizes match closed forms and freeness holds (n <= 12)")
def _c3(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    top = _cap(12, max_n)
    trivial_design = Design(7, ((0, 1, 2, 3, 4, 5, 6),))
    checked = 0
    for fid, info in FAMILIES.items():
        sizes = []
        for n in range(3, top + 1):
            if not info.valid_n(n):
                continue
            kwargs = {}
            if fid == "D2TRI":
                kwargs["diagonals"] = _sample_triangulation(n)
            if fid == "D2DESIGN":
                if n != 7:
                    continue
                kwargs["design"] = trivial_design
            fam = build_family(fid, n, **kwargs)
            checked += 1
            want = info.expected_size(n)
            if fam.size != want:
                fails.append(f"|{fid}({n})| = {fam.size}, expected {want}")
            report = is_free(fam, info.forbidden)
            if not report.free:
                fails.append(
                    f"{fid}({n}) contains {report.violation.value}: {report.witness}"
                )
            sizes.append(f"{n}:{fam.size}")
        lines.append(f"{fid}: sizes {{{', '.join(sizes)}}}")
    lines.append(f"{checked} (family, n) pairs checked")


@_criterion(4, "ex(n, {M1,S1,D1}) = delta(n) for n = 5..9")
def _c4(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(
        fails, lines, {ConfigType.M1, ConfigType.S1, ConfigType.D1},
        {5: 5, 6: 8, 7: 14, 8: 20, 9: 30}, max_n, budget_s,
    )


@_criterion(5, "ex(n, M1) = delta(n) + n(n-3)/2 for n = 6..9")
def _c5(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(fails, lines, {ConfigType.M1}, {6: 17, 7: 28, 8: 40, 9: 57}, max_n, budget_s)


@_criterion(6, "ex(n, {M1,S1}) = delta(n) + floor(n/2)floor((n-2)/2) for n = 6..9")
def _c6(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(
        fails, lines, {ConfigType.M1, ConfigType.S1},
        {6: 14, 7: 20, 8: 32, 9: 42}, max_n, budget_s,
    )


@_criterion(7, "ex(n, M3) = C(n,3) - C(n-3,3) for n = 4..9")
def _c7(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(
        fails, lines, {ConfigType.M3},
        {4: 4, 5: 10, 6: 19, 7: 31, 8: 46, 9: 64}, max_n, budget_s,
    )


@_criterion(8, "ex(n, M2) = C(n,2) - 2 for n = 7..9, and ex(6, M2) >= 14")
def _c8(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(fails, lines, {ConfigType.M2}, {7: 19, 8: 26, 9: 34}, max_n, budget_s)
    if max_n is None or max_n >= 6:
        res = ex_number(6, {ConfigType.M2}, budget_s)
        lines.append(f"ex(6, {{M2}}) = {res.size} (asserted >= 14)")
        if res.size < 14:
            fails.append(f"ex(6, {{M2}}) = {res.size} < 14")


@_criterion(9, "ex(n, S3) = n(n-2)/2 for n = 4, 6, 8")
def _c9(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(fails, lines, {ConfigType.S3}, {4: 4, 6: 12, 8: 24}, max_n, budget_s)


@_criterion(10, "ex(n, D1) = delta(n) for n = 4..9")
def _c10(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    _check_ex(
        fails, lines, {ConfigType.D1},
        {4: 2, 5: 5, 6: 8, 7: 14, 8: 20, 9: 30}, max_n, budget_s,
    )


@_criterion(11, "conjecture probes: S2 and D2 lower bounds, S1 bracket")
def _c11(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    conjectured_s2 = {5: 5, 6: 8, 7: 11, 8: 15, 9: 19}
    for n in range(5, _cap(9, max_n) + 1):
        witness = s2_split(n)
        want = n * n // 4 - 1
        if witness.size != want:
            fails.append(f"|s2_split({n})| = {witness.size}, expected {want}")
        if not is_free(witness, {ConfigType.S2}).free:
            fails.append(f"s2_split({n}) is not S2-free")
        res = ex_number(n, {ConfigType.S2}, budget_s)
        agree = "matches" if res.size == conjectured_s2[n] else "DIFFERS FROM"
        lines.append(f"ex({n}, {{S2}}) = {res.size}; {agree} conjectured {conjectured_s2[n]}")
        if res.size < want:
            fails.append(f"ex({n}, {{S2}}) = {res.size} below construction size {want}")
    for n in range(5, _cap(8, max_n) + 1):
        lo = delta(n) + (n // 2) * ((n - 2) // 2)
        hi = delta(n) + n * n
        res = ex_number(n, {ConfigType.S1}, budget_s)
        lines.append(f"ex({n}, {{S1}}) = {res.size}; bracket [{lo}, {hi}]")
        if not lo <= res.size <= hi:
            fails.append(f"ex({n}, {{S1}}) = {res.size} outside [{lo}, {hi}]")
    if max_n is None or max_n >= 7:
        fano = d2_fano7()
        if fano.size != 8 or not is_free(fano, {ConfigType.D2}).free:
            fails.append("Fano witness is not a D2-free family of size 8")
        res = ex_number(7, {ConfigType.D2}, budget_s)
        lines.append(f"ex(7, {{D2}}) = {res.size} (asserted >= 8)")
        if res.size < 8:
            fails.append(f"ex(7, {{D2}}) = {res.size} < 8")


@_criterion(12, "extremal uniqueness: h_star at n = 5, 7; h_prime(7) for M1")
def _c12(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    isect = {ConfigType.M1, ConfigType.S1, ConfigType.D1}
    for n in (5, 7):
        if max_n is not None and n > max_n:
            continue
        enum = enumerate_extremal(n, isect, budget_s=budget_s)
        lines.append(f"n={n}, {{M1,S1,D1}}: {len(enum.families)} extremal families")
        if enum.truncated or enum.families != [h_star(n)]:
            fails.append(f"extremal {{M1,S1,D1}} families at n={n} are not exactly h_star({n})")
    if max_n is None or max_n >= 7:
        enum = enumerate_extremal(7, {ConfigType.M1}, budget_s=budget_s)
        target = canonical_form(h_prime(7))
        lines.append(f"n=7, {{M1}}: {len(enum.families)} extremal families of size {enum.size}")
        if enum.truncated or not enum.families:
            fails.append("enumeration of extremal M1-free families at n=7 failed")
        for fam in enum.families:
            if canonical_form(fam) != target:
                fails.append("an extremal M1-free family at n=7 differs from h_prime(7)")


def _random_complete_tournament(n: int, rng: random.Random) -> Tournament:
    arcs = set()
    for i, j in combinations(range(n), 2):
        arcs.add((i, j) if rng.random() < 0.5 else (j, i))
    return Tournament(n, frozenset(arcs))


def _random_d1_free_family(n: int, rng: random.Random) -> Cgh:
    trips = all_triples(n)
    rng.shuffle(trips)
    kept: list = []
    for t in trips:
        ok = True
        for s in kept:
            if len(set(s) & set(t)) == 2 and classify_pair(n, s, t) is ConfigType.D1:
                ok = False
                break
        if ok:
            kept.append(t)
    return Cgh.of(n, kept)


@_criterion(13, "tournament suite: outdegree formula, near-regular maxima, D1 bound")
def _c13(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    rng = random.Random(20210607)
    for _ in range(500):
        n = rng.randint(3, 8)
        t = _random_complete_tournament(n, rng)
        if triangles_by_formula(t.outdegrees()) != count_directed_triangles(t):
            fails.append(f"formula/brute mismatch on random tournament n={n}")
    lines.append("500 random tournaments: formula equals brute count")
    for n in range(3, 17):
        got = count_directed_triangles(max_triangle_tournament(n))
        if got != delta(n):
            fails.append(f"max tournament n={n}: {got} triangles, expected delta={delta(n)}")
    lines.append("max_triangle_tournament(3..16) achieves delta(n)")
    for n in range(4, _cap(9, max_n) + 1):
        fam = h_star(n) if n % 2 else h_star(n, (0,) * (n // 2))
        report = verify_d1_bound(fam)
        if not (report.bound_holds and report.family_triples_directed):
            fails.append(f"D1 bound fails for h_star({n}): {report}")
    lines.append("verify_d1_bound holds for h_star(n), n = 4..9")
    bad = 0
    for _ in range(100):
        fam = _random_d1_free_family(8, rng)
        report = verify_d1_bound(fam)
        if not (report.bound_holds and report.family_triples_directed):
            bad += 1
    if bad:
        fails.append(f"D1 bound fails for {bad}/100 random greedy families at n=8")
    lines.append("100 random greedy D1-free families at n=8: bound holds")


@_criterion(14, "solver equals brute force on all small conflict graphs and 200 random graphs")
def _c14(max_n: int | None, budget_s: float, fails: list[str], lines: list[str]) -> None:
    singles = [{c} for c in ConfigType]
    combos = singles + [{ConfigType.M1, ConfigType.S1, ConfigType.D1}]
    for n in (5, 6):
        if max_n is not None and n > max_n:
            continue
        for forb in combos:
            g = build_conflict_graph(n, forb)
            fast = max_independent_set(g, budget_s).size
            slow = brute_force_mis(g)
            if fast != slow:
                names = ",".join(sorted(c.value for c in forb))
                fails.append(f"n={n} {{{names}}}: solver {fast}, brute force {slow}")
    lines.append("18 small conflict graphs: solver equals brute force")
    rng = random.Random(987654321)
    for idx in range(200):
        v_count = rng.randint(1, 16)
        p = rng.random()
        adj = [0] * v_count
        for i, j in combinations(range(v_count), 2):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        fast = solve_adjacency(adj, budget_s).size
        slow = brute_force_mis(adj)
        if fast != slow:
            fails.append(f"random graph #{idx} (V={v_count}): solver {fast}, brute {slow}")
    lines.append("200 random graphs (V <= 16): solver equals brute force")


def run_criterion(
    number: int, max_n: int | None = None, budget_s: float = DEFAULT_BUDGET_S
) -> CriterionResult:
    for num, name, fn in _REGISTRY:
        if num == number:
            fails: list[str] = []
            lines: list[str] = []
            start = perf_counter()
            fn(max_n, budget_s, fails, lines)
            elapsed = perf_counter() - start
            return CriterionResult(num, name, not fails, lines + fails, elapsed)
    raise ValueError(f"no criterion numbered {number}")


def criterion_numbers() -> list[int]:
    return [num for num, _, _ in _REGISTRY]


def run_all(
    max_n: int | None = None,
    budget_s: float = DEFAULT_BUDGET_S,
    echo: Callable[[str], None] | None = print,
) -> list[CriterionResult]:
    results = []
    for num in criterion_numbers():
        res = run_criterion(num, max_n, budget_s)
        results.append(res)
        if echo is not None:
            mark = "PASS" if res.passed else "FAIL"
            echo(f"[{res.number:2d}] {mark} {res.name} ({res.elapsed_s:.1f}s)")
            if not res.passed:
                for line in res.lines:
                    echo(f"      {line}")
    return results
