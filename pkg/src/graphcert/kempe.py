"""Kempe-chain local search for class-1 edge colorings.

The search starts from a Delta+1 coloring, repeatedly picks the rarest color
and tries to eliminate it: each of its edges is either recolored directly
with a color missing at both endpoints, or freed up by switching a two-color
chain chosen by score. Deterministic for a fixed (graph, budget, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import (EdgeColoring, Graph, is_overfull, max_degree, verify_edge_coloring,
                   vizing_delta_plus_one)


class BudgetExhaustedError(RuntimeError):
    """The search ran out of switches or restarts without a certificate."""


@dataclass(frozen=True)
class SearchBudget:
    max_switches: int
    max_restarts: int
    seed: int

    def __post_init__(self) -> None:
        if self.max_switches < 1 or self.max_restarts < 1:
            raise ValueError("budget limits must be positive")

    @staticmethod
    def default(seed: int = 0) -> "SearchBudget":
        return SearchBudget(max_switches=3000, max_restarts=20, seed=seed)


@dataclass(frozen=True)
class SearchOutcome:
    coloring: EdgeColoring | None
    reason: str  # "ok" | "overfull" | "budget"
    restarts_used: int


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _Work:
    """Mutable coloring state: edge colors plus per-vertex color -> neighbor."""

    def __init__(self, g: Graph, coloring: EdgeColoring):
        self.declared = coloring.declared_color_count
        self.colors: dict[tuple[int, int], int] = dict(coloring.assignment)
        self.at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
        for (u, v), c in self.colors.items():
            self.at[u][c] = v
            self.at[v][c] = u

    def missing(self, v: int) -> list[int]:
        return [c for c in range(1, self.declared + 1) if c not in self.at[v]]

    def recolor(self, e: tuple[int, int], c: int) -> None:
        u, v = e
        old = self.colors[e]
        del self.at[u][old]
        del self.at[v][old]
        self.colors[e] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def chain_edges(self, start: int, a: int, b: int) -> list[tuple[int, int]]:
        # Maximal (a,b)-alternating component through start: a path or a cycle.
        out: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        closed = False
        cur, col = start, a
        while col in self.at[cur]:
            nxt = self.at[cur][col]
            e = _edge(cur, nxt)
            if e in seen:
                break
            seen.add(e)
            out.append(e)
            cur, col = nxt, (b if col == a else a)
            if cur == start:
                closed = True
                break
        if not closed:
            cur, col = start, b
            while col in self.at[cur]:
                nxt = self.at[cur][col]
                e = _edge(cur, nxt)
                if e in seen:
                    break
                seen.add(e)
                out.append(e)
                cur, col = nxt, (a if col == b else b)
        return out

    def swap(self, chain: Sequence[tuple[int, int]], a: int, b: int) -> None:
        # Two passes: transient duplicates would corrupt the at-maps otherwise.
        for e in chain:
            u, v = e
            old = self.colors[e]
            del self.at[u][old]
            del self.at[v][old]
        for e in chain:
            u, v = e
            new = b if self.colors[e] == a else a
            self.colors[e] = new
            self.at[u][new] = v
            self.at[v][new] = u

    def snapshot(self) -> EdgeColoring:
        return EdgeColoring(dict(self.colors), self.declared)


def kempe_switch(coloring: EdgeColoring, g: Graph, start: int, a: int, b: int) -> EdgeColoring:
    """Swap colors a and b along the maximal (a,b)-component through start."""
    if a == b:
        raise ValueError("need two distinct colors")
    work = _Work(g, coloring)
    chain = work.chain_edges(start, a, b)
    work.swap(chain, a, b)
    result = work.snapshot()
    assert verify_edge_coloring(g, result).ok, "switch broke properness"
    return result


def eliminate_color(g: Graph, coloring: EdgeColoring, target: int,
                    budget: SearchBudget) -> EdgeColoring | None:
    """Drive the target color's usage to zero within the switch budget."""
    report = verify_edge_coloring(g, coloring)
    if not report.ok:
        raise ValueError(f"input coloring is not proper/total: {report.detail}")
    work = _Work(g, coloring)
    rng = random.Random(budget.seed)
    switches = 0
    while True:
        targets = sorted(e for e, c in work.colors.items() if c == target)
        if not targets:
            return work.snapshot().normalized()
        progress = False
        for e in targets:
            u, v = e
            common = sorted((set(work.missing(u)) & set(work.missing(v))) - {target})
            if common:
                work.recolor(e, common[0])
                progress = True
        if progress:
            continue
        if switches >= budget.max_switches:
            return None
        u, v = targets[rng.randrange(len(targets))]
        e_uv = _edge(u, v)
        # Candidate switches anchored at u or v: target-colored chains can move
        # or shrink the target class; missing-pair chains can open a direct
        # recoloring of (u,v).
        candidates: set[tuple[int, int, int]] = set()
        for w, other in ((u, v), (v, u)):
            for c in range(1, work.declared + 1):
                if c != target:
                    candidates.add((w, target, c))
            for acol in work.missing(w):
                if acol == target:
                    continue
                for bcol in work.missing(other):
                    if bcol in (target, acol):
                        continue
                    candidates.add((other, acol, bcol))
        best: tuple[tuple[int, float], list[tuple[int, int]], int, int] | None = None
        for anchor, acol, bcol in sorted(candidates):
            chain = work.chain_edges(anchor, acol, bcol)
            if not chain:
                continue
            drop = 0
            if target in (acol, bcol):
                on_target = sum(1 for ce in chain if work.colors[ce] == target)
                drop = 2 * on_target - len(chain)
            work.swap(chain, acol, bcol)
            freed = (set(work.missing(u)) & set(work.missing(v))) - {target}
            if freed and work.colors.get(e_uv) == target:
                drop += 1
            work.swap(chain, acol, bcol)
            score = drop * 1000 - len(chain)
            key = (score, rng.random())
            if best is None or key > best[0]:
                best = (key, chain, acol, bcol)
        if best is None:
            return None
        _, chain, acol, bcol = best
        work.swap(chain, acol, bcol)
        switches += 1


def find_class1(g: Graph, budget: SearchBudget,
                warm_start: EdgeColoring | None = None) -> SearchOutcome:
    """Search for a Delta-color certificate; None with a reason otherwise."""
    if g.edge_count == 0:
        return SearchOutcome(EdgeColoring({}, 0), "ok", 0)
    if is_overfull(g):
        return SearchOutcome(None, "overfull", 0)
    delta = max_degree(g)
    if warm_start is not None and not verify_edge_coloring(g, warm_start).ok:
        raise ValueError("warm start is not a proper total coloring")
    for r in range(budget.max_restarts):
        sub_seed = budget.seed * 1_000_003 + r
        if r == 0 and warm_start is not None:
            current = warm_start
        else:
            order = sorted(g.edges)
            random.Random(sub_seed).shuffle(order)
            current = vizing_delta_plus_one(g, order)
        while len(current.colors_used) > delta:
            counts = current.color_counts()
            target = min(counts, key=lambda c: (counts[c], c))
            sub_budget = SearchBudget(budget.max_switches, budget.max_restarts, sub_seed)
            nxt = eliminate_color(g, current, target, sub_budget)
            if nxt is None:
                break
            current = nxt
        if len(current.colors_used) <= delta:
            final = current.normalized()
            assert verify_edge_coloring(g, final).ok
            return SearchOutcome(final, "ok", r + 1)
    return SearchOutcome(None, "budget", budget.max_restarts)


@dataclass(frozen=True)
class CriticalityReport:
    critical: bool
    failures: tuple[tuple[int, int], ...]   # search gave up: inconclusive
    disproved: tuple[tuple[int, int], ...]  # removal stays overfull: conclusive


def edge_critical_check(g: Graph, budget: SearchBudget) -> CriticalityReport:
    """Does every single-edge removal drop the chromatic index below Delta+1?

    Edges whose removal lowers Delta are certified by the Delta+1 bound and
    skipped. Overfull removals are conclusive counterexamples; budget
    exhaustion is recorded separately as inconclusive.
    """
    delta = max_degree(g)
    failures: list[tuple[int, int]] = []
    disproved: list[tuple[int, int]] = []
    for e in sorted(g.edges):
        sub = g.without_edge(*e)
        if max_degree(sub) < delta:
            continue
        outcome = find_class1(sub, budget)
        if outcome.coloring is None:
            (disproved if outcome.reason == "overfull" else failures).append(e)
    return CriticalityReport(critical=not failures and not disproved,
                             failures=tuple(failures), disproved=tuple(disproved))
