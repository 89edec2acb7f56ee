"""Plain graph types, certificate verifiers, and exact small-graph solvers.

Vertices are 0-based ints internally (1-based only in files). Graphs are
simple and undirected; edges are stored as sorted 2-tuples. Everything here
is deterministic and side-effect free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class EmptyGraphError(ValueError):
    """Raised when an operation needs at least one vertex."""


class CapExceeded(ValueError):
    """Raised when an exact solver is asked for more vertices than its cap."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"self loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    labels: Mapping[int, str] | None = None

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range or unnormalized")

    @staticmethod
    def from_edges(vertex_count: int, pairs: Iterable[tuple[int, int]],
                   labels: Mapping[int, str] | None = None) -> "Graph":
        return Graph(vertex_count, frozenset(_normalize_edge(u, v) for u, v in pairs), labels)

    @cached_property
    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return _normalize_edge(u, v) in self.edges

    def without_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.vertex_count, self.edges - {e}, self.labels)


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise EmptyGraphError("max degree of empty graph")
    return max(len(a) for a in g.adjacency)


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.edges
    )
    return Graph(n, edges)


def is_overfull(g: Graph) -> bool:
    """Edge count exceeds Δ·⌊n/2⌋, forcing class 2."""
    if g.vertex_count == 0:
        return False
    return g.edge_count > max_degree(g) * (g.vertex_count // 2)


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Partial or total assignment of positive color ids to edges."""

    assignment: Mapping[tuple[int, int], int]
    declared_color_count: int

    def __post_init__(self) -> None:
        if self.declared_color_count < 0:
            raise ValueError("negative color count")
        for e, c in self.assignment.items():
            if not (isinstance(c, int) and 1 <= c <= self.declared_color_count):
                raise ValueError(f"color {c} on edge {e} outside 1..{self.declared_color_count}")
            if e != _normalize_edge(*e):
                raise ValueError(f"unnormalized edge key {e}")

    @property
    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def color_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.assignment.values():
            counts[c] = counts.get(c, 0) + 1
        return counts

    def normalized(self) -> "EdgeColoring":
        """Relabel colors to a contiguous 1..k range, preserving relative order."""
        used = sorted(self.colors_used)
        remap = {c: i + 1 for i, c in enumerate(used)}
        return EdgeColoring({e: remap[c] for e, c in self.assignment.items()}, len(used))

    def shifted(self, offset: int) -> "EdgeColoring":
        return EdgeColoring({e: c + offset for e, c in self.assignment.items()},
                            self.declared_color_count + offset)


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Structured verifier output. ok is true iff detail is empty."""

    ok: bool
    colors_used: int
    delta: int
    detail: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def _report(detail: list[str], colors_used: int, delta: int) -> VerificationReport:
    return VerificationReport(not detail, colors_used, delta, tuple(detail))


def verify_edge_coloring(g: Graph, coloring: EdgeColoring,
                         require_total: bool = True) -> VerificationReport:
    """Check properness of an edge coloring against its host graph."""
    detail: list[str] = []
    delta = max_degree(g) if g.vertex_count else 0
    for e in coloring.assignment:
        if e not in g.edges:
            detail.append(f"colored edge {e} not in graph")
    seen: dict[int, dict[int, tuple[int, int]]] = {}
    for e, c in coloring.assignment.items():
        for v in e:
            at_v = seen.setdefault(v, {})
            if c in at_v:
                detail.append(f"color {c} repeated at vertex {v} on {at_v[c]} and {e}")
            else:
                at_v[c] = e
    if require_total:
        missing = g.edges - set(coloring.assignment)
        for e in sorted(missing)[:10]:
            detail.append(f"edge {e} uncolored")
        if len(missing) > 10:
            detail.append(f"...{len(missing) - 10} more uncolored edges")
    return _report(detail, len(coloring.colors_used), delta)


def _check_edges_exist(g: Graph, seq: Sequence[int], closed: bool) -> list[str]:
    detail = []
    pairs = list(zip(seq, seq[1:]))
    if closed:
        pairs.append((seq[-1], seq[0]))
    for u, v in pairs:
        if not g.has_edge(u, v):
            detail.append(f"missing edge ({u},{v})")
    return detail


def verify_hamiltonian_cycle(g: Graph, seq: Sequence[int]) -> VerificationReport:
    detail: list[str] = []
    delta = max_degree(g) if g.vertex_count else 0
    if len(seq) != g.vertex_count or set(seq) != set(range(g.vertex_count)):
        detail.append("sequence is not a permutation of the vertices")
    elif g.vertex_count < 3:
        detail.append("cycle needs at least 3 vertices")
    else:
        detail.extend(_check_edges_exist(g, seq, closed=True))
    return _report(detail, 0, delta)


def verify_hamiltonian_path(g: Graph, seq: Sequence[int],
                            start: int | None = None,
                            end: int | None = None) -> VerificationReport:
    detail: list[str] = []
    delta = max_degree(g) if g.vertex_count else 0
    if len(seq) != g.vertex_count or set(seq) != set(range(g.vertex_count)):
        detail.append("sequence is not a permutation of the vertices")
    else:
        if g.vertex_count >= 2:
            detail.extend(_check_edges_exist(g, seq, closed=False))
        if start is not None and seq[0] != start:
            detail.append(f"path starts at {seq[0]}, expected {start}")
        if end is not None and seq[-1] != end:
            detail.append(f"path ends at {seq[-1]}, expected {end}")
    return _report(detail, 0, delta)


def verify_hamiltonian_decomposition(g: Graph, cycles: Sequence[Sequence[int]],
                                     matching: Iterable[tuple[int, int]] | None = None
                                     ) -> VerificationReport:
    """Cycles (plus an optional perfect matching) must partition the edge set.

    colors_used reports the number of parts (cycles, plus one for a matching).
    """
    detail: list[str] = []
    delta = max_degree(g) if g.vertex_count else 0
    used: dict[tuple[int, int], int] = {}

    def claim(e: tuple[int, int], part: str) -> None:
        if e in used:
            detail.append(f"edge {e} reused by {part}")
        used[e] = used.get(e, 0) + 1

    for idx, cyc in enumerate(cycles):
        rep = verify_hamiltonian_cycle(g, cyc)
        if not rep.ok:
            detail.append(f"cycle {idx}: " + "; ".join(rep.detail))
            continue
        for u, v in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            claim(_normalize_edge(u, v), f"cycle {idx}")
    parts = len(cycles)
    if matching is not None:
        parts += 1
        covered: set[int] = set()
        for u, v in matching:
            e = _normalize_edge(u, v)
            if e not in g.edges:
                detail.append(f"matching edge {e} not in graph")
            if u in covered or v in covered:
                detail.append(f"matching repeats a vertex on {e}")
            covered.update((u, v))
            claim(e, "matching")
        if len(covered) != g.vertex_count:
            detail.append("matching is not perfect")
    leftover = g.edges - set(used)
    if leftover:
        detail.append(f"{len(leftover)} edges uncovered, e.g. {sorted(leftover)[:5]}")
    return _report(detail, parts, delta)


def verify_clique_cover(g: Graph, cliques: Sequence[Iterable[int]]) -> VerificationReport:
    """Disjoint cliques covering every vertex. colors_used reports the clique count."""
    detail: list[str] = []
    delta = max_degree(g) if g.vertex_count else 0
    seen: set[int] = set()
    for idx, raw in enumerate(cliques):
        members = sorted(set(raw))
        if len(members) != len(list(raw)):
            detail.append(f"clique {idx} repeats a vertex")
        for v in members:
            if v in seen:
                detail.append(f"vertex {v} in more than one clique")
            seen.add(v)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not g.has_edge(u, v):
                    detail.append(f"clique {idx} misses edge ({u},{v})")
    if seen != set(range(g.vertex_count)):
        detail.append(f"{g.vertex_count - len(seen)} vertices uncovered")
    return _report(detail, len(cliques), delta)


def fournier_forest_check(g: Graph) -> bool:
    """True when the subgraph induced by the maximum-degree vertices is a forest.

    A true result certifies class 1 for the whole graph.
    """
    if g.vertex_count == 0:
        raise EmptyGraphError("fournier check on empty graph")
    delta = max_degree(g)
    majors = [v for v in range(g.vertex_count) if g.degree(v) == delta]
    index = {v: i for i, v in enumerate(majors)}
    parent = list(range(len(majors)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in index and v in index:
            ru, rv = find(index[u]), find(index[v])
            if ru == rv:
                return False
            parent[ru] = rv
    return True


# --- exact independence and clique numbers -----------------------------------

DEFAULT_EXACT_CAP = 4096


def _max_clique_masks(adj: list[int], incumbent: int = 0) -> tuple[int, int]:
    """Tomita-style branch and bound with a greedy coloring bound.

    adj[v] is a neighbor bitmask. Returns (size, vertex bitmask). A known
    clique can be passed as an incumbent bitmask to prime the bound.
    """
    best_mask = incumbent
    best_size = bin(incumbent).count("1")

    def expand(r_mask: int, r_size: int, p_mask: int) -> None:
        nonlocal best_size, best_mask
        if p_mask == 0:
            if r_size > best_size:
                best_size, best_mask = r_size, r_mask
            return
        order: list[int] = []
        bound: list[int] = []
        q = p_mask
        color = 0
        while q:
            color += 1
            avail = q
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~(adj[v] | bit)
                q &= ~bit
                order.append(v)
                bound.append(color)
        for i in range(len(order) - 1, -1, -1):
            if r_size + bound[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            expand(r_mask | bit, r_size + 1, p_mask & adj[v])
            p_mask &= ~bit

    expand(0, 0, (1 << len(adj)) - 1 if adj else 0)
    return best_size, best_mask


def _mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


def _adjacency_masks(g: Graph, complemented: bool) -> list[int]:
    n = g.vertex_count
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if complemented:
        full = (1 << n) - 1
        masks = [(~m & full) & ~(1 << v) for v, m in enumerate(masks)]
    return masks


def _seed_mask(masks: list[int], seed: Iterable[int] | None) -> int:
    if seed is None:
        return 0
    members = sorted(set(seed))
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not masks[u] & (1 << v):
                raise ValueError(f"seed vertices {u},{v} are not mutually joined")
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def exact_omega(g: Graph, cap: int = DEFAULT_EXACT_CAP,
                seed: Iterable[int] | None = None) -> tuple[int, list[int]]:
    """Exact clique number with witness. seed: a known clique to prime the bound."""
    if g.vertex_count == 0:
        raise EmptyGraphError("clique number of empty graph")
    if g.vertex_count > cap:
        raise CapExceeded(f"{g.vertex_count} vertices exceeds cap {cap}")
    masks = _adjacency_masks(g, complemented=False)
    size, mask = _max_clique_masks(masks, _seed_mask(masks, seed))
    return size, _mask_to_vertices(mask)


def exact_alpha(g: Graph, cap: int = DEFAULT_EXACT_CAP,
                seed: Iterable[int] | None = None) -> tuple[int, list[int]]:
    """Exact independence number with witness (clique search on the complement).

    seed: a known independent set to prime the bound.
    """
    if g.vertex_count == 0:
        raise EmptyGraphError("independence number of empty graph")
    if g.vertex_count > cap:
        raise CapExceeded(f"{g.vertex_count} vertices exceeds cap {cap}")
    masks = _adjacency_masks(g, complemented=True)
    size, mask = _max_clique_masks(masks, _seed_mask(masks, seed))
    return size, _mask_to_vertices(mask)


# --- Vizing's Δ+1 construction ------------------------------------------------

def vizing_delta_plus_one(g: Graph, order: Sequence[tuple[int, int]] | None = None
                          ) -> EdgeColoring:
    """Proper edge coloring with at most Δ+1 colors by fan rotation.

    Deterministic for a fixed insertion order (sorted edges by default).
    """
    if g.edge_count == 0:
        return EdgeColoring({}, 0)
    palette = max_degree(g) + 1
    at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
    color_of: dict[tuple[int, int], int] = {}

    def free(v: int) -> int:
        c = 1
        while c in at[v]:
            c += 1
        return c

    def set_color(u: int, v: int, c: int) -> None:
        e = _normalize_edge(u, v)
        old = color_of.get(e)
        if old is not None:
            del at[u][old]
            del at[v][old]
        color_of[e] = c
        at[u][c] = v
        at[v][c] = u

    def uncolor(u: int, v: int) -> None:
        e = _normalize_edge(u, v)
        old = color_of.pop(e)
        del at[u][old]
        del at[v][old]

    def walk(start: int, first: int, second: int) -> list[tuple[int, int, int]]:
        # Maximal path from start whose edges alternate first, second, ...
        # start must miss one of the two colors, so this is a simple path.
        chain: list[tuple[int, int, int]] = []
        cur, col = start, first
        while col in at[cur]:
            nxt = at[cur][col]
            chain.append((cur, nxt, col))
            cur = nxt
            col = first if col == second else second
        return chain

    def invert(chain: list[tuple[int, int, int]], c: int, d: int) -> None:
        for x, y, _ in chain:
            uncolor(x, y)
        for x, y, col in chain:
            set_color(x, y, c if col == d else d)

    def rotate_finish(u: int, prefix: list[int], final_color: int) -> None:
        # Edge (u, prefix[0]) is uncolored; shift colors down the fan.
        cols = [color_of[_normalize_edge(u, f)] for f in prefix[1:]]
        for f in prefix[1:]:
            uncolor(u, f)
        for f, col in zip(prefix[:-1], cols):
            set_color(u, f, col)
        set_color(u, prefix[-1], final_color)

    for e in (order if order is not None else sorted(g.edges)):
        u, v = e
        # Maximal fan at u starting with v; fan_cols[i] = color of (u, fan[i+1]),
        # which is a color missing at fan[i].
        fan = [v]
        fan_cols: list[int] = []
        in_fan = {v}
        while True:
            d = free(fan[-1])
            w = at[u].get(d)
            if w is None or w in in_fan:
                break
            fan.append(w)
            fan_cols.append(d)
            in_fan.add(w)
        d = free(fan[-1])
        if d not in at[u]:
            rotate_finish(u, fan, d)
            continue
        c = free(u)
        path = walk(fan[-1], c, d)
        end = path[-1][1] if path else fan[-1]
        if end == u:
            # u terminates the c,d path from the fan tip; use the earlier fan
            # vertex that also misses d. Its c,d path cannot reach u.
            i0 = fan_cols.index(d)
            invert(walk(fan[i0], c, d), c, d)
            prefix = fan[:i0 + 1]
        else:
            invert(path, c, d)
            prefix = fan
        j = next(i for i, f in enumerate(prefix) if c not in at[f])
        rotate_finish(u, prefix[:j + 1], c)

    used = max(color_of.values())
    assert used <= palette
    return EdgeColoring(dict(color_of), used)
