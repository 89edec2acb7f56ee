"""Keller graphs on Z_4^d.

Vertices are d-tuples over {0,1,2,3}, encoded as base-4 integers with the most
significant digit first. Two vertices are adjacent when they differ in at
least two coordinates and at least one coordinate differs by exactly 2 mod 4.
The module builds the graphs, the explicit Hamiltonian cycle, the kernel-based
class-1 edge coloring, the independence square with its bitstring
automorphisms, the neighborhood reduction for the independence number, clique
cover doubling, and a pairing search for Hamiltonian decompositions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from .core import (
    EdgeColoring,
    Graph,
    VerificationReport,
    exact_alpha,
    verify_hamiltonian_decomposition,
)


def delta(d: int) -> int:
    return 4 ** d - 3 ** d - d


# omega is known exactly for small d and equals 2^d from d = 8 on; the d = 6, 7
# entries come from external computations and are not recomputed here.
KNOWN_OMEGA = {2: 2, 3: 5, 4: 12, 5: 28, 6: 60, 7: 124}


def omega_value(d: int) -> int:
    if d in KNOWN_OMEGA:
        return KNOWN_OMEGA[d]
    if d >= 8:
        return 2 ** d
    raise ValueError(f"no clique number on record for d={d}")


def alpha_value(d: int) -> int:
    if d < 2:
        raise ValueError("d >= 2 required")
    return 5 if d == 2 else 2 ** d


@dataclass(frozen=True, order=True)
class KellerVertex:
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.digits or any(x not in (0, 1, 2, 3) for x in self.digits):
            raise ValueError("digits must be a nonempty tuple over 0..3")

    @property
    def d(self) -> int:
        return len(self.digits)

    def encode(self) -> int:
        value = 0
        for x in self.digits:
            value = value * 4 + x
        return value

    @staticmethod
    def decode(value: int, d: int) -> "KellerVertex":
        if not 0 <= value < 4 ** d:
            raise ValueError(f"{value} out of range for d={d}")
        digits = []
        for _ in range(d):
            digits.append(value % 4)
            value //= 4
        return KellerVertex(tuple(reversed(digits)))

    @staticmethod
    def from_digit_string(text: str) -> "KellerVertex":
        return KellerVertex(tuple(int(ch) for ch in text.strip()))

    @staticmethod
    def parse(text: str, d: int) -> "KellerVertex":
        """Accepts both encodings: a d-char digit string, else a base-10 integer."""
        text = text.strip()
        if len(text) == d and all(ch in "0123" for ch in text):
            return KellerVertex.from_digit_string(text)
        return KellerVertex.decode(int(text), d)

    def __add__(self, other: "KellerVertex") -> "KellerVertex":
        return KellerVertex(tuple((a + b) % 4 for a, b in zip(self.digits, other.digits)))

    def __neg__(self) -> "KellerVertex":
        return KellerVertex(tuple((-a) % 4 for a in self.digits))

    def __str__(self) -> str:
        return "".join(str(x) for x in self.digits)


def _digit_matrix(d: int) -> np.ndarray:
    vals = np.arange(4 ** d)
    digs = np.zeros((4 ** d, d), dtype=np.int8)
    for i in range(d - 1, -1, -1):
        digs[:, i] = vals % 4
        vals = vals // 4
    return digs


def adjacent(u: int, v: int, d: int) -> bool:
    du = KellerVertex.decode(u, d).digits
    dv = KellerVertex.decode(v, d).digits
    diffs = [(a - b) % 4 for a, b in zip(du, dv)]
    return sum(1 for x in diffs if x) >= 2 and any(x == 2 for x in diffs)


def build(d: int) -> Graph:
    if d < 2:
        raise ValueError("d >= 2 required")
    digs = _digit_matrix(d)
    n = 4 ** d
    edges: list[tuple[int, int]] = []
    for u in range(n - 1):
        diff = (digs[u + 1:] - digs[u]) % 4
        mask = (np.count_nonzero(diff, axis=1) >= 2) & (diff == 2).any(axis=1)
        for w in np.nonzero(mask)[0]:
            edges.append((u, u + 1 + int(w)))
    return Graph.from_edges(n, edges)


# --- Hamiltonian cycle -------------------------------------------------------------

# The 16-step prefix cycle on Z_4^2; consecutive prefixes are adjacent already,
# so any fixed suffix keeps every step an edge, and the 32->00 junction differs
# in both leading digits no matter how the suffix changes.
_PREFIX_CYCLE = (
    "00", "23", "01", "20", "02", "21", "03", "22",
    "10", "33", "11", "30", "12", "31", "13", "32",
)


def ham_cycle(d: int) -> list[int]:
    if d < 2:
        raise ValueError("d >= 2 required")
    prefixes = [int(p, 4) for p in _PREFIX_CYCLE]
    block = 4 ** (d - 2)
    return [p * block + suffix for suffix in range(block) for p in prefixes]


# --- kernel-based class-1 edge coloring ---------------------------------------------

@dataclass(frozen=True)
class ColorKernel:
    """Difference set S driving the class-1 coloring, split by digit parity."""

    d: int
    even: tuple[KellerVertex, ...]
    odd: tuple[KellerVertex, ...]

    @property
    def size(self) -> int:
        return len(self.even) + len(self.odd)

    def odd_pairs(self) -> list[tuple[KellerVertex, KellerVertex]]:
        return [(s, -s) for s in self.odd if s <= -s]


def color_kernel(d: int) -> ColorKernel:
    even: list[KellerVertex] = []
    odd: list[KellerVertex] = []
    for value in range(4 ** d):
        s = KellerVertex.decode(value, d)
        if 2 not in s.digits:
            continue
        nonzero = sum(1 for x in s.digits if x)
        if nonzero == 1:
            continue  # the d single-2 tuples are excluded
        if all(x % 2 == 0 for x in s.digits):
            even.append(s)
        else:
            odd.append(s)
    kernel = ColorKernel(d, tuple(even), tuple(odd))
    assert kernel.size == delta(d)
    odd_set = set(kernel.odd)
    assert all(-s in odd_set for s in kernel.odd)
    return kernel


def class1_coloring(d: int) -> EdgeColoring:
    """Proper edge coloring of G_d with exactly Delta colors."""
    kernel = color_kernel(d)
    n = 4 ** d
    vertices = [KellerVertex.decode(v, d) for v in range(n)]
    assign: dict[tuple[int, int], int] = {}
    color = 0

    def put(u: int, w: int, c: int) -> None:
        key = (u, w) if u < w else (w, u)
        assert key not in assign
        assign[key] = c

    for s in kernel.even:
        color += 1
        for v in range(n):
            w = (vertices[v] + s).encode()
            if v < w:
                put(v, w, color)
    for s, _neg in kernel.odd_pairs():
        c_pos, c_neg = color + 1, color + 2
        color += 2
        seen = [False] * n
        for v in range(n):
            if seen[v]:
                continue
            # v ascends, so v is the lexicographically first of its class
            w1 = (vertices[v] + s).encode()
            w2 = (vertices[w1] + s).encode()
            w3 = (vertices[w2] + s).encode()
            for x in (v, w1, w2, w3):
                seen[x] = True
            put(v, w1, c_pos)
            put(w2, w3, c_pos)
            put(v, w3, c_neg)
            put(w1, w2, c_neg)
    assert color == delta(d)
    return EdgeColoring(assign, color)


# --- independence square and automorphisms ------------------------------------------

def _row_col(vertex: KellerVertex) -> tuple[int, int]:
    row = col = 0
    for x in vertex.digits:
        row = row * 2 + (1 if x in (2, 3) else 0)
        col = col * 2 + (1 if x in (1, 2) else 0)
    return row, col


@dataclass(frozen=True)
class IndependenceSquare:
    d: int
    grid: tuple[tuple[KellerVertex, ...], ...]

    def row(self, r: int) -> tuple[KellerVertex, ...]:
        return self.grid[r]

    def column(self, c: int) -> tuple[KellerVertex, ...]:
        return tuple(row[c] for row in self.grid)

    def encoded(self) -> list[list[int]]:
        return [[v.encode() for v in row] for row in self.grid]


def independence_square(d: int) -> IndependenceSquare:
    if d < 2:
        raise ValueError("d >= 2 required")
    side = 2 ** d
    cells: list[list[KellerVertex | None]] = [[None] * side for _ in range(side)]
    for value in range(4 ** d):
        vertex = KellerVertex.decode(value, d)
        r, c = _row_col(vertex)
        assert cells[r][c] is None, "row/column map must be a bijection"
        cells[r][c] = vertex
    grid = tuple(tuple(row) for row in cells)  # type: ignore[arg-type]
    square = IndependenceSquare(d, grid)
    for line in list(square.grid) + [square.column(c) for c in range(side)]:
        ids = [v.encode() for v in line]
        for i, u in enumerate(ids):
            for w in ids[i + 1:]:
                assert not adjacent(u, w, d), "square line is not independent"
    return square


def bitstring_automorphism(d: int, bits: str | Sequence[int]) -> list[int]:
    """Vertex permutation: where the bit is 1, swap digit 0<->1 and 2<->3."""
    pattern = [int(b) for b in bits]
    if len(pattern) != d or any(b not in (0, 1) for b in pattern):
        raise ValueError("need a bit-string of length d")
    perm = []
    for value in range(4 ** d):
        digits = KellerVertex.decode(value, d).digits
        image = tuple(x ^ 1 if flip else x for x, flip in zip(digits, pattern))
        perm.append(KellerVertex(image).encode())
    for v in range(4 ** d):
        assert _row_col(KellerVertex.decode(perm[v], d))[0] == \
            _row_col(KellerVertex.decode(v, d))[0], "rows must be fixed setwise"
    rng = random.Random(0)
    for _ in range(100):
        u, v = rng.randrange(4 ** d), rng.randrange(4 ** d)
        assert adjacent(u, v, d) == adjacent(perm[u], perm[v], d)
    return perm


def anchor_vertex_coloring(d: int) -> list[int]:
    """Proper 2^d vertex coloring: the class of v is its all-even anchor."""
    colors = []
    for value in range(4 ** d):
        digits = KellerVertex.decode(value, d).digits
        anchor = 0
        for x in digits:
            anchor = anchor * 2 + x // 2
        colors.append(anchor)
    return colors


def alpha_exact(d: int, cap: int = 4096) -> int:
    """Independence number via the non-neighborhood reduction at vertex 0."""
    if not 2 <= d <= 7:
        raise ValueError("2 <= d <= 7 required")
    n = 4 ** d
    members = [v for v in range(1, n) if not adjacent(0, v, d)]
    assert len(members) == 3 ** d + d - 1
    index = {v: i for i, v in enumerate(members)}
    edges = [(index[u], index[v])
             for i, u in enumerate(members) for v in members[i + 1:]
             if adjacent(u, v, d)]
    sub = Graph.from_edges(len(members), edges)
    # tuples over {0,1} stay pairwise non-adjacent: prime the bound with them
    seed = [index[KellerVertex(bits).encode()]
            for bits in _binary_tuples(d) if any(bits)]
    best, _ = exact_alpha(sub, cap=cap, seed=seed)
    return 1 + best


def _binary_tuples(d: int) -> list[tuple[int, ...]]:
    out = []
    for value in range(2 ** d):
        bits = tuple((value >> (d - 1 - i)) & 1 for i in range(d))
        out.append(bits)
    return out


MAX_INDEPENDENT_G2 = (3, 4, 6, 7, 11)  # 03, 10, 12, 13, 23 as base-4 codes


# --- clique covers -----------------------------------------------------------------

def verify_cover_by_rule(d: int, cover: Sequence[Iterable[int]]) -> VerificationReport:
    """Clique-cover check straight from the digit adjacency rule.

    Equivalent to core.verify_clique_cover(build(d), cover) but does not
    materialize the graph, which matters for d >= 5.
    """
    detail: list[str] = []
    seen: set[int] = set()
    for idx, raw in enumerate(cover):
        members = sorted(set(raw))
        if len(members) != len(list(raw)):
            detail.append(f"clique {idx} repeats a vertex")
        for v in members:
            if not 0 <= v < 4 ** d:
                detail.append(f"clique {idx} vertex {v} out of range")
            if v in seen:
                detail.append(f"vertex {v} in more than one clique")
            seen.add(v)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not adjacent(u, v, d):
                    detail.append(f"clique {idx} misses edge ({u},{v})")
    if len(seen) != 4 ** d:
        detail.append(f"{4 ** d - len(seen)} vertices uncovered")
    return VerificationReport(not detail, len(cover), 0, tuple(detail[:20]))


def double_clique_cover(d: int, cover: Sequence[Iterable[int]]) -> list[list[int]]:
    """Lift a verified clique cover of G_d to one of G_{d+1} with 2x the cliques.

    Clique C doubles into prefix-0 C with prefix-2 (C+1), and prefix-1 C with
    prefix-3 (C+1), where C+1 adds 1 mod 4 to every digit.
    """
    cover = [sorted(set(c)) for c in cover]
    if sum(len(c) for c in cover) != 4 ** d:
        raise ValueError("cover size does not match dimension")
    report = verify_cover_by_rule(d, cover)
    if not report.ok:
        raise ValueError(f"input cover is invalid: {report.detail}")
    ones = KellerVertex((1,) * d)
    block = 4 ** d
    out: list[list[int]] = []
    for clique in cover:
        shifted = [(KellerVertex.decode(v, d) + ones).encode() for v in clique]
        out.append([v for v in clique] + [2 * block + w for w in shifted])
        out.append([block + v for v in clique] + [3 * block + w for w in shifted])
    return out


@dataclass(frozen=True)
class ThetaBounds:
    d: int
    lower: int
    upper: int | None

    def __str__(self) -> str:
        hi = "?" if self.upper is None else str(self.upper)
        return f"{self.lower} <= theta(G_{self.d}) <= {hi}"


def theta_bounds(d: int, verified_cover_size: int | None = None) -> ThetaBounds:
    """ceil(4^d / omega) as the lower bound; a verified cover as the upper."""
    return ThetaBounds(d, math.ceil(4 ** d / omega_value(d)), verified_cover_size)


# --- fixtures ----------------------------------------------------------------------

def _fixture_rows(name: str) -> list[list[str]]:
    text = resources.files("graphcert").joinpath(f"fixtures/{name}.txt").read_text()
    return [line.split() for line in text.splitlines() if line.strip()]


def fixture_clique_cover(d: int) -> list[list[int]]:
    rows = _fixture_rows(f"g{d}_clique_cover")
    return [[KellerVertex.parse(tok, d).encode() for tok in row] for row in rows]


def fixture_square(d: int, flipped: bool = False) -> list[list[int]]:
    name = f"g{d}_square_flip001" if flipped else f"g{d}_square"
    rows = _fixture_rows(name)
    return [[KellerVertex.parse(tok, d).encode() for tok in row] for row in rows]


def fixture_ham_decomposition() -> list[list[int]]:
    rows = _fixture_rows("g3_ham_decomposition")
    table = [[int(tok) for tok in row] for row in rows]
    cycles = [[table[r][c] for r in range(len(table))] for c in range(len(table[0]))]
    return cycles


# --- Hamiltonian decomposition search ------------------------------------------------

@dataclass(frozen=True)
class HamDecomposition:
    d: int
    cycles: tuple[tuple[int, ...], ...]
    matching: tuple[tuple[int, int], ...] | None
    switches_used: int


def _union_cycle_count(succ_i: dict[int, int], succ_j: dict[int, int], n: int
                       ) -> tuple[int, list[int]]:
    """Number of cycles in the union of two perfect matchings, plus the first."""
    visited = [False] * n
    count = 0
    first: list[int] = []
    for start in range(n):
        if visited[start]:
            continue
        count += 1
        walk = []
        v, use_i = start, True
        while not visited[v]:
            visited[v] = True
            walk.append(v)
            v = succ_i[v] if use_i else succ_j[v]
            use_i = not use_i
        if count == 1:
            first = walk
    return count, first


def _matching_maps(coloring: EdgeColoring, n: int) -> dict[int, dict[int, int]]:
    maps: dict[int, dict[int, int]] = {}
    for (u, v), c in coloring.assignment.items():
        maps.setdefault(c, {})[u] = v
        maps.setdefault(c, {})[v] = u
    for c, succ in maps.items():
        if len(succ) != n:
            raise ValueError(f"color {c} is not a perfect matching")
    return maps


def _pair_up(colors: list[int], compatible: dict[tuple[int, int], bool],
             leftover: int | None, node_cap: int = 200_000
             ) -> list[tuple[int, int]] | None:
    """Backtracking perfect matching on the class-compatibility relation."""
    pool = [c for c in colors if c != leftover]
    nodes = 0

    def solve(remaining: frozenset[int]) -> list[tuple[int, int]] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return None
        if not remaining:
            return []
        anchor = min(remaining)
        rest = remaining - {anchor}
        for partner in sorted(rest):
            key = (min(anchor, partner), max(anchor, partner))
            if not compatible[key]:
                continue
            tail = solve(rest - {partner})
            if tail is not None:
                return [(anchor, partner)] + tail
            if nodes > node_cap:
                return None
        return None

    return solve(frozenset(pool))


def _score(colors: list[int], compatible: dict[tuple[int, int], bool],
           cycle_counts: dict[tuple[int, int], int]) -> tuple[int, int, int]:
    """Lexicographic score, larger is better: pairable classes, then fewer
    cycles in the worst pair, then fewer cycles overall."""
    pairable = sum(1 for c in colors
                   if any(compatible[(min(c, o), max(c, o))]
                          for o in colors if o != c))
    worst = max(cycle_counts.values())
    total = sum(cycle_counts.values())
    return (pairable, -worst, -total)


def ham_decomposition_search(d: int, budget: int = 400,
                             seed: int = 0) -> HamDecomposition | None:
    """Pair the color classes of a class-1 coloring into Hamiltonian cycles.

    Delta odd leaves one class as the perfect matching. Kempe switches, scored
    by (pairable classes, worst pair cycle count, total cycle count), perturb
    the coloring when the pairing search gets stuck. None when the budget runs
    out.
    """
    g = build(d)
    n = 4 ** d
    dd = delta(d)
    rng = random.Random(seed)
    coloring = class1_coloring(d)
    switches = 0

    while True:
        maps = _matching_maps(coloring, n)
        colors = sorted(maps)
        compatible: dict[tuple[int, int], bool] = {}
        counts: dict[tuple[int, int], int] = {}
        firsts: dict[tuple[int, int], list[int]] = {}
        for i, ci in enumerate(colors):
            for cj in colors[i + 1:]:
                cnt, first = _union_cycle_count(maps[ci], maps[cj], n)
                counts[(ci, cj)] = cnt
                compatible[(ci, cj)] = cnt == 1
                firsts[(ci, cj)] = first
        leftovers: list[int | None] = [None] if dd % 2 == 0 else list(colors)
        for leftover in leftovers:
            pairs = _pair_up(colors, compatible, leftover)
            if pairs is None:
                continue
            cycles = tuple(tuple(firsts[p]) for p in pairs)
            matching = None
            if leftover is not None:
                matching = tuple(sorted(e for e, c in coloring.assignment.items()
                                        if c == leftover))
            report = verify_hamiltonian_decomposition(g, cycles, matching)
            assert report.ok, f"pairing produced a bad decomposition: {report.detail}"
            return HamDecomposition(d, cycles, matching, switches)
        if switches >= budget:
            return None
        # escape: try a few random Kempe switches, keep the best-scoring one
        from .kempe import kempe_switch
        base_score = _score(colors, compatible, counts)
        best = None
        for _ in range(8):
            a, b = rng.sample(colors, 2)
            start = rng.randrange(n)
            candidate = kempe_switch(coloring, g, start, a, b)
            cmaps = _matching_maps(candidate, n)
            ccomp: dict[tuple[int, int], bool] = {}
            ccounts: dict[tuple[int, int], int] = {}
            for i, ci in enumerate(colors):
                for cj in colors[i + 1:]:
                    cnt, _ = _union_cycle_count(cmaps[ci], cmaps[cj], n)
                    ccounts[(ci, cj)] = cnt
                    ccomp[(ci, cj)] = cnt == 1
            cscore = _score(colors, ccomp, ccounts)
            if best is None or cscore > best[0]:
                best = (cscore, candidate)
            switches += 1
            if switches >= budget:
                break
        if best is not None and best[0] >= base_score:
            coloring = best[1]
        if switches >= budget:
            return None


def perfect_factorization_exists(d: int = 2) -> bool:
    """Exhaustively decide whether G_d has a perfect 1-factorization.

    Every pair of the Delta matchings must union into a Hamiltonian cycle.
    Only d=2 is small enough for the exhaustive claim.
    """
    if d != 2:
        raise ValueError("exhaustive search is limited to d=2")
    g = build(d)
    n = g.vertex_count
    adj = [sorted(g.adjacency[v]) for v in range(n)]
    all_edges = sorted(g.edges)

    def matchings(avail: set[tuple[int, int]], first: tuple[int, int]
                  ) -> Iterable[frozenset[tuple[int, int]]]:
        # perfect matchings within avail that contain the anchor edge
        def extend(uncovered: list[int], picked: list[tuple[int, int]]
                   ) -> Iterable[frozenset[tuple[int, int]]]:
            if not uncovered:
                yield frozenset(picked)
                return
            u = uncovered[0]
            for w in adj[u]:
                e = (u, w) if u < w else (w, u)
                if e in avail and w in uncovered:
                    rest = [x for x in uncovered if x not in (u, w)]
                    yield from extend(rest, picked + [e])
        start = [x for x in range(n) if x not in first]
        yield from extend(start, [first])

    def hamiltonian_pair(m1: frozenset, m2: frozenset) -> bool:
        succ1 = {}
        succ2 = {}
        for u, v in m1:
            succ1[u] = v
            succ1[v] = u
        for u, v in m2:
            succ2[u] = v
            succ2[v] = u
        cnt, _ = _union_cycle_count(succ1, succ2, n)
        return cnt == 1

    def search(avail: set[tuple[int, int]], chosen: list[frozenset]) -> bool:
        if len(chosen) == delta(d):
            return True
        # anchor on the lowest uncovered edge so each factorization is seen once
        anchor = min(avail)
        for m in matchings(avail, anchor):
            if all(hamiltonian_pair(m, prev) for prev in chosen):
                if search(avail - m, chosen + [m]):
                    return True
        return False

    return search(set(all_edges), [])
