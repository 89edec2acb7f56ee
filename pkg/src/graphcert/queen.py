"""Queen graph edge colorings.

Four constructions cover the classification: a disjoint-color union of the
bishop and rook colorings when a dimension is even; the square-odd recoloring
that frees one color by rerouting the unique rarest bishop edge through the
rook's missing colors; the ladder-and-multicycle pipeline for odd boards whose
derived multicycle is colorable inside the rook's high colors; and the
Delta+1 union for overfull boards. A Kempe-chain search covers the remaining
gap heuristically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bishop_rook import (MissingColorPlan, canonical_bishop_coloring, ladder_coloring,
                          rarest_bishop_color, rook_class1_coloring)
from .chess import build_queen, id_to_coord, overfull_threshold, queen_delta, queen_edge_count
from .core import EdgeColoring, verify_edge_coloring
from .multicycle import chromatic_index, derive


class MethodInapplicableError(ValueError):
    """The ladder-and-multicycle pipeline cannot color this board."""


@dataclass(frozen=True)
class QueenColoringCertificate:
    m: int
    n: int
    coloring: EdgeColoring
    claimed_class: int
    construction: str

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "n": self.n, "class": self.claimed_class,
                           "construction": self.construction,
                           "colors": self.coloring.declared_color_count})


def _check_board(m: int, n: int) -> None:
    if not (1 <= m <= n):
        raise ValueError("need 1 <= m <= n")


def class1_even(m: int, n: int) -> QueenColoringCertificate:
    """Bishop colors 1..Delta_B, rook colors on top; Delta(Q) colors total."""
    _check_board(m, n)
    if m % 2 == 1 and n % 2 == 1:
        raise ValueError("one dimension must be even")
    bishop = canonical_bishop_coloring(m, n)
    rook = rook_class1_coloring(m, n).shifted(bishop.declared_color_count)
    assignment = dict(bishop.assignment)
    assignment.update(rook.assignment)
    coloring = EdgeColoring(assignment, queen_delta(m, n))
    return QueenColoringCertificate(m, n, coloring, 1, "EvenUnion")


def class1_square_odd(n: int) -> QueenColoringCertificate:
    """Color Q_{n,n} (n odd) with Delta = 4n-4 colors.

    The rarest bishop color appears on a single edge; the ladder rook coloring
    is arranged so its top color is missing at both endpoints of that edge,
    which then takes the top color, retiring the rarest one.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("odd n >= 3 required")
    bishop = canonical_bishop_coloring(n, n)
    rare = rarest_bishop_color(n)
    rare_edges = [e for e, c in bishop.assignment.items() if c == rare]
    assert len(rare_edges) == 1, "rarest bishop color must be unique on a square board"
    edge = rare_edges[0]
    a, b = (id_to_coord(v, n) for v in edge)
    assert a.col >= 2 and b.col >= 2 and a.row != b.row
    top = 2 * n - 1  # before the shift; lands on 4n-3
    plan = MissingColorPlan.from_assignments(n, n, {(a.col, a.row): top, (b.col, b.row): top})
    rook = ladder_coloring(n, n, plan).shifted(2 * n - 2)
    assignment = dict(bishop.assignment)
    assignment.update(rook.assignment)
    assignment[edge] = top + 2 * n - 2
    coloring = EdgeColoring(assignment, 4 * n - 3).normalized()
    report = verify_edge_coloring(build_queen(n, n), coloring)
    assert report.ok and coloring.declared_color_count == queen_delta(n, n), \
        f"square-odd arrangement failed: {report.detail}"
    return QueenColoringCertificate(n, n, coloring, 1, "SquareOdd")


def class1_ladder_multicycle(m: int, n: int) -> QueenColoringCertificate:
    """Color Q_{m,n} (m, n odd) with Delta = 3m+n-4 colors.

    The rarest bishop color's edges project to the derived multicycle; a
    coloring of it with at most n-1 colors dictates, per endpoint, which high
    rook color must be missing there. The ladder coloring realizes those
    requirements, and each projected edge is recolored with its endpoints'
    common missing color.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError("odd m and n required")
    if m < 3:
        raise ValueError("m >= 3 required: smaller boards have no bishop edges to reroute")
    _check_board(m, n)
    dm = derive(m, n)
    result = chromatic_index(dm.multicycle)
    if result.upper > n - 1:
        raise MethodInapplicableError(
            f"derived multicycle needs {result.upper} colors, only {n - 1} available")
    xi = result.coloring
    fixed: dict[tuple[int, int], int] = {}
    recolor: dict[tuple[int, int], int] = {}
    for p, edges in enumerate(dm.slot_edges):
        for idx, edge in enumerate(edges):
            high = m + xi.slots[p][idx]
            recolor[edge] = high
            for v in edge:
                c = id_to_coord(v, n)
                assert (c.col, c.row) not in fixed
                fixed[(c.col, c.row)] = high
    plan = MissingColorPlan.from_assignments(m, n, fixed)
    rook = ladder_coloring(m, n, plan)
    bishop = canonical_bishop_coloring(m, n).shifted(m + n - 1)
    assignment = dict(bishop.assignment)
    assignment.update(rook.assignment)
    for edge, high in recolor.items():
        assignment[edge] = high
    coloring = EdgeColoring(assignment, 3 * m + n - 4)
    return QueenColoringCertificate(m, n, coloring, 1, "LadderMulticycle")


def class2_overfull_coloring(m: int, n: int) -> QueenColoringCertificate:
    """Delta+1 coloring of an overfull odd board: bishop plus ladder rook."""
    _check_board(m, n)
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError("odd m and n required")
    if n < overfull_threshold(m):
        raise ValueError(f"Q_{{{m},{n}}} is not overfull; needs n >= {overfull_threshold(m)}")
    assert queen_edge_count(m, n) > queen_delta(m, n) * ((m * n) // 2)
    bishop = canonical_bishop_coloring(m, n)
    rook = ladder_coloring(m, n).shifted(bishop.declared_color_count)
    assignment = dict(bishop.assignment)
    assignment.update(rook.assignment)
    coloring = EdgeColoring(assignment, queen_delta(m, n) + 1)
    return QueenColoringCertificate(m, n, coloring, 2, "OverfullDeltaPlusOne")


def classify_and_color(m: int, n: int, budget=None, seed: int = 0) -> QueenColoringCertificate:
    """Dispatch to the applicable construction; Kempe search covers the gap."""
    _check_board(m, n)
    if m == 1 and n == 1:
        return QueenColoringCertificate(1, 1, EdgeColoring({}, 0), 1, "EvenUnion")
    if m % 2 == 0 or n % 2 == 0:
        return class1_even(m, n)
    if m == n:
        return class1_square_odd(n)
    if n >= overfull_threshold(m):
        return class2_overfull_coloring(m, n)
    try:
        return class1_ladder_multicycle(m, n)
    except MethodInapplicableError:
        pass
    from .kempe import BudgetExhaustedError, SearchBudget, find_class1

    budget = budget if budget is not None else SearchBudget.default(seed)
    outcome = find_class1(build_queen(m, n), budget)
    if outcome.coloring is None:
        raise BudgetExhaustedError(
            f"no construction applies to Q_{{{m},{n}}} and the search gave up: {outcome.reason}")
    return QueenColoringCertificate(m, n, outcome.coloring, 1, "KempeSearch")
