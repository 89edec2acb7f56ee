"""Complete-graph, bishop, and rook coloring constructions."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete
from graphcert.bishop_rook import (
    MissingColorPlan,
    bishop_path_decomposition,
    canonical_bishop_coloring,
    complete_graph_coloring,
    k_odd_prescribed_missing,
    ladder_coloring,
    ladder_missing_color,
    rarest_bishop_color,
    rarest_color_edges,
    rook_class1_coloring,
)
from graphcert.chess import (
    BoardCoord,
    bishop_delta,
    build_bishop,
    build_rook,
    coord_to_id,
    id_to_coord,
)
from graphcert.core import EdgeColoring, verify_edge_coloring


def missing_colors_at(coloring: EdgeColoring, vertex: int) -> set[int]:
    seen = {c for (u, v), c in coloring.assignment.items() if vertex in (u, v)}
    return set(range(1, coloring.declared_color_count + 1)) - seen


# --- complete graphs ----------------------------------------------------------


def test_complete_even_uses_n_minus_1_colors():
    coloring = complete_graph_coloring(4)
    report = verify_edge_coloring(complete(4), coloring)
    assert report.ok
    assert report.colors_used == 3


def test_complete_odd_missing_colors_are_distinct():
    coloring = complete_graph_coloring(5)
    assert verify_edge_coloring(complete(5), coloring).ok
    assert coloring.colors_used == {1, 2, 3, 4, 5}
    missing = [missing_colors_at(coloring, u) for u in range(5)]
    assert all(len(m) == 1 for m in missing)
    assert set().union(*missing) == {1, 2, 3, 4, 5}


def test_complete_odd_matching_becomes_class_one():
    matching = [(0, 1), (2, 3), (4, 5)]
    coloring = complete_graph_coloring(7, matching_as_class=matching)
    assert verify_edge_coloring(complete(7), coloring).ok
    class1 = {e for e, c in coloring.assignment.items() if c == 1}
    assert class1 == set(matching)
    # Dropping the matching class leaves a 6-coloring of K_7 minus the matching.
    rest = EdgeColoring({e: c - 1 for e, c in coloring.assignment.items() if c != 1}, 6)
    g = complete(7)
    for u, v in matching:
        g = g.without_edge(u, v)
    report = verify_edge_coloring(g, rest)
    assert report.ok
    assert report.colors_used == 6


def test_complete_even_matching_becomes_class_one():
    matching = [(0, 2), (1, 3), (4, 5)]
    coloring = complete_graph_coloring(6, matching_as_class=matching)
    assert verify_edge_coloring(complete(6), coloring).ok
    assert coloring.declared_color_count == 5
    assert {e for e, c in coloring.assignment.items() if c == 1} == set(matching)


def test_complete_rejects_bad_matchings():
    with pytest.raises(ValueError):
        complete_graph_coloring(6, matching_as_class=[(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        complete_graph_coloring(5, matching_as_class=[(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        complete_graph_coloring(1)


def test_prescribed_missing_realizes_the_prescription():
    desired = (3, 1, 5, 2, 4)
    assignment = k_odd_prescribed_missing(5, desired)
    assert len(assignment) == 10
    coloring = EdgeColoring(assignment, 5)
    assert verify_edge_coloring(complete(5), coloring).ok
    for u in range(5):
        assert missing_colors_at(coloring, u) == {desired[u]}


def test_prescribed_missing_matching_class():
    desired = (7, 1, 2, 3, 4, 5, 6)
    assignment = k_odd_prescribed_missing(7, desired, matching_class=True)
    assert assignment[(1, 2)] == assignment[(3, 4)] == assignment[(5, 6)] == 7
    coloring = EdgeColoring(assignment, 7)
    assert verify_edge_coloring(complete(7), coloring).ok
    for u in range(7):
        assert missing_colors_at(coloring, u) == {desired[u]}


def test_prescribed_missing_rejects_bad_input():
    with pytest.raises(ValueError):
        k_odd_prescribed_missing(4, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        k_odd_prescribed_missing(5, (1, 1, 2, 3, 4))


# --- canonical bishop coloring ---------------------------------------------------


BOARDS = [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (4, 7), (5, 5), (5, 8), (6, 6), (7, 9)]


def test_path_decomposition_partitions_bishop_edges():
    for m, n in BOARDS:
        pd = bishop_path_decomposition(m, n)
        g = build_bishop(m, n)
        covered: set[tuple[int, int]] = set()
        for grp in pd.groups:
            for p in grp.paths:
                assert len(p) >= 2
                for a, b in zip(p, p[1:]):
                    e = (a, b) if a < b else (b, a)
                    assert e in g.edges
                    assert e not in covered
                    covered.add(e)
            # Paths within one group never share a vertex.
            vertices = [v for p in grp.paths for v in p]
            assert len(vertices) == len(set(vertices))
        assert covered == set(g.edges)
        if m % 2 == 0:
            assert all(not (2 * grp.i == m and grp.sign < 0) for grp in pd.groups)


def test_path_decomposition_lines_format():
    pd = bishop_path_decomposition(3, 3)
    lines = pd.to_lines()
    assert all(line.split()[0] in ("1+", "1-") for line in lines)
    # Ids on disk are 1-based.
    flat = [int(tok) for line in lines for tok in line.split()[1:]]
    assert min(flat) >= 1 and max(flat) <= 9


def test_canonical_coloring_square_even():
    coloring = canonical_bishop_coloring(4, 4)
    report = verify_edge_coloring(build_bishop(4, 4), coloring)
    assert report.ok
    assert report.colors_used == 5 == bishop_delta(4, 4)


def test_canonical_coloring_group_colors_and_alternation():
    m, n = 5, 7
    coloring = canonical_bishop_coloring(m, n)
    assert verify_edge_coloring(build_bishop(m, n), coloring).ok
    pd = bishop_path_decomposition(m, n)
    for grp in pd.groups:
        first = 4 * grp.i - 3 if grp.sign > 0 else 4 * grp.i - 1
        for p in grp.paths:
            for idx, (a, b) in enumerate(zip(p, p[1:])):
                e = (a, b) if a < b else (b, a)
                assert coloring.assignment[e] == first + idx % 2


def test_rarest_color_is_lonely_on_the_odd_square():
    assert rarest_bishop_color(5) == 8
    coloring = canonical_bishop_coloring(5, 5)
    assert coloring.color_counts()[8] == 1
    assert rarest_color_edges(5, 5) == [(12, 24)]
    center = coord_to_id(BoardCoord(3, 3), 5)
    corner = coord_to_id(BoardCoord(5, 5), 5)
    assert (center, corner) == (12, 24)
    with pytest.raises(ValueError):
        rarest_bishop_color(4)


def test_rarest_color_minimal_across_odd_squares():
    for n in (3, 5, 7, 9):
        counts = canonical_bishop_coloring(n, n).color_counts()
        cyan = rarest_bishop_color(n)
        assert counts[cyan] == min(counts.values()) == 1


# --- rook colorings --------------------------------------------------------------


@pytest.mark.parametrize("m,n,colors", [(4, 5, 7), (2, 2, 2), (6, 8, 12), (5, 6, 9)])
def test_rook_class1(m, n, colors):
    coloring = rook_class1_coloring(m, n)
    report = verify_edge_coloring(build_rook(m, n), coloring)
    assert report.ok
    assert report.colors_used == colors == m + n - 2


def test_rook_class1_rejects_both_odd():
    with pytest.raises(ValueError):
        rook_class1_coloring(3, 5)


def test_ladder_identity_plan():
    for m, n in ((7, 9), (3, 3)):
        coloring = ladder_coloring(m, n)
        report = verify_edge_coloring(build_rook(m, n), coloring)
        assert report.ok
        assert report.colors_used == m + n - 1


def test_ladder_first_column_misses_row_color():
    m, n = 5, 7
    coloring = ladder_coloring(m, n)
    for row in range(1, m + 1):
        vertex = coord_to_id(BoardCoord(1, row), n)
        assert missing_colors_at(coloring, vertex) == {row}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 3), (3, 5), (5, 5), (3, 7)]), st.integers(0, 10**6))
def test_ladder_realizes_random_plans(dims, seed):
    m, n = dims
    rng = random.Random(seed)
    rows = []
    for _ in range(m):
        row = list(range(m + 1, m + n))
        rng.shuffle(row)
        rows.append(tuple(row))
    plan = MissingColorPlan(m, n, tuple(rows))
    coloring = ladder_coloring(m, n, plan)
    assert verify_edge_coloring(build_rook(m, n), coloring).ok
    for vertex in range(m * n):
        coord = id_to_coord(vertex, n)
        assert missing_colors_at(coloring, vertex) == {ladder_missing_color(plan, coord)}


def test_ladder_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        ladder_coloring(4, 5)
    with pytest.raises(ValueError):
        ladder_coloring(5, 6)
    with pytest.raises(ValueError):
        ladder_coloring(5, 7, MissingColorPlan.identity(3, 7))


def test_plan_identity_and_partial_assignments():
    plan = MissingColorPlan.identity(3, 5)
    assert plan.rows == ((4, 5, 6, 7),) * 3
    assert plan.missing_at(2, 1) == 4
    fixed = {(3, 1): 7, (2, 2): 6}
    plan2 = MissingColorPlan.from_assignments(3, 5, fixed)
    assert plan2.missing_at(3, 1) == 7
    assert plan2.missing_at(2, 2) == 6
    for row in plan2.rows:
        assert set(row) == {4, 5, 6, 7}


def test_plan_rejects_bad_assignments():
    with pytest.raises(ValueError):
        MissingColorPlan.from_assignments(3, 5, {(1, 1): 4})
    with pytest.raises(ValueError):
        MissingColorPlan.from_assignments(3, 5, {(2, 1): 3})
    with pytest.raises(ValueError):
        MissingColorPlan.from_assignments(3, 5, {(2, 1): 4, (3, 1): 4})
    with pytest.raises(ValueError):
        MissingColorPlan.identity(3, 5).missing_at(1, 2)
    with pytest.raises(ValueError):
        MissingColorPlan(3, 5, ((4, 5, 6, 7),) * 2)
    with pytest.raises(ValueError):
        MissingColorPlan(3, 5, ((4, 5, 6, 6),) * 3)
