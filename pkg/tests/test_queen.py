"""Queen coloring constructions and the classification dispatcher."""

import json

import pytest

from graphcert.chess import build_queen, overfull_threshold, queen_delta, queen_edge_count
from graphcert.core import verify_edge_coloring
from graphcert.queen import (
    MethodInapplicableError,
    class1_even,
    class1_ladder_multicycle,
    class1_square_odd,
    class2_overfull_coloring,
    classify_and_color,
)


def check_certificate(cert):
    report = verify_edge_coloring(build_queen(cert.m, cert.n), cert.coloring)
    assert report.ok, report.detail
    delta = queen_delta(cert.m, cert.n)
    expected = delta + (1 if cert.claimed_class == 2 else 0)
    assert cert.coloring.declared_color_count == expected
    assert report.colors_used == expected
    return report


@pytest.mark.parametrize("m,n,colors", [(4, 5, 13), (2, 2, 3), (4, 4, 11)])
def test_even_union(m, n, colors):
    cert = class1_even(m, n)
    assert cert.construction == "EvenUnion" and cert.claimed_class == 1
    assert cert.coloring.declared_color_count == colors
    check_certificate(cert)


def test_even_union_rejects_odd_boards():
    with pytest.raises(ValueError):
        class1_even(3, 5)


@pytest.mark.parametrize("n,colors", [(7, 24), (3, 8), (5, 16)])
def test_square_odd(n, colors):
    cert = class1_square_odd(n)
    assert cert.construction == "SquareOdd" and cert.claimed_class == 1
    assert cert.coloring.declared_color_count == colors == queen_delta(n, n) == 4 * n - 4
    check_certificate(cert)


def test_square_odd_keeps_one_lonely_color():
    # The rerouted edge is the only one wearing the recycled top color.
    for n in range(3, 14, 2):
        counts = class1_square_odd(n).coloring.color_counts()
        assert min(counts.values()) == 1


def test_square_odd_rejects_bad_input():
    with pytest.raises(ValueError):
        class1_square_odd(4)
    with pytest.raises(ValueError):
        class1_square_odd(1)


@pytest.mark.parametrize("m,n,colors", [(7, 9, 26), (9, 27, 50), (5, 11, 22)])
def test_ladder_multicycle(m, n, colors):
    cert = class1_ladder_multicycle(m, n)
    assert cert.construction == "LadderMulticycle" and cert.claimed_class == 1
    assert cert.coloring.declared_color_count == colors == queen_delta(m, n)
    check_certificate(cert)


def test_ladder_multicycle_inapplicable_when_colors_run_out():
    # Derived multicycle of B_{3,7} needs 8 colors but only n-1 = 6 exist.
    with pytest.raises(MethodInapplicableError):
        class1_ladder_multicycle(3, 7)


def test_ladder_multicycle_beyond_the_guaranteed_range():
    # (3,5) has no guarantee yet chi'(derived) = 4 = n-1 exactly, so it applies.
    cert = class1_ladder_multicycle(3, 5)
    assert cert.coloring.declared_color_count == 10 == queen_delta(3, 5)
    check_certificate(cert)


def test_ladder_multicycle_rejects_bad_boards():
    with pytest.raises(ValueError):
        class1_ladder_multicycle(4, 5)
    with pytest.raises(ValueError):
        class1_ladder_multicycle(1, 5)


@pytest.mark.parametrize("m,n", [(3, 13), (3, 15), (5, 71)])
def test_overfull_coloring(m, n):
    cert = class2_overfull_coloring(m, n)
    assert cert.construction == "OverfullDeltaPlusOne" and cert.claimed_class == 2
    assert cert.coloring.declared_color_count == queen_delta(m, n) + 1
    check_certificate(cert)


def test_overfull_coloring_rejects_non_overfull_boards():
    with pytest.raises(ValueError):
        class2_overfull_coloring(5, 11)
    with pytest.raises(ValueError):
        class2_overfull_coloring(3, 14)


def test_overfull_inequality_at_and_beyond_threshold():
    for m in (3, 5, 7):
        f = overfull_threshold(m)
        for n in (f, f + 2):
            assert queen_edge_count(m, n) > queen_delta(m, n) * ((m * n) // 2)
        assert not (queen_edge_count(m, f - 2) > queen_delta(m, f - 2) * ((m * (f - 2)) // 2))


def test_classify_and_color_examples():
    cert = classify_and_color(3, 7)
    assert cert.claimed_class == 1
    assert cert.construction == "KempeSearch"
    assert cert.coloring.declared_color_count == 12
    check_certificate(cert)
    assert classify_and_color(3, 13).claimed_class == 2
    assert classify_and_color(5, 5).construction == "SquareOdd"
    assert classify_and_color(4, 9).construction == "EvenUnion"


def test_certificate_json():
    data = json.loads(classify_and_color(3, 13).to_json())
    assert data == {"m": 3, "n": 13, "class": 2,
                    "construction": "OverfullDeltaPlusOne", "colors": 19}


def test_classify_and_color_grid():
    for m in range(1, 10):
        for n in range(m, 10):
            cert = classify_and_color(m, n)
            assert (cert.m, cert.n) == (m, n)
            overfull = queen_edge_count(m, n) > queen_delta(m, n) * ((m * n) // 2)
            assert (cert.claimed_class == 2) == overfull
            if m == n == 1:
                assert cert.coloring.assignment == {}
                continue
            check_certificate(cert)
