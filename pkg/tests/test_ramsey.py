"""Complete-graph side: counting minima, triangle-free colorings, packings."""

from itertools import product

import pytest

from monotri import (
    CapExceededError,
    EdgeColoring,
    brute_force_min_mono,
    count_mono_triangles,
    edges_form_cycle,
    goodman_min,
    guaranteed_disjoint_triangles,
    lower_bound_construction,
    max_disjoint_mono,
    min_max_disjoint,
    triangle_free_colorings,
)
from monotri.ramsey import all_edges, edge_index

import oracles


def _colors(ec: EdgeColoring) -> dict:
    return dict(zip(all_edges(ec.n), ec.bits))


# -- edges and colorings -----------------------------------------------------------

def test_edge_index_is_lexicographic():
    assert [edge_index(4, i, j) for (i, j) in all_edges(4)] == list(range(6))
    assert edge_index(5, 3, 1) == edge_index(5, 1, 3)
    with pytest.raises(ValueError):
        edge_index(4, 2, 2)


def test_edge_coloring_validation():
    with pytest.raises(ValueError):
        EdgeColoring(4, (0,) * 5)
    with pytest.raises(ValueError):
        EdgeColoring(4, (0, 1, 2, 0, 1, 0))


def test_red_blue_edges_partition():
    ec = EdgeColoring(4, (0, 1, 0, 1, 0, 1))
    assert set(ec.red_edges()) | set(ec.blue_edges()) == set(all_edges(4))
    assert ec.swapped().red_edges() == ec.blue_edges()


def test_count_matches_oracle():
    ec = lower_bound_construction(2)
    red, blue = count_mono_triangles(ec)
    tris = oracles.graph_mono_triangles(ec.n, _colors(ec))
    assert red + blue == len(tris)
    assert red == 0  # crossing edges alone cannot close a triangle


# -- minima -------------------------------------------------------------------------

def test_goodman_against_piecewise_formula():
    for n in range(1, 40):
        assert goodman_min(n) == max(0, oracles.goodman(n)), n


def test_goodman_small_values():
    assert [goodman_min(n) for n in range(3, 10)] == [0, 0, 0, 2, 4, 8, 12]


def test_goodman_rejects_nonpositive():
    with pytest.raises(ValueError):
        goodman_min(0)


def test_brute_force_matches_formula_small():
    for n in range(3, 7):
        assert brute_force_min_mono(n) == goodman_min(n)


def test_brute_force_matches_naive_oracle():
    assert brute_force_min_mono(5) == oracles.graph_min_mono(5)


def test_brute_force_jobs_invariant():
    assert brute_force_min_mono(6, jobs=3) == 2


# -- triangle-free colorings ----------------------------------------------------------

def test_k5_exactly_twelve():
    colorings = triangle_free_colorings(5)
    assert len(colorings) == 12
    assert len({ec.bits for ec in colorings}) == 12


def test_k5_all_are_cycle_pairs():
    for ec in triangle_free_colorings(5):
        assert edges_form_cycle(5, ec.red_edges())
        assert edges_form_cycle(5, ec.blue_edges())
        assert len(ec.red_edges()) == 5


def test_k5_closed_under_swap():
    bits = {ec.bits for ec in triangle_free_colorings(5)}
    assert {tuple(1 - b for b in c) for c in bits} == bits


def test_k6_has_none():
    assert triangle_free_colorings(6) == []


def test_k3_k4_counts_match_oracle():
    for n in (3, 4):
        got = triangle_free_colorings(n)
        expected = [
            bits
            for bits in product((0, 1), repeat=n * (n - 1) // 2)
            if not oracles.graph_mono_triangles(n, dict(zip(all_edges(n), bits)))
        ]
        assert [ec.bits for ec in got] == expected


# -- cycle predicate -------------------------------------------------------------------

def test_edges_form_cycle_positive():
    assert edges_form_cycle(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def test_edges_form_cycle_negatives():
    assert not edges_form_cycle(5, [(0, 1), (1, 2), (2, 0), (3, 4)])
    assert not edges_form_cycle(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert not edges_form_cycle(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (3, 5)])


# -- disjoint packings -----------------------------------------------------------------

def test_packing_on_construction_matches_oracle():
    for k in (2, 3):
        ec = lower_bound_construction(k)
        packing = max_disjoint_mono(ec)
        assert packing.max_disjoint == k - 1
        assert packing.max_disjoint == oracles.max_disjoint_packing(ec.n, _colors(ec))


def test_packing_witness_is_disjoint_and_monochromatic():
    ec = lower_bound_construction(3)
    packing = max_disjoint_mono(ec)
    seen = set()
    for tri in packing.witness_triangles:
        assert len(set(tri) & seen) == 0
        seen.update(tri)
        a, b, c = tri
        assert ec.color_of(a, b) == ec.color_of(a, c) == ec.color_of(b, c)


def test_all_red_k6_packs_two():
    assert max_disjoint_mono(EdgeColoring.all_red(6)).max_disjoint == 2


def test_min_max_disjoint_small():
    assert [min_max_disjoint(n) for n in (3, 4, 5, 6, 7)] == [0, 0, 0, 1, 1]


def test_min_max_disjoint_capped():
    with pytest.raises(CapExceededError):
        min_max_disjoint(9)


def test_min_max_disjoint_modes_agree_at_7():
    assert min_max_disjoint(7, mode="exhaustive") == min_max_disjoint(7, mode="bnb") == 1


@pytest.mark.slow
def test_min_max_disjoint_k8():
    assert min_max_disjoint(8, jobs=4) == 2


def test_guaranteed_disjoint_triangles():
    assert [guaranteed_disjoint_triangles(n) for n in (6, 7, 8, 9, 12)] == [1, 1, 2, 2, 3]
    with pytest.raises(ValueError):
        guaranteed_disjoint_triangles(5)


def test_construction_validation():
    with pytest.raises(ValueError):
        lower_bound_construction(1)
    assert lower_bound_construction(2).n == 7
