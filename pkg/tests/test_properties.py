"""Structural properties, runnable standalone: duality, swap symmetry,
witness validity, and mode agreement."""

from hypothesis import given, settings
from hypothesis import strategies as st

from monotri import (
    LineColoring,
    as_geometry,
    builtin,
    count_monochromatic,
    enumerate_triangles,
    enumerate_v3,
    min_monochromatic,
    min_monochromatic_on_line_subset,
    names,
    triangle_line_index_triples,
)

import oracles

CONFIG_NAMES = tuple(n for n in names() if n != "six_mutual")


def _corpus():
    for name in names():
        yield name, builtin(name)
    for v in (7, 8, 9):
        for i, cfg in enumerate(enumerate_v3(v), start=1):
            yield f"v{v}#{i}", cfg


# -- duality: point triples <-> line triples ------------------------------------

def test_triangle_views_are_in_bijection():
    for label, obj in _corpus():
        tris = enumerate_triangles(obj)
        point_views = {t.points for t in tris}
        line_views = {t.lines for t in tris}
        assert len(point_views) == len(tris) == len(line_views), label


def test_both_views_match_their_oracles():
    for label, obj in _corpus():
        lines = as_geometry(obj).lines
        tris = enumerate_triangles(obj)
        assert sorted(t.points for t in tris) == oracles.point_triangles(lines), label
        assert sorted(t.lines for t in tris) == oracles.line_triangles(lines), label


def test_views_pair_up_consistently():
    # the lines of each triangle are exactly the joining lines of its points
    for label, obj in _corpus():
        geom = as_geometry(obj)
        pair_line = geom.pair_to_line()
        for t in enumerate_triangles(obj):
            x, y, z = t.points
            joined = tuple(sorted({pair_line[(x, y)], pair_line[(x, z)], pair_line[(y, z)]}))
            assert joined == t.lines, label


# -- color-swap symmetry -----------------------------------------------------------

@given(data=st.data())
@settings(max_examples=80, deadline=None)
def test_swap_exchanges_the_counts(data):
    name = data.draw(st.sampled_from(CONFIG_NAMES))
    cfg = builtin(name)
    m = cfg.line_count
    bits = tuple(data.draw(st.integers(0, 1)) for _ in range(m))
    coloring = LineColoring(bits)
    red, blue = count_monochromatic(cfg, coloring)
    assert count_monochromatic(cfg, coloring.swapped()) == (blue, red)


def test_minimum_is_swap_invariant():
    # fixing line 0 red costs nothing: the witness's swap reaches the same total
    for name in CONFIG_NAMES:
        cfg = builtin(name)
        result = min_monochromatic(cfg)
        red, blue = count_monochromatic(cfg, result.witness.swapped())
        assert red + blue == result.min_total


# -- witness validity ----------------------------------------------------------------

def test_witness_recount_reproduces_the_minimum():
    for label, obj in _corpus():
        result = min_monochromatic(obj)
        red, blue = count_monochromatic(obj, result.witness)
        assert red + blue == result.min_total, label
        assert (red, blue) == (result.witness_red_count, result.witness_blue_count), label


def test_all_one_color_counts_every_triangle():
    for name in CONFIG_NAMES:
        cfg = builtin(name)
        total = len(enumerate_triangles(cfg))
        assert count_monochromatic(cfg, LineColoring.all_red(cfg.line_count)) == (total, 0)


# -- search-mode agreement --------------------------------------------------------------

def test_modes_agree_on_the_whole_corpus():
    for label, obj in _corpus():
        exhaustive = min_monochromatic(obj, mode="exhaustive")
        bnb = min_monochromatic(obj, mode="bnb")
        assert exhaustive.min_total == bnb.min_total, label
        assert exhaustive.witness.bits == bnb.witness.bits, label
        assert exhaustive.optimal_coloring_count == bnb.optimal_coloring_count, label


def test_subset_of_all_lines_reduces_to_the_global_search():
    for name in CONFIG_NAMES:
        cfg = builtin(name)
        assert (
            min_monochromatic_on_line_subset(cfg, range(cfg.line_count))
            == min_monochromatic(cfg).min_total
        )
