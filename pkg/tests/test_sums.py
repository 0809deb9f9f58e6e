"""Connected sums: the incidence switch gluing two configurations."""

import pytest

from monotri import (
    SumSpec,
    are_isomorphic,
    builtin,
    classify,
    connected_sum,
    cross_triangle_count,
    enumerate_flag_sums,
    enumerate_triangles,
    geometry_from_lines,
    min_monochromatic,
)


def _fano_pair(p1=1, l1=0, p2=1, l2=0):
    fano = builtin("fano")
    return connected_sum(SumSpec(fano, fano, p1=p1, l1=l1, p2=p2, l2=l2))


# -- SumSpec validation ------------------------------------------------------------

def test_rejects_mismatched_parameters():
    quad = classify(geometry_from_lines([[1, 2], [2, 3], [3, 4], [1, 4]]))
    assert (quad.s, quad.t) == (2, 2)
    with pytest.raises(ValueError):
        SumSpec(builtin("fano"), quad, 1, 0, 1, 0)
    # equal (3, 3) parameters with different sizes are fine
    SumSpec(builtin("fano"), builtin("pappus"), 1, 0, 1, 0)


def test_rejects_point_off_line():
    fano = builtin("fano")
    assert 3 not in fano.lines[0]
    with pytest.raises(ValueError):
        SumSpec(fano, fano, p1=3, l1=0, p2=1, l2=0)


def test_rejects_line_out_of_range():
    fano = builtin("fano")
    with pytest.raises(ValueError):
        SumSpec(fano, fano, p1=1, l1=7, p2=1, l2=0)


# -- the sum itself -----------------------------------------------------------------

def test_sum_shape_and_parameters():
    summed = _fano_pair()
    cfg = summed.configuration
    assert cfg.geometry.point_count == 14
    assert cfg.line_count == 14
    assert (cfg.s, cfg.t) == (3, 3)
    assert cfg.is_symmetric_v3()


def test_partition_covers_everything():
    summed = _fano_pair()
    left, right = summed.partition
    assert left == tuple(range(1, 8))
    assert right == tuple(range(8, 15))


def test_no_cross_triangles():
    summed = _fano_pair()
    assert cross_triangle_count(summed) == 0
    left = set(summed.left_points)
    for tri in enumerate_triangles(summed.configuration):
        pts = set(tri.points)
        assert pts <= left or not (pts & left)


def test_each_side_loses_the_flag_triangles():
    # removing p1 from its line kills the 4+4 triangles through the two pairs
    # (p1, other) of that line on each side: 28 - 8 survive per summand
    summed = _fano_pair()
    tris = enumerate_triangles(summed.configuration)
    assert len(tris) == 40
    left = set(summed.left_points)
    assert sum(1 for t in tris if set(t.points) <= left) == 20


def test_sum_min_is_four():
    assert min_monochromatic(_fano_pair().configuration).min_total == 4


def test_matches_catalog_entry():
    assert are_isomorphic(_fano_pair().configuration, builtin("fano_pair"))


def test_cross_count_with_explicit_partition():
    summed = _fano_pair()
    assert cross_triangle_count(summed.configuration, summed.partition) == 0
    with pytest.raises(ValueError):
        cross_triangle_count(summed.configuration, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        cross_triangle_count(summed.configuration)


# -- flag sweep ----------------------------------------------------------------------

def test_flag_sweep_is_isomorphism_invariant():
    fano = builtin("fano")
    results = list(enumerate_flag_sums(fano, fano))
    assert len(results) == (7 * 3) ** 2
    first = results[0][1].configuration
    # spot-check a spread of flags; the acceptance gate runs the full sweep
    for _, summed in results[:: 40]:
        assert min_monochromatic(summed.configuration).min_total == 4
        assert are_isomorphic(first, summed.configuration)
