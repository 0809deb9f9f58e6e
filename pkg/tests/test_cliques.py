"""Mutually intersecting line sets and the bounds they put on the minimum."""

import pytest

from monotri import (
    SixLineBoundViolation,
    all_six_cliques,
    as_geometry,
    builtin,
    check_conjecture,
    disjoint_six_clique_packing,
    enumerate_v3,
    max_mutually_intersecting,
    min_monochromatic,
    min_monochromatic_on_line_subset,
    six_line_bound_report,
    verify_six_line_bound,
)

import oracles

GOLDEN_CLIQUE = {
    "fano": 7,
    "mobius_kantor": 4,
    "pappus": 3,
    "desargues": 4,
    "example_14_3": 5,
    "example_16_3": 5,
    "six_mutual": 6,
    "fano_pair": 6,
}


# -- maximum cliques -----------------------------------------------------------

@pytest.mark.parametrize("name,expected", sorted(GOLDEN_CLIQUE.items()))
def test_max_clique_goldens(name, expected):
    report = max_mutually_intersecting(builtin(name))
    assert report.max_clique_size == expected


@pytest.mark.parametrize("name", sorted(GOLDEN_CLIQUE))
def test_max_clique_matches_oracle(name):
    obj = builtin(name)
    report = max_mutually_intersecting(obj)
    assert report.max_clique_size == oracles.max_mutual_lines(as_geometry(obj).lines)


def test_witness_is_a_clique_of_the_reported_size():
    for name in GOLDEN_CLIQUE:
        obj = builtin(name)
        report = max_mutually_intersecting(obj)
        lines = [set(line) for line in as_geometry(obj).lines]
        assert len(report.witness) == report.max_clique_size
        assert all(
            lines[a] & lines[b]
            for i, a in enumerate(report.witness)
            for b in report.witness[i + 1:]
        )


def test_witness_is_lexicographically_least():
    assert max_mutually_intersecting(builtin("pappus")).witness == (0, 3, 4)


# -- six-clique packings ----------------------------------------------------------

def test_fano_has_seven_six_cliques():
    cliques = all_six_cliques(builtin("fano"))
    assert len(cliques) == 7
    assert cliques[0] == (0, 1, 2, 3, 4, 5)


def test_packing_values():
    assert disjoint_six_clique_packing(builtin("fano")).six_clique_packing == 1
    assert disjoint_six_clique_packing(builtin("mobius_kantor")).six_clique_packing == 0
    report = disjoint_six_clique_packing(builtin("fano_pair"))
    assert report.six_clique_packing == 2
    used = [set(c) for c in report.packing_witness]
    assert len(used) == 2 and not (used[0] & used[1])


# -- the six-line bound -------------------------------------------------------------

def test_every_six_clique_forces_exactly_one_triangle():
    # each 6-clique here contains a concurrent triple whose complement is not
    # concurrent; coloring the pencil one color and the rest the other leaves
    # a single monochromatic triangle, and zero is impossible
    for name in ("fano", "six_mutual", "fano_pair"):
        obj = builtin(name)
        for clique in all_six_cliques(obj):
            assert min_monochromatic_on_line_subset(obj, clique) == 1


def test_six_mutual_subset_matches_oracle():
    geom = builtin("six_mutual")
    assert oracles.subset_min(geom.lines, range(6)) == 1


def test_packing_lower_bound_holds_on_configurations():
    # min_mono >= 2 * (disjoint 6-clique packing) survives on every uniform
    # configuration here even though the per-clique value is 1, because the
    # observed minima are slack enough (fano 4 >= 2, fano_pair 4 >= 4)
    for name in GOLDEN_CLIQUE:
        if name == "six_mutual":
            continue
        report = six_line_bound_report(builtin(name))
        assert report.min_total >= 2 * report.six_clique_packing, name


def test_packing_lower_bound_fails_on_the_bare_arrangement():
    # the six-line geometry is its own 6-clique: packing 1, minimum 1 < 2
    report = six_line_bound_report(builtin("six_mutual"))
    assert report.six_clique_packing == 1
    assert report.min_total == 1
    assert report.min_total < 2 * report.six_clique_packing


def test_report_collects_clique_minima():
    report = six_line_bound_report(builtin("fano"))
    assert report.max_clique_size == 7
    assert report.six_clique_packing == 1
    assert len(report.clique_minima) == 7
    assert all(sub == 1 for _, sub in report.clique_minima)


def test_verify_raises_on_the_claimed_two():
    # the claimed per-clique minimum of 2 never happens: the pencil coloring
    # gives 1, so verification reports every clique as violating
    with pytest.raises(SixLineBoundViolation) as err:
        verify_six_line_bound(builtin("fano"))
    assert "subset minimum 1" in str(err.value)


def test_verify_passes_without_six_cliques():
    report = verify_six_line_bound(builtin("pappus"))
    assert report.six_clique_packing == 0
    assert report.clique_minima == ()


def test_nonzero_minimum_whenever_six_lines_mutually_meet():
    for name in ("fano", "six_mutual", "fano_pair"):
        obj = builtin(name)
        if max_mutually_intersecting(obj).max_clique_size >= 6:
            assert min_monochromatic(obj).min_total > 0


# -- the partial-converse conjecture ---------------------------------------------------

def test_conjecture_statuses_on_catalog():
    assert check_conjecture(builtin("fano")).status == "holds"
    assert check_conjecture(builtin("example_16_3")).status == "holds"
    assert check_conjecture(builtin("pappus")).status == "vacuous"
    assert check_conjecture(builtin("mobius_kantor")).status == "vacuous"
    assert check_conjecture(builtin("fano_pair")).status == "holds"


def test_conjecture_counterexample_is_reported_not_raised():
    # a 9-point configuration with minimum 1 but only 4 mutually intersecting
    # lines: the status is informational and nothing is asserted
    cfg = enumerate_v3(9)[1]
    report = check_conjecture(cfg)
    assert report.status == "counterexample"
    assert report.min_total == 1
    assert report.max_clique_size == 4
    assert oracles.min_mono(cfg.geometry.lines) == 1
    assert oracles.max_mutual_lines(cfg.geometry.lines) == 4
