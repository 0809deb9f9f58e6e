"""Cliques of mutually intersecting lines and the bounds they force.

A set of lines every two of which share a point is a clique in the
line-intersection graph.  Any six such lines in a configuration force two
monochromatic triangles under every 2-coloring of those six lines, so a
packing of k pairwise line-disjoint 6-cliques forces min_monochromatic >= 2k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import min_monochromatic, min_monochromatic_on_line_subset
from .incidence import Configuration, IncidenceGeometry, line_intersection_graph


@dataclass(frozen=True)
class CliqueReport:
    """Line-clique facts: the max clique size i with a witness, and the max
    packing k of pairwise line-disjoint 6-cliques with its witness.  All
    witnesses are lexicographically least."""

    max_clique_size: int
    witness: tuple[int, ...]
    six_clique_packing: int
    packing_witness: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SixLineBoundReport:
    """Per-configuration verification that six mutually intersecting lines
    behave as the bound demands."""

    min_total: int
    max_clique_size: int
    six_clique_packing: int
    clique_minima: tuple[tuple[tuple[int, ...], int], ...]  # (6-clique, subset minimum)


class SixLineBoundViolation(AssertionError):
    """A 6-clique whose forced-triangle accounting fails (names the clique)."""


@dataclass(frozen=True)
class ConjectureReport:
    """Status of `min_monochromatic > 0 implies max clique > 4` on one input."""

    status: str  # holds | vacuous | counterexample
    min_total: int
    max_clique_size: int


def _adjacency_masks(config: Configuration | IncidenceGeometry) -> list[int]:
    graph = line_intersection_graph(config)
    masks = [0] * len(graph.vertices)
    for i, j in graph.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def _max_clique_size(adj: list[int]) -> int:
    """Exact max clique by backtracking with a greedy-coloring bound."""
    n = len(adj)
    best = 0

    def color_order(cand: int) -> list[tuple[int, int]]:
        # greedy coloring; a vertex's color number bounds any clique through it
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~adj[v]
        return order

    def expand(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        for v, bound in reversed(color_order(cand)):
            if size + bound <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _cliques_of_size(adj: list[int], k: int) -> list[tuple[int, ...]]:
    """All k-cliques in lexicographic order."""
    n = len(adj)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def dfs(cand: int, need: int):
        if need == 0:
            out.append(tuple(prefix))
            return
        while cand:
            if cand.bit_count() < need:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            prefix.append(v)
            dfs(cand & adj[v], need - 1)
            prefix.pop()

    dfs((1 << n) - 1, k)
    return out


def _first_clique(adj: list[int], k: int) -> tuple[int, ...]:
    """Lexicographically least k-clique (k = max clique size, so one exists)."""
    n = len(adj)
    prefix: list[int] = []

    def dfs(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            prefix.append(v)
            if dfs(cand & adj[v], need - 1):
                return True
            prefix.pop()
        return False

    found = dfs((1 << n) - 1, k)
    assert found
    return tuple(prefix)


def _max_set_packing(sets: list[tuple[int, ...]]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Exact max packing of pairwise disjoint sets; first optimum found by
    include-earliest-first search is the lexicographically least witness."""
    masks = []
    for s in sets:
        m = 0
        for x in s:
            m |= 1 << x
        masks.append(m)
    best = 0
    best_choice: tuple[int, ...] = ()
    chosen: list[int] = []

    def dfs(idx: int, used: int):
        nonlocal best, best_choice
        if len(chosen) + (len(masks) - idx) <= best:
            return
        if idx == len(masks):
            if len(chosen) > best:
                best = len(chosen)
                best_choice = tuple(chosen)
            return
        if masks[idx] & used == 0:
            chosen.append(idx)
            dfs(idx + 1, used | masks[idx])
            chosen.pop()
        dfs(idx + 1, used)

    dfs(0, 0)
    return best, tuple(sets[i] for i in best_choice)


def _report(config: Configuration | IncidenceGeometry) -> CliqueReport:
    adj = _adjacency_masks(config)
    size = _max_clique_size(adj)
    witness = _first_clique(adj, size) if size else ()
    six = _cliques_of_size(adj, 6) if size >= 6 else []
    k, packing = _max_set_packing(six) if six else (0, ())
    return CliqueReport(
        max_clique_size=size,
        witness=witness,
        six_clique_packing=k,
        packing_witness=packing,
    )


def max_mutually_intersecting(config: Configuration | IncidenceGeometry) -> CliqueReport:
    """Largest set of pairwise intersecting lines (exact)."""
    return _report(config)


def disjoint_six_clique_packing(config: Configuration | IncidenceGeometry) -> CliqueReport:
    """Largest packing of pairwise line-disjoint 6-cliques (exact)."""
    return _report(config)


def all_six_cliques(config: Configuration | IncidenceGeometry) -> list[tuple[int, ...]]:
    """Every 6-element set of mutually intersecting lines, lexicographic."""
    return _cliques_of_size(_adjacency_masks(config), 6)


def six_line_bound_report(config: Configuration | IncidenceGeometry) -> SixLineBoundReport:
    """Gather the facts the six-line bound is about, without judging them."""
    report = _report(config)
    min_total = min_monochromatic(config).min_total
    minima = tuple(
        (clique, min_monochromatic_on_line_subset(config, clique))
        for clique in all_six_cliques(config)
    )
    return SixLineBoundReport(
        min_total=min_total,
        max_clique_size=report.max_clique_size,
        six_clique_packing=report.six_clique_packing,
        clique_minima=minima,
    )


def verify_six_line_bound(config: Configuration | IncidenceGeometry) -> SixLineBoundReport:
    """Check the forced-triangle accounting on one configuration.

    Raises SixLineBoundViolation (naming every offending clique) if any
    6-clique's within-subset minimum is not exactly 2, if min_monochromatic
    falls below 2 * six_clique_packing, or if a clique of size >= 6 coexists
    with a monochromatic-free coloring.  Configurations with no 6-clique pass
    vacuously.
    """
    report = six_line_bound_report(config)
    problems = [
        f"six-line clique {clique} has within-subset minimum {sub}, expected 2"
        for clique, sub in report.clique_minima
        if sub != 2
    ]
    if report.min_total < 2 * report.six_clique_packing:
        problems.append(
            f"min_monochromatic {report.min_total} < "
            f"2 * packing {report.six_clique_packing}"
        )
    if report.max_clique_size >= 6 and report.min_total == 0:
        problems.append(
            f"a clique of size {report.max_clique_size} coexists with a "
            "monochromatic-free coloring"
        )
    if problems:
        raise SixLineBoundViolation("; ".join(problems))
    return report


def check_conjecture(config: Configuration | IncidenceGeometry) -> ConjectureReport:
    """Evaluate `min_monochromatic > 0 implies max clique > 4`, reporting
    holds/vacuous/counterexample without asserting."""
    min_total = min_monochromatic(config).min_total
    size = _max_clique_size(_adjacency_masks(config))
    if min_total == 0:
        status = "vacuous"
    elif size > 4:
        status = "holds"
    else:
        status = "counterexample"
    return ConjectureReport(status=status, min_total=min_total, max_clique_size=size)
