"""Red/blue line colorings and the minimum-monochromatic-triangle search.

A triangle is monochromatic when its three lines carry one color.  Swapping
the two colors preserves the count, so every search fixes line 0 red and
scans the remaining ``2**(m-1)`` colorings; reported optima are therefore
lexicographically least among colorings with line 0 red, and optimal-coloring
counts are modulo the color swap.

Two search modes give identical answers: ``exhaustive`` (kernel scan, up to
26 lines) and ``bnb`` (branch and bound on forced monochromatic triangles,
up to 40 lines).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels as kernels
from .errors import CapExceededError
from .incidence import Configuration, IncidenceGeometry, as_geometry
from .triangles import triangle_line_index_triples

EXHAUSTIVE_LINE_CAP = 26
LINE_CAP = 40


@dataclass(frozen=True)
class LineColoring:
    """Color per line index: 0 = red, 1 = blue."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("a coloring needs at least one line")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("colors must be 0 (red) or 1 (blue)")

    def __len__(self) -> int:
        return len(self.bits)

    @classmethod
    def all_red(cls, line_count: int) -> LineColoring:
        return cls((0,) * line_count)

    @classmethod
    def from_red_lines(cls, line_count: int, red_lines) -> LineColoring:
        reds = set(red_lines)
        if not reds <= set(range(line_count)):
            raise ValueError("red line indices out of range")
        return cls(tuple(0 if i in reds else 1 for i in range(line_count)))

    @property
    def red_lines(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b == 0)

    @property
    def blue_lines(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b == 1)

    def swapped(self) -> LineColoring:
        return LineColoring(tuple(1 - b for b in self.bits))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimum search.

    ``witness`` is the lexicographically least optimal coloring with line 0
    red; ``optimal_coloring_count`` counts optima modulo the global color
    swap.
    """

    min_total: int
    witness: LineColoring
    witness_red_count: int
    witness_blue_count: int
    optimal_coloring_count: int
    mode: str


def count_monochromatic(config: Configuration | IncidenceGeometry, coloring) -> tuple[int, int]:
    """(red, blue) monochromatic triangle counts under a full line coloring."""
    geom = as_geometry(config)
    bits = coloring.bits if isinstance(coloring, LineColoring) else tuple(coloring)
    if len(bits) != geom.line_count:
        raise ValueError(f"coloring has {len(bits)} colors for {geom.line_count} lines")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("colors must be 0 (red) or 1 (blue)")
    red = blue = 0
    for (i, j, k) in triangle_line_index_triples(geom):
        if bits[i] == bits[j] == bits[k]:
            if bits[i] == 0:
                red += 1
            else:
                blue += 1
    return red, blue


def _resolve_mode(mode: str, m: int) -> str:
    if mode == "auto":
        mode = "exhaustive" if m <= EXHAUSTIVE_LINE_CAP else "bnb"
    if mode == "exhaustive":
        if m > EXHAUSTIVE_LINE_CAP:
            raise CapExceededError(
                f"{m} lines exceed the exhaustive cap of {EXHAUSTIVE_LINE_CAP}; use bnb mode"
            )
    elif mode == "bnb":
        if m > LINE_CAP:
            raise CapExceededError(f"{m} lines exceed the search cap of {LINE_CAP}")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def _exhaustive(triples, m: int, jobs: int):
    fixed, free = kernels.build_triangle_masks(triples, m)
    space = kernels.coloring_space(m)
    ranges = kernels.split_ranges(space, jobs)
    if len(ranges) == 1:
        return kernels.line_min_range(fixed, free, 0, space)
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        parts = list(pool.map(lambda r: kernels.line_min_range(fixed, free, *r), ranges))
    merged = None
    for part in parts:
        merged = kernels.merge_line_results(merged, part)
    return merged


class _ForcedTriangleSearch:
    """Branch and bound over line colorings, line 0 fixed red.

    Lines are branched in decreasing triangle participation; the bound is the
    number of triangles already forced monochromatic, which only grows as
    colors are added.
    """

    def __init__(self, triples, m: int):
        self.m = m
        self.triples = [tuple(t) for t in triples]
        tris_of: list[list[int]] = [[] for _ in range(m)]
        for idx, t in enumerate(self.triples):
            for line in t:
                tris_of[line].append(idx)
        self.tris_of = tris_of
        rest = sorted(range(1, m), key=lambda l: (-len(tris_of[l]), l))
        self.order = [0] + rest

    def _run(self, on_leaf, prune, fixed=None):
        """Generic DFS.  ``prune(forced_red, forced_blue)`` cuts a branch;
        ``on_leaf`` returns True to stop the whole search.  ``fixed`` maps
        line -> color and removes branching for those lines."""
        m = self.m
        count = [0] * len(self.triples)
        reds = [0] * len(self.triples)
        blues = [0] * len(self.triples)
        forced = [0, 0]  # red, blue
        fixed = fixed or {}
        order = [l for l in self.order if l in fixed] + [l for l in self.order if l not in fixed]
        stop = False

        def apply(line: int, color: int, undo: bool):
            step = -1 if undo else 1
            for t in self.tris_of[line]:
                if undo and count[t] == 3:
                    if reds[t] == 3:
                        forced[0] -= 1
                    elif blues[t] == 3:
                        forced[1] -= 1
                count[t] += step
                if color == 0:
                    reds[t] += step
                else:
                    blues[t] += step
                if not undo and count[t] == 3:
                    if reds[t] == 3:
                        forced[0] += 1
                    elif blues[t] == 3:
                        forced[1] += 1

        def visit(pos: int):
            nonlocal stop
            if pos == m:
                stop = on_leaf(forced[0], forced[1])
                return
            line = order[pos]
            if line in fixed:
                choices = (fixed[line],)
            elif line == 0:
                choices = (0,)
            else:
                choices = (0, 1)
            for color in choices:
                apply(line, color, undo=False)
                if not prune(forced[0], forced[1]):
                    visit(pos + 1)
                apply(line, color, undo=True)
                if stop:
                    return

        visit(0)

    def minimum(self) -> int:
        best = len(self.triples) + 1

        def on_leaf(fr: int, fb: int) -> bool:
            nonlocal best
            best = min(best, fr + fb)
            return best == 0

        self._run(on_leaf, lambda fr, fb: fr + fb >= best)
        return best

    def can_reach(self, fixed: dict[int, int], target: int) -> bool:
        found = False

        def on_leaf(fr: int, fb: int) -> bool:
            nonlocal found
            if fr + fb <= target:
                found = True
            return found

        self._run(on_leaf, lambda fr, fb: fr + fb > target, fixed=fixed)
        return found

    def count_optima(self, target: int) -> tuple[int, int]:
        """(#optimal colorings with line 0 red, min over them of min(red, blue))."""
        count = 0
        balance = len(self.triples)

        def on_leaf(fr: int, fb: int) -> bool:
            nonlocal count, balance
            if fr + fb == target:
                count += 1
                balance = min(balance, min(fr, fb))
            return False

        self._run(on_leaf, lambda fr, fb: fr + fb > target)
        return count, balance if count else 0

    def lex_witness(self, target: int) -> tuple[int, ...]:
        bits: dict[int, int] = {0: 0}
        for line in range(1, self.m):
            bits[line] = 0
            if not self.can_reach(bits, target):
                bits[line] = 1
        return tuple(bits[line] for line in range(self.m))


def min_monochromatic(
    config: Configuration | IncidenceGeometry, mode: str = "auto", jobs: int = 1
) -> SearchResult:
    """Minimum monochromatic triangles over all 2-colorings of the lines.

    Exact in both modes; the witness is the lexicographically least optimal
    coloring (line 0 red), and the result is independent of ``jobs``.
    """
    geom = as_geometry(config)
    m = geom.line_count
    mode = _resolve_mode(mode, m)
    triples = triangle_line_index_triples(geom)

    if mode == "exhaustive":
        min_total, best_code, opt_count, _, best_red, best_blue = _exhaustive(triples, m, jobs)
        witness = LineColoring(kernels.decode_coloring(best_code, m))
    else:
        search = _ForcedTriangleSearch(triples, m)
        min_total = search.minimum()
        opt_count = search.count_optima(min_total)[0]
        witness = LineColoring(search.lex_witness(min_total))

    red, blue = count_monochromatic(geom, witness)
    assert red + blue == min_total, "witness recount disagrees with the search"
    if mode == "exhaustive":
        assert (red, blue) == (best_red, best_blue)
    return SearchResult(
        min_total=int(min_total),
        witness=witness,
        witness_red_count=red,
        witness_blue_count=blue,
        optimal_coloring_count=int(opt_count),
        mode=mode,
    )


def optimal_color_balance(
    config: Configuration | IncidenceGeometry, mode: str = "auto", jobs: int = 1
) -> int:
    """min(red, blue) minimized over the optimal colorings.

    0 means some optimal coloring puts all its monochromatic triangles in one
    color class.
    """
    geom = as_geometry(config)
    m = geom.line_count
    mode = _resolve_mode(mode, m)
    triples = triangle_line_index_triples(geom)
    if mode == "exhaustive":
        return int(_exhaustive(triples, m, jobs)[3])
    search = _ForcedTriangleSearch(triples, m)
    return search.count_optima(search.minimum())[1]


def min_monochromatic_on_line_subset(config: Configuration | IncidenceGeometry, line_indices) -> int:
    """Minimum monochromatic triangles among triangles using only the given
    lines, over all 2-colorings of those lines."""
    geom = as_geometry(config)
    subset = sorted(set(line_indices))
    if not subset:
        raise ValueError("empty line subset")
    if subset[0] < 0 or subset[-1] >= geom.line_count:
        raise ValueError(f"line index out of range: {subset[-1] if subset[-1] >= geom.line_count else subset[0]}")
    remap = {line: i for i, line in enumerate(subset)}
    inside = [
        tuple(remap[l] for l in t)
        for t in triangle_line_index_triples(geom)
        if all(l in remap for l in t)
    ]
    k = len(subset)
    if k <= EXHAUSTIVE_LINE_CAP:
        fixed, free = kernels.build_triangle_masks(inside, k)
        return int(kernels.line_min_range(fixed, free, 0, kernels.coloring_space(k))[0])
    if k > LINE_CAP:
        raise CapExceededError(f"{k} lines exceed the search cap of {LINE_CAP}")
    return _ForcedTriangleSearch(inside, k).minimum()
