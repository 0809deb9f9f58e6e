"""Monochromatic triangles under 2-colorings of complete-graph edges.

Vertices of K_n are 0..n-1; edges are indexed in lexicographic pair order.
Covers the closed-form counting minimum, small brute-force searches, and the
harder minimum of the *disjoint packing* number: the largest set of
vertex-disjoint monochromatic triangles, minimized over colorings.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations

from . import _kernels as kernels
from .coloring import _exhaustive  # same fixed-first-item kernel drives both settings
from .errors import CapExceededError, SearchBudgetExceeded

BRUTE_FORCE_VERTEX_CAP = 7
DISJOINT_VERTEX_CAP = 8


def edge_index(n: int, i: int, j: int) -> int:
    """Index of edge {i, j} in lexicographic order over pairs of 0..n-1."""
    if i > j:
        i, j = j, i
    if not (0 <= i < j < n):
        raise ValueError(f"not an edge of K_{n}: ({i}, {j})")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def all_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class EdgeColoring:
    """Edge coloring of K_n: bits[edge_index] is 0 = red, 1 = blue."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least 2 vertices")
        if len(self.bits) != self.n * (self.n - 1) // 2:
            raise ValueError(f"expected {self.n * (self.n - 1) // 2} edge colors, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("colors must be 0 (red) or 1 (blue)")

    @classmethod
    def all_red(cls, n: int) -> EdgeColoring:
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_red_edges(cls, n: int, red_edges) -> EdgeColoring:
        bits = [1] * (n * (n - 1) // 2)
        for (i, j) in red_edges:
            bits[edge_index(n, i, j)] = 0
        return cls(n, tuple(bits))

    def color_of(self, i: int, j: int) -> int:
        return self.bits[edge_index(self.n, i, j)]

    def red_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, b in zip(all_edges(self.n), self.bits) if b == 0)

    def blue_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, b in zip(all_edges(self.n), self.bits) if b == 1)

    def swapped(self) -> EdgeColoring:
        return EdgeColoring(self.n, tuple(1 - b for b in self.bits))


@dataclass(frozen=True)
class PackingResult:
    """A largest set of vertex-disjoint monochromatic triangles."""

    max_disjoint: int
    witness_triangles: tuple[tuple[int, int, int], ...]


def goodman_min(n: int) -> int:
    """Closed-form minimum of monochromatic triangles over all 2-colorings:
    C(n,3) - floor(n/2 * floor((n-1)^2 / 4)).

    The outer term is evaluated exactly as floor(n * floor((n-1)^2/4) / 2),
    which equals the floor of the half-integer product; everything stays in
    integer arithmetic.
    """
    if n < 1:
        raise ValueError("need at least 1 vertex")
    return math.comb(n, 3) - n * ((n - 1) ** 2 // 4) // 2


def _triangle_structures(n: int):
    """Per triangle of K_n: (sorted edge-index triple, vertex triple)."""
    etr, vtr = [], []
    for a, b, c in combinations(range(n), 3):
        etr.append(tuple(sorted((edge_index(n, a, b), edge_index(n, a, c), edge_index(n, b, c)))))
        vtr.append((a, b, c))
    return etr, vtr


def count_mono_triangles(coloring: EdgeColoring) -> tuple[int, int]:
    """(red, blue) monochromatic triangle counts."""
    red = blue = 0
    bits = coloring.bits
    for (e1, e2, e3), _ in zip(*_triangle_structures(coloring.n)):
        if bits[e1] == bits[e2] == bits[e3]:
            if bits[e1] == 0:
                red += 1
            else:
                blue += 1
    return red, blue


def brute_force_min_mono(n: int, jobs: int = 1) -> int:
    """Exhaustive minimum of monochromatic triangles (edge {0,1} fixed red).

    Independent check of goodman_min; capped at 7 vertices (2^20 colorings).
    """
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if n > BRUTE_FORCE_VERTEX_CAP:
        raise CapExceededError(f"brute force is capped at {BRUTE_FORCE_VERTEX_CAP} vertices")
    if n < 3:
        return 0
    etr, _ = _triangle_structures(n)
    return int(_exhaustive(etr, n * (n - 1) // 2, jobs)[0])


def triangle_free_colorings(n: int = 5) -> list[EdgeColoring]:
    """All colorings of K_n with no monochromatic triangle, in ascending
    bit-tuple order (not deduplicated under the color swap).

    Capped at 6 vertices; from 6 on the list is empty.
    """
    if not 3 <= n <= 6:
        raise ValueError("supported for 3..6 vertices")
    m = n * (n - 1) // 2
    etr, _ = _triangle_structures(n)
    out = []
    for code in range(1 << m):
        bits = tuple((code >> (m - 1 - j)) & 1 for j in range(m))
        if all(len({bits[e1], bits[e2], bits[e3]}) > 1 for (e1, e2, e3) in etr):
            out.append(EdgeColoring(n, bits))
    return out


def edges_form_cycle(n: int, edges) -> bool:
    """True when the vertex-pair set is a single cycle through all n vertices."""
    edges = list(edges)
    if len(edges) != n:
        return False
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    if any(len(nb) != 2 for nb in adj.values()):
        return False
    seen = {0}
    prev, cur = None, 0
    for _ in range(n):
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
        seen.add(cur)
    return cur == 0 and len(seen) == n


def max_disjoint_mono(coloring: EdgeColoring) -> PackingResult:
    """Largest vertex-disjoint set of monochromatic triangles.

    Exact memoized search over available-vertex sets; the witness is the
    lexicographically least optimal packing.
    """
    bits = coloring.bits
    monos: list[tuple[int, int, int]] = []
    for (e1, e2, e3), verts in zip(*_triangle_structures(coloring.n)):
        if bits[e1] == bits[e2] == bits[e3]:
            monos.append(verts)
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in monos]
    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        top = 0
        for tm in masks:
            if tm & avail == tm:
                top = max(top, 1 + best(avail & ~tm))
        memo[avail] = top
        return top

    full = (1 << coloring.n) - 1
    size = best(full)
    chosen: list[tuple[int, int, int]] = []
    avail = full
    remaining = size
    while remaining:
        for verts, tm in zip(monos, masks):
            if tm & avail == tm and 1 + best(avail & ~tm) == remaining:
                chosen.append(verts)
                avail &= ~tm
                remaining -= 1
                break
    return PackingResult(max_disjoint=size, witness_triangles=tuple(chosen))


def min_max_disjoint(
    n: int, jobs: int = 1, budget_s: float = 0.0, mode: str = "auto", progress=None
) -> int:
    """Minimum over all 2-colorings of the disjoint packing number.

    Exhaustive scan through 7 vertices; branch and bound at 8 (the packing
    number never exceeds 2 up to 8 vertices, which both searches exploit).
    ``budget_s`` bounds the branch-and-bound wall time (0 = unlimited), and
    ``progress(done, total, nodes, best)`` is called after each of the
    fixed-prefix subtrees the branch and bound is partitioned into.  Results
    do not depend on jobs/budget/progress.
    """
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if n > DISJOINT_VERTEX_CAP:
        raise CapExceededError(f"disjoint-minimum search is capped at {DISJOINT_VERTEX_CAP} vertices")
    if n < 3:
        return 0
    if mode == "auto":
        mode = "exhaustive" if n <= 7 else "bnb"
    m = n * (n - 1) // 2
    etr, vtr = _triangle_structures(n)
    ub = min(2, n // 3)

    if mode == "exhaustive":
        if n > 7:
            raise CapExceededError("exhaustive disjoint-minimum scan is capped at 7 vertices")
        fixed, free, disj = kernels.build_disjoint_structures(etr, vtr, m)
        space = kernels.coloring_space(m)
        ranges = kernels.split_ranges(space, jobs)
        if len(ranges) == 1:
            return int(kernels.disjoint_min_small_range(fixed, free, disj, 0, space, ub))
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = pool.map(
                lambda r: kernels.disjoint_min_small_range(fixed, free, disj, r[0], r[1], ub),
                ranges,
            )
        return int(min(parts))
    if mode != "bnb":
        raise ValueError(f"unknown mode {mode!r}")

    a, b, c, verts, starts = kernels.build_bnb_structures(m, etr, vtr)
    deadline = time.monotonic() + budget_s if budget_s > 0 else None

    def remaining() -> float:
        if deadline is None:
            return 0.0
        left = deadline - time.monotonic()
        if left <= 0:
            raise SearchBudgetExceeded(f"branch and bound for K_{n} exceeded {budget_s:.0f}s")
        return left

    if jobs <= 1 and progress is None:
        best, _nodes, completed = kernels.disjoint_bnb(
            m, a, b, c, verts, starts, ub, remaining()
        )
        if not completed:
            raise SearchBudgetExceeded(f"branch and bound for K_{n} exceeded {budget_s:.0f}s")
        return int(best)

    # partition on the colors of edges 1..prefix_len-1 (edge 0 stays red)
    prefix_len = min(6, m)
    prefixes = [bits << 1 for bits in range(1 << (prefix_len - 1))]
    best = ub
    nodes_total = 0

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        budget = remaining()
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    lambda p: kernels.disjoint_bnb(
                        m, a, b, c, verts, starts, ub, budget, p, prefix_len
                    ),
                    prefixes,
                )
            )
        for i, (sub_best, sub_nodes, completed) in enumerate(results):
            if not completed:
                raise SearchBudgetExceeded(f"branch and bound for K_{n} exceeded {budget_s:.0f}s")
            best = min(best, int(sub_best))
            nodes_total += int(sub_nodes)
            if progress is not None:
                progress(i + 1, len(prefixes), nodes_total, best)
        return best

    for i, prefix in enumerate(prefixes):
        # passing the incumbent only speeds later subtrees; the min is unchanged
        sub_best, sub_nodes, completed = kernels.disjoint_bnb(
            m, a, b, c, verts, starts, best, remaining(), prefix, prefix_len
        )
        if not completed:
            raise SearchBudgetExceeded(f"branch and bound for K_{n} exceeded {budget_s:.0f}s")
        best = min(best, int(sub_best))
        nodes_total += int(sub_nodes)
        if progress is not None:
            progress(i + 1, len(prefixes), nodes_total, best)
        if best == 0:
            break
    return best


def lower_bound_construction(k: int) -> EdgeColoring:
    """Coloring of K_{3k+1} whose disjoint packing number is k-1 (k >= 2):
    vertex classes of sizes 3k-1 and 2, crossing edges red, the rest blue.

    Red triangles need a vertex in each class twice over, so none exist; blue
    triangles all sit in the big class and k-1 of them fit disjointly.
    """
    if k < 2:
        raise ValueError("construction needs k >= 2")
    n = 3 * k + 1
    split = 3 * k - 1  # vertices below are the big class
    bits = []
    for (i, j) in all_edges(n):
        crossing = (i < split) != (j < split)
        bits.append(0 if crossing else 1)
    return EdgeColoring(n, tuple(bits))


def guaranteed_disjoint_triangles(n: int) -> int:
    """Every 2-coloring of K_n (n >= 6) admits floor((n-2)/3) vertex-disjoint
    monochromatic triangles."""
    if n < 6:
        raise ValueError("the guarantee starts at 6 vertices")
    return (n - 2) // 3
