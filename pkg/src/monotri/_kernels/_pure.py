"""Pure-Python (numpy) search kernels.

Fallback backend used when the compiled extension is unavailable.  All three
kernels share conventions with ``_speedups``:

* A coloring of ``m`` lines (or edges) is a code in ``[0, 2**(m-1))``; item 0
  is fixed red, and the color of item ``j`` is bit ``m-1-j`` of the code, so
  ascending codes enumerate colorings in lexicographic order.
* Triangles through item 0 are passed as ``fixed_masks`` (the triangle is
  monochromatic red iff ``code & mask == 0`` and can never be blue); the rest
  as ``free_masks`` (monochromatic iff ``code & mask`` is 0 or the mask).
"""

from __future__ import annotations

import time

import numpy as np

_LINE_CHUNK = 1 << 16
_DISJOINT_CHUNK = 1 << 14


def merge_line_results(a, b):
    """Associatively merge two line_min_range results over disjoint code ranges.

    Components: (min_total, best_code, optimal_count, min_balance, best_red,
    best_blue).  best_code is the smallest optimal code across both ranges, so
    the merge is independent of how the code space was partitioned.
    """
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    lead = a if a[1] <= b[1] else b
    return (a[0], lead[1], a[2] + b[2], min(a[3], b[3]), lead[4], lead[5])


def line_min_range(fixed_masks, free_masks, start: int, stop: int):
    """Scan coloring codes in [start, stop) for the monochromatic minimum.

    Returns (min_total, best_code, optimal_count, min_balance, best_red,
    best_blue) where best_code is the smallest optimal code in the range,
    optimal_count the number of optimal codes, min_balance the smallest
    min(red, blue) over optimal codes, and best_red/best_blue the split at
    best_code.
    """
    if stop <= start:
        raise ValueError("empty code range")
    fixed = np.ascontiguousarray(fixed_masks, dtype=np.uint64)
    free = np.ascontiguousarray(free_masks, dtype=np.uint64)
    result = None
    for base in range(start, stop, _LINE_CHUNK):
        codes = np.arange(base, min(base + _LINE_CHUNK, stop), dtype=np.uint64)
        red = np.zeros(codes.shape[0], dtype=np.int32)
        blue = np.zeros(codes.shape[0], dtype=np.int32)
        for mask in fixed:
            red += (codes & mask) == 0
        for mask in free:
            anded = codes & mask
            red += anded == 0
            blue += anded == mask
        total = red + blue
        cmin = int(total.min())
        sel = total == cmin
        first = int(np.argmax(sel))
        chunk = (
            cmin,
            base + first,
            int(np.count_nonzero(sel)),
            int(np.minimum(red[sel], blue[sel]).min()),
            int(red[first]),
            int(blue[first]),
        )
        result = merge_line_results(result, chunk)
    return result


def disjoint_min_small_range(fixed_masks, free_masks, disj_masks, start: int, stop: int, ub: int) -> int:
    """Minimum over codes in [start, stop) of the disjoint mono-triangle packing.

    Valid only while the true packing never exceeds 2 (complete graphs on at
    most 8 vertices): the per-coloring packing is 2 if two vertex-disjoint
    monochromatic triangles exist, else 1 if any triangle is monochromatic,
    else 0.  ``disj_masks[i]`` holds, as a bitmask over triangle indices
    (fixed triangles first, then free), the triangles vertex-disjoint from
    triangle ``i``.  Returns min(ub, scanned minimum).
    """
    fixed = np.ascontiguousarray(fixed_masks, dtype=np.uint64)
    free = np.ascontiguousarray(free_masks, dtype=np.uint64)
    disj = np.ascontiguousarray(disj_masks, dtype=np.uint64)
    nf, ng = fixed.shape[0], free.shape[0]
    count = nf + ng
    if count != disj.shape[0]:
        raise ValueError("disjointness table does not match the triangle masks")
    weights = np.left_shift(np.uint64(1), np.arange(count, dtype=np.uint64))
    for base in range(start, stop, _DISJOINT_CHUNK):
        if ub == 0:
            break
        codes = np.arange(base, min(base + _DISJOINT_CHUNK, stop), dtype=np.uint64)
        mono = np.empty((codes.shape[0], count), dtype=bool)
        for i in range(nf):
            mono[:, i] = (codes & fixed[i]) == 0
        for i in range(ng):
            anded = codes & free[i]
            mono[:, nf + i] = (anded == 0) | (anded == free[i])
        mono_bits = (mono * weights).sum(axis=1, dtype=np.uint64)
        have_pair = np.zeros(codes.shape[0], dtype=bool)
        for i in range(count):
            have_pair |= mono[:, i] & ((mono_bits & disj[i]) != 0)
        packing = np.where(have_pair, 2, mono.any(axis=1).astype(np.int64))
        ub = min(ub, int(packing.min()) if packing.size else 0)
    return ub


def disjoint_bnb(
    n_edges: int,
    tri_a,
    tri_b,
    tri_c,
    tri_verts,
    last_start,
    ub: int,
    budget_s: float = 0.0,
    prefix_bits: int = 0,
    prefix_len: int = 0,
):
    """Branch and bound over edge colorings for the disjoint-packing minimum.

    Edges are colored in index order, edge 0 red.  Triangles are given by
    their sorted edge indices (a < b < c) with ``last_start`` the CSR offsets
    grouping them by closing edge ``c``; ``tri_verts`` are vertex bitmasks.
    A branch is cut once two vertex-disjoint monochromatic triangles are
    forced (requires ub <= 2, i.e. at most 8 vertices), so on a live path the
    packing equals 1 if any triangle is monochromatic and 0 otherwise.

    For partitioned runs, the first ``prefix_len`` edges are preassigned:
    edge d gets color ``(prefix_bits >> d) & 1`` (bit 0 must be 0).  The
    subtree minimum is clipped at ub, so min-merging the results over all
    prefixes of a fixed length reproduces the unpartitioned answer.

    Returns (best, nodes, completed); when ``budget_s`` seconds elapse first,
    completed is False and best is only an upper bound.
    """
    if ub > 2:
        raise ValueError("pair-based pruning needs ub <= 2")
    if not 0 <= prefix_len <= n_edges:
        raise ValueError("prefix length out of range")
    if prefix_len > 0 and prefix_bits & 1:
        raise ValueError("edge 0 must be red in the prefix")
    a = [int(x) for x in tri_a]
    b = [int(x) for x in tri_b]
    verts = [int(x) for x in tri_verts]
    starts = [int(x) for x in last_start]
    colors = [-1] * n_edges
    mono_stack: list[int] = []
    best = ub
    nodes = 0
    deadline = time.monotonic() + budget_s if budget_s > 0 else None
    aborted = False

    if best == 0 or n_edges == 0:
        return best, 0, True

    for d in range(prefix_len):
        color = (prefix_bits >> d) & 1
        colors[d] = color
        for t in range(starts[d], starts[d + 1]):
            if colors[a[t]] == color and colors[b[t]] == color:
                vm = verts[t]
                if any(sv & vm == 0 for sv in mono_stack):
                    return best, 0, True  # >= 2 disjoint forced; cannot beat ub
                mono_stack.append(vm)
    if (1 if mono_stack else 0) >= best:
        return best, 0, True
    if prefix_len == n_edges:
        return (1 if mono_stack else 0), 0, True

    def visit(d: int) -> None:
        nonlocal best, nodes, aborted
        for color in (0,) if d == 0 else (0, 1):
            nodes += 1
            if deadline is not None and (nodes & 8191) == 0 and time.monotonic() > deadline:
                aborted = True
                return
            colors[d] = color
            pushed = 0
            pruned = False
            for t in range(starts[d], starts[d + 1]):
                if colors[a[t]] == color and colors[b[t]] == color:
                    vm = verts[t]
                    if any(sv & vm == 0 for sv in mono_stack):
                        pruned = True
                        break
                    mono_stack.append(vm)
                    pushed += 1
            if not pruned:
                forced = 1 if mono_stack else 0
                if forced >= best:
                    pruned = True
                elif d + 1 == n_edges:
                    best = forced
                else:
                    visit(d + 1)
            if pushed:
                del mono_stack[-pushed:]
            colors[d] = -1
            if best == 0 or aborted:
                return

    visit(prefix_len)
    return best, nodes, not aborted
