"""Search kernels: compiled when available, numpy fallback otherwise.

Set MONOTRI_PURE=1 to force the fallback.  Both backends expose the same
three functions with identical outputs (covered by the parity tests):
``line_min_range``, ``disjoint_min_small_range`` and ``disjoint_bnb``.

This module also holds the shared encoding helpers.  A coloring of ``m``
items with item 0 fixed red is a code in ``[0, 2**(m-1))``; the color of item
``j >= 1`` is bit ``m-1-j``, so ascending codes are lexicographic colorings
and the first optimum found is the lexicographically least witness.
"""

from __future__ import annotations

import os

import numpy as np

from ._pure import merge_line_results

_env = os.environ.get("MONOTRI_PURE", "").strip().lower()
if _env not in ("", "0", "false", "no"):
    from . import _pure as backend

    BACKEND = "pure"
else:
    try:
        from . import _speedups as backend  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as backend  # type: ignore[no-redef]

        BACKEND = "pure"

line_min_range = backend.line_min_range
disjoint_min_small_range = backend.disjoint_min_small_range
disjoint_bnb = backend.disjoint_bnb


def available_backends() -> dict:
    """Importable backend modules by name (always includes "pure")."""
    from . import _pure

    found = {"pure": _pure}
    try:
        from . import _speedups  # type: ignore[attr-defined]

        found["compiled"] = _speedups
    except ImportError:
        pass
    return found


def coloring_space(m: int) -> int:
    """Number of codes for m items with item 0 fixed red."""
    if m < 1:
        raise ValueError("need at least one item")
    if m > 64:
        raise ValueError("codes are limited to 64-bit masks")
    return 1 << (m - 1)


def item_bit(j: int, m: int) -> int:
    """Bit position of item j in an m-item code (j >= 1)."""
    return m - 1 - j


def decode_coloring(code: int, m: int) -> tuple[int, ...]:
    """Code -> color tuple (bits[0] is always 0 = red)."""
    return (0,) + tuple((code >> (m - 1 - j)) & 1 for j in range(1, m))


def encode_coloring(bits) -> int:
    """Color tuple -> code; bits[0] must be 0 (red)."""
    bits = tuple(bits)
    if not bits or bits[0] != 0:
        raise ValueError("item 0 must be red (0) in the fixed-color encoding")
    m = len(bits)
    return sum(bits[j] << (m - 1 - j) for j in range(1, m))


def build_triangle_masks(triples, m: int):
    """Split sorted index triples into fixed (contain item 0) and free masks."""
    fixed: list[int] = []
    free: list[int] = []
    for triple in triples:
        x, y, z = sorted(triple)
        if x == 0:
            fixed.append((1 << item_bit(y, m)) | (1 << item_bit(z, m)))
        else:
            free.append((1 << item_bit(x, m)) | (1 << item_bit(y, m)) | (1 << item_bit(z, m)))
    return (
        np.asarray(fixed, dtype=np.uint64),
        np.asarray(free, dtype=np.uint64),
    )


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Partition range(total) into at most ``parts`` contiguous chunks."""
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def build_disjoint_structures(edge_triples, vert_triples, m: int):
    """Masks for disjoint_min_small_range.

    ``edge_triples``/``vert_triples`` are parallel sequences: per triangle its
    sorted edge-index triple and sorted vertex triple (0-based).  Returns
    (fixed_masks, free_masks, disj_masks) with triangles reordered fixed-first;
    disj_masks[i] marks the triangles vertex-disjoint from triangle i.
    """
    fixed: list[int] = []
    free: list[int] = []
    fixed_vm: list[int] = []
    free_vm: list[int] = []
    for (triple, vtriple) in zip(edge_triples, vert_triples):
        x, y, z = sorted(triple)
        vm = 0
        for v in vtriple:
            vm |= 1 << v
        if x == 0:
            fixed.append((1 << item_bit(y, m)) | (1 << item_bit(z, m)))
            fixed_vm.append(vm)
        else:
            free.append((1 << item_bit(x, m)) | (1 << item_bit(y, m)) | (1 << item_bit(z, m)))
            free_vm.append(vm)
    vms = fixed_vm + free_vm
    count = len(vms)
    if count > 64:
        raise ValueError("disjointness bitmasks support at most 64 triangles")
    disj = [0] * count
    for i in range(count):
        for j in range(count):
            if i != j and vms[i] & vms[j] == 0:
                disj[i] |= 1 << j
    return (
        np.asarray(fixed, dtype=np.uint64),
        np.asarray(free, dtype=np.uint64),
        np.asarray(disj, dtype=np.uint64),
    )


def build_bnb_structures(n_edges: int, edge_triples, vert_triples):
    """CSR arrays for disjoint_bnb: triangles grouped by their closing edge."""
    tris = []
    for (triple, vtriple) in zip(edge_triples, vert_triples):
        x, y, z = sorted(triple)
        vm = 0
        for v in vtriple:
            vm |= 1 << v
        tris.append((z, x, y, vm))
    tris.sort()
    starts = [0] * (n_edges + 1)
    for (z, _, _, _) in tris:
        starts[z + 1] += 1
    for e in range(n_edges):
        starts[e + 1] += starts[e]
    return (
        np.asarray([t[1] for t in tris], dtype=np.intc),
        np.asarray([t[2] for t in tris], dtype=np.intc),
        np.asarray([t[0] for t in tris], dtype=np.intc),
        np.asarray([t[3] for t in tris], dtype=np.uint64),
        np.asarray(starts, dtype=np.int64),
    )


__all__ = [
    "BACKEND",
    "available_backends",
    "build_bnb_structures",
    "build_disjoint_structures",
    "build_triangle_masks",
    "coloring_space",
    "decode_coloring",
    "disjoint_bnb",
    "disjoint_min_small_range",
    "encode_coloring",
    "item_bit",
    "line_min_range",
    "merge_line_results",
    "split_ranges",
]
