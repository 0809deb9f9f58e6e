"""Built-in named geometries, isomorphism testing, and small-v enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .incidence import (
    Configuration,
    IncidenceGeometry,
    as_geometry,
    classify,
    geometry_from_lines,
)
from .sums import SumSpec, connected_sum
from .triangles import triangle_line_index_triples


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    geometry: IncidenceGeometry
    note: str


_BUILTIN_LINES: dict[str, list[list[int]]] = {
    # projective plane of order 2: line {1,2,4} shifted mod 7
    "fano": [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [1, 5, 6], [2, 6, 7], [1, 3, 7]],
    "mobius_kantor": [
        [1, 2, 3], [3, 4, 5], [5, 6, 7], [1, 7, 8],
        [2, 5, 8], [1, 4, 6], [3, 6, 8], [2, 4, 7],
    ],
    "pappus": [
        [1, 2, 3], [4, 5, 6], [7, 8, 9],
        [1, 5, 7], [2, 4, 7], [1, 6, 8], [3, 4, 8], [2, 6, 9], [3, 5, 9],
    ],
    "desargues": [
        [1, 2, 5], [1, 3, 6], [1, 4, 7],
        [2, 3, 10], [3, 4, 8], [2, 4, 9],
        [5, 6, 10], [6, 7, 8], [5, 7, 9], [8, 9, 10],
    ],
    "example_14_3": [
        [1, 2, 3], [3, 4, 5], [1, 5, 6], [3, 6, 7], [2, 5, 7],
        [1, 8, 9], [6, 9, 10], [2, 11, 13], [7, 12, 13], [4, 8, 10],
        [4, 11, 12], [9, 13, 14], [8, 11, 14], [10, 12, 14],
    ],
    "example_16_3": [
        [1, 2, 3], [1, 4, 5], [3, 5, 6], [1, 6, 7], [3, 4, 7], [4, 6, 8],
        [2, 10, 15], [2, 13, 14], [5, 9, 11], [7, 12, 16],
        [8, 9, 10], [11, 12, 13], [14, 15, 16],
        [8, 11, 14], [9, 12, 15], [10, 13, 16],
    ],
    "six_mutual": [[1, 2, 3], [3, 4, 5], [1, 5, 6], [2, 5, 7], [3, 6, 7], [1, 4, 7]],
}

_NOTES: dict[str, str] = {
    "fano": "Projective plane of order 2, difference-set presentation "
            "(line {1,2,4} shifted mod 7); every two lines meet.",
    "mobius_kantor": "The unique configuration on 8 points and 8 lines with "
                     "three points per line.",
    "pappus": "Hexagon-theorem configuration: two collinear point triples "
              "whose cross-joins meet in three further collinear points.",
    "desargues": "Two triangles in perspective from a point, with the three "
                 "pairs of corresponding sides meeting on a common axis.",
    "example_14_3": "14-point configuration with five mutually intersecting "
                    "lines that still admits a coloring with no "
                    "monochromatic triangle.",
    "example_16_3": "16-point configuration forcing one monochromatic "
                    "triangle although no six of its lines mutually "
                    "intersect.",
    "six_mutual": "Six pairwise intersecting lines on seven points (point "
                  "degrees 2 and 3, so not a uniform configuration).",
    "fano_pair": "Two 7-point planes glued by an incidence switch at one "
                 "point-line flag of each.",
}

_NAMES = (
    "fano", "mobius_kantor", "pappus", "desargues",
    "example_14_3", "example_16_3", "six_mutual", "fano_pair",
)

_cache: dict[str, Configuration | IncidenceGeometry] = {}


def names() -> tuple[str, ...]:
    return _NAMES


def builtin(name: str) -> Configuration | IncidenceGeometry:
    """Stored geometry by name; `six_mutual` is a plain geometry (its point
    degrees are not uniform), everything else classifies as a configuration."""
    if name not in _NAMES:
        raise KeyError(f"unknown catalog name: {name!r} (have {', '.join(_NAMES)})")
    if name not in _cache:
        if name == "fano_pair":
            fano = builtin("fano")
            summed = connected_sum(SumSpec(fano, fano, p1=1, l1=0, p2=1, l2=0))
            _cache[name] = summed.configuration
        elif name == "six_mutual":
            _cache[name] = geometry_from_lines(_BUILTIN_LINES[name])
        else:
            cfg = classify(geometry_from_lines(_BUILTIN_LINES[name]))
            assert isinstance(cfg, Configuration)
            _cache[name] = cfg
    return _cache[name]


def entry(name: str) -> CatalogEntry:
    return CatalogEntry(name=name, geometry=as_geometry(builtin(name)), note=_NOTES[name])


# --- isomorphism ----------------------------------------------------------


def _point_profiles(geom: IncidenceGeometry) -> list[tuple]:
    """Per-point invariant (1-based, entry 0 unused): degree, sizes of its
    lines, degrees of its collinear partners."""
    by_point = geom.point_degrees()
    degs = [0] + [by_point[p] for p in range(1, geom.point_count + 1)]
    sizes: list[list[int]] = [[] for _ in range(geom.point_count + 1)]
    partners: list[set[int]] = [set() for _ in range(geom.point_count + 1)]
    for line in geom.lines:
        for p in line:
            sizes[p].append(len(line))
            partners[p].update(line)
    profiles: list[tuple] = [()]
    for p in range(1, geom.point_count + 1):
        partners[p].discard(p)
        profiles.append(
            (degs[p], tuple(sorted(sizes[p])), tuple(sorted(degs[q] for q in partners[p])))
        )
    return profiles


def _collinear_masks(geom: IncidenceGeometry) -> list[int]:
    """Per-point bitmask with bit q set when p and q share a line."""
    masks = [0] * (geom.point_count + 1)
    for line in geom.lines:
        for p, q in combinations(line, 2):
            masks[p] |= 1 << q
            masks[q] |= 1 << p
    return masks


def find_isomorphism(
    a: Configuration | IncidenceGeometry, b: Configuration | IncidenceGeometry
) -> dict[int, int] | None:
    """Point bijection mapping a's line set onto b's, or None.

    Backtracking with per-point candidate bitmasks refined on each placement.
    Collinearity consistency alone does not force 3-point lines onto lines,
    so every source line is checked the moment its last point is mapped.
    """
    ga, gb = as_geometry(a), as_geometry(b)
    if ga.point_count != gb.point_count or ga.line_count != gb.line_count:
        return None
    if sorted(len(l) for l in ga.lines) != sorted(len(l) for l in gb.lines):
        return None
    pa, pb = _point_profiles(ga), _point_profiles(gb)
    if sorted(pa[1:]) != sorted(pb[1:]):
        return None

    n = ga.point_count
    ma, mb = _collinear_masks(ga), _collinear_masks(gb)
    all_b = ((1 << (n + 1)) - 1) & ~1
    cand0 = [0] * (n + 1)
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if pb[q] == pa[p]:
                cand0[p] |= 1 << q

    # map rarest-candidate points first, preferring points collinear with
    # already-ordered ones so refinement bites early
    order: list[int] = []
    placed = 0
    left = set(range(1, n + 1))
    while left:
        pool = [p for p in left if ma[p] & placed] if order else list(left)
        pool = pool or list(left)
        p = min(pool, key=lambda p: (cand0[p].bit_count(), p))
        order.append(p)
        left.remove(p)
        placed |= 1 << p

    pos = {p: i for i, p in enumerate(order)}
    lines_a = [tuple(sorted(line)) for line in ga.lines]
    # lines grouped by the point of theirs that is mapped last
    lines_closing_at: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for line in lines_a:
        lines_closing_at[max(pos[p] for p in line)].append(line)
    lines_b = {tuple(sorted(l)) for l in gb.lines}

    fwd = [0] * (n + 1)

    def extend(i: int, cand: list[int]) -> bool:
        if i == n:
            return True
        p = order[i]
        avail = cand[p]
        while avail:
            qbit = avail & -avail
            avail ^= qbit
            q = qbit.bit_length() - 1
            fwd[p] = q
            if not all(
                tuple(sorted(fwd[x] for x in line)) in lines_b
                for line in lines_closing_at[i]
            ):
                continue
            nxt = list(cand)
            ok = True
            for j in range(i + 1, n):
                r = order[j]
                keep = mb[q] if ma[r] >> p & 1 else all_b & ~mb[q]
                nxt[r] = cand[r] & keep & ~qbit
                if not nxt[r]:
                    ok = False
                    break
            if ok and extend(i + 1, nxt):
                return True
        return False

    if extend(0, cand0):
        return {p: fwd[p] for p in range(1, n + 1)}
    return None


def are_isomorphic(
    a: Configuration | IncidenceGeometry, b: Configuration | IncidenceGeometry
) -> bool:
    return find_isomorphism(a, b) is not None


# --- enumeration of symmetric v3 configurations ---------------------------

_enum_cache: dict[int, tuple[Configuration, ...]] = {}


def enumerate_v3(v: int) -> list[Configuration]:
    """All configurations with v points, v lines, s = t = 3, up to
    isomorphism, for 7 <= v <= 11.

    Generation fixes the three lines through point 1 as {1,2,3},{1,4,5},
    {1,6,7}, then repeatedly completes the smallest point still missing
    lines, introducing new labels in first-use order; duplicates are merged
    sequentially by exact isomorphism tests behind invariant buckets.
    """
    if not 7 <= v <= 11:
        raise ValueError(f"enumerate_v3 supports 7 <= v <= 11, got {v}")
    if v in _enum_cache:
        return list(_enum_cache[v])

    star = [(1, 2, 3), (1, 4, 5), (1, 6, 7)]
    deg = [0] * (v + 1)
    for line in star:
        for p in line:
            deg[p] += 1
    pairs = {frozenset(pq) for line in star for pq in combinations(line, 2)}
    found: list[list[tuple[int, int, int]]] = []

    def line_options(p: int, max_label: int, lower: tuple[int, int, int] | None):
        """Possible next lines through p: two existing deficient partners,
        one existing plus one new label, or two new labels."""
        opts: list[tuple[int, int, int]] = []
        existing = [
            x for x in range(p + 1, max_label + 1)
            if deg[x] < 3 and frozenset((p, x)) not in pairs
        ]
        for x, y in combinations(existing, 2):
            if frozenset((x, y)) not in pairs:
                opts.append((p, x, y))
        if max_label + 1 <= v:
            for x in existing:
                opts.append((p, x, max_label + 1) if x < max_label + 1 else (p, max_label + 1, x))
        if max_label + 2 <= v:
            opts.append((p, max_label + 1, max_label + 2))
        return [o for o in opts if lower is None or o > lower]

    lines = list(star)

    def add(line: tuple[int, int, int], max_label: int) -> int:
        lines.append(line)
        for q in line:
            deg[q] += 1
        for pq in combinations(line, 2):
            pairs.add(frozenset(pq))
        return max(max_label, line[2])

    def remove(line: tuple[int, int, int]) -> None:
        lines.pop()
        for q in line:
            deg[q] -= 1
        for pq in combinations(line, 2):
            pairs.discard(frozenset(pq))

    def complete(p: int, need: int, max_label: int, lower) -> None:
        if need == 0:
            search(max_label)
            return
        for line in line_options(p, max_label, lower):
            new_max = add(line, max_label)
            complete(p, need - 1, new_max, line)
            remove(line)

    def search(max_label: int) -> None:
        if len(lines) > v:
            return
        # each remaining line introduces at most two unseen labels
        if 2 * (v - len(lines)) < v - max_label:
            return
        p = next((q for q in range(1, v + 1) if deg[q] < 3), None)
        if p is None:
            found.append(list(lines))
            return
        if p > max_label + 1:
            return
        complete(p, 3 - deg[p], max(max_label, p), None)

    search(7)

    reps: list[Configuration] = []
    buckets: dict[tuple, list[Configuration]] = {}
    for line_list in found:
        cfg = classify(geometry_from_lines([list(l) for l in line_list]))
        assert isinstance(cfg, Configuration), line_list
        geom = cfg.geometry
        meets = tuple(sorted(
            sum(1 for other in geom.lines if other is not line and set(other) & set(line))
            for line in geom.lines
        ))
        triples = triangle_line_index_triples(geom)
        per_line = [0] * geom.line_count
        for t in triples:
            for l in t:
                per_line[l] += 1
        key = (meets, len(triples), tuple(sorted(per_line)))
        if not any(are_isomorphic(cfg, seen) for seen in buckets.setdefault(key, [])):
            buckets[key].append(cfg)
            reps.append(cfg)

    _enum_cache[v] = tuple(reps)
    return list(reps)
