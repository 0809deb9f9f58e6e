"""Triangle enumeration for incidence geometries.

Three points form a triangle when each pair lies on a common line and each of
those three lines misses the remaining point.  By linearity the three lines
are uniquely determined, so a triangle can equivalently be given as its point
triple or its line triple; both enumerations below are kept independent so
they can cross-check each other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .incidence import Configuration, IncidenceGeometry, as_geometry


@dataclass(frozen=True)
class Triangle:
    """A configuration triangle: sorted point triple plus its sorted line triple."""

    points: tuple[int, int, int]
    lines: tuple[int, int, int]


def enumerate_triangles(config: Configuration | IncidenceGeometry) -> list[Triangle]:
    """All triangles, sorted by point triple.

    Iterates point triples and tests pairwise collinearity against a
    precomputed pair-to-line map.  Output order is deterministic.
    """
    geom = as_geometry(config)
    pair_line = geom.pair_to_line()
    out: list[Triangle] = []
    for p1, p2, p3 in combinations(range(1, geom.point_count + 1), 3):
        l3 = pair_line.get((p1, p2))
        if l3 is None:
            continue
        l1 = pair_line.get((p2, p3))
        if l1 is None:
            continue
        l2 = pair_line.get((p1, p3))
        if l2 is None:
            continue
        if l1 == l2 or l1 == l3 or l2 == l3:
            # two pairs on one line means the triple is collinear
            continue
        # each line must miss the opposite point
        assert p3 not in geom.lines[l3] and p1 not in geom.lines[l1] and p2 not in geom.lines[l2]
        out.append(Triangle((p1, p2, p3), tuple(sorted((l1, l2, l3)))))
    return out


def triangles_by_line_triples(config: Configuration | IncidenceGeometry) -> list[tuple[int, int, int]]:
    """All line-index triples that pairwise meet in three distinct points.

    Enumerated directly over line triples, independently of
    enumerate_triangles; the two outputs are in bijection.
    """
    geom = as_geometry(config)
    sets = [frozenset(line) for line in geom.lines]
    out: list[tuple[int, int, int]] = []
    for i, j, k in combinations(range(len(sets)), 3):
        ij = sets[i] & sets[j]
        if not ij:
            continue
        jk = sets[j] & sets[k]
        if not jk:
            continue
        ik = sets[i] & sets[k]
        if not ik:
            continue
        corners = ij | jk | ik
        if len(corners) == 3:
            out.append((i, j, k))
    return out


def triangle_line_index_triples(config: Configuration | IncidenceGeometry) -> list[tuple[int, int, int]]:
    """Line triples of enumerate_triangles output, in its order.

    This is the form the coloring searches consume.
    """
    return [t.lines for t in enumerate_triangles(config)]


def triangles_to_text(triangles: list[Triangle]) -> str:
    """One triangle per row: ``p1 p2 p3 | li lj lk``."""
    rows = []
    for t in triangles:
        rows.append(" ".join(map(str, t.points)) + " | " + " ".join(map(str, t.lines)))
    return "\n".join(rows) + ("\n" if rows else "")


def triangles_to_json(triangles: list[Triangle]) -> str:
    """JSON array form: objects with ``points`` and ``lines`` arrays."""
    return json.dumps(
        [{"points": list(t.points), "lines": list(t.lines)} for t in triangles],
        indent=2,
    )
