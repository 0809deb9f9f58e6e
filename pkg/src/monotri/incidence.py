"""Incidence geometries and configurations of points and lines.

Points are 1-based integer labels; lines are sets of point labels stored in
sorted order.  A geometry is *linear*: two distinct points lie on at most one
common line.  A configuration is a linear geometry in which every point lies
on the same number of lines (``s``), every line carries the same number of
points (``t``), and there are at least three points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GeometryError


@dataclass(frozen=True)
class IncidenceGeometry:
    """A finite linear incidence geometry.

    ``point_count`` is the number of points, labeled 1..point_count.  ``lines``
    keeps the input order; each line is a sorted tuple of point labels.
    """

    point_count: int
    lines: tuple[tuple[int, ...], ...]

    @property
    def line_count(self) -> int:
        return len(self.lines)

    def point_degrees(self) -> dict[int, int]:
        """Number of lines through each point (0 for isolated labels)."""
        deg = {p: 0 for p in range(1, self.point_count + 1)}
        for line in self.lines:
            for p in line:
                deg[p] += 1
        return deg

    def pair_to_line(self) -> dict[tuple[int, int], int]:
        """Map each collinear point pair (p, q), p < q, to its line index."""
        table: dict[tuple[int, int], int] = {}
        for idx, line in enumerate(self.lines):
            for i in range(len(line)):
                for j in range(i + 1, len(line)):
                    table[(line[i], line[j])] = idx
        return table

    def lines_through(self, point: int) -> tuple[int, ...]:
        return tuple(i for i, line in enumerate(self.lines) if point in line)


@dataclass(frozen=True)
class Configuration:
    """A geometry with uniform point degree ``s`` and line size ``t``."""

    geometry: IncidenceGeometry
    s: int
    t: int

    @property
    def point_count(self) -> int:
        return self.geometry.point_count

    @property
    def lines(self) -> tuple[tuple[int, ...], ...]:
        return self.geometry.lines

    @property
    def line_count(self) -> int:
        return self.geometry.line_count

    def is_symmetric_v3(self) -> bool:
        """True for the (v_3) case: s = t = 3 with equal point and line counts."""
        return self.s == 3 and self.t == 3 and self.line_count == self.point_count


@dataclass(frozen=True)
class ClassifyDiagnostic:
    """Why a geometry is not a configuration; a normal return of classify()."""

    reason: str
    nonuniform_points: dict[int, int] = field(default_factory=dict)
    nonuniform_lines: dict[int, int] = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [self.reason]
        if self.nonuniform_points:
            deg = ", ".join(f"point {p}: degree {d}" for p, d in sorted(self.nonuniform_points.items()))
            parts.append(deg)
        if self.nonuniform_lines:
            siz = ", ".join(f"line {i}: size {n}" for i, n in sorted(self.nonuniform_lines.items()))
            parts.append(siz)
        return "; ".join(parts)


@dataclass(frozen=True)
class Graph:
    """A small deterministic undirected graph (sorted vertex and edge tuples)."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def geometry_from_lines(lines, point_count: int | None = None) -> IncidenceGeometry:
    """Build and validate a geometry from an iterable of point collections.

    Raises GeometryError on a duplicated point within a line, a repeated line,
    or a point pair appearing on two lines.
    """
    normalized: list[tuple[int, ...]] = []
    for idx, raw in enumerate(lines):
        members = list(raw)
        if len(members) < 2:
            raise GeometryError(f"line {idx} has fewer than 2 points", idx)
        for p in members:
            if not isinstance(p, int) or p < 1:
                raise GeometryError(f"line {idx} contains invalid point label {p!r}", idx)
        if len(set(members)) != len(members):
            raise GeometryError(f"line {idx} repeats a point: {sorted(members)}", idx)
        normalized.append(tuple(sorted(members)))

    if not normalized:
        raise GeometryError("no lines given")

    seen_lines: dict[tuple[int, ...], int] = {}
    seen_pairs: dict[tuple[int, int], int] = {}
    for idx, line in enumerate(normalized):
        if line in seen_lines:
            raise GeometryError(
                f"line {idx} duplicates line {seen_lines[line]}: {list(line)}", idx
            )
        seen_lines[line] = idx
        for i in range(len(line)):
            for j in range(i + 1, len(line)):
                pair = (line[i], line[j])
                if pair in seen_pairs:
                    raise GeometryError(
                        f"points {pair[0]},{pair[1]} lie on both line "
                        f"{seen_pairs[pair]} and line {idx}",
                        idx,
                    )
                seen_pairs[pair] = idx

    max_label = max(p for line in normalized for p in line)
    if point_count is None:
        point_count = max_label
    elif point_count < max_label:
        raise GeometryError(f"point_count {point_count} below largest label {max_label}")
    return IncidenceGeometry(point_count, tuple(normalized))


_BRACE_TOKEN = re.compile(r"\{|\}|,|\d+|\S")


def _parse_brace(text: str) -> list[list[int]]:
    tokens = _BRACE_TOKEN.findall(text)
    pos = 0

    def expect(tok: str):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise GeometryError(f"expected {tok!r}, found {got!r}")
        pos += 1

    lines: list[list[int]] = []
    expect("{")
    while True:
        expect("{")
        members: list[int] = []
        while True:
            if pos >= len(tokens) or not tokens[pos].isdigit():
                got = tokens[pos] if pos < len(tokens) else "end of input"
                raise GeometryError(f"expected point label, found {got!r}", len(lines))
            members.append(int(tokens[pos]))
            pos += 1
            if pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                continue
            break
        expect("}")
        lines.append(members)
        if pos < len(tokens) and tokens[pos] == ",":
            pos += 1
            continue
        break
    expect("}")
    if pos != len(tokens):
        raise GeometryError(f"trailing input after closing brace: {tokens[pos]!r}")
    return lines


def _parse_plain(text: str) -> list[list[int]]:
    lines: list[list[int]] = []
    for lineno, row in enumerate(text.splitlines(), start=1):
        row = row.split("#", 1)[0].strip()
        if not row:
            continue
        members = []
        for token in row.split():
            if not token.isdigit():
                raise GeometryError(f"row {lineno}: invalid point label {token!r}", len(lines))
            members.append(int(token))
        lines.append(members)
    if not lines:
        raise GeometryError("no lines found in input")
    return lines


def parse_configuration(text: str) -> IncidenceGeometry:
    """Parse a geometry from brace format ``{{1,2,3},{3,4,5},...}`` or from
    plain format (one line per row, space-separated labels).  ``#`` starts a
    comment that runs to end of line in either format.

    Whitespace is insignificant in brace format.  The returned geometry uses
    the labels as given, with point_count equal to the largest label.
    """
    uncommented = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    stripped = uncommented.strip()
    if not stripped:
        raise GeometryError("empty input")
    if stripped.startswith("{"):
        rows = _parse_brace(stripped)
    else:
        rows = _parse_plain(text)
    return geometry_from_lines(rows)


def serialize_braces(geometry: IncidenceGeometry) -> str:
    """Brace-format serialization: sorted labels within lines, input line order."""
    return "{" + ",".join("{" + ",".join(map(str, line)) + "}" for line in geometry.lines) + "}"


def serialize_plain(geometry: IncidenceGeometry) -> str:
    """Plain-format serialization, one line per row."""
    return "\n".join(" ".join(map(str, line)) for line in geometry.lines) + "\n"


def classify(geometry: IncidenceGeometry) -> Configuration | ClassifyDiagnostic:
    """Classify a geometry as a configuration, or explain why it is not one.

    Returns a Configuration when point degrees and line sizes are uniform and
    there are at least three points; otherwise returns a ClassifyDiagnostic
    listing every nonuniform point and line.
    """
    degrees = geometry.point_degrees()
    sizes = {i: len(line) for i, line in enumerate(geometry.lines)}

    deg_values = sorted(set(degrees.values()))
    size_values = sorted(set(sizes.values()))
    if len(deg_values) > 1 or len(size_values) > 1:
        from collections import Counter

        deg_mode = Counter(degrees.values()).most_common(1)[0][0]
        size_mode = Counter(sizes.values()).most_common(1)[0][0]
        return ClassifyDiagnostic(
            reason="nonuniform incidence counts",
            nonuniform_points={p: d for p, d in degrees.items() if d != deg_mode},
            nonuniform_lines={i: n for i, n in sizes.items() if n != size_mode},
        )
    if geometry.point_count < 3:
        return ClassifyDiagnostic(reason=f"only {geometry.point_count} points (need at least 3)")
    return Configuration(geometry, s=deg_values[0], t=size_values[0])


def as_geometry(obj: Configuration | IncidenceGeometry) -> IncidenceGeometry:
    """Accept either a configuration or a bare geometry."""
    return obj.geometry if isinstance(obj, Configuration) else obj


def menger_graph(config: Configuration | IncidenceGeometry) -> Graph:
    """The graph on the points with an edge for every collinear pair."""
    geom = as_geometry(config)
    edges = sorted(geom.pair_to_line().keys())
    return Graph(tuple(range(1, geom.point_count + 1)), tuple(edges))


def line_intersection_graph(config: Configuration | IncidenceGeometry) -> Graph:
    """The graph on 0-based line indices with an edge where two lines meet.

    Two lines of a linear geometry share at most one point; this is asserted
    during construction.
    """
    geom = as_geometry(config)
    sets = [frozenset(line) for line in geom.lines]
    edges = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            shared = sets[i] & sets[j]
            assert len(shared) <= 1, f"lines {i},{j} share {len(shared)} points"
            if shared:
                edges.append((i, j))
    return Graph(tuple(range(len(sets))), tuple(edges))
