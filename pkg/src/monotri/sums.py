"""Connected sums of configurations by the incidence switch.

Given configurations with equal parameters (s, t), pick an incident
point-line flag on each side and swap the two points between the two lines.
The result is a configuration on the disjoint point sets with both parameters
preserved and point/line counts added; no triangle of the sum mixes points
from both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .incidence import Configuration, classify, geometry_from_lines
from .triangles import enumerate_triangles


@dataclass(frozen=True)
class SumSpec:
    """Two summands plus the flag on each: point p1 on line l1 of ``left``,
    point p2 on line l2 of ``right`` (line indices 0-based)."""

    left: Configuration
    right: Configuration
    p1: int
    l1: int
    p2: int
    l2: int

    def __post_init__(self):
        if (self.left.s, self.left.t) != (self.right.s, self.right.t):
            raise ValueError(
                f"summands have different parameters: "
                f"({self.left.s},{self.left.t}) vs ({self.right.s},{self.right.t})"
            )
        if self.left.s < 2:
            # with s = 1 the switch just trades points between two lines that
            # never meet anything else: the "sum" falls apart into two pieces
            raise ValueError("connected sum needs point degree s >= 2")
        for which, config, p, l in (("left", self.left, self.p1, self.l1),
                                    ("right", self.right, self.p2, self.l2)):
            if not 0 <= l < config.line_count:
                raise ValueError(f"{which} line index {l} out of range")
            if p not in config.lines[l]:
                raise ValueError(f"{which} point {p} is not on line {l}")


@dataclass(frozen=True)
class ConnectedSum:
    """The summed configuration plus the origin partition of its points.

    Right-side points are relabeled by adding left.point_count; left lines
    keep their indices, right lines follow in order.
    """

    configuration: Configuration
    left_points: tuple[int, ...]
    right_points: tuple[int, ...]

    @property
    def partition(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.left_points, self.right_points)


def connected_sum(spec: SumSpec) -> ConnectedSum:
    """Perform the incidence switch described by ``spec``."""
    left, right = spec.left, spec.right
    offset = left.point_count
    lines = [list(line) for line in left.lines]
    lines += [[p + offset for p in line] for line in right.lines]
    moved_right = spec.p2 + offset

    l1_new = set(left.lines[spec.l1])
    l1_new.discard(spec.p1)
    l1_new.add(moved_right)
    lines[spec.l1] = sorted(l1_new)

    l2_global = left.line_count + spec.l2
    l2_new = {p + offset for p in right.lines[spec.l2]}
    l2_new.discard(moved_right)
    l2_new.add(spec.p1)
    lines[l2_global] = sorted(l2_new)

    geometry = geometry_from_lines(lines, point_count=offset + right.point_count)
    summed = classify(geometry)
    assert isinstance(summed, Configuration) and (summed.s, summed.t) == (left.s, left.t), (
        "the switch preserves every degree and line size"
    )
    return ConnectedSum(
        configuration=summed,
        left_points=tuple(range(1, offset + 1)),
        right_points=tuple(range(offset + 1, offset + right.point_count + 1)),
    )


def cross_triangle_count(summed, partition=None) -> int:
    """Number of triangles with points from both partition classes.

    Accepts a ConnectedSum directly, or a Configuration plus a
    (left_points, right_points) partition of its point labels.
    """
    if isinstance(summed, ConnectedSum):
        config = summed.configuration
        left, right = summed.partition
    else:
        config = summed
        if partition is None:
            raise ValueError("a partition is required for a bare configuration")
        left, right = partition
    left_set, right_set = set(left), set(right)
    if left_set & right_set or left_set | right_set != set(range(1, config.point_count + 1)):
        raise ValueError("not a partition of the configuration's points")
    crossing = 0
    for tri in enumerate_triangles(config):
        pts = set(tri.points)
        if pts & left_set and pts & right_set:
            crossing += 1
    return crossing


def enumerate_flag_sums(left: Configuration, right: Configuration):
    """Yield (spec, sum) over every choice of flags on both summands."""
    for l1, line1 in enumerate(left.lines):
        for p1 in line1:
            for l2, line2 in enumerate(right.lines):
                for p2 in line2:
                    spec = SumSpec(left, right, p1, l1, p2, l2)
                    yield spec, connected_sum(spec)
