"""Planar link diagram codes.

A diagram is a list of crossings ``X(a,b,c,d)`` plus an optional count
of crossing-free circles ``O k``. The four labels of a crossing name
the edge ends met counterclockwise starting from an incoming under
strand, so slots 0 and 2 carry the under strand and slots 1 and 3 the
over strand. Each edge label appears exactly twice across the whole
code.

``trace_regions`` recovers the complementary regions of the underlying
curve. The code fixes the surface combinatorics but not the embedding,
so the choice of unbounded region is a convention: within each
connected piece of the diagram the face containing the slot-2 side of
its lowest-numbered crossing faces outward, and those outward faces
are merged into the single unbounded region.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "NonPlanarError",
    "RegionMap",
    "parse_diagram",
    "relabel_edges",
    "serialize_diagram",
    "trace_regions",
    "underlying_components",
    "disjoint_union",
]


class DiagramError(ValueError):
    """The text or structure does not describe a valid diagram code."""


class NonPlanarError(DiagramError):
    """The code is combinatorially consistent but admits no planar drawing."""


@dataclass(frozen=True)
class Crossing:
    """Four edge labels, counterclockwise from an incoming under strand."""

    slots: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.slots) != 4:
            raise DiagramError("a crossing takes exactly four labels")
        for v in self.slots:
            if not isinstance(v, int) or v < 1:
                raise DiagramError(f"edge labels are positive integers, got {v!r}")


@dataclass(frozen=True)
class Diagram:
    """A crossing list plus free circles; the unit of every computation here."""

    crossings: tuple[Crossing, ...]
    free_circles: int = 0

    def __post_init__(self) -> None:
        if self.free_circles < 0:
            raise DiagramError("negative circle count")
        if not self.crossings and self.free_circles == 0:
            raise DiagramError("empty diagram: no crossings and no circles")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for v in c.slots:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(f"each edge label must occur exactly twice; offenders: {bad}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def edge_labels(self) -> tuple[int, ...]:
        seen = set()
        for c in self.crossings:
            seen.update(c.slots)
        return tuple(sorted(seen))


_TOKEN_X = re.compile(r"[Xx]\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\Z")
_TOKEN_O = re.compile(r"[Oo]\s*(\d+)\Z")


def parse_diagram(text: str) -> Diagram:
    """Parse a diagram code.

    Items are separated by semicolons or newlines; ``#`` starts a
    comment running to end of line. At most one ``O`` item is allowed.
    """
    items: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        items.extend(part.strip() for part in line.split(";"))
    crossings: list[Crossing] = []
    circles: int | None = None
    for item in items:
        if not item:
            continue
        m = _TOKEN_X.match(item)
        if m:
            crossings.append(Crossing(tuple(int(g) for g in m.groups())))
            continue
        m = _TOKEN_O.match(item)
        if m:
            if circles is not None:
                raise DiagramError("at most one O item per code")
            circles = int(m.group(1))
            if circles < 1:
                raise DiagramError("circle count must be positive")
            continue
        raise DiagramError(f"unrecognized item: {item!r}")
    return Diagram(tuple(crossings), circles or 0)


def serialize_diagram(d: Diagram) -> str:
    parts = ["X({},{},{},{})".format(*c.slots) for c in d.crossings]
    if d.free_circles:
        parts.append(f"O {d.free_circles}")
    return ";".join(parts)


def _mate_table(d: Diagram) -> dict[tuple[int, int], tuple[int, int]]:
    """Pair each dart (crossing, slot) with the other end of its edge."""
    holders: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for t, v in enumerate(c.slots):
            holders.setdefault(v, []).append((ci, t))
    mate: dict[tuple[int, int], tuple[int, int]] = {}
    for ends in holders.values():
        a, b = ends
        mate[a] = b
        mate[b] = a
    return mate


def underlying_components(d: Diagram) -> tuple[tuple[int, ...], ...]:
    """Crossing indices grouped by connectivity of the underlying curve,
    each group ascending, groups ordered by their smallest member.
    Free circles are not included; they never touch a crossing."""
    n = d.crossing_count
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owners: dict[int, int] = {}
    for ci, c in enumerate(d.crossings):
        for v in c.slots:
            if v in owners:
                ra, rb = find(owners[v]), find(ci)
                if ra != rb:
                    parent[rb] = ra
            else:
                owners[v] = ci
    groups: dict[int, list[int]] = {}
    for ci in range(n):
        groups.setdefault(find(ci), []).append(ci)
    return tuple(tuple(g) for g in sorted(groups.values(), key=lambda g: g[0]))


@dataclass(frozen=True)
class RegionMap:
    """Complementary regions of a diagram.

    ``quadrant_region[c][q]`` is the region seen from crossing c between
    slots q and q+1 (mod 4). ``circle_regions`` lists the region id
    inside each free circle. Region ids are dense from 0 and
    ``unbounded_region`` is always 0.
    """

    region_count: int
    quadrant_region: tuple[tuple[int, int, int, int], ...]
    circle_regions: tuple[int, ...]
    unbounded_region: int = 0

    def quadrants_of(self, region: int):
        """All (crossing, quadrant) pairs bordering the given region."""
        return tuple(
            (c, q)
            for c, quads in enumerate(self.quadrant_region)
            for q, r in enumerate(quads)
            if r == region
        )


def trace_regions(d: Diagram) -> RegionMap:
    """Compute the complementary regions by walking face boundaries.

    Standing on a dart, the face on the counterclockwise side continues
    through the mate dart's quadrant and departs from the next slot
    around. Each connected piece must close up into exactly
    ``crossings + 2`` faces; any shortfall means the code only embeds in
    a higher-genus surface and raises NonPlanarError.
    """
    comps = underlying_components(d)
    mate = _mate_table(d)
    quad_face = [[-1, -1, -1, -1] for _ in range(d.crossing_count)]
    n_faces = 0
    for comp in comps:
        comp_set = set(comp)
        comp_faces = 0
        for c0 in comp:
            for q0 in range(4):
                if quad_face[c0][q0] != -1:
                    continue
                face = n_faces + comp_faces
                comp_faces += 1
                # The face holding quadrant (c0, q0) lies to the left
                # when departing along slot q0+1, so start there; the
                # walk closes by assigning (c0, q0) itself last.
                dart = (c0, (q0 + 1) % 4)
                while True:
                    mc, mt = mate[dart]
                    if quad_face[mc][mt] != -1:
                        break
                    quad_face[mc][mt] = face
                    dart = (mc, (mt + 1) % 4)
        if comp_faces != len(comp_set) + 2:
            raise NonPlanarError(
                f"component at crossing {comp[0]} traces {comp_faces} faces, "
                f"needs {len(comp_set) + 2} for a planar embedding")
        n_faces += comp_faces

    # Merge the outward face of every component into one unbounded
    # region, then renumber densely keeping the remaining faces in
    # first-seen order.
    outer_faces = {quad_face[comp[0]][2] for comp in comps}
    remap: dict[int, int] = {}
    for f in sorted(outer_faces):
        remap[f] = 0
    nxt = 1
    for c in range(d.crossing_count):
        for q in range(4):
            f = quad_face[c][q]
            if f not in remap:
                remap[f] = nxt
                nxt += 1
    quadrant_region = tuple(
        tuple(remap[f] for f in quad_face[c]) for c in range(d.crossing_count))
    # With no crossings nxt is still 1: region 0 is everything outside
    # the circles, and each circle interior gets its own region.
    circle_regions = []
    for _ in range(d.free_circles):
        circle_regions.append(nxt)
        nxt += 1
    return RegionMap(
        region_count=nxt,
        quadrant_region=quadrant_region,
        circle_regions=tuple(circle_regions),
    )


def relabel_edges(d: Diagram, mapping: dict[int, int]) -> Diagram:
    """Rename edge labels; labels missing from the mapping stay put."""
    return Diagram(
        tuple(Crossing(tuple(mapping.get(v, v) for v in c.slots)) for c in d.crossings),
        d.free_circles,
    )


def disjoint_union(a: Diagram, b: Diagram) -> Diagram:
    """Place two diagrams side by side, shifting b's labels clear of a's."""
    shift = max(a.edge_labels(), default=0)
    moved = relabel_edges(b, {v: v + shift for v in b.edge_labels()})
    return Diagram(a.crossings + moved.crossings, a.free_circles + b.free_circles)
