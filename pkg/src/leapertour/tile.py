"""Extending a base tour to boards tiled by 2(p+q)-sided subboards.

Copies of the base tour are placed in a checkerboard of translated and
90-degree-rotated orientations.  Side-adjacent copies always admit a
"switch": a pair of tour edges ab and cd (one per copy) such that bc and
da are also legal moves.  Flipping the switches along a spanning tree of
the subboard grid splices all copies into one Hamiltonian tour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .geom import Cell, Edge, Leaper, edge
from .keygraph import ConstructionError, cycle_partition
from .splice import CycleTracker, Tour


@dataclass(frozen=True)
class Switch:
    """Tour edges (a, b) and (c, d) whose crosswise pairs bc and da are
    legal leaper moves."""

    a: Cell
    b: Cell
    c: Cell
    d: Cell

    def old_edges(self) -> tuple[Edge, Edge]:
        return (edge(self.a, self.b), edge(self.c, self.d))

    def new_edges(self) -> tuple[Edge, Edge]:
        return (edge(self.b, self.c), edge(self.d, self.a))


def rotate_cell_ccw(cell: Cell, side: int) -> Cell:
    """Rotate 90 degrees counterclockwise about the subboard center."""
    return (side - 1 - cell[1], cell[0])


def rotate_edges_ccw(edges: Iterable[Edge], side: int) -> frozenset[Edge]:
    return frozenset(
        edge(rotate_cell_ccw(a, side), rotate_cell_ccw(b, side)) for a, b in edges
    )


def translate_edges(edges: Iterable[Edge], dx: int, dy: int) -> frozenset[Edge]:
    return frozenset(
        edge((a[0] + dx, a[1] + dy), (b[0] + dx, b[1] + dy)) for a, b in edges
    )


def switch_candidates(
    edges_a: frozenset[Edge], edges_b: frozenset[Edge], leaper: Leaper
) -> Iterator[Switch]:
    """All switches between two placed copies, in a canonical scan order.

    Only edges within one move's reach of each other can pair up, so both
    edge sets are pre-filtered by bounding-box distance.
    """
    moves = leaper.directions()
    q = leaper.q

    def near(e1: Edge, e2: Edge) -> bool:
        xs1 = (e1[0][0], e1[1][0])
        xs2 = (e2[0][0], e2[1][0])
        ys1 = (e1[0][1], e1[1][1])
        ys2 = (e2[0][1], e2[1][1])
        return (
            min(xs2) - max(xs1) <= q
            and min(xs1) - max(xs2) <= q
            and min(ys2) - max(ys1) <= q
            and min(ys1) - max(ys2) <= q
        )

    for ea in sorted(edges_a):
        for eb in sorted(edges_b):
            if not near(ea, eb):
                continue
            for a, b in (ea, (ea[1], ea[0])):
                for c, d in (eb, (eb[1], eb[0])):
                    bc = (c[0] - b[0], c[1] - b[1])
                    da = (a[0] - d[0], a[1] - d[1])
                    if bc in moves and da in moves:
                        yield Switch(a, b, c, d)


def find_switch(
    edges_a: frozenset[Edge],
    edges_b: frozenset[Edge],
    leaper: Leaper,
    avoid: frozenset[Edge] = frozenset(),
) -> Switch:
    """First canonical switch whose four edges avoid the given edge set."""
    for sw in switch_candidates(edges_a, edges_b, leaper):
        touched = set(sw.old_edges()) | set(sw.new_edges())
        if not touched & avoid:
            return sw
    raise ConstructionError("no switch found between adjacent copies")


def tile(leaper: Leaper, k: int, l: int, base: Tour) -> Tour:
    """Hamiltonian tour on the 2(p+q)k x 2(p+q)l board built from k*l
    checkerboarded copies of the base tour spliced along a comb tree."""
    if k < 1 or l < 1:
        raise ValueError(f"tile grid must be at least 1x1, got {k}x{l}")
    side = leaper.side
    if len(base.cells) != side * side:
        raise ValueError(f"base tour has {len(base.cells)} cells, expected {side * side}")
    if k == 1 and l == 1:
        return base

    base_edges = base.edge_set()
    rotated = rotate_edges_ccw(base_edges, side)

    placed: dict[tuple[int, int], frozenset[Edge]] = {}
    for i in range(k):
        for j in range(l):
            source = base_edges if (i + j) % 2 == 0 else rotated
            placed[(i, j)] = translate_edges(source, i * side, j * side)

    all_edges: set[Edge] = set()
    for e in placed.values():
        all_edges |= e

    # Comb spanning tree: every row left to right, rows joined in column 0.
    tree = [((i, j), (i + 1, j)) for j in range(l) for i in range(k - 1)]
    tree += [((0, j), (0, j + 1)) for j in range(l - 1)]

    width, height = k * side, l * side
    tracker = CycleTracker((x, y) for x in range(width) for y in range(height))
    for a, b in all_edges:
        tracker.union(a, b)

    used: set[Edge] = set()
    for sub_a, sub_b in tree:
        sw = find_switch(placed[sub_a], placed[sub_b], leaper, avoid=frozenset(used))
        old1, old2 = sw.old_edges()
        if tracker.find(old1[0]) == tracker.find(old2[0]):
            raise ConstructionError(f"switch {sw} does not merge two cycles")
        all_edges.difference_update(sw.old_edges())
        all_edges.update(sw.new_edges())
        used.update(sw.old_edges())
        used.update(sw.new_edges())
        for a, b in sw.new_edges():
            tracker.union(a, b)

    cycles = cycle_partition(all_edges)
    if len(cycles) != 1 or len(cycles[0]) != width * height:
        raise ConstructionError(f"tiling left {len(cycles)} cycles")
    return Tour(cells=cycles[0])
