"""Cores, rhombi, the inner/outer/key graphs, and pseudotours by halving.

On the square board of side 2(p + q) there are eight cores: four "forward"
and four "backward" squares of side q - p.  Rhombi are 4-cycles of leaper
moves joining corresponding cells of the four like-kind cores; their union
is the inner graph.  Six boundary pencils and their reflections form the
outer graph.  The key graph is the union of the two, and halving every
rhombus (keeping one of its two perfect matchings) turns it into a
pseudotour: a spanning subgraph in which every cell has degree two.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geom import (
    Cell,
    Edge,
    Leaper,
    PencilSpec,
    Subboard,
    REFLECTIONS,
    edge,
    expand_pencil,
    path_edges,
    reflect,
)


class ConstructionError(RuntimeError):
    """An internal structural invariant failed during graph construction."""


@dataclass(frozen=True)
class Cores:
    forward: tuple[Subboard, Subboard, Subboard, Subboard]
    backward: tuple[Subboard, Subboard, Subboard, Subboard]

    def all(self) -> tuple[Subboard, ...]:
        return self.forward + self.backward

    def membership(self, cell: Cell) -> int:
        """Number of cores containing the cell (0, 1, or 2)."""
        return sum(cell in c for c in self.all())


@dataclass(frozen=True)
class Rhombus:
    """A 4-cycle of leaper moves with cells in cyclic order a, b, c, d."""

    cells: tuple[Cell, Cell, Cell, Cell]
    kind: str  # "forward" or "backward"

    def edges(self) -> tuple[Edge, Edge, Edge, Edge]:
        a, b, c, d = self.cells
        return (edge(a, b), edge(b, c), edge(c, d), edge(d, a))

    def matching(self, bit: int) -> tuple[Edge, Edge]:
        """One of the two perfect matchings of the 4-cycle (opposite edges)."""
        a, b, c, d = self.cells
        if bit == 0:
            return (edge(a, b), edge(c, d))
        return (edge(b, c), edge(d, a))

    def cellset(self) -> frozenset[Cell]:
        return frozenset(self.cells)


@dataclass(frozen=True)
class KeyGraph:
    leaper: Leaper
    cores: Cores
    rhombi: tuple[Rhombus, ...]
    inner_edges: frozenset[Edge]
    outer_edges: frozenset[Edge]
    core_membership: dict  # Cell -> 0 | 1 | 2

    @property
    def edges(self) -> frozenset[Edge]:
        return self.inner_edges | self.outer_edges


@dataclass(frozen=True)
class TwoFactor:
    """A spanning degree-2 subgraph, stored with its cycle partition."""

    edges: frozenset[Edge]
    cycles: tuple[tuple[Cell, ...], ...]


def build_cores(leaper: Leaper) -> Cores:
    p, q = leaper.p, leaper.q
    forward = (
        Subboard(p, q, p, q),
        Subboard(p + q, 2 * q, 2 * p, p + q),
        Subboard(2 * p + q, p + 2 * q, 2 * p + q, p + 2 * q),
        Subboard(2 * p, p + q, p + q, 2 * q),
    )
    backward = (
        Subboard(2 * p, p + q, 2 * p, p + q),
        Subboard(2 * p + q, p + 2 * q, p, q),
        Subboard(p + q, 2 * q, p + q, 2 * q),
        Subboard(p, q, 2 * p + q, p + 2 * q),
    )
    return Cores(forward, backward)


def build_inner(leaper: Leaper) -> tuple[list[Rhombus], set[Edge]]:
    """All rhombi (as two pencils of closed 4-cycles) and their edge union."""
    p, q = leaper.p, leaper.q
    cores = build_cores(leaper)
    rhombi: list[Rhombus] = []
    for base, dirs, kind in (
        (cores.forward[0], ((q, p), (p, q), (-q, -p), (-p, -q)), "forward"),
        (cores.backward[0], ((q, -p), (-p, q), (-q, p), (p, -q)), "backward"),
    ):
        for path in expand_pencil(PencilSpec(base, dirs), leaper.side):
            if path[4] != path[0]:
                raise ConstructionError(f"rhombus pencil not closed at {path[0]}")
            rhombi.append(Rhombus(path[:4], kind))
    edges: set[Edge] = set()
    for r in rhombi:
        for e in r.edges():
            if e in edges:
                raise ConstructionError(f"two rhombi share the edge {e}")
            edges.add(e)
    return rhombi, edges


def _outer_pencils(leaper: Leaper) -> list[PencilSpec]:
    p, q = leaper.p, leaper.q
    return [
        PencilSpec(Subboard(0, p, 0, q), ((q, p),)),
        PencilSpec(Subboard(p, p + q, 0, p), ((-p, q),)),
        PencilSpec(Subboard(0, p, 0, p), ((p, q),)),
        PencilSpec(Subboard(q, p + q, 0, p), ((-q, p),)),
        PencilSpec(Subboard(p, q, 0, p), ((q, p),)),
        PencilSpec(Subboard(p, 2 * p, p, q), ((-p, q),)),
    ]


def build_outer(leaper: Leaper) -> set[Edge]:
    """Union of the six boundary pencils and all their reflections.

    Reflected pencils may coincide, so the union is set-deduplicated.
    """
    side = leaper.side
    edges: set[Edge] = set()
    for spec in _outer_pencils(leaper):
        base_edges = {e for path in expand_pencil(spec, side) for e in path_edges(path)}
        for which in REFLECTIONS:
            edges |= reflect(base_edges, side, which)
    return edges


def build_key(leaper: Leaper) -> KeyGraph:
    """Assemble and validate the key graph (inner union outer)."""
    side = leaper.side
    cores = build_cores(leaper)
    rhombi, inner = build_inner(leaper)
    outer = build_outer(leaper)

    if inner & outer:
        raise ConstructionError("inner and outer graphs share edges")

    p, q = leaper.p, leaper.q
    if len(rhombi) != 2 * (q - p) ** 2:
        raise ConstructionError(f"expected {2 * (q - p) ** 2} rhombi, got {len(rhombi)}")
    if len(inner) != 8 * (q - p) ** 2:
        raise ConstructionError(f"bad inner edge count {len(inner)}")
    if len(outer) != 16 * p * q:
        raise ConstructionError(f"expected {16 * p * q} outer edges, got {len(outer)}")

    membership = {}
    for x in range(side):
        for y in range(side):
            membership[(x, y)] = cores.membership((x, y))

    dirs = leaper.directions()
    deg_inner: dict[Cell, int] = defaultdict(int)
    deg_outer: dict[Cell, int] = defaultdict(int)
    for e, counter in [(inner, deg_inner), (outer, deg_outer)]:
        for a, b in e:
            if (b[0] - a[0], b[1] - a[1]) not in dirs:
                raise ConstructionError(f"illegal move {a}-{b}")
            counter[a] += 1
            counter[b] += 1
    for cell, e in membership.items():
        if deg_inner[cell] != 2 * e or deg_outer[cell] != 2 - e:
            raise ConstructionError(
                f"degree mismatch at {cell}: membership {e}, "
                f"inner {deg_inner[cell]}, outer {deg_outer[cell]}"
            )

    return KeyGraph(
        leaper=leaper,
        cores=cores,
        rhombi=tuple(rhombi),
        inner_edges=frozenset(inner),
        outer_edges=frozenset(outer),
        core_membership=membership,
    )


def cycle_partition(edges: Iterable[Edge]) -> tuple[tuple[Cell, ...], ...]:
    """Split a degree-2 edge set into canonical cyclic cell sequences.

    Each cycle starts at its lexicographically smallest cell and runs toward
    the lexicographically smaller of that cell's two neighbours.
    """
    adj: dict[Cell, list[Cell]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for cell, nbrs in adj.items():
        if len(nbrs) != 2:
            raise ConstructionError(f"cell {cell} has degree {len(nbrs)}, expected 2")

    cycles = []
    seen: set[Cell] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, b if a == prev else a
        cycles.append(tuple(cycle))
    return tuple(cycles)


def halve(key: KeyGraph, bits: Sequence[int]) -> TwoFactor:
    """Pseudotour from a per-rhombus matching choice (one bit per rhombus)."""
    if len(bits) != len(key.rhombi):
        raise ValueError(f"need {len(key.rhombi)} bits, got {len(bits)}")
    edges = set(key.outer_edges)
    for r, bit in zip(key.rhombi, bits):
        edges.update(r.matching(bit))
    cycles = cycle_partition(edges)
    total = sum(len(c) for c in cycles)
    if total != key.leaper.side ** 2:
        raise ConstructionError(f"two-factor covers {total} cells")
    return TwoFactor(edges=frozenset(edges), cycles=cycles)


def is_connected_edges(cells: Iterable[Cell], edges: Iterable[Edge]) -> bool:
    """Breadth-first reachability over an arbitrary vertex/edge set."""
    cells = set(cells)
    if not cells:
        return True
    adj: dict[Cell, list[Cell]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen == cells
