"""Automorphism groups of small graphs by individualization and refinement.

Colour refinement drives every vertex colouring to its coarsest equitable
refinement. The search then individualizes the first vertex of the first
non-singleton cell until the colouring is discrete, giving a first leaf.
Walking that first path bottom-up, for each level it looks for automorphisms
that fix the earlier base points and move the base point onto each other
vertex of its cell, skipping vertices already reached by the orbit of the
generators found so far. The generators found this way generate the whole
group (they form a strong generating set for the base).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import Graph
from .perm import Permutation, PermGroup

DEFAULT_MAX_VERTICES = 64


def max_vertices() -> int:
    return int(os.environ.get("SEMICAYLEY_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def _check_cap(graph: Graph):
    cap = max_vertices()
    if graph.n > cap:
        raise ResourceLimitError(f"graph has {graph.n} vertices, cap is {cap} (SEMICAYLEY_MAX_VERTICES)")


@dataclass(frozen=True)
class ColoredPartition:
    """Ordered partition of the vertices, stored as a cell index per vertex.

    Cell indices run ``0..k-1`` and their order is part of the partition.
    """

    colors: tuple[int, ...]

    @classmethod
    def unit(cls, n: int) -> ColoredPartition:
        return cls((0,) * n)

    @classmethod
    def from_cells(cls, n: int, cells) -> ColoredPartition:
        colors = [None] * n
        for i, cell in enumerate(cells):
            for v in cell:
                colors[v] = i
        if any(c is None for c in colors):
            raise ValueError("cells do not cover every vertex")
        return cls(tuple(colors))

    @property
    def cells(self) -> list[list[int]]:
        out = [[] for _ in range(max(self.colors, default=-1) + 1)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    @property
    def num_cells(self) -> int:
        return len(set(self.colors))

    def is_discrete(self) -> bool:
        return self.num_cells == len(self.colors)

    def is_equitable(self, graph: Graph) -> bool:
        k = self.num_cells
        for cell in self.cells:
            counts = None
            for v in cell:
                row = [0] * k
                for u in graph.adj[v]:
                    row[self.colors[u]] += 1
                if counts is None:
                    counts = row
                elif row != counts:
                    return False
        return True


def _refine(adj, colors: list[int]):
    """Colour refinement. Returns the stable colouring and its quotient signature.

    New colours are ranked by ``(old colour, sorted neighbour colours)`` so the
    result depends only on the isomorphism type of (graph, colouring).
    """
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(len(adj))]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            return colors, tuple(uniq)
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        k = len(uniq)


def refine(graph: Graph, partition: ColoredPartition | None = None) -> ColoredPartition:
    """Coarsest equitable refinement of ``partition`` (unit partition by default)."""
    if partition is None:
        partition = ColoredPartition.unit(graph.n)
    colors = list(partition.colors)
    # normalise arbitrary labels to 0..k-1 keeping their order
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors, _ = _refine(graph.adj, [rank[c] for c in colors])
    return ColoredPartition(tuple(colors))


def _individualize(colors: list[int], v: int) -> list[int]:
    # v goes in front of the rest of its cell; every later cell shifts by one
    cv = colors[v]
    out = [c + 1 if c > cv else c for c in colors]
    for u, c in enumerate(colors):
        if c == cv and u != v:
            out[u] = cv + 1
    return out


def _target_cell(colors: list[int]) -> tuple[int, list[int]] | None:
    size: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        size.setdefault(c, []).append(v)
    for c in sorted(size):
        if len(size[c]) > 1:
            return c, size[c]
    return None


@dataclass
class _Node:
    colors: list[int]
    signature: tuple
    cell_color: int | None
    cell: list[int] | None
    chosen: int | None


def _first_path(adj, colors: list[int]) -> list[_Node]:
    colors, sig = _refine(adj, colors)
    path = []
    while True:
        tgt = _target_cell(colors)
        if tgt is None:
            path.append(_Node(colors, sig, None, None, None))
            return path
        c, cell = tgt
        v = cell[0]
        path.append(_Node(colors, sig, c, cell, v))
        colors, sig = _refine(adj, _individualize(colors, v))


def _leaf_map(leaf_from: list[int], leaf_to: list[int]) -> tuple[int, ...]:
    pos = [0] * len(leaf_to)
    for v, c in enumerate(leaf_to):
        pos[c] = v
    return tuple(pos[c] for c in leaf_from)


def _search_leaf(adj, path: list[_Node], depth: int, colors: list[int], check):
    """DFS below a node at ``depth`` whose colouring is ``colors`` (already refined).

    Visits only nodes whose signature and target cell agree with the first
    path at the same depth. Returns the first leaf colouring accepted by
    ``check``, or None.
    """
    ref = path[depth]
    if ref.cell_color is None:
        return colors if check(colors) else None
    tgt = _target_cell(colors)
    if tgt is None or tgt[0] != ref.cell_color or len(tgt[1]) != len(ref.cell):
        return None
    for w in tgt[1]:
        child, sig = _refine(adj, _individualize(colors, w))
        if sig != path[depth + 1].signature:
            continue
        found = _search_leaf(adj, path, depth + 1, child, check)
        if found is not None:
            return found
    return None


def _orbit(point: int, gens: list[tuple[int, ...]]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_generators(graph: Graph, initial: ColoredPartition | None = None) -> list[Permutation]:
    """Generators of the colour-preserving automorphism group of ``graph``."""
    _check_cap(graph)
    adj = graph.adj
    n = graph.n
    colors0 = list(initial.colors) if initial is not None else [0] * n
    path = _first_path(adj, colors0)
    leaf0 = path[-1].colors

    def is_aut(leaf):
        images = _leaf_map(leaf0, leaf)
        if graph.is_automorphism(images):
            return images
        return None

    gens: list[tuple[int, ...]] = []
    for depth in range(len(path) - 2, -1, -1):
        node = path[depth]
        b = node.chosen
        orbit = _orbit(b, gens)
        for w in node.cell:
            if w in orbit:
                continue
            child, sig = _refine(adj, _individualize(node.colors, w))
            if sig != path[depth + 1].signature:
                continue
            found = {}

            def check(leaf):
                images = is_aut(leaf)
                if images is not None:
                    found["g"] = images
                    return True
                return False

            if _search_leaf(adj, path, depth + 1, child, check) is not None:
                gens.append(found["g"])
                orbit = _orbit(b, gens)
    return [Permutation(g) for g in gens]


def automorphism_group(graph: Graph) -> PermGroup:
    """Full automorphism group of ``graph`` as a :class:`PermGroup`."""
    return PermGroup(graph.n, automorphism_generators(graph))


def find_isomorphism(g1: Graph, g2: Graph) -> tuple[int, ...] | None:
    """A vertex map ``v -> images[v]`` carrying ``g1`` onto ``g2``, or None.

    Runs the first-path search on ``g1`` and an exhaustive matched search on
    ``g2``, pruned by the same refinement signatures.
    """
    _check_cap(g1)
    _check_cap(g2)
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    path = _first_path(g1.adj, [0] * g1.n)
    colors2, sig2 = _refine(g2.adj, [0] * g2.n)
    if sig2 != path[0].signature:
        return None
    leaf0 = path[-1].colors
    found = {}

    def check(leaf):
        images = _leaf_map(leaf0, leaf)
        if all(images[v] in g2.adj[images[u]] for u, v in g1.edges):
            found["map"] = images
            return True
        return False

    if _search_leaf(g2.adj, path, 0, colors2, check) is None:
        return None
    return found["map"]


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def _orbit_count(items, act, gens) -> int:
    items = list(items)
    if not items:
        return 0
    index = {x: i for i, x in enumerate(items)}
    seen = [False] * len(items)
    count = 0
    for start in range(len(items)):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        stack = [items[start]]
        while stack:
            x = stack.pop()
            for g in gens:
                y = act(x, g)
                j = index[y]
                if not seen[j]:
                    seen[j] = True
                    stack.append(y)
    return count


def vertex_orbits(graph: Graph, group: PermGroup | None = None) -> list[list[int]]:
    group = group or automorphism_group(graph)
    return group.orbits()


def is_vertex_transitive(graph: Graph, group: PermGroup | None = None) -> bool:
    return len(vertex_orbits(graph, group)) == 1


def is_edge_transitive(graph: Graph, group: PermGroup | None = None) -> bool:
    group = group or automorphism_group(graph)
    gens = [g.images for g in group.generators]
    edges = [frozenset(e) for e in graph.edges]

    def act(e, g):
        u, v = tuple(e)
        return frozenset((g[u], g[v]))

    return _orbit_count(edges, act, gens) == 1


def is_arc_transitive(graph: Graph, group: PermGroup | None = None) -> bool:
    group = group or automorphism_group(graph)
    gens = [g.images for g in group.generators]
    arcs = [(u, v) for u, v in graph.edges] + [(v, u) for u, v in graph.edges]
    return _orbit_count(arcs, lambda a, g: (g[a[0]], g[a[1]]), gens) == 1

