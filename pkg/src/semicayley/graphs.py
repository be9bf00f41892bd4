"""Immutable simple graphs and the constructors used throughout the package.

One-matching semi-Cayley graphs ``SC(G; R, L, {0})`` are indexed so that the
vertex ``(x, 1)`` sits at ``G.index(x)`` and ``(x, 2)`` at ``|G| + G.index(x)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .abelian import AbelianGroup, Element
from .errors import InvalidSpecError, PreconditionError


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``labels`` optionally maps each vertex to a ``(group element, side)`` pair.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels=None):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be a bijection onto the vertex set")
        self.labels = labels

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_automorphism(self, images) -> bool:
        """Whether the vertex map ``v -> images[v]`` preserves adjacency."""
        adj = self.adj
        for u, v in self.edges:
            if images[v] not in adj[images[u]]:
                return False
        return True

    def relabel(self, images) -> Graph:
        return Graph(self.n, [(images[u], images[v]) for u, v in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def to_edge_list(self) -> str:
        lines = [f"p graph {self.n} {self.num_edges}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            data["labels"] = [{"element": list(x), "side": side} for x, side in self.labels]
        return json.dumps(data)

    @classmethod
    def from_edge_list(cls, text: str) -> Graph:
        n = None
        edges = []
        for line in text.splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "p":
                n = int(parts[2])
            else:
                edges.append((int(parts[0]), int(parts[1])))
        if n is None:
            raise ValueError("missing 'p graph <n> <m>' header")
        return cls(n, edges)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        data = json.loads(text)
        labels = None
        if "labels" in data:
            labels = [(tuple(lab["element"]), lab["side"]) for lab in data["labels"]]
        return cls(data["n"], [tuple(e) for e in data["edges"]], labels)


@dataclass(frozen=True)
class ConnectionSpec:
    """Connection data ``(R, L, S)`` of a semi-Cayley graph over ``group``.

    ``S`` defaults to ``{identity}`` (the one-matching case). Validation runs
    on construction.
    """

    group: AbelianGroup
    R: frozenset[Element]
    L: frozenset[Element]
    S: frozenset[Element] = field(default=None)

    def __post_init__(self):
        G = self.group
        object.__setattr__(self, "R", frozenset(G.check(x) for x in self.R))
        object.__setattr__(self, "L", frozenset(G.check(x) for x in self.L))
        S = frozenset([G.identity]) if self.S is None else frozenset(G.check(x) for x in self.S)
        object.__setattr__(self, "S", S)
        for name, part in (("R", self.R), ("L", self.L)):
            if G.identity in part:
                raise InvalidSpecError(f"{name} contains the identity")
            if any(G.neg(x) not in part for x in part):
                raise InvalidSpecError(f"{name} is not inverse-closed")
        if not self.R and not self.L:
            raise InvalidSpecError("R and L are both empty")

    @classmethod
    def make(cls, group: AbelianGroup, R: Iterable, L: Iterable) -> ConnectionSpec:
        return cls(group, frozenset(tuple(x) for x in R), frozenset(tuple(x) for x in L))

    @property
    def one_matching(self) -> bool:
        return self.S == frozenset([self.group.identity])

    @cached_property
    def connected(self) -> bool:
        return len(self.group.generated_subgroup(self.R | self.L)) == self.group.order

    def swapped(self) -> ConnectionSpec:
        return ConnectionSpec(self.group, self.L, self.R, self.S)

    def format_set(self, part: frozenset[Element]) -> str:
        return "{" + ",".join(self.group.format_element(x) for x in sorted(part)) + "}"

    @property
    def key(self) -> tuple:
        """Sort key: group order, group factors, then R and L."""
        return (self.group.order, self.group.factors, sorted(self.R), sorted(self.L))

    def __str__(self):
        return f"SC({self.group.name}; {self.format_set(self.R)}, {self.format_set(self.L)})"


def build_sc_graph(spec: ConnectionSpec) -> Graph:
    """``SC(G; R, L, S)`` on ``2|G|`` vertices.

    Right edges ``(x,1)~(y,1)`` for ``y-x`` in R, left edges ``(x,2)~(y,2)``
    for ``y-x`` in L, spokes ``(x,1)~(y,2)`` for ``y-x`` in S.
    """
    G = spec.group
    n = G.order
    edges = []
    for x in G.elements:
        i = G.index(x)
        for r in spec.R:
            edges.append((i, G.index(G.add(x, r))))
        for l in spec.L:
            edges.append((n + i, n + G.index(G.add(x, l))))
        for s in spec.S:
            edges.append((i, n + G.index(G.add(x, s))))
    labels = [(x, 1) for x in G.elements] + [(x, 2) for x in G.elements]
    return Graph(2 * n, edges, labels)


def build_cayley(G: AbelianGroup, S: Iterable[Element]) -> Graph:
    S = frozenset(G.check(s) for s in S)
    if G.identity in S:
        raise InvalidSpecError("connection set contains the identity")
    if any(G.neg(s) not in S for s in S):
        raise InvalidSpecError("connection set is not inverse-closed")
    edges = [(G.index(x), G.index(G.add(x, s))) for x in G.elements for s in S]
    return Graph(G.order, edges, [(x, 1) for x in G.elements])


def build_gp(n: int, k: int) -> Graph:
    """Generalized Petersen graph ``GP(n, k)``: outer ``n``-cycle, inner step ``k``.

    Outer vertex ``i`` is ``i``, inner vertex ``i`` is ``n + i``. Note that GP
    is written with the outer-cycle length first; ``GP(k, 1)`` is the k-prism.
    """
    if n < 3 or not 1 <= k or 2 * k >= n:
        raise InvalidSpecError(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in graph.adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == graph.n


def quotient_matching_graph(graph: Graph) -> Graph:
    """Quotient of a labelled one-matching SC graph by its spoke matching.

    Blocks ``{(g,1), (g,2)}`` become vertex ``index(g)``; the result is
    ``Cay(G, R u L)``. Requires ``R`` and ``L`` disjoint.
    """
    if graph.labels is None:
        raise PreconditionError("quotient needs a labelled semi-Cayley graph")
    half = graph.n // 2
    pos = {lab: v for v, lab in enumerate(graph.labels)}
    block = {}
    for v, (x, side) in enumerate(graph.labels):
        block[v] = pos[(x, 1)]
        if pos[(x, 1)] >= half:
            raise PreconditionError("labels do not follow the side-1-first layout")
    right, left, edges = set(), set(), set()
    for u, v in graph.edges:
        su, sv = graph.labels[u][1], graph.labels[v][1]
        bu, bv = block[u], block[v]
        if bu == bv:
            if su == sv:
                raise PreconditionError("edge inside a block between same-side vertices")
            continue
        e = (min(bu, bv), max(bu, bv))
        if su != sv:
            raise PreconditionError("spoke set is not a one-matching")
        (right if su == 1 else left).add(e)
        edges.add(e)
    if right & left:
        raise PreconditionError("R and L intersect; quotient valency would drop")
    labels = [graph.labels[v][0] for v in range(half)]
    return Graph(half, sorted(edges), [(x, 1) for x in labels])
