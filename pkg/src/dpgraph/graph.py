"""Immutable simple undirected graphs over dense vertex indices.

Adjacency is stored as one int bitset per vertex, so neighbourhood,
clique and subset tests are plain integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from ._bits import iter_bits, mask_of


class GraphError(ValueError):
    """Invalid graph input or violated precondition."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that require a connected graph."""


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``0..n-1`` for a graph of order ``n``."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"vertex set {self.mask:#b} not within 0..{self.n - 1}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range 0..{n - 1}")
        return cls(mask_of(vs), n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def tolist(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.tolist()}, n={self.n})"


VertexLike = Union[VertexSet, Iterable[int]]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every "modification" builds a new graph.
    Derived data (distances and the like) may be memoised in ``_cache``.
    """

    __slots__ = ("n", "adj", "m", "_cache")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        adj = tuple(int(a) for a in adj)
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += row.bit_count()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", total // 2)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def vertex_mask(self, s: VertexLike) -> int:
        """Normalise a vertex collection to a bitmask, validating range."""
        if isinstance(s, VertexSet):
            if s.n != self.n:
                raise GraphError(f"vertex set built for order {s.n}, graph has order {self.n}")
            return s.mask
        return VertexSet.of(s, self.n).mask

    def vertex_set(self, s: VertexLike) -> VertexSet:
        return VertexSet(self.vertex_mask(s), self.n)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)])

    def delete(self, v: int) -> "Graph":
        """``G - v`` with vertices above ``v`` shifted down by one."""
        self.check_vertex(v)
        return induced_subgraph(self, self.full_mask & ~(1 << v))[0]

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """New graph with vertex ``n`` joined to ``neighbors``."""
        nb = self.vertex_mask(neighbors)
        adj = [row | ((nb >> v & 1) << self.n) for v, row in enumerate(self.adj)]
        adj.append(nb)
        return Graph(self.n + 1, adj)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 0-indexed pairs; duplicates are merged."""
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {(u, v)} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def from_labeled_edges(edges: Iterable[tuple[object, object]],
                       vertices: Iterable[object] = ()) -> tuple[Graph, list]:
    """Map arbitrary hashable labels to dense indices (first-seen order)."""
    index: dict = {}
    for v in vertices:
        index.setdefault(v, len(index))
    pairs = []
    for u, v in edges:
        pairs.append((index.setdefault(u, len(index)), index.setdefault(v, len(index))))
    labels = [None] * len(index)
    for lab, i in index.items():
        labels[i] = lab
    return from_edge_list(len(index), pairs), labels


def induced_subgraph(g: Graph, s: VertexLike) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[s]`` re-indexed to ``0..|s|-1`` and the map back to ``g``."""
    mask = g.vertex_mask(s) if not isinstance(s, int) else s
    if mask == 0:
        raise GraphError("induced subgraph of an empty vertex set")
    keep = tuple(iter_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(keep), adj), keep


def _product(g: Graph, h: Graph, adjacent) -> Graph:
    if g.n == 0 or h.n == 0:
        raise GraphError("products need nonempty factors")
    nh = h.n
    n = g.n * nh
    adj = [0] * n
    for a in range(g.n):
        for x in range(nh):
            i = a * nh + x
            for b in range(g.n):
                for y in range(nh):
                    j = b * nh + y
                    if i != j and adjacent(a, x, b, y):
                        adj[i] |= 1 << j
    return Graph(n, adj)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """``G ∘ H``; vertex ``(a, x)`` gets index ``a * |H| + x``."""
    return _product(g, h, lambda a, x, b, y: g.has_edge(a, b) or (a == b and h.has_edge(x, y)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H``; vertex ``(a, x)`` gets index ``a * |H| + x``."""
    return _product(g, h, lambda a, x, b, y: (a == b and h.has_edge(x, y))
                    or (x == y and g.has_edge(a, b)))


# Named families used across tests, docs and the CLI.

def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def pendant_c5_graph() -> Graph:
    """A 5-cycle on 0..4 with pendant vertex 5 hanging off vertex 4.

    It is dp, although deleting its simplicial pendant leaves the non-dp C5.
    """
    return from_edge_list(6, [(5, 4), (4, 0), (0, 1), (1, 2), (2, 3), (3, 4)])
