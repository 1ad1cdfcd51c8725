"""Hop distances and cycle structure: BFS, girth, blocks, cut vertices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ._bits import iter_bits
from .graph import DisconnectedGraphError, Graph, VertexSet


class _Unreachable(int):
    """Distance sentinel that compares above every real hop count.

    Arithmetic is rejected so that "farther" can never be confused with
    "disconnected" by accident.
    """

    def __new__(cls):
        return super().__new__(cls, 1 << 62)

    def __repr__(self):
        return "UNREACHABLE"

    def _no_arith(self, *_):
        raise TypeError("arithmetic on UNREACHABLE distance")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arith
    __neg__ = __floordiv__ = __truediv__ = _no_arith


UNREACHABLE = _Unreachable()
ACYCLIC = math.inf
"""Girth of a forest."""

Distance = Union[int, _Unreachable]


def bfs_layers(g: Graph, source: int, within: int | None = None) -> list[int]:
    """Bitmasks of vertices at distance 0, 1, 2, ... from ``source``.

    With ``within`` the search is confined to that vertex mask, i.e. it
    runs in the induced subgraph.
    """
    adj = g.adj
    allowed = g.full_mask if within is None else within
    frontier = 1 << source
    seen = frontier
    layers = []
    while frontier:
        layers.append(frontier)
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return layers


def bfs_distances(g: Graph, source: int) -> list[Distance]:
    g.check_vertex(source)
    row: list[Distance] = [UNREACHABLE] * g.n
    for t, layer in enumerate(bfs_layers(g, source)):
        for v in iter_bits(layer):
            row[v] = t
    return row


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts; ``layers[a][t]`` is the mask at distance ``t`` from ``a``."""

    n: int
    d: tuple[tuple[Distance, ...], ...]
    layers: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> Distance:
        u, v = uv
        return self.d[u][v]

    def max_finite(self) -> int:
        return max((x for row in self.d for x in row if x is not UNREACHABLE), default=0)

    def check(self, g: Graph) -> None:
        """Assert the metric axioms and edge ⇔ distance-1."""
        n = self.n
        d = self.d
        for u in range(n):
            assert d[u][u] == 0
            for v in range(n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                duv = d[u][v]
                if duv is UNREACHABLE:
                    continue
                for w in range(n):
                    dvw = d[v][w]
                    if dvw is not UNREACHABLE:
                        assert d[u][w] <= duv + dvw


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. Memoised on the graph."""
    dm = g._cache.get("apsp")
    if dm is None:
        rows = []
        layer_rows = []
        for s in g.vertices:
            layers = bfs_layers(g, s)
            row: list[Distance] = [UNREACHABLE] * g.n
            for t, layer in enumerate(layers):
                for v in iter_bits(layer):
                    row[v] = t
            rows.append(tuple(row))
            layer_rows.append(tuple(layers))
        dm = DistanceMatrix(g.n, tuple(rows), tuple(layer_rows))
        g._cache["apsp"] = dm
    return dm


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by a nonempty ``mask`` is connected."""
    start = mask & -mask
    seen = frontier = start
    adj = g.adj
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return is_connected_mask(g, g.full_mask)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"operation requires a connected graph ({g!r})")


def diameter(g: Graph) -> Distance:
    if not is_connected(g):
        return UNREACHABLE
    return all_pairs_distances(g).max_finite()


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``ACYCLIC`` (infinity) for forests.

    For each root a BFS is grown; the first non-tree edge ``uw`` met bounds
    a cycle through the root by ``d(u) + d(w) + 1``. The bound is tight
    when the root lies on a shortest cycle, so the minimum is exact.
    """
    best: int | float = ACYCLIC
    adj = g.adj
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, du + dist[w] + 1)
    return best


@dataclass(frozen=True)
class BlockDecomposition:
    articulation: VertexSet
    blocks: tuple[VertexSet, ...]

    def blocks_of(self, v: int) -> list[VertexSet]:
        return [b for b in self.blocks if v in b]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Cut vertices and biconnected blocks via iterative low-link DFS."""
    require_connected(g)
    n = g.n
    memo = g._cache.get("blocks")
    if memo is not None:
        return memo
    if n == 1:
        bd = BlockDecomposition(VertexSet(0, 1), (VertexSet(1, 1),))
        g._cache["blocks"] = bd
        return bd
    disc = [-1] * n
    low = [0] * n
    cut = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, iterator over neighbours)
    stack = [(root, -1, iter_bits(g.adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter_bits(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent == root:
                root_children += 1
            else:
                cut |= 1 << parent
            mask = 0
            while True:
                a, b = edge_stack.pop()
                mask |= (1 << a) | (1 << b)
                if (a, b) == (parent, v):
                    break
            blocks.append(mask)
    if root_children > 1:
        cut |= 1 << root
    blocks.sort(key=lambda m: [i for i in iter_bits(m)])
    bd = BlockDecomposition(VertexSet(cut, n), tuple(VertexSet(b, n) for b in blocks))
    g._cache["blocks"] = bd
    return bd


def articulation_points(g: Graph) -> VertexSet:
    return block_decomposition(g).articulation


def vertex_in_cycle(g: Graph, v: int) -> bool:
    """True iff ``v`` lies on some cycle, i.e. it sits in a block of 3+ vertices."""
    g.check_vertex(v)
    return any(len(b) >= 3 for b in block_decomposition(g).blocks_of(v))


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges forming a two-vertex block."""
    out = []
    for b in block_decomposition(g).blocks:
        if len(b) == 2:
            u, v = b.tolist()
            out.append((u, v))
    return out
