"""Simplicial vertices, elimination orderings, chordality, long induced cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ._bits import iter_bits
from .graph import Graph, GraphError
from .metrics import require_connected


def _is_clique(g: Graph, mask: int) -> bool:
    adj = g.adj
    for u in iter_bits(mask):
        if (mask & ~(1 << u)) & ~adj[u]:
            return False
    return True


def is_simplicial(g: Graph, v: int) -> bool:
    g.check_vertex(v)
    return _is_clique(g, g.adj[v])


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if _is_clique(g, g.adj[v])]


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph")
    return min(row.bit_count() for row in g.adj)


@dataclass(frozen=True)
class EliminationOrdering:
    """Vertex order ``v1..vn`` read in prefix form.

    It is a simplicial elimination ordering when each ``v_j`` is simplicial
    in ``G[v1..vj]``; eliminating runs from ``vn`` back to ``v1``.
    """

    order: tuple[int, ...]

    def reversed(self) -> tuple[int, ...]:
        return tuple(reversed(self.order))


@dataclass(frozen=True)
class OrderingCheck:
    valid: bool
    failed_at: Optional[int] = None
    """1-based position of the first vertex that is not simplicial in its prefix."""

    def __bool__(self) -> bool:
        return self.valid


def maximum_cardinality_search(g: Graph) -> EliminationOrdering:
    """Visit order of MCS (most already-visited neighbours first, lowest index on ties).

    On a chordal graph every visited vertex's earlier neighbours form a
    clique, so the visit order itself passes
    :func:`verify_elimination_ordering`.
    """
    require_connected(g)
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = -1
        for v in g.vertices:
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(g.adj[best] & ~visited):
            weight[u] += 1
    return EliminationOrdering(tuple(order))


def verify_elimination_ordering(g: Graph, o: EliminationOrdering | Sequence[int]) -> OrderingCheck:
    order = o.order if isinstance(o, EliminationOrdering) else tuple(o)
    if sorted(order) != list(g.vertices):
        raise GraphError("ordering is not a permutation of the vertices")
    prefix = 0
    for j, v in enumerate(order, start=1):
        if not _is_clique(g, g.adj[v] & prefix):
            return OrderingCheck(False, j)
        prefix |= 1 << v
    return OrderingCheck(True)


def is_chordal(g: Graph) -> bool:
    return verify_elimination_ordering(g, maximum_cardinality_search(g)).valid


def perfect_elimination_ordering(g: Graph) -> Optional[EliminationOrdering]:
    """The MCS ordering if it verifies, else ``None`` (graph not chordal)."""
    o = maximum_cardinality_search(g)
    return o if verify_elimination_ordering(g, o) else None


def find_long_induced_cycle(g: Graph, min_len: int) -> Optional[list[int]]:
    """A chordless cycle with at least ``min_len`` vertices, or ``None``.

    Each cycle is grown from its smallest vertex ``s`` as a chordless path
    over larger vertices; a candidate extension may touch the path only at
    its current end, and may touch ``s`` only when it closes the cycle.
    """
    if min_len < 4:
        raise GraphError("min_len must be at least 4")
    adj = g.adj
    for s in g.vertices:
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        for p1 in iter_bits(adj[s] & above):
            path = [s, p1]
            # frames: (vertices on the path, neighbours of interior vertices, candidates)
            stack = [((1 << s) | (1 << p1), 0, iter_bits(adj[p1] & above))]
            while stack:
                on_path, interior, it = stack[-1]
                end = path[-1]
                for w in it:
                    if (on_path | interior) >> w & 1:
                        continue
                    if adj[w] >> s & 1:
                        if len(path) + 1 >= min_len:
                            return path + [w]
                        continue
                    path.append(w)
                    stack.append((on_path | (1 << w), interior | adj[end],
                                  iter_bits(adj[w] & above)))
                    break
                else:
                    stack.pop()
                    path.pop()
    return None


def has_long_induced_cycle(g: Graph, min_len: int) -> tuple[bool, Optional[list[int]]]:
    cyc = find_long_induced_cycle(g, min_len)
    return cyc is not None, cyc
