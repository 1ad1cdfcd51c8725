"""Seeded random graphs and exhaustive labelled enumeration.

Randomness comes from :class:`random.Random` (Mersenne Twister), whose
``random()``/``randrange()`` streams are stable across CPython releases, so a
seed pins the generated sequence.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator, Optional

from ._bits import iter_bits
from .graph import Graph, GraphError
from .metrics import is_connected

ENUMERATION_CEILING = 7


def make_rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def erdos_renyi(n: int, p: float, seed: int | random.Random) -> Graph:
    """G(n, p): pairs ``u < v`` are visited lexicographically, kept when ``rng.random() < p``."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    if n < 1:
        raise GraphError("n must be at least 1")
    rng = make_rng(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def connected_erdos_renyi(n: int, p: float, seed: int | random.Random,
                          max_draws: int = 100_000) -> tuple[Graph, int]:
    """Rejection-sample a connected G(n, p); returns the graph and the redraw count."""
    rng = make_rng(seed)
    for redraws in range(max_draws):
        g = erdos_renyi(n, p, rng)
        if is_connected(g):
            return g, redraws
    raise GraphError(f"no connected G({n}, {p}) sample in {max_draws} draws")


def random_chordal_growth(n: int, seed: int | random.Random) -> tuple[Graph, list[int]]:
    """Chordal graph grown from K1 by attaching simplicial vertices.

    Each new vertex is joined to a uniformly chosen nonempty subset of a
    uniformly chosen maximal clique, so its neighbourhood is a clique. The
    maximal cliques are maintained exactly under this growth. Returns the
    graph and the growth order (which verifies as an elimination ordering).
    """
    if n < 1:
        raise GraphError("n must be at least 1")
    rng = make_rng(seed)
    adj = [0]
    cliques = [1]
    for v in range(1, n):
        ci = rng.randrange(len(cliques))
        members = list(iter_bits(cliques[ci]))
        while True:
            pick = 0
            for u in members:
                if rng.random() < 0.5:
                    pick |= 1 << u
            if pick:
                break
        for u in iter_bits(pick):
            adj[u] |= 1 << v
        adj.append(pick)
        new = pick | (1 << v)
        if pick == cliques[ci]:
            cliques[ci] = new
        else:
            cliques.append(new)
    return Graph(n, adj), list(range(n))


def random_chordal(n: int, seed: int | random.Random, shuffle: bool = True) -> Graph:
    """Random connected chordal graph; ``shuffle`` relabels vertices randomly."""
    rng = make_rng(seed)
    g, _ = random_chordal_growth(n, rng)
    if not shuffle:
        return g
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(g, perm)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in g.vertices:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, adj)


def random_tree(n: int, seed: int | random.Random) -> Graph:
    """Random recursive tree: vertex ``v`` attaches to a uniform earlier vertex."""
    rng = make_rng(seed)
    adj = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _check_ceiling(n: int, override: bool) -> None:
    if n < 1:
        raise GraphError("n must be at least 1")
    if n > ENUMERATION_CEILING and not override:
        raise GraphError(f"labelled enumeration capped at n <= {ENUMERATION_CEILING}; "
                         "pass override=True")


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: column by column of the upper triangle
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled(n: int, override: bool = False) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by edge-subset counter."""
    _check_ceiling(n, override)
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k in iter_bits(code):
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        yield Graph(n, adj)


def enumerate_labeled_connected(n: int, override: bool = False) -> Iterator[Graph]:
    for g in enumerate_labeled(n, override):
        if is_connected(g):
            yield g


AcceptEdge = Callable[[list[int], int, int], bool]


def enumerate_hereditary(n: int, accept_edge: AcceptEdge, override: bool = False) -> Iterator[Graph]:
    """Labelled graphs in a class closed under edge deletion.

    ``accept_edge(adj, u, v)`` says whether edge ``uv`` may be added to the
    partial graph ``adj`` while staying in the class. Because the class is
    closed under deletion, rejected prefixes never need extending, so the
    walk visits only members (each exactly once).
    """
    _check_ceiling(n, override)
    pairs = _pairs(n)
    adj = [0] * n

    def rec(k: int) -> Iterator[Graph]:
        if k == len(pairs):
            yield Graph(n, adj)
            return
        yield from rec(k + 1)
        u, v = pairs[k]
        if accept_edge(adj, u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from rec(k + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    yield from rec(0)


def girth_at_least(g: int) -> AcceptEdge:
    """Edge acceptor keeping every cycle of length ``>= g``."""
    def accept(adj: list[int], u: int, v: int) -> bool:
        # adding uv closes a cycle of length d(u, v) + 1
        seen = frontier = 1 << u
        for _ in range(g - 2):
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= adj[x]
            frontier = nxt & ~seen
            if frontier >> v & 1:
                return False
            if not frontier:
                return True
            seen |= frontier
        return True
    return accept


def max_degree_at_most(d: int) -> AcceptEdge:
    def accept(adj: list[int], u: int, v: int) -> bool:
        return adj[u].bit_count() < d and adj[v].bit_count() < d
    return accept


def enumerate_min_degree(n: int, delta: int, connected: bool = True,
                         override: bool = False) -> Iterator[Graph]:
    """Labelled graphs with minimum degree ``>= delta``, via complements of bounded degree."""
    bound = n - 1 - delta
    if bound < 0:
        return
    for h in enumerate_hereditary(n, max_degree_at_most(bound), override):
        g = h.complement()
        if not connected or is_connected(g):
            yield g


def enumerate_girth_at_least(n: int, g: int, connected: bool = True,
                             override: bool = False) -> Iterator[Graph]:
    for h in enumerate_hereditary(n, girth_at_least(g), override):
        if not connected or is_connected(h):
            yield h


def connected_labeled_count(n: int) -> int:
    """Number of connected labelled graphs on ``n`` vertices (inclusion–exclusion)."""
    from math import comb

    c = [0, 1]
    for m in range(2, n + 1):
        total = 2 ** comb(m, 2)
        total -= sum(comb(m - 1, k - 1) * c[k] * 2 ** comb(m - k, 2) for k in range(1, m))
        c.append(total)
    return c[n]


def sample_graphs(n: int, samples: int, p: float, seed: int,
                  keep: Optional[Callable[[Graph], bool]] = None,
                  max_draws: Optional[int] = None) -> tuple[list[Graph], int]:
    """Up to ``samples`` connected G(n, p) graphs passing ``keep``; returns (graphs, rejected)."""
    rng = make_rng(seed)
    out: list[Graph] = []
    rejected = 0
    limit = max_draws if max_draws is not None else 200 * samples
    while len(out) < samples and rejected < limit:
        g = erdos_renyi(n, p, rng)
        if is_connected(g) and (keep is None or keep(g)):
            out.append(g)
        else:
            rejected += 1
    return out, rejected
