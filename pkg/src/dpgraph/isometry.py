"""Isometric subgraphs and the exact distance-preserving decision.

A vertex set ``S`` of a connected graph ``G`` is isometric when distances in
``G[S]`` equal distances in ``G``. The test used throughout is local: ``S``
is isometric iff for every ordered pair ``a != b`` in ``S`` the vertex ``b``
has a neighbour in ``S`` one step closer to ``a`` (in ``G``). Induction on
the distance turns that into a geodesic inside ``S``; conversely the
penultimate vertex of an ``S``-internal geodesic is such a neighbour.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional

from ._bits import iter_bits, lowest, mask_of
from .graph import Graph, GraphError, VertexLike, VertexSet
from .metrics import UNREACHABLE, Distance, all_pairs_distances, bfs_layers, require_connected

WITNESS = "witness"
NONE = "none"
UNEVALUATED = "unevaluated"
UNKNOWN = "unknown"

DEFAULT_MAX_ORDER = 16
DEFAULT_NODE_BUDGET = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class IsometryResult:
    """Outcome of an isometry test; truthy when isometric.

    On failure ``pair`` is a violating pair ``(a, b)`` whose distance in the
    induced subgraph (``sub_distance``, possibly UNREACHABLE) exceeds the
    host distance.
    """

    isometric: bool
    pair: Optional[tuple[int, int]] = None
    sub_distance: Optional[Distance] = None
    host_distance: Optional[Distance] = None

    @property
    def disconnected(self) -> bool:
        return self.sub_distance is UNREACHABLE

    def __bool__(self) -> bool:
        return self.isometric


def _violation(g: Graph, mask: int) -> Optional[tuple[int, int]]:
    adj = g.adj
    dm = all_pairs_distances(g)
    for a in iter_bits(mask):
        row = dm.d[a]
        layers = dm.layers[a]
        for b in iter_bits(mask):
            t = row[b]
            if t == 0:
                continue
            if t is UNREACHABLE:
                return a, b
            if not adj[b] & mask & layers[t - 1]:
                return a, b
    return None


def is_isometric_mask(g: Graph, mask: int) -> bool:
    """Fast boolean form of :func:`is_isometric_subgraph` on a raw bitmask."""
    return _violation(g, mask) is None


def is_isometric_subgraph(g: Graph, s: VertexLike) -> IsometryResult:
    mask = g.vertex_mask(s)
    if mask == 0:
        raise GraphError("isometry test on an empty vertex set")
    require_connected(g)
    bad = _violation(g, mask)
    if bad is None:
        return IsometryResult(True)
    a, b = bad
    reach = 0
    for layer in bfs_layers(g, lowest(mask), within=mask):
        reach |= layer
    if reach != mask:
        a, b = lowest(mask), lowest(mask & ~reach)
        return IsometryResult(False, (a, b), UNREACHABLE, all_pairs_distances(g).d[a][b])
    sub: Distance = UNREACHABLE
    for t, layer in enumerate(bfs_layers(g, a, within=mask)):
        if layer >> b & 1:
            sub = t
            break
    return IsometryResult(False, bad, sub, all_pairs_distances(g).d[a][b])


def isometric_transitivity_check(g: Graph, s1: VertexLike, s2: VertexLike) -> bool:
    """Evaluate "S2 ≤ G[S1] ≤ G implies S2 ≤ G" on concrete sets.

    Returns the truth value of the implication, which must always be true.
    """
    m1, m2 = g.vertex_mask(s1), g.vertex_mask(s2)
    if m2 & ~m1:
        raise GraphError("transitivity check needs s2 ⊆ s1")
    if m2 == 0:
        raise GraphError("transitivity check needs nonempty sets")
    from .graph import induced_subgraph

    if not is_isometric_mask(g, m1):
        return True
    h, keep = induced_subgraph(g, m1)
    pos = {v: i for i, v in enumerate(keep)}
    inner = mask_of(pos[v] for v in iter_bits(m2))
    if not is_isometric_mask(h, inner):
        return True
    return is_isometric_mask(g, m2)


# --- per-order search ------------------------------------------------------

@dataclass
class _Stats:
    nodes: int = 0
    budget: Optional[int] = None

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.nodes)


def _greedy_chain(g: Graph, stop: int = 1) -> Dict[int, int]:
    """Delete the lowest-index deletable vertex until stuck or at ``stop``.

    Returns ``{order: mask}`` for every order reached, including ``n``.
    """
    cur = g.full_mask
    chain = {g.n: cur}
    size = g.n
    while size > stop:
        for v in iter_bits(cur):
            nxt = cur & ~(1 << v)
            if is_isometric_mask(g, nxt):
                cur = nxt
                size -= 1
                chain[size] = cur
                break
        else:
            break
    return chain


def _committed_ok(adj, layers, a: int, remaining: int, committed: int) -> bool:
    """Do all ``committed`` vertices keep their host distance from ``a`` in ``G[remaining]``?

    Distances only grow as vertices are removed, so a failure here can
    never be repaired deeper in the search.
    """
    todo = committed & ~(1 << a)
    seen = frontier = 1 << a
    t = 0
    while todo:
        if t >= len(layers):
            return False
        need = layers[t] & todo
        if need & ~frontier:
            return False
        todo &= ~need
        if not todo:
            return True
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & remaining & ~seen
        if not frontier:
            return False
        seen |= frontier
        t += 1
    return True


def _exhaustive_search(g: Graph, k: int, stats: _Stats) -> Optional[int]:
    """Lexicographically least isometric ``k``-set, or ``None`` if there is none.

    Vertices are decided in ascending order, "keep" before "delete", so the
    first leaf reached is the least sorted tuple. A branch dies once two
    kept vertices are farther apart in the surviving subgraph than in ``G``.
    """
    n = g.n
    adj = g.adj
    layers = all_pairs_distances(g).layers

    def rec(i: int, kept: int, alive: int, nkept: int) -> Optional[int]:
        stats.tick()
        if nkept == k:
            return kept if is_isometric_mask(g, kept) else None
        if nkept + (n - i) < k:
            return None
        bit = 1 << i
        kept2 = kept | bit
        if _committed_ok(adj, layers[i], i, alive, kept2):
            found = rec(i + 1, kept2, alive, nkept + 1)
            if found is not None:
                return found
        if nkept + (n - i - 1) < k:
            return None
        alive2 = alive & ~bit
        if nkept == 0 or all(_committed_ok(adj, layers[a], a, alive2, kept)
                             for a in iter_bits(kept)):
            return rec(i + 1, kept, alive2, nkept)
        return None

    return rec(0, 0, g.full_mask, 0)


def _check_size(g: Graph, allow_large: bool) -> None:
    if g.n > DEFAULT_MAX_ORDER and not allow_large:
        raise GraphError(f"exhaustive search capped at n <= {DEFAULT_MAX_ORDER} "
                         f"(got {g.n}); pass allow_large=True to override")


def find_isometric_subgraph_of_order(g: Graph, k: int, *, greedy: bool = True,
                                     budget: Optional[int] = None,
                                     allow_large: bool = False) -> Optional[VertexSet]:
    """An isometric vertex set of size ``k``, or ``None`` when none exists.

    Raises :class:`SearchBudgetExceeded` if ``budget`` search nodes run out
    before a verdict.
    """
    require_connected(g)
    if not 1 <= k <= g.n:
        raise GraphError(f"order {k} outside 1..{g.n}")
    if k == g.n:
        return VertexSet.full(g.n)
    if greedy:
        chain = _greedy_chain(g, stop=k)
        if k in chain:
            return VertexSet(chain[k], g.n)
    _check_size(g, allow_large)
    mask = _exhaustive_search(g, k, _Stats(budget=budget))
    return None if mask is None else VertexSet(mask, g.n)


@dataclass(frozen=True)
class OrderVerdict:
    k: int
    status: str
    vertices: Optional[VertexSet] = None
    elapsed: float = 0.0
    nodes: int = 0

    def to_dict(self) -> dict:
        return {"k": self.k, "status": self.status,
                "vertices": self.vertices.tolist() if self.vertices is not None else []}


@dataclass
class DpReport:
    n: int
    orders: List[OrderVerdict]
    stats: dict = field(default_factory=dict)

    @property
    def is_dp(self) -> Optional[bool]:
        """True/False, or None when some order is unknown and none failed."""
        statuses = {o.status for o in self.orders}
        if NONE in statuses:
            return False
        if statuses == {WITNESS}:
            return True
        return None

    @property
    def failed_orders(self) -> list[int]:
        return [o.k for o in self.orders if o.status == NONE]

    def verdict(self, k: int) -> OrderVerdict:
        return self.orders[k - 1]

    def witness(self, k: int) -> Optional[VertexSet]:
        return self.verdict(k).vertices

    def to_dict(self, timing: bool = True) -> dict:
        stats = dict(self.stats)
        if timing:
            stats["elapsed_per_order"] = {str(o.k): round(o.elapsed, 6) for o in self.orders}
        else:
            stats.pop("elapsed", None)
        return {"n": self.n, "is_dp": self.is_dp,
                "orders": [o.to_dict() for o in self.orders], "stats": stats}


def is_dp(g: Graph, *, exhaustive: bool = False, greedy_only: bool = False,
          budget: Optional[int] = None, allow_large: bool = False) -> DpReport:
    """Decide, order by order, whether ``g`` has an isometric subgraph of each size.

    Orders are tried from ``n - 1`` down. The greedy deletion chain supplies
    witnesses first; the exhaustive search covers the remaining orders and
    alone may answer NONE. Without ``exhaustive`` the first NONE ends the
    run and lower orders are left unevaluated.
    """
    require_connected(g)
    n = g.n
    if n > DEFAULT_MAX_ORDER and not allow_large and not greedy_only:
        raise GraphError(f"exhaustive dp decision capped at n <= {DEFAULT_MAX_ORDER} "
                         f"(got {n}); pass allow_large=True to override")
    if n > DEFAULT_MAX_ORDER and budget is None:
        budget = DEFAULT_NODE_BUDGET
    t0 = time.perf_counter()
    chain = _greedy_chain(g)
    verdicts: Dict[int, OrderVerdict] = {
        n: OrderVerdict(n, WITNESS, VertexSet.full(n), time.perf_counter() - t0)}
    total_nodes = 0
    stop = False
    for k in range(n - 1, 0, -1):
        if stop:
            verdicts[k] = OrderVerdict(k, UNEVALUATED)
            continue
        t1 = time.perf_counter()
        if k in chain:
            verdicts[k] = OrderVerdict(k, WITNESS, VertexSet(chain[k], n), time.perf_counter() - t1)
            continue
        if greedy_only:
            verdicts[k] = OrderVerdict(k, UNKNOWN, elapsed=time.perf_counter() - t1)
            continue
        stats = _Stats(budget=budget)
        try:
            mask = _exhaustive_search(g, k, stats)
        except SearchBudgetExceeded:
            verdicts[k] = OrderVerdict(k, UNKNOWN, None, time.perf_counter() - t1, stats.nodes)
            total_nodes += stats.nodes
            continue
        total_nodes += stats.nodes
        if mask is None:
            verdicts[k] = OrderVerdict(k, NONE, None, time.perf_counter() - t1, stats.nodes)
            stop = not exhaustive
        else:
            verdicts[k] = OrderVerdict(k, WITNESS, VertexSet(mask, n),
                                       time.perf_counter() - t1, stats.nodes)
    report = DpReport(n, [verdicts[k] for k in range(1, n + 1)],
                      {"nodes": total_nodes, "greedy_reached": min(chain)})
    report.stats["elapsed"] = round(time.perf_counter() - t0, 6)
    return report


def dp_decision(g: Graph) -> bool:
    """Plain boolean dp verdict (default mode)."""
    verdict = is_dp(g).is_dp
    assert verdict is not None
    return verdict


# --- sequential deletions -------------------------------------------------

@dataclass(frozen=True)
class SequentialOrdering:
    """Deletion order ``v1..vn``: each ``V - {v1..vs}`` is isometric in ``G``."""

    order: tuple[int, ...]

    def nested_sets(self, n: int) -> list[int]:
        """Masks of the surviving sets after 0, 1, ..., n-1 deletions."""
        cur = (1 << n) - 1
        out = [cur]
        for v in self.order[:-1]:
            cur &= ~(1 << v)
            out.append(cur)
        return out

    def verify(self, g: Graph) -> bool:
        if sorted(self.order) != list(g.vertices):
            return False
        return all(is_isometric_mask(g, m) for m in self.nested_sets(g.n))


def is_sequentially_dp(g: Graph, *, allow_large: bool = False) -> Optional[SequentialOrdering]:
    """A valid deletion ordering, or ``None`` after exhausting all of them.

    Depth-first over deletions that keep the survivors isometric in ``g``,
    branching in ascending vertex order; dead survivor sets are memoised.
    """
    require_connected(g)
    _check_size(g, allow_large)
    dead: set[int] = set()
    seq: list[int] = []

    def rec(cur: int) -> bool:
        if cur & (cur - 1) == 0:
            return True
        for v in iter_bits(cur):
            nxt = cur & ~(1 << v)
            if nxt in dead or not is_isometric_mask(g, nxt):
                continue
            seq.append(v)
            if rec(nxt):
                return True
            seq.pop()
        dead.add(cur)
        return False

    full = g.full_mask
    if not rec(full):
        return None
    seq.extend(iter_bits(full & ~mask_of(seq)))
    return SequentialOrdering(tuple(seq))


# --- reference oracle -------------------------------------------------------

def isometric_by_definition(g: Graph, s: VertexLike) -> bool:
    """Compare every distance of ``G[s]`` with ``G`` directly (reference check)."""
    from .graph import induced_subgraph

    h, keep = induced_subgraph(g, s)
    dg = all_pairs_distances(g).d
    dh = all_pairs_distances(h).d
    return all(dh[i][j] == dg[a][b]
               for i, a in enumerate(keep) for j, b in enumerate(keep))


def naive_isometric_orders(g: Graph) -> Dict[int, Optional[VertexSet]]:
    """Lexicographically least isometric set per order by trying every subset.

    Kept deliberately simple and independent of the local criterion used by
    the search: each candidate's distance matrix is compared in full.
    """
    require_connected(g)
    out: Dict[int, Optional[VertexSet]] = {}
    for k in range(1, g.n + 1):
        out[k] = None
        for combo in combinations(range(g.n), k):
            if isometric_by_definition(g, combo):
                out[k] = VertexSet.of(combo, g.n)
                break
    return out
