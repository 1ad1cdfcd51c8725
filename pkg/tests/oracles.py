"""Brute-force references. Deliberately naive and independent of the package internals."""

from collections import deque
from itertools import combinations, permutations


def edges_of(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1}


def bfs(g, s, allowed=None):
    allowed = set(range(g.n)) if allowed is None else set(allowed)
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in range(g.n):
            if g.adj[u] >> w & 1 and w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def connected(g, verts=None):
    verts = list(range(g.n)) if verts is None else list(verts)
    if not verts:
        return False
    return len(bfs(g, verts[0], verts)) == len(verts)


def all_cycles(g):
    """Every simple cycle once, as a vertex tuple starting at its smallest vertex."""
    out = []
    nbrs = [[w for w in range(g.n) if g.adj[v] >> w & 1] for v in range(g.n)]

    def walk(s, path, on):
        for w in nbrs[path[-1]]:
            if w == s and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > s and w not in on:
                on.add(w)
                path.append(w)
                walk(s, path, on)
                path.pop()
                on.discard(w)

    for s in range(g.n):
        walk(s, [s], {s})
    return out


def girth(g):
    cycles = all_cycles(g)
    return min((len(c) for c in cycles), default=float("inf"))


def cut_vertices(g):
    if g.n < 2:
        return set()
    return {v for v in range(g.n) if not connected(g, [u for u in range(g.n) if u != v])}


def induced_cycles(g, min_len):
    """Vertex sets of size >= min_len whose induced subgraph is a single cycle."""
    out = []
    for k in range(max(min_len, 3), g.n + 1):
        for combo in combinations(range(g.n), k):
            s = set(combo)
            if all(sum(1 for u in s if g.adj[v] >> u & 1) == 2 for v in s) and connected(g, s):
                out.append(combo)
    return out


def chordal(g):
    """No chordless cycle of length >= 4: check every cycle for a chord."""
    E = edges_of(g)
    for cyc in all_cycles(g):
        k = len(cyc)
        if k < 4:
            continue
        chord = any((min(cyc[i], cyc[j]), max(cyc[i], cyc[j])) in E
                    for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1))
        if not chord:
            return False
    return True


def isometric(g, verts):
    verts = list(verts)
    for a in verts:
        dg = bfs(g, a)
        dh = bfs(g, a, verts)
        for b in verts:
            if dh.get(b) != dg.get(b):
                return False
    return True


def isometric_orders(g):
    """k -> whether some k-subset is isometric."""
    return {k: any(isometric(g, c) for c in combinations(range(g.n), k)) for k in range(1, g.n + 1)}


def dp(g):
    return all(isometric_orders(g).values())
