"""Structural dp criteria as predicates, and harnesses that check them.

Every ``cross_validate_*`` function separates "hypothesis holds" from
"conclusion holds" and returns violation records; an empty list means the
criterion survived the whole corpus.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from ._bits import iter_bits
from .formats import to_graph6
from .graph import Graph, VertexSet
from .isometry import find_isometric_subgraph_of_order, is_dp, is_isometric_mask
from .metrics import ACYCLIC, block_decomposition, girth, is_connected, require_connected
from .structure import (is_chordal, is_simplicial, maximum_cardinality_search,
                        verify_elimination_ordering)


@dataclass(frozen=True)
class Violation:
    graph6: str
    hypothesis: str
    expected: str
    got: str
    vertex: Optional[int] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.vertex is None:
            del d["vertex"]
        return d


def _sorted(violations: list[Violation]) -> list[Violation]:
    return sorted(violations, key=lambda v: (v.graph6, -1 if v.vertex is None else v.vertex,
                                             v.hypothesis))


class DpCache:
    """Memoised default-mode dp verdicts keyed by labelled graph."""

    def __init__(self):
        self._memo: dict[Graph, bool] = {}

    def __call__(self, g: Graph) -> bool:
        hit = self._memo.get(g)
        if hit is None:
            hit = bool(is_dp(g).is_dp)
            self._memo[g] = hit
        return hit

    def __len__(self) -> int:
        return len(self._memo)


# --- predicates ----------------------------------------------------------

def lemma1_applicable(g: Graph, v: int) -> bool:
    """Hypothesis of the simplicial-vertex extension lemma: ``v`` is simplicial."""
    require_connected(g)
    return is_simplicial(g, v)


@dataclass(frozen=True)
class Theorem2Check:
    literal: bool
    """Every nonadjacent pair of neighbours lies together on a 4-cycle."""
    proof: bool
    """Every nonadjacent pair of neighbours has a common neighbour other than ``v``."""

    def __bool__(self) -> bool:
        return self.proof


def _nonadjacent_neighbour_pairs(g: Graph, v: int):
    nb = list(iter_bits(g.adj[v]))
    for i, u in enumerate(nb):
        for w in nb[i + 1:]:
            if not g.has_edge(u, w):
                yield u, w


def _on_common_4_cycle(g: Graph, u: int, w: int) -> bool:
    """Search all 4-cycles ``a b c d`` of ``g`` for one containing both ``u`` and ``w``."""
    adj = g.adj
    for a in g.vertices:
        for b in iter_bits(adj[a]):
            for c in iter_bits(adj[b] & ~(1 << a)):
                for d in iter_bits(adj[c] & adj[a] & ~(1 << b)):
                    quad = (1 << a) | (1 << b) | (1 << c) | (1 << d)
                    if quad.bit_count() == 4 and quad >> u & 1 and quad >> w & 1:
                        return True
    return False


def theorem2_applicable(g: Graph, v: int) -> Theorem2Check:
    """Both readings of the 4-cycle relaxation of the simplicial hypothesis."""
    require_connected(g)
    g.check_vertex(v)
    pairs = list(_nonadjacent_neighbour_pairs(g, v))
    literal = all(_on_common_4_cycle(g, u, w) for u, w in pairs)
    proof = all(g.adj[u] & g.adj[w] & ~(1 << v) for u, w in pairs)
    return Theorem2Check(literal, proof)


@dataclass(frozen=True)
class TheoremDiagnostics:
    girth: int | float
    articulation: VertexSet
    in_cycle: tuple[bool, ...]
    simplicial: VertexSet
    chordal: bool
    thm3_applies: bool
    per_vertex_thm2: tuple[Theorem2Check, ...]

    def to_dict(self) -> dict:
        return {
            "girth": None if self.girth == ACYCLIC else self.girth,
            "articulation": self.articulation.tolist(),
            "in_cycle": list(self.in_cycle),
            "simplicial": self.simplicial.tolist(),
            "chordal": self.chordal,
            "thm3_applies": self.thm3_applies,
            "thm2": [{"literal": c.literal, "proof": c.proof} for c in self.per_vertex_thm2],
        }


def theorem3_applies(g: Graph) -> bool:
    """Girth at least 5 and every vertex a cut vertex or on a cycle."""
    require_connected(g)
    gir = girth(g)
    if gir == ACYCLIC or gir < 5:
        return False
    bd = block_decomposition(g)
    on_cycle = 0
    for b in bd.blocks:
        if len(b) >= 3:
            on_cycle |= b.mask
    return (bd.articulation.mask | on_cycle) == g.full_mask


def theorem3_predicts_not_dp(g: Graph) -> TheoremDiagnostics:
    require_connected(g)
    bd = block_decomposition(g)
    on_cycle = 0
    for b in bd.blocks:
        if len(b) >= 3:
            on_cycle |= b.mask
    return TheoremDiagnostics(
        girth=girth(g),
        articulation=bd.articulation,
        in_cycle=tuple(bool(on_cycle >> v & 1) for v in g.vertices),
        simplicial=VertexSet.of((v for v in g.vertices if is_simplicial(g, v)), g.n),
        chordal=is_chordal(g),
        thm3_applies=theorem3_applies(g),
        per_vertex_thm2=tuple(theorem2_applicable(g, v) for v in g.vertices),
    )


# --- harnesses -------------------------------------------------------------

def _vertex_extension_check(corpus: Iterable[Graph], name: str,
                            hypothesis: Callable[[Graph, int], bool],
                            dp: Optional[DpCache], check_isometric: bool) -> list[Violation]:
    dp = dp or DpCache()
    out = []
    for g in corpus:
        if g.n < 2:
            continue
        code = None
        for v in g.vertices:
            if not hypothesis(g, v):
                continue
            code = code or to_graph6(g)
            rest = g.full_mask & ~(1 << v)
            if check_isometric and not is_isometric_mask(g, rest):
                out.append(Violation(code, f"{name}: v simplicial", "G-v isometric in G",
                                     "G-v not isometric", v))
            h = g.delete(v)
            if is_connected(h) and dp(h) and not dp(g):
                out.append(Violation(code, f"{name}: hypothesis at v and G-v dp", "G dp",
                                     "G not dp", v))
    return _sorted(out)


def cross_validate_lemma1(corpus: Iterable[Graph], dp: Optional[DpCache] = None) -> list[Violation]:
    return _vertex_extension_check(corpus, "lemma1", lemma1_applicable, dp, True)


def cross_validate_theorem2(corpus: Iterable[Graph], dp: Optional[DpCache] = None,
                            level: str = "proof") -> list[Violation]:
    """``level`` is ``"proof"``, ``"literal"`` or ``"both"``."""
    if level not in ("proof", "literal", "both"):
        raise ValueError(f"unknown level {level!r}")
    dp = dp or DpCache()
    corpus = list(corpus)
    out = []
    for lvl in (("proof", "literal") if level == "both" else (level,)):
        def hyp(g, v, lvl=lvl):
            return getattr(theorem2_applicable(g, v), lvl)
        out.extend(_vertex_extension_check(corpus, f"theorem2[{lvl}]", hyp, dp, False))
    return _sorted(out)


def cross_validate_theorem3(corpus: Iterable[Graph]) -> list[Violation]:
    """Where the girth criterion fires, no order ``n-1`` isometric subgraph may exist.

    Verified twice: by the engine, and by trying each single-vertex deletion.
    """
    out = []
    for g in corpus:
        if not theorem3_applies(g):
            continue
        code = to_graph6(g)
        found = find_isometric_subgraph_of_order(g, g.n - 1)
        if found is not None:
            out.append(Violation(code, "thm3 applies", "no isometric (n-1)-subgraph",
                                 f"engine witness {found.tolist()}"))
        for v in g.vertices:
            if is_isometric_mask(g, g.full_mask & ~(1 << v)):
                out.append(Violation(code, "thm3 applies", "no isometric (n-1)-subgraph",
                                     "deleting v leaves an isometric subgraph", v))
    return _sorted(out)


def cross_validate_corollary1(corpus: Iterable[Graph], dp: Optional[DpCache] = None) -> list[Violation]:
    """Chordal graphs are dp, and deleting along a reversed elimination order stays isometric."""
    dp = dp or DpCache()
    out = []
    for g in corpus:
        if not is_chordal(g):
            continue
        code = to_graph6(g)
        if not dp(g):
            out.append(Violation(code, "chordal", "dp", "not dp"))
        o = maximum_cardinality_search(g)
        check = verify_elimination_ordering(g, o)
        if not check:
            out.append(Violation(code, "chordal", "verified elimination ordering",
                                 f"fails at position {check.failed_at}"))
            continue
        cur = g.full_mask
        for v in o.reversed()[:-1]:
            cur &= ~(1 << v)
            if not is_isometric_mask(g, cur):
                out.append(Violation(code, "chordal", "reverse elimination is a sequential ordering",
                                     f"not isometric after deleting {v}", v))
                break
    return _sorted(out)

