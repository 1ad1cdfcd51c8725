"""Evidence scans for the open dp questions, plus the one-stop ``analyze`` report.

All outputs are sorted before emission and carry no timing data, so a
fixed configuration reproduces byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .formats import to_dot, to_graph6
from .generators import (ENUMERATION_CEILING, connected_erdos_renyi, enumerate_labeled_connected,
                         enumerate_min_degree, make_rng, random_chordal, sample_graphs)
from .graph import Graph, GraphError, cartesian_product, lexicographic_product
from .isometry import WITNESS, is_dp, is_sequentially_dp
from .metrics import ACYCLIC, block_decomposition, diameter, girth, require_connected
from .structure import find_long_induced_cycle, is_chordal, min_degree, simplicial_vertices
from .theorems import theorem3_applies, theorem3_predicts_not_dp

SOURCES = ("enumerate", "random", "chordal")
PRODUCT_ORDER_CAP = 12


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 0
    n_min: int = 1
    n_max: int = 6
    samples: int = 1000
    p: float = 0.5
    source: str = "enumerate"
    exhaustive: bool = False
    greedy_only: bool = False
    sequential: bool = True
    """Also decide sequential dp for each row."""

    def __post_init__(self):
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError(f"p={self.p} outside [0, 1]")
        if not 1 <= self.n_min <= self.n_max:
            raise ConfigError(f"bad n range {self.n_min}..{self.n_max}")
        if self.source not in SOURCES:
            raise ConfigError(f"source must be one of {SOURCES}")
        if self.source == "enumerate" and self.n_max > ENUMERATION_CEILING:
            raise ConfigError(f"enumeration capped at n <= {ENUMERATION_CEILING}")
        if not -(1 << 63) <= self.seed < (1 << 64):
            raise ConfigError("seed must fit in 64 bits")

    @property
    def n_range(self) -> range:
        return range(self.n_min, self.n_max + 1)


ROW_FIELDS = ("graph6", "n", "m", "min_degree", "girth", "chordal", "dp",
              "sequentially_dp", "thm3_applies")


@dataclass
class ScanResult:
    name: str
    rows: list[dict]
    aggregates: dict
    counterexamples: list[dict] = field(default_factory=list)
    fields: tuple[str, ...] = ROW_FIELDS

    def __post_init__(self):
        self.rows.sort(key=lambda r: (r.get("n", 0), r.get("graph6", ""), r.get("claim", "")))
        self.counterexamples.sort(key=lambda r: (r.get("claim", ""), r.get("n", 0), r["graph6"]))

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(self.fields), lineterminator="\n",
                           extrasaction="ignore")
        w.writeheader()
        for r in self.rows:
            w.writerow({k: _csv_value(r.get(k)) for k in self.fields})
        return buf.getvalue()

    def json_text(self) -> str:
        payload = {"scan": self.name, "aggregates": self.aggregates,
                   "counterexamples": self.counterexamples}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def write(self, out_dir: Path | str) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        rows_path = out / f"{self.name}_rows.csv"
        summary_path = out / f"{self.name}_summary.json"
        rows_path.write_text(self.csv_text(), encoding="utf-8")
        summary_path.write_text(self.json_text(), encoding="utf-8")
        return rows_path, summary_path


def _csv_value(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    if v is None:
        return ""
    return v


def _girth_value(g: Graph):
    gir = girth(g)
    return None if gir == ACYCLIC else gir


def graph_row(g: Graph, config: ExperimentConfig = ExperimentConfig()) -> dict:
    report = is_dp(g, exhaustive=config.exhaustive, greedy_only=config.greedy_only)
    seq = None
    if config.sequential:
        seq = is_sequentially_dp(g) is not None
    return {
        "graph6": to_graph6(g), "n": g.n, "m": g.m, "min_degree": min_degree(g),
        "girth": _girth_value(g), "chordal": is_chordal(g), "dp": report.is_dp,
        "sequentially_dp": seq, "thm3_applies": theorem3_applies(g),
    }


def _graphs(config: ExperimentConfig, n: int, keep: Optional[Callable[[Graph], bool]],
            rng: random.Random) -> Iterator[Graph]:
    if config.source == "enumerate":
        for g in enumerate_labeled_connected(n):
            if keep is None or keep(g):
                yield g
    elif config.source == "random":
        graphs, _ = sample_graphs(n, config.samples, config.p, rng.getrandbits(64), keep)
        yield from graphs
    else:
        for _ in range(config.samples):
            g = random_chordal(n, rng.getrandbits(64))
            if keep is None or keep(g):
                yield g


def _dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    seen: dict[Graph, None] = {}
    for g in graphs:
        seen.setdefault(g, None)
    return list(seen)


def conj1_threshold(n: int) -> int:
    """Smallest integer degree strictly above n/2."""
    return n // 2 + 1


def proven_threshold(n: int) -> int:
    """Smallest integer degree >= 2n/3 - 1."""
    return max(0, -(-(2 * n - 3) // 3))


def scan_conjecture1(config: ExperimentConfig) -> ScanResult:
    """Minimum-degree bands: the open ``δ > n/2`` claim and the proven ``δ >= 2n/3 - 1`` one."""
    rng = make_rng(config.seed)
    rows, cex = [], []
    agg: dict = {"conj1": {}, "proven": {}}
    for n in config.n_range:
        t1, t2 = conj1_threshold(n), proven_threshold(n)
        lo = min(t1, t2)
        if config.source == "enumerate":
            graphs = list(enumerate_min_degree(n, lo))
        else:
            graphs = _dedupe(_graphs(config, n, lambda g: min_degree(g) >= lo, rng))
        counts = {"conj1": [0, 0], "proven": [0, 0]}
        for g in graphs:
            row = graph_row(g, config)
            delta = row["min_degree"]
            bands = [b for b, t in (("conj1", t1), ("proven", t2)) if delta >= t]
            row["bands"] = " ".join(bands)
            rows.append(row)
            for b in bands:
                counts[b][0] += 1
                if row["dp"] is False:
                    counts[b][1] += 1
                    cex.append({"claim": b, "graph6": row["graph6"], "n": n,
                                "min_degree": delta})
        for b in counts:
            agg[b][str(n)] = {"threshold": t1 if b == "conj1" else t2,
                              "graphs": counts[b][0], "not_dp": counts[b][1]}
    return ScanResult("conj1", rows, agg, cex, ROW_FIELDS + ("bands",))


def _no_long_hole(g: Graph) -> bool:
    return find_long_induced_cycle(g, 5) is None


def scan_conjecture2(config: ExperimentConfig) -> ScanResult:
    """Graphs without an induced cycle of length >= 5 should all be dp."""
    rng = make_rng(config.seed)
    rows, cex = [], []
    agg: dict = {}
    for n in config.n_range:
        graphs = _dedupe(_graphs(config, n, _no_long_hole, rng))
        bad = 0
        non_chordal = 0
        for g in graphs:
            row = graph_row(g, config)
            rows.append(row)
            non_chordal += not row["chordal"]
            if row["dp"] is False:
                bad += 1
                cex.append({"claim": "conj2", "graph6": row["graph6"], "n": n})
        agg[str(n)] = {"graphs": len(graphs), "non_chordal": non_chordal, "not_dp": bad}
    return ScanResult("conj2", rows, agg, cex)


def scan_random_dp_fraction(config: ExperimentConfig) -> ScanResult:
    """Fraction of connected G(n, p) samples that are dp, per n."""
    rng = make_rng(config.seed)
    rows: list[dict] = []
    agg: dict = {}
    for n in config.n_range:
        if config.source == "enumerate":
            graphs = list(enumerate_labeled_connected(n))
            redraws = 0
        else:
            graphs, redraws = sample_graphs(n, config.samples, config.p, rng.getrandbits(64))
        dp_count = diam2 = diam2_dp = 0
        for g in graphs:
            row = graph_row(g, config)
            row["diameter"] = diameter(g)
            rows.append(row)
            dp_count += row["dp"] is True
            if row["diameter"] == 2:
                diam2 += 1
                diam2_dp += row["dp"] is True
        agg[str(n)] = {
            "samples": len(graphs), "redraws": redraws, "dp": dp_count,
            "dp_fraction": round(dp_count / len(graphs), 6) if graphs else None,
            "diameter2": diam2,
            "diameter2_fraction": round(diam2 / len(graphs), 6) if graphs else None,
            "diameter2_dp_fraction": round(diam2_dp / diam2, 6) if diam2 else None,
        }
    # random rows may repeat a labelled graph; every sample stays counted
    return ScanResult("random", rows, agg, [], ROW_FIELDS + ("diameter",))


PRODUCT_FIELDS = ("claim", "g", "h", "graph6", "n", "hypothesis", "dp")


def _random_factor(rng: random.Random, n: int) -> Graph:
    p = rng.choice((0.3, 0.5, 0.7, 0.9))
    return connected_erdos_renyi(n, p, rng)[0]


def scan_products(config: ExperimentConfig, g_max: int = 6, h_max: int = 6) -> ScanResult:
    """Sampled checks of the lexicographic and Cartesian product claims.

    ``config.samples`` pairs are drawn per claim. The first factor's order is
    uniform on ``1..g_max``, the second's on ``1..h_max`` clipped so the
    product has at most ``PRODUCT_ORDER_CAP`` vertices; factors are
    connected G(n, p) graphs.
    """
    if g_max < 1 or h_max < 1:
        raise ConfigError("factor orders must be positive")
    if g_max > PRODUCT_ORDER_CAP:
        raise ConfigError(f"first factor order {g_max} above cap {PRODUCT_ORDER_CAP}")
    rng = make_rng(config.seed)
    rows, cex = [], []
    agg = {"lexicographic": {"pairs": 0, "hypothesis_met": 0, "violations": 0},
           "cartesian": {"pairs": 0, "hypothesis_met": 0, "violations": 0}}
    dp_memo: dict[Graph, Optional[bool]] = {}

    def dp(g: Graph) -> Optional[bool]:
        if g not in dp_memo:
            dp_memo[g] = is_dp(g).is_dp
        return dp_memo[g]

    for claim, build in (("lexicographic", lexicographic_product),
                         ("cartesian", cartesian_product)):
        for _ in range(config.samples):
            ng = rng.randint(1, g_max)
            g = _random_factor(rng, ng)
            h = _random_factor(rng, rng.randint(1, min(h_max, PRODUCT_ORDER_CAP // ng)))
            if claim == "lexicographic":
                hyp = dp(g) is True
            else:
                hyp = is_sequentially_dp(g) is not None and dp(h) is True
            prod = build(g, h)
            verdict = dp(prod) if hyp else None
            a = agg[claim]
            a["pairs"] += 1
            a["hypothesis_met"] += hyp
            row = {"claim": claim, "g": to_graph6(g), "h": to_graph6(h),
                   "graph6": to_graph6(prod), "n": prod.n, "hypothesis": hyp, "dp": verdict}
            rows.append(row)
            if hyp and verdict is not True:
                a["violations"] += 1
                cex.append(dict(row))
    return ScanResult("products", rows, agg, cex, PRODUCT_FIELDS)


def scan_census(config: ExperimentConfig) -> ScanResult:
    """Exhaustive per-n tallies comparing dp, sequential dp and the girth criterion."""
    rng = make_rng(config.seed)
    rows, cex = [], []
    agg: dict = {}
    for n in config.n_range:
        graphs = _dedupe(_graphs(config, n, None, rng))
        tally = dict.fromkeys(("graphs", "dp", "not_dp", "sequentially_dp", "dp_not_sequential",
                               "thm3_applies", "not_dp_without_thm3", "chordal"), 0)
        for g in graphs:
            row = graph_row(g, config)
            rows.append(row)
            tally["graphs"] += 1
            tally["dp"] += row["dp"] is True
            tally["not_dp"] += row["dp"] is False
            tally["chordal"] += row["chordal"]
            if row["sequentially_dp"] is not None:
                tally["sequentially_dp"] += row["sequentially_dp"]
                tally["dp_not_sequential"] += row["dp"] is True and not row["sequentially_dp"]
            tally["thm3_applies"] += row["thm3_applies"]
            tally["not_dp_without_thm3"] += row["dp"] is False and not row["thm3_applies"]
            if row["thm3_applies"] and row["dp"] is not False:
                cex.append({"claim": "thm3", "graph6": row["graph6"], "n": n})
            if row["chordal"] and row["dp"] is not True:
                cex.append({"claim": "chordal", "graph6": row["graph6"], "n": n})
        agg[str(n)] = tally
    return ScanResult("census", rows, agg, cex)


SCANS = {
    "conj1": scan_conjecture1,
    "conj2": scan_conjecture2,
    "random": scan_random_dp_fraction,
    "products": scan_products,
    "census": scan_census,
}


def analyze(g: Graph, *, exhaustive: bool = False) -> dict:
    """Everything the library knows about one connected graph, as plain data."""
    require_connected(g)
    report = is_dp(g, exhaustive=exhaustive)
    seq = is_sequentially_dp(g) if g.n <= 16 else None
    diag = theorem3_predicts_not_dp(g)
    bd = block_decomposition(g)
    hole = find_long_induced_cycle(g, 4)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "degrees": g.degrees(),
        "min_degree": min_degree(g),
        "girth": _girth_value(g),
        "diameter": diameter(g),
        "chordal": is_chordal(g),
        "simplicial": simplicial_vertices(g),
        "articulation": bd.articulation.tolist(),
        "blocks": [b.tolist() for b in bd.blocks],
        "induced_hole": hole,
        "dp": report.to_dict(timing=False),
        "sequential_ordering": list(seq.order) if seq is not None else None,
        "theorems": diag.to_dict(),
    }


def witness_dot(g: Graph, k: Optional[int] = None) -> str:
    """DOT rendering highlighting the dp witness of order ``k`` (default ``n - 1``)."""
    report = is_dp(g, exhaustive=True)
    k = g.n - 1 if k is None else k
    hl = None
    if 1 <= k <= g.n:
        v = report.verdict(k)
        if v.status == WITNESS:
            hl = v.vertices
    return to_dot(g, highlight=hl)


__all__ = ["ExperimentConfig", "ScanResult", "ConfigError", "SCANS", "analyze", "graph_row",
           "scan_conjecture1", "scan_conjecture2", "scan_random_dp_fraction", "scan_products",
           "scan_census", "witness_dot", "GraphError"]
