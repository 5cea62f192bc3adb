"""Isomorph-free enumeration of connected graphs and brute-force extremal search.

Connected (n, m) classes are grown from their parents: trees by attaching a
leaf to an (n-1)-vertex tree, graphs with a cycle by adding an edge to a
connected (n, m-1) graph (deleting a cycle edge keeps a graph connected, so
every class is reached).  Candidates are deduplicated by canonical form and
emitted in ascending canonical-form order.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import CanonicalForm, canonical_form, labeling_and_automorphisms
from .graph import Graph, decode_graph6
from .indices import IndexSpec, IndexValue, evaluate_bid, values_tied

MAX_ENUM_N = 10

_connected_cache: dict[tuple[int, int], list[CanonicalForm]] = {}
_remainder_cache: dict[tuple[int, int], list[CanonicalForm]] = {}


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("BIDX_WORKERS", "1") or 1)
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def feasible(n: int, m: int) -> bool:
    return n >= 1 and n - 1 <= m <= n * (n - 1) // 2


def _children_forms(args) -> set[CanonicalForm]:
    forms, mode = args
    out = set()
    for code in forms:
        p = decode_graph6(code.decode("ascii"))
        if mode == "leaf":
            n = p.n + 1
            base = Graph(n, p.edges)
            for v in range(p.n):
                out.add(canonical_form(base.with_edges(add=[(v, p.n)])))
        else:
            for e in _nonedge_orbit_reps(p):
                out.add(canonical_form(p.with_edges(add=[e])))
    return out


def _nonedge_orbit_reps(g: Graph) -> list[tuple[int, int]]:
    """One non-edge per orbit of the automorphisms found while labeling ``g``."""
    _, autos = labeling_and_automorphisms(g)
    reps, seen = [], set()
    for e in combinations(range(g.n), 2):
        if e in g.edges or e in seen:
            continue
        reps.append(e)
        orbit, stack = {e}, [e]
        while stack:
            u, v = stack.pop()
            for gamma in autos:
                a, b = gamma[u], gamma[v]
                img = (a, b) if a < b else (b, a)
                if img not in orbit:
                    orbit.add(img)
                    stack.append(img)
        seen |= orbit
    return reps


def _expand(parents: list[CanonicalForm], mode: str, workers: int) -> list[CanonicalForm]:
    if workers > 1 and len(parents) > 4 * workers:
        chunks = [parents[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            found = set().union(*pool.map(_children_forms, [(c, mode) for c in chunks]))
    else:
        found = _children_forms((parents, mode))
    return sorted(found)


def _connected_forms(n: int, m: int, workers: int) -> list[CanonicalForm]:
    key = (n, m)
    if key in _connected_cache:
        return _connected_cache[key]
    if not feasible(n, m):
        forms = []
    elif n == 1:
        forms = [canonical_form(Graph(1, frozenset()))]
    elif m == n - 1:
        forms = _expand(_connected_forms(n - 1, m - 1, workers), "leaf", workers)
    else:
        forms = _expand(_connected_forms(n, m - 1, workers), "edge", workers)
    _connected_cache[key] = forms
    return forms


def enumerate_connected(n: int, m: int, workers: int | None = 1) -> Iterator[Graph]:
    """One canonical representative per class of connected (n, m)-graphs."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    for code in _connected_forms(n, m, resolve_workers(workers)):
        yield decode_graph6(code.decode("ascii"))


def count_connected(n: int, m: int | None = None) -> int:
    if m is None:
        return sum(count_connected(n, mm) for mm in range(n - 1, n * (n - 1) // 2 + 1))
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    return len(_connected_forms(n, m, 1))


def _remainder_forms(r: int, k: int) -> list[CanonicalForm]:
    """All k-edge graphs on r vertices (isolated vertices allowed)."""
    key = (r, k)
    if key in _remainder_cache:
        return _remainder_cache[key]
    if k < 0 or k > r * (r - 1) // 2:
        forms = []
    elif k == 0:
        forms = [canonical_form(Graph(r, frozenset()))]
    else:
        forms = _expand(_remainder_forms(r, k - 1), "edge", 1)
    _remainder_cache[key] = forms
    return forms


def join_dominating(remainder: Graph) -> Graph:
    """Vertex 0 joined to a copy of ``remainder`` on vertices 1..r."""
    r = remainder.n
    edges = [(0, i) for i in range(1, r + 1)] + [(u + 1, v + 1) for u, v in remainder.edges]
    return Graph(r + 1, frozenset(edges))


def enumerate_dominating(n: int, k: int) -> Iterator[Graph]:
    """Classes of n-vertex graphs made of a dominating vertex plus k remainder edges."""
    if n < 2:
        raise ValueError("enumerate_dominating needs n >= 2")
    forms = set()
    for code in _remainder_forms(n - 1, k):
        forms.add(canonical_form(join_dominating(decode_graph6(code.decode("ascii")))))
    for code in sorted(forms):
        yield decode_graph6(code.decode("ascii"))


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    m: int
    spec: IndexSpec
    direction: str
    optimum: IndexValue
    optimizers: tuple  # sorted CanonicalForm bytes
    total_enumerated: int

    @property
    def optimizer_graph6(self) -> list[str]:
        return [c.decode("ascii") for c in self.optimizers]

    def optimizer_graphs(self) -> list[Graph]:
        return [decode_graph6(s) for s in self.optimizer_graph6]

    def to_dict(self) -> dict:
        opt = self.optimum.exact_integer if self.optimum.exact_integer is not None else self.optimum.value
        return {
            "n": self.n,
            "m": self.m,
            "index": self.spec.kind.lower(),
            "param": float(self.spec.param) if self.spec.kind in ("CHI", "PL", "SEI") else None,
            "direction": self.direction.lower(),
            "optimum": opt,
            "optimizers": self.optimizer_graph6,
            "total_enumerated": self.total_enumerated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


CSV_COLUMNS = ["n", "m", "index", "param", "direction", "optimum", "optimizer_graph6_list"]


def results_to_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in results:
        d = r.to_dict()
        w.writerow([d["n"], d["m"], d["index"], "" if d["param"] is None else d["param"],
                    d["direction"], repr(d["optimum"]), " ".join(d["optimizers"])])
    return buf.getvalue()


def extremal_search(n: int, m: int, spec: IndexSpec, direction: str = "MAX",
                    workers: int | None = 1, dominating_only: bool = False) -> ExtremalResult:
    """Optimum and full optimizer set over all connected (n, m)-graphs.

    With ``dominating_only`` the search is restricted to graphs having a
    vertex of degree n-1.
    """
    direction = direction.upper()
    if direction not in ("MAX", "MIN"):
        raise ValueError(f"direction must be MAX or MIN, got {direction!r}")
    if not feasible(n, m):
        raise ValueError(f"no connected graph with n={n}, m={m}")
    if dominating_only:
        graphs = list(enumerate_dominating(n, m - (n - 1)))
    else:
        graphs = list(enumerate_connected(n, m, workers))
    values = [evaluate_bid(spec, g) for g in graphs]
    sign = 1 if direction == "MAX" else -1
    best = max(values, key=lambda v: sign * v.key())
    winners = sorted(canonical_form(g) for g, v in zip(graphs, values) if values_tied(v, best))
    return ExtremalResult(n, m, spec, direction, best, tuple(winners), len(graphs))
