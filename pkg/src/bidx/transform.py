"""Edge shift toward a dominating vertex, and the iterated procedure."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Optional

from .graph import Graph, GraphError
from .indices import IndexSpec, evaluate_bid

MONOTONE_TOL = 1e-12


@dataclass(frozen=True)
class ShiftMove:
    """Move of ``v``'s private neighbours ``shifted`` over to ``u`` across the edge ``uv``."""

    u: int
    v: int
    shifted: tuple
    delta: Optional[float] = None

    @property
    def s(self) -> int:
        return len(self.shifted)

    @property
    def non_monotone(self) -> bool:
        return self.delta is not None and self.delta < -MONOTONE_TOL

    def to_dict(self) -> dict:
        d = asdict(self)
        d["shifted"] = list(self.shifted)
        d["s"] = self.s
        return d


def private_neighbors(g: Graph, u: int, v: int) -> list[int]:
    """``N(v) minus (N(u) and u)``, sorted."""
    return sorted(g.neighbors(v) - g.neighbors(u) - {u})


def _apply(g: Graph, u: int, v: int, shifted) -> Graph:
    return g.with_edges(add=[(w, u) for w in shifted], remove=[(w, v) for w in shifted])


def five_sum_delta(g: Graph, u: int, v: int, spec: IndexSpec) -> float:
    """BID(G*) - BID(G) assembled from the five groups of edges whose
    degree pair changes under the shift: u's private neighbours, common
    neighbours seen from u and from v, the shifted vertices, and uv itself.
    """
    f = spec.psi
    d = g.degrees()
    shifted = private_neighbors(g, u, v)
    s = len(shifted)
    du, dv = d[u], d[v]
    Nu, Nv = g.neighbors(u), g.neighbors(v)
    common = sorted(Nu & Nv)
    terms = [
        math.fsum(f(du + s, d[w]) - f(du, d[w]) for w in sorted(Nu - Nv - {v})),
        math.fsum(f(du + s, d[z]) - f(du, d[z]) for z in common),
        math.fsum(f(dv - s, d[z]) - f(dv, d[z]) for z in common),
        math.fsum(f(du + s, d[w]) - f(dv, d[w]) for w in shifted),
        f(du + s, dv - s) - f(du, dv),
    ]
    return math.fsum(terms)


def edge_shift(g: Graph, u: int, v: int, spec: IndexSpec | None = None):
    """Apply the shift; returns ``(new_graph, move, delta)``.

    ``delta`` is BID(new) - BID(g) under ``spec`` (None without a spec).
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    shifted = private_neighbors(g, u, v)
    if not shifted:
        raise GraphError(f"vertex {v} has no neighbour outside N({u}); nothing to shift")
    h = _apply(g, u, v, shifted)
    assert h.m == g.m
    if g.is_connected():
        assert h.is_connected()
    delta = None
    if spec is not None:
        before, after = evaluate_bid(spec, g), evaluate_bid(spec, h)
        if before.exact_integer is not None:
            delta = after.exact_integer - before.exact_integer
        else:
            delta = after.value - before.value
    return h, ShiftMove(u, v, tuple(shifted), delta), delta


def choose_move(g: Graph) -> tuple[int, int] | None:
    """Smallest-label max-degree vertex u, and its neighbour v with the most
    private neighbours (smallest label on ties); None if u already dominates.
    """
    d = g.degrees()
    top = max(d)
    if top == g.n - 1:
        return None
    u = d.index(top)
    best = None
    for v in sorted(g.neighbors(u)):
        s = len(private_neighbors(g, u, v))
        if s and (best is None or s > best[0]):
            best = (s, v)
    if best is None:
        raise GraphError("graph is disconnected; no shift reaches a dominating vertex")
    return u, best[1]


def dominate(g: Graph, spec: IndexSpec | None = None):
    """Shift repeatedly until some vertex has degree n-1.

    Returns ``(graph, trace)``.  Each move strictly raises the maximum
    degree, so the trace has at most n-1 entries.  Moves whose delta is
    negative are flagged via ``ShiftMove.non_monotone``.
    """
    if not g.is_connected():
        raise GraphError("dominate needs a connected graph")
    trace = []
    while (choice := choose_move(g)) is not None:
        g, move, _ = edge_shift(g, *choice, spec=spec)
        trace.append(move)
    return g, trace


def replay_trace(g: Graph, trace) -> Graph:
    for move in trace:
        g, _, _ = edge_shift(g, move.u, move.v)
    return g


def trace_to_json(trace) -> str:
    return json.dumps([m.to_dict() for m in trace], sort_keys=True)
