"""Bond-incident-degree indices: sum over edges uv of psi(d_u, d_v)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .families import FamilyId, min_n
from .graph import Graph, line_graph

KINDS = ("CHI", "PL", "SEI", "M1", "PLATT", "CUSTOM")

TIE_RTOL = 1e-9


@dataclass(frozen=True)
class IndexSpec:
    """A BID index.

    ``param`` is the exponent alpha for CHI (general sum-connectivity) and
    PL (general Platt), the base a for SEI (variable sum exdeg), and is
    ignored for M1, PLATT and CUSTOM.
    """

    kind: str
    param: float = 1.0
    custom_psi: Optional[Callable[[float, float], float]] = None
    name: str = ""

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise ValueError(f"unknown index kind {self.kind!r}")
        if kind in ("CHI", "PL") and self.param == 0:
            raise ValueError(f"{kind} needs a non-zero exponent")
        if kind == "SEI" and (self.param <= 0 or self.param == 1):
            raise ValueError(f"SEI needs a > 0 and a != 1, got {self.param}")
        if kind == "CUSTOM" and self.custom_psi is None:
            raise ValueError("CUSTOM index needs custom_psi")

    @classmethod
    def chi(cls, alpha: float) -> "IndexSpec":
        return cls("CHI", alpha)

    @classmethod
    def pl(cls, alpha: float) -> "IndexSpec":
        return cls("PL", alpha)

    @classmethod
    def sei(cls, a: float) -> "IndexSpec":
        return cls("SEI", a)

    @property
    def integral(self) -> bool:
        """True when every psi value is an integer and the exact path applies."""
        if self.kind in ("M1", "PLATT"):
            return True
        if self.kind in ("CHI", "PL"):
            return float(self.param).is_integer() and self.param > 0
        return False

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if self.kind in ("CHI", "PL", "SEI"):
            return f"{self.kind.lower()}({_fmt(self.param)})"
        return self.kind.lower()

    def psi(self, x: float, y: float) -> float:
        """Real extension of psi, used by the condition checker and the shift identity."""
        k = self.kind
        if k == "CHI":
            return (x + y) ** self.param
        if k == "PL":
            base = x + y - 2
            if base == 0:
                if self.param < 0:
                    raise ValueError("PL with negative exponent is undefined on an edge with d_u + d_v = 2")
                return 0.0
            return base ** self.param
        if k == "SEI":
            return self.param ** x + self.param ** y
        if k == "M1":
            return x + y
        if k == "PLATT":
            return x + y - 2
        return self.custom_psi(x, y)

    def psi_int(self, x: int, y: int) -> int:
        k = self.kind
        if k == "M1":
            return x + y
        if k == "PLATT":
            return x + y - 2
        e = int(self.param)
        if k == "CHI":
            return (x + y) ** e
        if k == "PL":
            return (x + y - 2) ** e
        raise ValueError(f"{self.label} has no exact integer path")


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


@dataclass(frozen=True)
class IndexValue:
    value: float
    exact_integer: Optional[int] = None

    def key(self):
        """Comparable value: the exact integer when present."""
        return self.exact_integer if self.exact_integer is not None else self.value

    def __float__(self):
        return float(self.value)


def evaluate_bid(spec: IndexSpec, g: Graph) -> IndexValue:
    d = g.degrees()
    if spec.integral:
        total = sum(spec.psi_int(d[u], d[v]) for u, v in g.edges)
        return IndexValue(float(total), total)
    # fsum keeps the float path independent of edge order
    return IndexValue(math.fsum(spec.psi(d[u], d[v]) for u, v in g.edges))


def values_tied(a: IndexValue, b: IndexValue) -> bool:
    if a.exact_integer is not None and b.exact_integer is not None:
        return a.exact_integer == b.exact_integer
    return math.isclose(a.value, b.value, rel_tol=TIE_RTOL)


# Edge-type tables for closed forms: (multiplicity, d_u, d_v) as functions of n.
# Vertex 0 has degree n-1; a remainder vertex of remainder-degree r has degree r+1.
def _edge_types(tag: str, n: int) -> list[tuple[int, int, int]]:
    h = n - 1
    table = {
        "S": [(n - 1, h, 1)],
        "S_PLUS": [(2, h, 2), (1, 2, 2), (n - 3, h, 1)],
        "B1": [(1, h, 3), (2, h, 2), (2, 3, 2), (n - 4, h, 1)],
        "B2": [(4, h, 2), (2, 2, 2), (n - 5, h, 1)],
        "G4": [(1, h, 4), (3, h, 2), (3, 4, 2), (n - 5, h, 1)],
        "G5": [(3, h, 3), (3, 3, 3), (n - 4, h, 1)],
        "H4": [(1, h, 5), (4, h, 2), (4, 5, 2), (n - 6, h, 1)],
        "H5": [(1, h, 4), (2, h, 3), (1, h, 2), (2, 4, 3), (1, 3, 3), (1, 4, 2), (n - 5, h, 1)],
        "H8": [(4, h, 3), (4, 3, 3), (n - 5, h, 1)],
    }
    return table[tag]


CLOSED_FORM_TAGS = ("S", "S_PLUS", "B1", "B2", "G4", "G5", "H4", "H5", "H8")


def closed_form(spec: IndexSpec, fid: FamilyId):
    """Analytic index value of a named family as a function of n.

    Returns an ``int`` on the exact path, otherwise a float.
    """
    if spec.kind not in ("CHI", "PL", "SEI"):
        raise ValueError(f"closed forms cover CHI, PL and SEI, not {spec.kind}")
    if fid.tag not in CLOSED_FORM_TAGS:
        raise ValueError(f"no closed form for family {fid.tag}; supported: {', '.join(CLOSED_FORM_TAGS)}")
    if fid.n < min_n(fid.tag):
        raise ValueError(f"{fid.tag} needs n >= {min_n(fid.tag)}, got n={fid.n}")
    terms = [(c, x, y) for c, x, y in _edge_types(fid.tag, fid.n) if c]
    if spec.integral:
        return sum(c * spec.psi_int(x, y) for c, x, y in terms)
    return math.fsum(c * spec.psi(x, y) for c, x, y in terms)


def line_graph_size_check(g: Graph) -> bool:
    """Edge count of L(g) equals M1(g)/2 - m(g)."""
    if not g.is_connected():
        raise ValueError("line_graph_size_check needs a connected graph")
    if g.m == 0:
        return True
    m1 = evaluate_bid(IndexSpec("M1"), g).exact_integer
    return 2 * line_graph(g).m == m1 - 2 * g.m
