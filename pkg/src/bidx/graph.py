"""Simple undirected graphs, line graphs, graph6 and edge-list text codecs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6Error(ValueError):
    """Malformed graph6 text. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.  Use :func:`build_graph`
    to construct from arbitrary pair lists.
    """

    n: int
    edges: frozenset
    _adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e!r} is not a normalised pair in [0, {self.n})")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        """Degrees indexed by vertex label."""
        return [len(s) for s in self._adj]

    def max_degree(self) -> int:
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(_pair(perm[u], perm[v]) for u, v in self.edges))

    def with_edges(self, add: Iterable = (), remove: Iterable = ()) -> "Graph":
        es = set(self.edges)
        es.difference_update(_pair(u, v) for u, v in remove)
        es.update(_pair(u, v) for u, v in add)
        return Graph(self.n, frozenset(es))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edge_list: Iterable) -> Graph:
    """Build a :class:`Graph`, collapsing duplicate pairs.

    Raises :class:`GraphError` on self-loops or endpoints outside ``[0, n)``.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    es = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}: {tuple(pair)!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {tuple(pair)!r} has an endpoint outside [0, {n})")
        es.add(_pair(u, v))
    return Graph(n, frozenset(es))


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` corresponds to ``g.sorted_edges()[i]``."""
    edges = g.sorted_edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph has no vertices")
    index = {e: i for i, e in enumerate(edges)}
    out = set()
    for v in range(g.n):
        incident = sorted(index[_pair(v, w)] for w in g.neighbors(v))
        out.update(combinations(incident, 2))
    return Graph(len(edges), frozenset(out))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


# graph6 -------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise GraphError(f"graph6 encoding supports n <= 258047, got {n}")


def _upper_triangle(n: int) -> Iterator[tuple[int, int]]:
    # column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    bits = [1 if (i, j) in g.edges else 0 for i, j in _upper_triangle(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        body.append(chunk + 63)
    return (_encode_n(g.n) + bytes(body)).decode("ascii")


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    data = s.encode("ascii", errors="replace")
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise Graph6Error(f"invalid graph6 byte {data[pos]!r}", pos)
    pos = start
    if pos >= len(data):
        raise Graph6Error("missing vertex count", pos)
    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6Error("vertex counts above 258047 are not supported", pos)
        if pos + 4 > len(data):
            raise Graph6Error("truncated vertex count", len(data))
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if n < 1:
        raise Graph6Error("graph6 with zero vertices", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream: expected {need} bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit stream", pos + need)
    edges = []
    k = 0
    for i, j in _upper_triangle(n):
        byte = body[k // 6] - 63
        if (byte >> (5 - k % 6)) & 1:
            edges.append((i, j))
        k += 1
    return Graph(n, frozenset(edges))


def graph6_codec(direction: str, payload):
    """Dispatch to :func:`encode_graph6` or :func:`decode_graph6`."""
    if direction == "encode":
        return encode_graph6(payload)
    if direction == "decode":
        return decode_graph6(payload)
    raise ValueError(f"direction must be 'encode' or 'decode', got {direction!r}")


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [decode_graph6(line) for line in lines if line.strip()]


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)


# edge-list text -------------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n=<int>`` followed by one ``u v`` pair per line."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0][1].startswith("n="):
        raise GraphError("edge list must start with a line 'n=<int>'")
    try:
        n = int(lines[0][1][2:])
    except ValueError:
        raise GraphError(f"line {lines[0][0]}: bad vertex count {lines[0][1]!r}") from None
    pairs = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return build_graph(n, pairs)
