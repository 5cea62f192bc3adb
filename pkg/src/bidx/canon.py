"""Canonical labeling by colour refinement plus individualization search.

The canonical labeling is the one, among all leaves of the search tree, whose
relabeled adjacency bit string (graph6 column order) is lexicographically
smallest.  Leaves with equal strings yield automorphisms, which prune sibling
branches lying in the same orbit of the current pointwise stabiliser.
"""

from __future__ import annotations

from .graph import Graph, encode_graph6

MAX_CANON_N = 12

CanonicalForm = bytes


def _refine(adj: list[int], colors: list[int]) -> list[int]:
    """Equitable refinement; colours are ranks of an ordered signature."""
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        masks = [0] * ncolors
        for v, c in enumerate(colors):
            masks[c] |= 1 << v
        sigs = [(colors[v], tuple((adj[v] & mk).bit_count() for mk in masks)) for v in range(n)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors, ncolors = new, len(ranking)


def _individualize(colors: list[int], w: int) -> list[int]:
    c = colors[w]
    out = [2 * x + (1 if x == c else 0) for x in colors]
    out[w] = 2 * c
    ranks = {x: r for r, x in enumerate(sorted(set(out)))}
    return [ranks[x] for x in out]


def _certificate(adj: list[int], colors: list[int]) -> int:
    n = len(adj)
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    bits = 0
    for j in range(1, n):
        row = adj[inv[j]]
        for i in range(j):
            bits = (bits << 1) | ((row >> inv[i]) & 1)
    return bits


def _orbit_rep(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` such that ``g.relabel(perm)`` is the canonical graph."""
    return labeling_and_automorphisms(g)[0]


def labeling_and_automorphisms(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Canonical labeling plus the automorphisms met during the search.

    The automorphisms generate a subgroup of Aut(g), not necessarily all of it.
    """
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n == 1:
        return [0], []

    best: list = [None, None]  # certificate, colouring
    automorphisms: list[list[int]] = []

    def search(colors: list[int], fixed: list[int]):
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            cert = _certificate(adj, colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, colors
            elif cert == best[0]:
                # leaf relabelings agree: best^-1 o leaf is an automorphism
                inv_best = [0] * n
                for v, c in enumerate(best[1]):
                    inv_best[c] = v
                automorphisms.append([inv_best[colors[v]] for v in range(n)])
            return
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for w in cell:
            if explored:
                parent = list(range(n))
                for gamma in automorphisms:
                    if all(gamma[f] == f for f in fixed):
                        for x in range(n):
                            a, b = _orbit_rep(parent, x), _orbit_rep(parent, gamma[x])
                            if a != b:
                                parent[max(a, b)] = min(a, b)
                rw = _orbit_rep(parent, w)
                if any(_orbit_rep(parent, e) == rw for e in explored):
                    continue
            explored.append(w)
            search(_refine(adj, _individualize(colors, w)), fixed + [w])

    degs = [bin(a).count("1") for a in adj]
    ranks = {d: r for r, d in enumerate(sorted(set(degs)))}
    search(_refine(adj, [ranks[d] for d in degs]), [])
    return list(best[1]), automorphisms


def canonical_graph(g: Graph) -> Graph:
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonical labeling supports n <= {MAX_CANON_N}, got {g.n}")
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
