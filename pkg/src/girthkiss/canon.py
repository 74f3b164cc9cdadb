"""Canonical labeling and automorphism-group order of small simple graphs.

Individualization-refinement: colour refinement to an equitable partition,
then branch on every vertex of the first smallest non-singleton cell. Each
leaf (discrete partition) labels the graph; the canonical form is the leaf
with the largest adjacency certificate. The leaves carrying that certificate
form a single orbit of Aut(G), on which Aut(G) acts freely, so their number
is |Aut(G)|.

The full search tree is explored (no automorphism pruning), which keeps the
order computation exact and is cheap for the graph sizes handled here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graph_core import MultiGraph, from_edge_list, to_graph6

Adjacency = Sequence[Sequence[int]]


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple[int, ...]  # labeling[v] = canonical position of vertex v
    certificate: int
    aut_order: int

    def relabel(self, adj: Adjacency) -> MultiGraph:
        lab = self.labeling
        edges = sorted(
            (min(lab[u], lab[w]), max(lab[u], lab[w])) for u in range(len(adj)) for w in adj[u] if u < w
        )
        return from_edge_list(len(adj), edges)

    def graph6(self, adj: Adjacency) -> str:
        return to_graph6(self.relabel(adj))


def _rank(keys: list) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], adj: Adjacency) -> list[int]:
    ncells = len(set(colors))
    n = len(colors)
    while ncells < n:
        keys = [(colors[v], tuple(sorted([colors[w] for w in adj[v]]))) for v in range(n)]
        colors = _rank(keys)
        k = max(colors) + 1
        if k == ncells:
            break
        ncells = k
    return colors


def vertex_invariant(adj: Adjacency) -> list[tuple]:
    """Isomorphism-invariant vertex labels used to seed the refinement.

    Degree, triangles through v, and the sizes of the BFS layers around v.
    """
    n = len(adj)
    sets = [set(a) for a in adj]
    out = []
    for v in range(n):
        tri = sum(1 for a in adj[v] for b in adj[v] if a < b and b in sets[a])
        seen = {v}
        frontier = [v]
        layers = []
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            if nxt:
                layers.append(len(nxt))
            frontier = nxt
        out.append((len(adj[v]), tri, tuple(layers)))
    return out


def canonical_form(adj: Adjacency) -> CanonicalForm:
    """Canonical labeling, certificate and |Aut| of a simple graph given by adjacency lists."""
    n = len(adj)
    if n == 0:
        return CanonicalForm((), 0, 1)
    colors = _refine(_rank(vertex_invariant(adj)), adj)
    edges = [(u, w) for u in range(n) for w in adj[u] if u < w]

    best_cert = -1
    best_lab: list[int] = []
    count = 0
    stack = [colors]
    while stack:
        col = stack.pop()
        sizes = Counter(col)
        if len(sizes) == n:
            cert = 0
            for u, w in edges:
                a, b = col[u], col[w]
                cert |= 1 << (a * n + b if a < b else b * n + a)
            if cert > best_cert:
                best_cert, best_lab, count = cert, col, 1
            elif cert == best_cert:
                count += 1
            continue
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if col[v] == target]
        doubled = [2 * c + (c == target) for c in col]
        for v in reversed(cell):
            child = doubled[:]
            child[v] -= 1
            stack.append(_refine(_rank(child), adj))
    return CanonicalForm(tuple(best_lab), best_cert, count)


def adjacency(g: MultiGraph) -> list[list[int]]:
    if not g.is_simple():
        raise ValueError("canonical labeling needs a simple graph")
    return [g.neighbors(v) for v in range(g.n)]


def aut_order(g: MultiGraph) -> int:
    """Order of the automorphism group of a simple graph (n <= 64)."""
    if g.n > 64:
        raise ValueError("aut_order supports at most 64 vertices")
    return canonical_form(adjacency(g)).aut_order


def canonical_graph6(g: MultiGraph) -> str:
    adj = adjacency(g)
    return canonical_form(adj).graph6(adj)
