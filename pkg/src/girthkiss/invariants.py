"""Girth, kissing number, depth, diameter and the kissing/Moore bounds.

Kissing numbers count *oriented* shortest cycles: every undirected shortest
cycle contributes two (K4 has 4 triangles and kissing number 8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .graph_core import MultiGraph, bfs_distance_list, bfs_distances, geodesic_walks

INT64_MAX = (1 << 63) - 1


class _Infinite:
    """Sentinel for an infinite girth, depth or diameter.

    Compares greater than every integer and equal only to itself.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "INF"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("girthkiss.INFINITE")

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()

Extended = Union[int, _Infinite]


class InvariantError(AssertionError):
    """An internal consistency check failed (indicates a bug, not bad input)."""


# --------------------------------------------------------------------------
# girth and shortest closed geodesics


def girth(g: MultiGraph, roots=None) -> Extended:
    """Length of the shortest closed geodesic, or INFINITE for forests.

    Runs a breadth-first search from every root (all vertices by default),
    never stepping back along the dart it arrived by, and stops each search
    once it can no longer beat the current best. Restricting ``roots`` gives
    the exact girth only when some root lies on a shortest cycle, e.g. any
    single root of a vertex-transitive graph.
    """
    heads, out = g.heads, g.out
    best = math.inf
    for r in range(g.n) if roots is None else roots:
        dist = {r: 0}
        arrived = {r: -1}
        frontier = [r]
        level = 0
        while frontier and 2 * level + 1 < best:
            nxt = []
            for u in frontier:
                a = arrived[u]
                back = a ^ 1 if a >= 0 else -1
                du = dist[u]
                for d in out[u]:
                    if d == back:
                        continue
                    w = heads[d]
                    dw = dist.get(w)
                    if dw is None:
                        dist[w] = level + 1
                        arrived[w] = d
                        nxt.append(w)
                    elif du + dw + 1 < best:
                        best = du + dw + 1
            frontier = nxt
            level += 1
        if best == 1:
            break
    return INFINITE if best == math.inf else int(best)


def shortest_closed_geodesics(
    g: MultiGraph, start: int | None = None, length: Extended | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield dart tuples of closed geodesics of the given length (default: girth).

    Each closed geodesic is yielded once per starting dart, so every oriented
    cycle of length ``g`` appears ``g`` times when ``start`` is None and once
    per visit of ``start`` otherwise.
    """
    if length is None:
        length = girth(g)
    if length is INFINITE or length <= 0:
        return
    heads, out = g.heads, g.out
    starts = range(g.n) if start is None else (start,)
    for v in starts:
        dist = bfs_distances(g, v, limit=length)
        far = length + 1
        path: list[int] = []

        def extend(u: int, remaining: int) -> Iterator[tuple[int, ...]]:
            back = path[-1] ^ 1
            if remaining == 1:
                first_back = path[0] ^ 1
                for d in out[u]:
                    if d != back and heads[d] == v and d != first_back:
                        yield tuple(path) + (d,)
                return
            for d in out[u]:
                if d == back:
                    continue
                w = heads[d]
                if dist.get(w, far) <= remaining - 1:
                    path.append(d)
                    yield from extend(w, remaining - 1)
                    path.pop()

        for d0 in out[v]:
            w = heads[d0]
            if length == 1:
                if w == v:
                    yield (d0,)
                continue
            if dist.get(w, far) <= length - 1:
                path.append(d0)
                yield from extend(w, length - 1)
                path.pop()


def count_based_shortest_geodesics(g: MultiGraph, start: int | None = None) -> int:
    """Closed geodesics of length girth(g), counted with base dart and orientation."""
    gi = girth(g)
    if gi is INFINITE:
        return 0
    return sum(1 for _ in shortest_closed_geodesics(g, start, gi))


def kissing_number(g: MultiGraph) -> int:
    gi = girth(g)
    if gi is INFINITE:
        return 0
    based = sum(1 for _ in shortest_closed_geodesics(g, None, gi))
    kiss, rem = divmod(based, gi)
    if rem:
        raise InvariantError(f"based count {based} not divisible by girth {gi}")
    return kiss


def _min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


def _window(word: tuple[int, ...], length: int) -> tuple[int, ...]:
    reps = -(-length // len(word))
    return (word * reps)[:length]


def check_fellow_travel(g: MultiGraph) -> bool:
    """True iff no two distinct shortest closed geodesics share a long subwalk.

    "Long" means floor(g/2) + 1 darts. This can never fail; it is kept as an
    executable oracle for the enumeration code.
    """
    gi = girth(g)
    if gi is INFINITE:
        return True
    span = gi // 2 + 1
    owner: dict[tuple[int, ...], tuple[int, ...]] = {}
    for geo in shortest_closed_geodesics(g, None, gi):
        cyc = _min_rotation(geo)
        key = _window(geo, span)
        seen = owner.setdefault(key, cyc)
        if seen != cyc:
            return False
    return True


def prefixes_injective(g: MultiGraph) -> bool:
    """Based shortest geodesics are determined by their first floor(g/2)+1 darts."""
    gi = girth(g)
    if gi is INFINITE:
        return True
    span = gi // 2 + 1
    seen = set()
    for geo in shortest_closed_geodesics(g, None, gi):
        key = _window(geo, span)
        if key in seen:
            return False
        seen.add(key)
    return True


def walks_contained(g: MultiGraph, length: int, geodesics=None) -> bool:
    """Is every geodesic walk of ``length`` darts a window of a shortest closed geodesic?"""
    if geodesics is None:
        geodesics = list(shortest_closed_geodesics(g))
    windows = {_window(geo, length) for geo in geodesics}
    return all(w in windows for w in geodesic_walks(g, length))


def moore_surjective(g: MultiGraph) -> bool:
    gi = girth(g)
    if gi is INFINITE:
        return False
    return walks_contained(g, gi // 2 + 1)


# --------------------------------------------------------------------------
# other invariants


def is_cycle_graph(g: MultiGraph) -> bool:
    return g.n >= 1 and all(k == 2 for k in g.degrees()) and g.is_connected()


def depth(g: MultiGraph) -> Extended:
    """Largest L such that every geodesic walk of length L lies on a shortest closed geodesic.

    "Lies on" means: is a window of the periodic extension of the closed
    geodesic. Cycle graphs have INFINITE depth, forests depth 0; otherwise the
    search stops at floor(g/2) + 1, beyond which the property cannot hold.
    """
    if not g.is_connected():
        raise ValueError("depth is only defined for connected graphs")
    gi = girth(g)
    if gi is INFINITE:
        return 0
    if is_cycle_graph(g):
        return INFINITE
    geos = list(shortest_closed_geodesics(g, None, gi))
    best = 0
    for length in range(1, gi // 2 + 2):
        if walks_contained(g, length, geos):
            best = length
    return best


def diameter(g: MultiGraph) -> Extended:
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        dist = bfs_distance_list(g, v)
        if min(dist) < 0:
            return INFINITE
        best = max(best, max(dist))
    return best


def moore_bound(d: int, g: int) -> int:
    """Fewest vertices a d-regular graph of girth g can have.

    Defined here for every g >= 1 so that bouquets of loops (g = 1) and
    dipoles (g = 2) are covered by the same formula.
    """
    if d < 2 or g < 1:
        raise ValueError("moore_bound needs d >= 2 and g >= 1")
    if g % 2:
        value = 1 + d * sum((d - 1) ** j for j in range((g - 1) // 2))
    else:
        value = 2 * sum((d - 1) ** j for j in range(g // 2))
    if value > INT64_MAX:
        raise OverflowError(f"moore_bound({d}, {g}) exceeds 64 bits")
    return value


def regular_degree(g: MultiGraph) -> int | None:
    degs = g.degrees()
    if degs and all(k == degs[0] for k in degs):
        return degs[0]
    return None


def is_moore(g: MultiGraph) -> bool:
    d = regular_degree(g)
    if d is None or d < 2 or not g.is_connected():
        return False
    gi = girth(g)
    if gi is INFINITE:
        return False
    return g.n == moore_bound(d, gi)


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    m: int
    d_min: int
    d_max: int
    regular: bool
    girth: Extended
    based_count: int
    kiss: int
    depth: Extended
    diameter: Extended
    moore: bool

    def as_dict(self) -> dict:
        out = {}
        for k, v in self.__dict__.items():
            out[k] = str(v) if v is INFINITE else v
        return out


def compute_invariants(g: MultiGraph, with_depth: bool = True) -> GraphInvariants:
    degs = g.degrees() or [0]
    gi = girth(g)
    based = 0
    if gi is not INFINITE:
        based = sum(1 for _ in shortest_closed_geodesics(g, None, gi))
    kiss, rem = divmod(based, gi) if gi is not INFINITE else (0, 0)
    if rem:
        raise InvariantError(f"based count {based} not divisible by girth {gi}")
    dep: Extended = 0
    if with_depth and g.is_connected():
        dep = depth(g)
    return GraphInvariants(
        n=g.n,
        m=g.m,
        d_min=min(degs),
        d_max=max(degs),
        regular=min(degs) == max(degs),
        girth=gi,
        based_count=based,
        kiss=kiss,
        depth=dep,
        diameter=diameter(g),
        moore=is_moore(g),
    )


# --------------------------------------------------------------------------
# bounds


def _log(base: float, x: float) -> float:
    return math.log(x) / math.log(base)


@dataclass(frozen=True)
class BoundsReport:
    """Right-hand sides of the kissing bounds, evaluated for one graph.

    Quantities that do not apply to the graph (e.g. the regular-graph
    corollary for an irregular graph) are None.
    """

    girth: int
    thm1_lhs: int  # g * kiss
    thm1_rhs_numerator: int  # n d (d-1)^floor(g/2)
    thm1_holds: bool
    thm1_equality: bool
    teokoh_rhs: Fraction | None
    teokoh_holds: bool | None
    teokoh_caveat: str | None
    corollary_rhs: float | None
    corollary_holds: bool | None
    corollary_equality: bool | None
    moore_bound_value: int | None
    eq10_lhs_ok: bool | None
    eq11_ok: bool | None

    @property
    def thm1_rhs(self) -> Fraction:
        return Fraction(self.thm1_rhs_numerator, self.girth)

    def as_dict(self) -> dict:
        return {k: str(v) if isinstance(v, Fraction) else v for k, v in self.__dict__.items()}


def thm1_numerator(n: int, d: int, g: int) -> int:
    return n * d * (d - 1) ** (g // 2)


def teokoh_bound(n: int, m: int, g: int) -> Fraction:
    """2n(m-n+1)/g for odd g, 2m(m-n+1)/g for even g."""
    lead = n if g % 2 else m
    return Fraction(2 * lead * (m - n + 1), g)


def corollary_bound(n: int, d: int, g: int) -> float:
    """Girth-free kissing bound for connected d-regular graphs, d >= 3."""
    s = n * (d - 2) + 2
    if g % 2:
        return n * s / (2 * _log(d - 1, s / d) + 1)
    return n * d * s / (4 * _log(d - 1, s / 2))


def bounds_report(g: MultiGraph, inv: GraphInvariants | None = None) -> BoundsReport:
    if not g.is_connected():
        raise ValueError("bounds_report needs a connected graph")
    if inv is None:
        inv = compute_invariants(g)
    gi = inv.girth
    if gi is INFINITE:
        raise ValueError("bounds_report needs finite girth")
    n, m, d = inv.n, inv.m, inv.d_max
    lhs = inv.based_count
    rhs = thm1_numerator(n, d, gi)

    teokoh = teokoh_holds = caveat = None
    if g.is_simple() and gi >= 3:
        teokoh = teokoh_bound(n, m, gi)
        teokoh_holds = inv.kiss <= teokoh
        caveat = "2-connectivity not verified"

    cor = cor_holds = cor_eq = None
    if inv.regular and d >= 3:
        cor = corollary_bound(n, d, gi)
        cor_eq = math.isclose(inv.kiss, cor, rel_tol=1e-9)
        cor_holds = inv.kiss <= cor or cor_eq

    mb = moore_bound(d, gi) if d >= 2 else None

    eq10 = None
    dep = inv.depth
    if dep is not INFINITE and dep >= 1:
        dm = inv.d_min
        eq10 = inv.kiss * gi >= n * dm * (dm - 1) ** (dep - 1)

    eq11 = None
    dia = inv.diameter
    if inv.regular and dia is not INFINITE:
        eq11 = n <= 1 + d * sum((d - 1) ** j for j in range(dia))

    return BoundsReport(
        girth=gi,
        thm1_lhs=lhs,
        thm1_rhs_numerator=rhs,
        thm1_holds=lhs <= rhs,
        thm1_equality=lhs == rhs,
        teokoh_rhs=teokoh,
        teokoh_holds=teokoh_holds,
        teokoh_caveat=caveat,
        corollary_rhs=cor,
        corollary_holds=cor_holds,
        corollary_equality=cor_eq,
        moore_bound_value=mb,
        eq10_lhs_ok=eq10,
        eq11_ok=eq11,
    )
