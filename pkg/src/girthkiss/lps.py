"""Lubotzky-Phillips-Sarnak graphs X^{p,q} as Cayley graphs of PGL(2, Z/qZ).

Only the case (p/q) = -1 is supported; the graph is then bipartite on all
q(q^2 - 1) projective classes. Quaternions are sent to matrices by

    x0 + x1 i + x2 j + x3 k  ->  [[x0 + r x1,  x2 + r x3],
                                  [-x2 + r x3, x0 - r x1]]   (mod q)

where r is the smaller square root of -1 mod q.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from pathlib import Path

from . import number_theory as nt
from .graph_core import MAX_VERTICES, MultiGraph, bfs_distance_list, format_edge_list, from_edge_list, to_graph6
from .invariants import INFINITE, girth, shortest_closed_geodesics

DEFAULT_MAX_Q = 61
EXHAUSTIVE_GIRTH_MAX_VERTICES = 10_000


class LpsConstructionError(RuntimeError):
    """The constructed graph failed one of its defining properties."""


@dataclass(frozen=True)
class Quaternion:
    x0: int
    x1: int = 0
    x2: int = 0
    x3: int = 0

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = o.x0, o.x1, o.x2, o.x3
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm(self) -> int:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x0, self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class GeneratorSet:
    p: int
    elements: tuple[Quaternion, ...]

    def __len__(self) -> int:
        return len(self.elements)


def generator_set(p: int) -> GeneratorSet:
    """All x with N(x) = p, x0 > 0 odd and x1, x2, x3 even, in lexicographic order."""
    if p % 4 != 1 or not nt.is_prime(p):
        raise ValueError(f"p={p} must be a prime congruent to 1 mod 4")
    if p > 10**4:
        raise ValueError("generator_set supports p <= 10**4")
    r = isqrt(p)
    evens = range(-(r - r % 2), r + 1, 2)
    found = []
    for x0 in range(1, r + 1, 2):
        for x1 in evens:
            for x2 in evens:
                rest = p - x0 * x0 - x1 * x1 - x2 * x2
                if rest < 0:
                    continue
                x3 = isqrt(rest)
                if x3 * x3 != rest or x3 % 2:
                    continue
                for s in {x3, -x3}:
                    found.append(Quaternion(x0, x1, x2, s))
    found.sort(key=Quaternion.as_tuple)
    if len(found) != p + 1:
        raise AssertionError(f"found {len(found)} generators for p={p}, expected {p + 1}")
    return GeneratorSet(p, tuple(found))


def sqrt_minus_one(q: int) -> int:
    if q % 4 != 1 or not nt.is_prime(q):
        raise ValueError(f"q={q} must be a prime congruent to 1 mod 4")
    return nt.sqrt_mod(-1, q)


# --------------------------------------------------------------------------
# PGL(2, q)


Matrix = tuple[int, int, int, int]  # row-major (a, b, c, d)


def _canonical(m: Matrix, q: int) -> Matrix:
    for x in m:
        if x:
            s = pow(x, -1, q)
            return tuple(y * s % q for y in m)  # type: ignore[return-value]
    raise ValueError("the zero matrix has no projective class")


@dataclass(frozen=True)
class PglElement:
    """A projective class, stored with its first nonzero entry scaled to 1."""

    q: int
    entries: Matrix

    @classmethod
    def from_matrix(cls, m: Matrix, q: int) -> "PglElement":
        m = tuple(x % q for x in m)  # type: ignore[assignment]
        if (m[0] * m[3] - m[1] * m[2]) % q == 0:
            raise ValueError("singular matrix")
        return cls(q, _canonical(m, q))

    def __mul__(self, o: "PglElement") -> "PglElement":
        a, b, c, d = self.entries
        e, f, g, h = o.entries
        q = self.q
        return PglElement(q, _canonical(((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q), q))

    def det(self) -> int:
        a, b, c, d = self.entries
        return (a * d - b * c) % self.q

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)


def quaternion_to_pgl(x: Quaternion, q: int, i: int) -> PglElement:
    m = ((x.x0 + i * x.x1) % q, (x.x2 + i * x.x3) % q, (-x.x2 + i * x.x3) % q, (x.x0 - i * x.x1) % q)
    if not any(m):
        raise ValueError(f"{x} vanishes modulo {q}")
    return PglElement.from_matrix(m, q)


def pgl_elements(q: int) -> list[Matrix]:
    """Canonical representatives of PGL(2, q) in lexicographic order."""
    out: list[Matrix] = []
    # a = 0 forces b = 1 and c != 0; these sort before every (1, ...)
    for c in range(1, q):
        for d in range(q):
            out.append((0, 1, c, d))
    for b in range(q):
        for c in range(q):
            bc = b * c % q
            for d in range(q):
                if d != bc:
                    out.append((1, b, c, d))
    return out


# --------------------------------------------------------------------------
# the graph


@dataclass(eq=False)
class LpsGraph:
    p: int
    q: int
    i: int
    graph: MultiGraph
    vertices: list[Matrix] = field(repr=False)
    vertex_index: dict[Matrix, int] = field(repr=False)
    identity_vertex: int
    generators: GeneratorSet = field(repr=False)
    generator_images: tuple[PglElement, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def element(self, v: int) -> PglElement:
        return PglElement(self.q, self.vertices[v])

    @cached_property
    def girth(self) -> int:
        """BFS girth; from the identity alone once the graph is large.

        A single root suffices for Cayley graphs, which are vertex-transitive.
        """
        if self.n <= EXHAUSTIVE_GIRTH_MAX_VERTICES:
            gi = girth(self.graph)
        else:
            gi = girth(self.graph, roots=[self.identity_vertex])
        if gi is INFINITE:
            raise LpsConstructionError("LPS graph has no cycles")
        return gi

    def metadata(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "sqrt_minus_one": self.i,
            "n": self.n,
            "degree": self.p + 1,
            "matrix_convention": "x0+x1 i+x2 j+x3 k -> [[x0+r x1, x2+r x3], [-x2+r x3, x0-r x1]] mod q, r^2 = -1",
            "vertex_order": "lexicographic order of row-major matrices scaled so the first nonzero entry is 1",
            "edge_rule": "v -- s*v for s in the generator images",
            "identity_vertex": self.identity_vertex,
            "generators": [s.as_tuple() for s in self.generators.elements],
        }


def _check(ok: bool, what: str) -> None:
    if not ok:
        raise LpsConstructionError(f"LPS graph is not {what}")


def _bipartite(g: MultiGraph) -> bool:
    color = [-1] * g.n
    heads, out = g.heads, g.out
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for d in out[u]:
                w = heads[d]
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def build_lps(p: int, q: int, force: bool = False) -> LpsGraph:
    """Construct X^{p,q} and verify order, regularity, simplicity, connectivity and bipartiteness."""
    nt._require_lps_pair(p, q)
    if q * q <= 4 * p:
        raise ValueError(f"q={q} must exceed 2*sqrt(p)")
    if q > DEFAULT_MAX_Q and not force:
        raise ValueError(f"q={q} is above the default cap {DEFAULT_MAX_Q}; pass force=True")
    n = q * (q * q - 1)
    if n > MAX_VERTICES:
        raise ValueError(f"X^{{{p},{q}}} would have {n} vertices, above the cap {MAX_VERTICES}")

    i = sqrt_minus_one(q)
    gens = generator_set(p)
    images = tuple(quaternion_to_pgl(s, q, i) for s in gens.elements)
    _check(len(set(images)) == p + 1, "injective on generators")
    _check(not any(s.is_identity() for s in images), "free of identity generators")
    index_of = {s: k for k, s in enumerate(images)}
    partner = []
    for s, img in zip(gens.elements, images):
        inv = quaternion_to_pgl(s.conjugate(), q, i)
        _check(inv in index_of and (img * inv).is_identity(), "closed under inversion")
        partner.append(index_of[inv])
    half = [k for k in range(len(images)) if k < partner[k]]

    vertices = pgl_elements(q)
    _check(len(vertices) == n, f"of order {n}")
    index = {m: v for v, m in enumerate(vertices)}
    inv_mod = [0] + [pow(x, -1, q) for x in range(1, q)]
    edges = []
    for k in half:
        a, b, c, d = images[k].entries
        for v, (e, f, g_, h) in enumerate(vertices):
            w0 = (a * e + b * g_) % q
            w1 = (a * f + b * h) % q
            w2 = (c * e + d * g_) % q
            w3 = (c * f + d * h) % q
            s = inv_mod[w0] if w0 else inv_mod[w1]
            edges.append((v, index[(w0 * s % q, w1 * s % q, w2 * s % q, w3 * s % q)]))
    edges.sort()
    graph = from_edge_list(n, edges)

    _check(all(k == p + 1 for k in graph.degrees()), f"{p + 1}-regular")
    _check(graph.is_simple(), "simple")
    _check(min(bfs_distance_list(graph, 0)) >= 0, "connected")
    _check(_bipartite(graph), "bipartite")

    return LpsGraph(
        p=p,
        q=q,
        i=i,
        graph=graph,
        vertices=vertices,
        vertex_index=index,
        identity_vertex=index[(1, 0, 0, 1)],
        generators=gens,
        generator_images=images,
    )


def lps_based_shortest_count(x: LpsGraph, vertex: int | None = None) -> int:
    """Oriented shortest closed geodesics based at ``vertex`` (default: the identity)."""
    v = x.identity_vertex if vertex is None else vertex
    return sum(1 for _ in shortest_closed_geodesics(x.graph, v, x.girth))


def lps_kissing_number(x: LpsGraph, based: int | None = None) -> int:
    if based is None:
        based = lps_based_shortest_count(x)
    kiss, rem = divmod(x.n * based, x.girth)
    if rem:
        raise LpsConstructionError("n * (based count) is not divisible by the girth")
    return kiss


def exponent_report(x: LpsGraph, kiss: int | None = None) -> float:
    """log(kiss) / log(n); a finite-size diagnostic only."""
    if kiss is None:
        kiss = lps_kissing_number(x)
    return math.log(kiss) / math.log(x.n)


@dataclass
class LpsReport:
    p: int
    q: int
    n: int
    degree: int
    girth: int
    girth_formula: int
    girth_branch: int
    based_count: int
    eq7_count: int
    loops_id_bound: int
    sample_vertices: list[int]
    sample_counts: list[int]
    kiss: int
    exponent: float
    girth_roots: str
    regular: bool
    connected: bool
    bipartite: bool

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "order": self.n == self.q * (self.q * self.q - 1),
            "regular": self.regular,
            "connected": self.connected,
            "bipartite": self.bipartite,
            "girth_matches_formula": self.girth == self.girth_formula,
            "based_count_matches_eq7": self.based_count == self.eq7_count,
            "based_count_at_least_r3_bound": self.based_count >= self.loops_id_bound,
            "basepoint_independent": all(c == self.based_count for c in self.sample_counts),
            "kiss_at_least_r3_bound": self.kiss * self.girth >= self.n * self.loops_id_bound,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["checks"] = self.checks
        out["ok"] = self.ok
        return out


def verify_lps(p: int, q: int, samples: int = 10, seed: int = 0, force: bool = False, x: LpsGraph | None = None) -> LpsReport:
    """Build X^{p,q} (unless given) and cross-check it against the arithmetic oracles."""
    if x is None:
        x = build_lps(p, q, force=force)
    gf, branch = nt.lps_girth_branch(p, q)
    based = lps_based_shortest_count(x)
    rng = random.Random(seed)
    sample = sorted(rng.sample(range(x.n), min(samples, x.n)))
    counts = [lps_based_shortest_count(x, v) for v in sample]
    kiss = lps_kissing_number(x, based)
    return LpsReport(
        p=p,
        q=q,
        n=x.n,
        degree=p + 1,
        girth=x.girth,
        girth_formula=gf,
        girth_branch=branch,
        based_count=based,
        eq7_count=nt.count_eq7_solutions(p, q, gf),
        loops_id_bound=nt.loops_id_lower_bound(p, q),
        sample_vertices=sample,
        sample_counts=counts,
        kiss=kiss,
        exponent=exponent_report(x, kiss),
        girth_roots="all" if x.n <= EXHAUSTIVE_GIRTH_MAX_VERTICES else "identity",
        regular=all(k == p + 1 for k in x.graph.degrees()),
        connected=x.graph.is_connected(),
        bipartite=_bipartite(x.graph),
    )


def export_lps(x: LpsGraph, directory: str | Path, graph6: bool = False) -> list[Path]:
    """Write the edge list, a JSON sidecar and optionally a graph6 file."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    stem = directory / f"lps_{x.p}_{x.q}"
    written = [stem.with_suffix(".edgelist"), stem.with_suffix(".json")]
    written[0].write_text(format_edge_list(x.graph, [f"LPS graph X^{{{x.p},{x.q}}}"]))
    written[1].write_text(json.dumps(x.metadata(), indent=2, sort_keys=True) + "\n")
    if graph6:
        path = stem.with_suffix(".g6")
        path.write_text(to_graph6(x.graph) + "\n")
        written.append(path)
    return written
