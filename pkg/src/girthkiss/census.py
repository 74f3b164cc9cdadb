"""Census of connected cubic graphs: enumeration, invariants and the record table.

Graphs on n vertices are grown from smaller connected cubic graphs by four
insertions, each undoing one of the ways a graph can be reduced:

* edge insertion (+2): subdivide two distinct edges, join the new vertices;
* triangle insertion (+2): replace a vertex by a triangle;
* diamond insertion (+4): replace an edge by a path through a K4 minus an edge;
* pendant insertion (+6): subdivide an edge and hang a K4 with one subdivided
  edge off the new vertex by a bridge.

Duplicates are removed by canonical labeling. Completeness is not taken on
faith: the per-n counts are checked against the known sequence, and a
mismatch is a hard error.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canon import canonical_form
from .graph_core import MultiGraph, bfs_distance_list, from_edge_list, from_graph6, to_graph6
from .invariants import INFINITE, is_moore, shortest_closed_geodesics, teokoh_bound, thm1_numerator
from .invariants import girth as graph_girth

# Connected cubic graphs on n = 4, 6, ..., 24 vertices.
CONNECTED_CUBIC_COUNTS = {
    4: 1,
    6: 2,
    8: 5,
    10: 19,
    12: 85,
    14: 509,
    16: 4060,
    18: 41301,
    20: 510489,
    22: 7319447,
    24: 117940535,
}
TOTAL_THROUGH_24 = 125_816_453

MAX_N = 18
DEFAULT_MAX_N = 16

Edges = tuple[tuple[int, int], ...]


class CensusCountError(AssertionError):
    pass


def threads_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("GIRTHKISS_THREADS", default)))
    except ValueError:
        return default


# --------------------------------------------------------------------------
# generation


def _adj(n: int, edges: Edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _canonical_edges(n: int, edges: Edges) -> tuple[int, Edges]:
    """Certificate and canonically relabelled, sorted edge tuple."""
    cf = canonical_form(_adj(n, edges))
    lab = cf.labeling
    relabelled = tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in edges))
    return cf.certificate, relabelled


def _edge_insertions(n: int, edges: Edges) -> Iterator[Edges]:
    x, y = n, n + 1
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        rest = [e for k, e in enumerate(edges) if k != i and k != j]
        yield tuple(rest + [(a, x), (b, x), (c, y), (d, y), (x, y)])


def _diamond_insertions(n: int, edges: Edges) -> Iterator[Edges]:
    u, v, s, t = n, n + 1, n + 2, n + 3
    for i, (a, b) in enumerate(edges):
        rest = [e for k, e in enumerate(edges) if k != i]
        yield tuple(rest + [(a, s), (u, s), (v, s), (u, v), (u, t), (v, t), (t, b)])


def _triangle_insertions(n: int, edges: Edges) -> Iterator[Edges]:
    for v in range(n):
        new = (v, n, n + 1)
        out, k = [], 0
        for a, b in edges:
            if a == v:
                a, k = new[k], k + 1
            if b == v:
                b, k = new[k], k + 1
            out.append((a, b))
        yield tuple(out + [(v, n), (v, n + 1), (n, n + 1)])


def _pendant_insertions(n: int, edges: Edges) -> Iterator[Edges]:
    x, y, c, d, e, f = range(n, n + 6)
    block = [(x, y), (y, c), (y, d), (c, e), (c, f), (d, e), (d, f), (e, f)]
    for i, (a, b) in enumerate(edges):
        rest = [ed for k, ed in enumerate(edges) if k != i]
        yield tuple(rest + [(a, x), (x, b)] + block)


_INSERTIONS = {
    "edge": (2, _edge_insertions),
    "triangle": (2, _triangle_insertions),
    "diamond": (4, _diamond_insertions),
    "pendant": (6, _pendant_insertions),
}


def _children(args: tuple[int, Edges, str]) -> list[tuple[int, Edges]]:
    n, edges, kind = args
    step, gen = _INSERTIONS[kind]
    seen: dict[int, Edges] = {}
    for child in gen(n, edges):
        cert, canon = _canonical_edges(n + step, child)
        seen.setdefault(cert, canon)
    return list(seen.items())


_LEVELS: dict[int, list[Edges]] = {}


def _level(n: int, workers: int = 1) -> list[Edges]:
    """Canonical edge tuples of all connected cubic graphs on n vertices, sorted."""
    if n in _LEVELS:
        return _LEVELS[n]
    if n == 4:
        result = [_canonical_edges(4, tuple(combinations(range(4), 2)))[1]]
    else:
        jobs = []
        for kind, (step, _) in _INSERTIONS.items():
            if n - step >= 4:
                jobs += [(n - step, e, kind) for e in _level(n - step, workers)]
        found: dict[int, Edges] = {}
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                batches = list(pool.map(_children, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
        else:
            batches = [_children(job) for job in jobs]
        for batch in batches:
            for cert, canon in batch:
                found.setdefault(cert, canon)
        result = sorted(found.values(), key=lambda e: _graph6(n, e))
    expected = CONNECTED_CUBIC_COUNTS[n]
    if len(result) != expected:
        raise CensusCountError(f"generated {len(result)} cubic graphs on {n} vertices, expected {expected}")
    _LEVELS[n] = result
    return result


def _graph6(n: int, edges: Edges) -> str:
    return to_graph6(from_edge_list(n, edges))


def _check_n(n: int) -> None:
    if n % 2 or n < 4 or n > MAX_N:
        raise ValueError(f"n={n} must be even with 4 <= n <= {MAX_N}")


def enumerate_cubic(n: int, workers: int | None = None) -> Iterator[MultiGraph]:
    """Every connected simple cubic graph on n vertices once, in canonical graph6 order."""
    _check_n(n)
    for edges in _level(n, workers or threads_from_env()):
        yield from_edge_list(n, edges)


def count_cubic(n: int, workers: int | None = None) -> int:
    _check_n(n)
    return len(_level(n, workers or threads_from_env()))


# --------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class CensusRecord:
    n: int
    graph6: str
    girth: int
    kiss: int
    diameter: int
    aut_order: int
    is_moore: bool
    rel_kiss: float
    rel_girth: float
    rel_inv_diam: float
    rel_aut: float
    based_count: int = field(default=0, compare=False)

    @property
    def thm1_numerator(self) -> int:
        return thm1_numerator(self.n, 3, self.girth)

    @property
    def teokoh_bound(self):
        return teokoh_bound(self.n, 3 * self.n // 2, self.girth)


def relative_invariants(n: int, girth: int, kiss: int, diameter: int, aut: int) -> tuple[float, float, float, float]:
    """Relative kissing number, girth, inverse diameter and automorphism-group size of a cubic graph."""
    if girth % 2:
        rel_kiss = kiss * (2 * math.log2((n + 2) / 3) + 1) / (n * (n + 2))
        rel_girth = (3 * 2 ** ((girth - 1) // 2) - 2) / n
    else:
        rel_kiss = kiss * 4 * math.log2((n + 2) / 2) / (3 * n * (n + 2))
        rel_girth = 2 * (2 ** (girth // 2) - 1) / n
    rel_inv_diam = n / (3 * 2**diameter - 2)
    rel_aut = aut / (3 * (n // 2) * 2 ** (n // 2))
    return rel_kiss, rel_girth, rel_inv_diam, rel_aut


def census_record(g: MultiGraph, graph6: str | None = None) -> CensusRecord:
    """Invariants of one connected cubic graph (expected in canonical labeling)."""
    if any(k != 3 for k in g.degrees()) or not g.is_simple():
        raise ValueError("census records are for simple cubic graphs")
    n = g.n
    gi = graph_girth(g)
    if gi is INFINITE:
        raise ValueError("cubic graph without cycles")
    based = sum(1 for _ in shortest_closed_geodesics(g, None, gi))
    kiss, rem = divmod(based, gi)
    if rem:
        raise AssertionError("based count not divisible by girth")
    diam = 0
    for v in range(n):
        dist = bfs_distance_list(g, v)
        if min(dist) < 0:
            raise ValueError("census records are for connected graphs")
        diam = max(diam, max(dist))
    aut = canonical_form([g.neighbors(v) for v in range(n)]).aut_order
    rk, rg, rd, ra = relative_invariants(n, gi, kiss, diam, aut)
    return CensusRecord(
        n=n,
        graph6=graph6 if graph6 is not None else to_graph6(g),
        girth=gi,
        kiss=kiss,
        diameter=diam,
        aut_order=aut,
        is_moore=is_moore(g),
        rel_kiss=rk,
        rel_girth=rg,
        rel_inv_diam=rd,
        rel_aut=ra,
        based_count=based,
    )


def _record_from_graph6(s: str) -> CensusRecord:
    return census_record(from_graph6(s), s)


_RECORDS: dict[int, list[CensusRecord]] = {}


def census(n: int, workers: int | None = None) -> list[CensusRecord]:
    """Records for all connected cubic graphs on n vertices, in canonical order."""
    _check_n(n)
    if n in _RECORDS:
        return _RECORDS[n]
    workers = workers or threads_from_env()
    codes = [to_graph6(g) for g in enumerate_cubic(n, workers)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_record_from_graph6, codes, chunksize=max(1, len(codes) // (4 * workers))))
    else:
        records = [_record_from_graph6(s) for s in codes]
    _RECORDS[n] = records
    return records


# --------------------------------------------------------------------------
# record table


@dataclass(frozen=True)
class Table1Row:
    n: int
    max_kiss: int
    max_kiss_count: int
    max_girth: int
    max_girth_count: int
    max_aut: int
    max_aut_count: int
    min_diameter: int
    min_diameter_count: int
    relations: str
    moore_exists: bool

    def cells(self) -> list[str]:
        def cell(value: int, count: int) -> str:
            return f"{value} (x{count})" if count > 1 else str(value)

        return [
            str(self.n),
            cell(self.max_kiss, self.max_kiss_count),
            cell(self.max_girth, self.max_girth_count),
            cell(self.max_aut, self.max_aut_count),
            cell(self.min_diameter, self.min_diameter_count),
            self.relations,
            "yes" if self.moore_exists else "no",
        ]


def relation_string(sets: dict[str, frozenset]) -> str:
    """Render equalities, inclusions and overlaps among named record-holder sets.

    Equal sets are merged into classes like "K=G=A". Between classes, a proper
    inclusion is written "X ⊂ Y" (transitively reduced) and a nonempty
    intersection with neither set containing the other is written "X ∩ Y".
    Classes with more than one name that take part in no relation are listed
    on their own.
    """
    names = list(sets)
    classes: list[list[str]] = []
    for name in names:
        for cls in classes:
            if sets[cls[0]] == sets[name]:
                cls.append(name)
                break
        else:
            classes.append([name])
    label = ["=".join(c) for c in classes]
    members = [sets[c[0]] for c in classes]
    k = len(classes)
    subset = {(i, j) for i in range(k) for j in range(k) if i != j and members[i] < members[j]}
    reduced = {
        (i, j) for (i, j) in subset if not any((i, m) in subset and (m, j) in subset for m in range(k))
    }
    items: list[tuple[int, int, str]] = []
    for i, j in reduced:
        items.append((i, j, f"{label[i]} ⊂ {label[j]}"))
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) in subset or (j, i) in subset:
                continue
            if members[i] & members[j]:
                items.append((i, j, f"{label[i]} ∩ {label[j]}"))
    used = {i for i, j, _ in items} | {j for i, j, _ in items}
    for i in range(k):
        if i not in used and len(classes[i]) > 1:
            items.append((i, -1, label[i]))
    items.sort(key=lambda t: (t[0], t[1]))
    return ", ".join(text for _, _, text in items)


def table1(n: int, records: list[CensusRecord] | None = None) -> Table1Row:
    if records is None:
        records = census(n)
    if not records:
        raise ValueError(f"no cubic graphs on {n} vertices")

    def holders(key, pick):
        best = pick(getattr(r, key) for r in records)
        return best, frozenset(r.graph6 for r in records if getattr(r, key) == best)

    kv, K = holders("kiss", max)
    gv, G = holders("girth", max)
    av, A = holders("aut_order", max)
    dv, D = holders("diameter", min)
    return Table1Row(
        n=n,
        max_kiss=kv,
        max_kiss_count=len(K),
        max_girth=gv,
        max_girth_count=len(G),
        max_aut=av,
        max_aut_count=len(A),
        min_diameter=dv,
        min_diameter_count=len(D),
        relations=relation_string({"K": K, "G": G, "A": A, "D": D}),
        moore_exists=any(r.is_moore for r in records),
    )


# --------------------------------------------------------------------------
# CSV

CSV_HEADER = [
    "n",
    "graph6",
    "girth",
    "kiss",
    "diameter",
    "aut_order",
    "is_moore",
    "rel_kiss",
    "rel_girth",
    "rel_inv_diam",
    "rel_aut",
]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def census_rows(n_max: int, workers: int | None = None) -> list[list[str]]:
    rows = []
    for n in range(4, n_max + 1, 2):
        for r in census(n, workers):
            rows.append(
                [
                    str(r.n),
                    r.graph6,
                    str(r.girth),
                    str(r.kiss),
                    str(r.diameter),
                    str(r.aut_order),
                    "true" if r.is_moore else "false",
                    _fmt(r.rel_kiss),
                    _fmt(r.rel_girth),
                    _fmt(r.rel_inv_diam),
                    _fmt(r.rel_aut),
                ]
            )
    return rows


def census_csv_text(n_max: int, workers: int | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(census_rows(n_max, workers))
    return buf.getvalue()


def census_csv(n_max: int, out: str | Path, workers: int | None = None) -> Path:
    """Write the census CSV for 4 <= n <= n_max; byte-identical across runs."""
    _check_n(n_max)
    path = Path(out)
    path.write_text(census_csv_text(n_max, workers))
    return path
