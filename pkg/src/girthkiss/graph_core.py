"""Dart-based finite multigraphs and their text formats.

Every undirected edge ``e`` is stored as two darts ``2e`` and ``2e + 1``;
the reverse of dart ``d`` is ``d ^ 1``. Loops and parallel edges are legal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1 << 20

_G6_HEADER = ">>graph6<<"


class GraphSizeError(ValueError):
    pass


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    pass


def reverse(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True, eq=False)
class MultiGraph:
    """Immutable multigraph on vertices ``0..n-1``.

    ``tails[d]``/``heads[d]`` give the endpoints of dart ``d``;
    ``out[v]`` lists the darts leaving ``v`` in dart order.
    """

    vertex_count: int
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    out: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.tails) // 2

    @property
    def dart_count(self) -> int:
        return len(self.tails)

    def degree(self, v: int) -> int:
        return len(self.out[v])

    def degrees(self) -> list[int]:
        return [len(o) for o in self.out]

    def edges(self) -> list[tuple[int, int]]:
        t = self.tails
        return [(t[2 * e], t[2 * e + 1]) for e in range(self.m)]

    def neighbors(self, v: int) -> list[int]:
        heads = self.heads
        return [heads[d] for d in self.out[v]]

    def has_loop(self) -> bool:
        t, h = self.tails, self.heads
        return any(t[d] == h[d] for d in range(0, len(t), 2))

    def is_simple(self) -> bool:
        if self.has_loop():
            return False
        for v in range(self.n):
            nb = self.neighbors(v)
            if len(set(nb)) != len(nb):
                return False
        return True

    def adjacency_sets(self) -> list[set[int]]:
        return [set(self.neighbors(v)) for v in range(self.n)]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (self.vertex_count, self.tails) == (other.vertex_count, other.tails)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.tails))


@dataclass(frozen=True)
class Walk:
    """A walk given by its start vertex and dart sequence.

    The empty walk anchored at ``start`` has ``darts == ()``.
    """

    start: int
    darts: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.darts)

    def end(self, g: MultiGraph) -> int:
        return g.heads[self.darts[-1]] if self.darts else self.start

    def is_closed(self, g: MultiGraph) -> bool:
        return bool(self.darts) and self.end(g) == self.start

    def is_valid(self, g: MultiGraph) -> bool:
        at = self.start
        for d in self.darts:
            if g.tails[d] != at:
                return False
            at = g.heads[d]
        return True

    def is_geodesic(self, g: MultiGraph, cyclic: bool = False) -> bool:
        ds = self.darts
        if any(ds[i + 1] == ds[i] ^ 1 for i in range(len(ds) - 1)):
            return False
        if cyclic:
            return self.is_closed(g) and ds[0] != ds[-1] ^ 1
        return True


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a multigraph with one edge per listed pair (repeats and loops kept)."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    tails: list[int] = []
    heads: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        d = len(tails)
        tails += (u, v)
        heads += (v, u)
        out[u].append(d)
        out[v].append(d + 1)
    return MultiGraph(n, tuple(tails), tuple(heads), tuple(tuple(o) for o in out))


def geodesic_extensions(g: MultiGraph, w: Walk) -> list[Walk]:
    if not w.darts:
        return [Walk(w.start, (d,)) for d in g.out[w.start]]
    last = w.darts[-1]
    back = last ^ 1
    return [Walk(w.start, w.darts + (d,)) for d in g.out[g.heads[last]] if d != back]


def geodesic_walks(g: MultiGraph, length: int, start: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the dart sequences of every geodesic walk of the given length (>= 1)."""
    heads, out = g.heads, g.out
    starts = range(g.n) if start is None else (start,)

    def extend(path: list[int], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(path)
            return
        back = path[-1] ^ 1
        for d in out[heads[path[-1]]]:
            if d != back:
                path.append(d)
                yield from extend(path, remaining - 1)
                path.pop()

    for v in starts:
        for d in out[v]:
            yield from extend([d], length - 1)


def bfs_distances(g: MultiGraph, source: int, limit: int | None = None) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    heads, out = g.heads, g.out
    k = 0
    while frontier and (limit is None or k < limit):
        k += 1
        nxt = []
        for u in frontier:
            for d in out[u]:
                w = heads[d]
                if w not in dist:
                    dist[w] = k
                    nxt.append(w)
        frontier = nxt
    return dist


def bfs_distance_list(g: MultiGraph, source: int) -> list[int]:
    """Distances from ``source`` as a list; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    heads, out = g.heads, g.out
    k = 0
    while frontier:
        k += 1
        nxt = []
        for u in frontier:
            for d in out[u]:
                w = heads[d]
                if dist[w] < 0:
                    dist[w] = k
                    nxt.append(w)
        frontier = nxt
    return dist


# --------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphSizeError("too many vertices for graph6")


def to_graph6(g: MultiGraph, header: bool = False) -> str:
    """Encode a simple graph as graph6 (no trailing newline)."""
    if not g.is_simple():
        raise ValueError("graph6 can only encode simple graphs")
    n = g.n
    adj = g.adjacency_sets()
    bits = []
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            bits.append(1 if i in aj else 0)
    bits += [0] * (-len(bits) % 6)
    chars = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        chars.append(chr(x + 63))
    return (_G6_HEADER if header else "") + _encode_n(n) + "".join(chars)


def from_graph6(text: str | bytes) -> MultiGraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start) from None
    s = text.rstrip("\r\n")
    pos = 0
    if s.startswith(_G6_HEADER):
        pos = len(_G6_HEADER)
    if pos >= len(s):
        raise Graph6Error("missing vertex count", pos)
    for k in range(pos, len(s)):
        if not 63 <= ord(s[k]) <= 126:
            raise Graph6Error(f"byte {s[k]!r} outside the graph6 range", k)

    def six(k: int) -> int:
        if k >= len(s):
            raise Graph6Error("truncated vertex count", k)
        return ord(s[k]) - 63

    if s[pos] != "~":
        n = six(pos)
        pos += 1
    elif pos + 1 < len(s) and s[pos + 1] == "~":
        n = 0
        for k in range(pos + 2, pos + 8):
            n = (n << 6) | six(k)
        pos += 8
    else:
        n = 0
        for k in range(pos + 1, pos + 4):
            n = (n << 6) | six(k)
        pos += 4
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated adjacency data: expected {nbytes} bytes", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", pos + nbytes)
    edges = []
    i, j = 0, 1
    for k in range(nbits):
        byte = ord(body[k // 6]) - 63
        if (byte >> (5 - k % 6)) & 1:
            edges.append((i, j))
        i += 1
        if i == j:
            i, j = 0, j + 1
    if nbytes:
        pad = nbytes * 6 - nbits
        if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", pos + nbytes - 1)
    return from_edge_list(n, edges)


def read_graph6_file(path: str | Path) -> list[MultiGraph]:
    graphs = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            graphs.append(from_graph6(line.strip()))
    return graphs


# --------------------------------------------------------------------------
# edge-list text format: "n m", then m lines "u v"; '#' starts a comment


def parse_edge_list(text: str) -> MultiGraph:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise EdgeListError("empty edge list: missing 'n m' header")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise EdgeListError(f"line {lineno}: expected 'n m' header") from None
    if len(rows) - 1 != m:
        raise EdgeListError(f"header announces {m} edges but {len(rows) - 1} follow")
    edges = []
    for lineno, parts in rows[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'u v'") from None
        edges.append((u, v))
    try:
        return from_edge_list(n, edges)
    except IndexError as exc:
        raise EdgeListError(str(exc)) from None


def format_edge_list(g: MultiGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str | None = None) -> MultiGraph:
    """Load a single graph; format inferred from the suffix when not given."""
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edgelist"
    if fmt == "graph6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise Graph6Error(f"expected exactly one graph, found {len(lines)}", 0)
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
