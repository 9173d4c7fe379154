"""Simple undirected graphs stored as per-vertex neighbor bitmasks.

Vertex sets are plain integers used as bitmasks (bit ``v`` set means vertex
``v`` is a member), wrapped in :class:`VertexSet` at the public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidEdge, InvalidVertex, ParseError, SelfLoop, TooLarge

DEFAULT_VERTEX_CAP = 64
# product graphs may use the two-word range
MAX_VERTEX_CAP = 128

GRAPH6_HEADER = ">>graph6<<"


def _mask_of(members: Iterable[int] | int) -> int:
    if isinstance(members, int):
        return members
    if isinstance(members, VertexSet):
        return members.mask
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """Immutable set of vertex indices backed by an integer bitmask."""

    mask: int = 0

    @classmethod
    def of(cls, members: Iterable[int] | int) -> "VertexSet":
        return cls(_mask_of(members))

    def __iter__(self) -> Iterator[int]:
        m, v = self.mask, 0
        while m:
            if m & 1:
                yield v
            m >>= 1
            v += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def to_set(self) -> set[int]:
        return set(self)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


@dataclass(frozen=True)
class Graph:
    """Simple graph of order ``n``; ``adj[v]`` is the open-neighborhood mask of ``v``.

    Build through :func:`from_edges` or :func:`parse_graph6`; the constructor
    checks symmetry and irreflexivity but does no normalisation.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise TooLarge(f"graph order must be at least 1, got {self.n}")
        if self.n > MAX_VERTEX_CAP:
            raise TooLarge(f"graph order {self.n} exceeds hard cap {MAX_VERTEX_CAP}")
        if len(self.adj) != self.n:
            raise InvalidEdge(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise InvalidEdge(f"vertex {v} has a neighbor outside [0, {self.n})")
            if row >> v & 1:
                raise SelfLoop(f"vertex {v} is adjacent to itself")
            m, u = row, 0
            while m:
                if m & 1 and not self.adj[u] >> v & 1:
                    raise InvalidEdge(f"adjacency not symmetric on ({v}, {u})")
                m >>= 1
                u += 1

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_masks(self) -> list[int]:
        return [row | (1 << v) for v, row in enumerate(self.adj)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in range(v) if self.adj[v] >> u & 1]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 1:
        raise TooLarge("graph order must be at least 1")
    if n > min(cap, MAX_VERTEX_CAP):
        raise TooLarge(f"graph order {n} exceeds vertex cap {min(cap, MAX_VERTEX_CAP)}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    return VertexSet(g.adj[v] | (1 << v))


def is_dominating(g: Graph, s: VertexSet | Iterable[int] | int) -> bool:
    """True iff the union of closed neighborhoods of ``s`` covers every vertex."""
    mask = _mask_of(s)
    covered = 0
    for v in VertexSet(mask):
        covered |= g.adj[v] | (1 << v)
    return covered == g.full_mask


def every_vertex_in_triangle(g: Graph) -> bool:
    for v in range(g.n):
        nbrs = g.adj[v]
        if not any(g.adj[u] & nbrs for u in VertexSet(nbrs)):
            return False
    return True


# -- graph6 ------------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_order(g.n) + "".join(body)


def parse_graph6(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode a graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    start = 0
    if s.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    data = s[start:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside graph6 range 63..126", start + k)
    if not data:
        raise ParseError("empty graph6 string", start)

    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte order header", start + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte order header", start + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    if n == 0:
        raise ParseError("graph of order 0 is not supported", start)
    limit = min(cap, MAX_VERTEX_CAP)
    if n > limit:
        raise TooLarge(f"graph6 order {n} exceeds vertex cap {limit}")

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(vals) - pos != need:
        raise ParseError(
            f"body has {len(vals) - pos} bytes, expected {need} for n={n}",
            start + min(len(vals), pos + need),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", start + len(vals) - 1)
    return Graph(n, tuple(adj))
