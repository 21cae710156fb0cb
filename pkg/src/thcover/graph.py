"""Core graph type, text round-trip, orderings, and induced-pattern search.

Vertices are 0-based ints internally; the text format is 1-based.  Graphs are
immutable once built: every algorithm in the package keys off the sorted edge
list, so edge indices are stable and can be used as array subscripts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .backend import kernels
from .errors import ParseError

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with a dense boolean adjacency matrix.

    The matrix costs O(n^2) memory but gives O(1) edge and non-edge tests,
    which every kernel here relies on.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: np.ndarray = field(repr=False, compare=False)
    nonadj: np.ndarray = field(repr=False, compare=False)
    edge_index: dict[Edge, int] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = sorted(_normalize_edge(u, v) for u, v in edges)
        for (u, v), (pu, pv) in zip(norm[1:], norm):
            if (u, v) == (pu, pv):
                raise ValueError(f"duplicate edge ({u}, {v})")
        adj = np.zeros((n, n), dtype=np.bool_)
        for u, v in norm:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            adj[u, v] = adj[v, u] = True
        nonadj = ~adj
        if n:
            np.fill_diagonal(nonadj, False)
        adj.setflags(write=False)
        nonadj.setflags(write=False)
        index = {e: i for i, e in enumerate(norm)}
        return cls(n=n, edges=tuple(norm), adj=adj, nonadj=nonadj, edge_index=index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def degree(self, u: int) -> int:
        return int(self.adj[u].sum())

    def neighbors(self, u: int) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.adj[u])]

    def edge_array(self) -> tuple[np.ndarray, np.ndarray]:
        """Edge endpoints as two parallel int64 arrays (kernel input)."""
        if self.m == 0:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        arr = np.asarray(self.edges, dtype=np.int64)
        return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])

    def subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set."""
        return Graph.from_edges(self.n, edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ----------------------------------------------------------------------------
# text format: "n m" header, then one "u v" line per edge, 1-based


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.  '#' starts a comment; blank lines ignored.

    Raises ParseError with the offending 1-based line number on malformed
    header or edge line, out-of-range vertex, self-loop, or duplicate edge.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ParseError("missing header")
    head_no, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", head_no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must be 'n m'", head_no) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", head_no)
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}", head_no)

    seen: dict[Edge, int] = {}
    edges: list[Edge] = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge line must be 'u v'", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range in edge {u} {v}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = _normalize_edge(u - 1, v - 1)
        if e in seen:
            raise ParseError(f"duplicate edge {u} {v} (first at line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph; edges ascending, 1-based, trailing newline."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# vertex orderings


@dataclass(frozen=True, eq=False)
class VertexOrdering:
    """Bijection vertex -> rank 1..n.  sequence[k] is the vertex of rank k+1."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValueError("ranks must be a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "VertexOrdering":
        n = len(seq)
        ranks = [0] * n
        for pos, v in enumerate(seq, start=1):
            if not (0 <= v < n) or ranks[v]:
                raise ValueError("sequence must list each vertex exactly once")
            ranks[v] = pos
        return cls(tuple(ranks))

    @property
    def n(self) -> int:
        return len(self.ranks)

    @property
    def sequence(self) -> tuple[int, ...]:
        """Vertices in visit order."""
        return tuple(v for _, v in sorted((r, v) for v, r in enumerate(self.ranks)))

    def rank(self, v: int) -> int:
        return self.ranks[v]

    def pair_key(self, pair: Edge) -> tuple[int, int]:
        a, b = self.ranks[pair[0]], self.ranks[pair[1]]
        return (a, b) if a < b else (b, a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexOrdering) and self.ranks == other.ranks

    def __hash__(self) -> int:
        return hash(self.ranks)


def pair_lex_compare(order: VertexOrdering, p: Edge, q: Edge) -> int:
    """Compare two vertex pairs by their sorted rank tuples: -1, 0, or +1.

    Smaller rank decides first, the larger rank breaks ties, so the result
    is a total order on pairs with equality only for identical pairs.
    """
    kp, kq = order.pair_key(p), order.pair_key(q)
    if kp < kq:
        return -1
    if kp > kq:
        return 1
    return 0


def parse_ordering(text: str, n: int) -> VertexOrdering:
    """One line of n space-separated 1-based vertex ids (visit order)."""
    parts = text.split()
    if len(parts) != n:
        raise ParseError(f"expected {n} vertex ids, found {len(parts)}")
    try:
        seq = [int(p) - 1 for p in parts]
    except ValueError:
        raise ParseError("ordering must contain integers only") from None
    if sorted(seq) != list(range(n)):
        raise ParseError("ordering must be a permutation of 1..n")
    return VertexOrdering.from_sequence(seq)


def serialize_ordering(order: VertexOrdering) -> str:
    return " ".join(str(v + 1) for v in order.sequence) + "\n"


# ----------------------------------------------------------------------------
# induced-pattern search

# adjacency profile per pattern: entry (i, j) is 1 iff the witness tuple must
# have an edge between positions i and j, 0 iff a non-edge
_PATTERNS: dict[str, np.ndarray] = {}


def _pattern(name: str, k: int, edges: Iterable[tuple[int, int]]) -> None:
    mat = np.zeros((k, k), dtype=np.bool_)
    for i, j in edges:
        mat[i, j] = mat[j, i] = True
    mat.setflags(write=False)
    _PATTERNS[name] = mat


_pattern("2K2", 4, [(0, 1), (2, 3)])
_pattern("P4", 4, [(0, 1), (1, 2), (2, 3)])
_pattern("C4", 4, [(0, 1), (1, 2), (2, 3), (3, 0)])
_pattern("C5", 5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
# complement of P3+K2: positions 0-1-2 are the complement path, 3-4 the
# complement edge, everything else adjacent
_pattern("paraglider", 5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    vertices: tuple[int, ...]

    def edges(self, g: Graph) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(
            _normalize_edge(vs[i], vs[j])
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
            if g.has_edge(vs[i], vs[j])
        )


def pattern_names() -> tuple[str, ...]:
    return tuple(_PATTERNS)


def find_induced(g: Graph, pattern: str) -> PatternWitness | None:
    """First induced copy of the pattern in lexicographic vertex-tuple order.

    Exhaustive over ordered tuples (O(n^4) or O(n^5)), so the returned
    witness is deterministic for a given graph.
    """
    if pattern not in _PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    prof = _PATTERNS[pattern]
    k = prof.shape[0]
    if g.n < k:
        return None
    if k == 4:
        out = kernels.find_induced4(g.adj, prof)
    else:
        out = kernels.find_induced5(g.adj, prof)
    if out[0] < 0:
        return None
    return PatternWitness(pattern, tuple(int(v) for v in out))
