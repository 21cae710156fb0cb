"""The conflict graph on edges and its two-coloring.

Vertices of the auxiliary graph are the edges of G; two are adjacent iff
they are opposite edges of an alternating 4-cycle, i.e. no threshold
subgraph can contain both.  A proper 2-coloring of it is exactly a valid
assignment of the conflicted edges to the two parts of a cover.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .backend import kernels
from .graph import Edge, Graph, VertexOrdering
from .partition import TriPartition

DENSE_LIMIT = 4000  # above this many edges, store adjacency lists instead


@dataclass(frozen=True, eq=False)
class AuxiliaryGraph:
    """Conflict graph with precomputed components.

    Dense bit-matrix up to DENSE_LIMIT vertices (m^2 bytes), CSR adjacency
    beyond that; both paths expose neighbors_of and edge iteration.
    """

    graph: Graph
    dense: np.ndarray | None = field(repr=False)
    indptr: np.ndarray | None = field(repr=False)
    indices: np.ndarray | None = field(repr=False)
    edge_count: int
    comp_id: np.ndarray = field(repr=False)
    components: tuple[tuple[int, ...], ...]

    @property
    def n_vertices(self) -> int:
        return self.graph.m

    def neighbors_of(self, i: int) -> np.ndarray:
        if self.dense is not None:
            return np.flatnonzero(self.dense[i])
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def degree_of(self, i: int) -> int:
        if self.dense is not None:
            return int(self.dense[i].sum())
        return int(self.indptr[i + 1] - self.indptr[i])

    def is_isolated(self, i: int) -> bool:
        return self.degree_of(i) == 0

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Auxiliary edges as (i, j) with i < j, ascending."""
        if self.dense is not None:
            return [(int(i), int(j)) for i, j in np.argwhere(np.triu(self.dense, 1))]
        out = []
        for i in range(self.n_vertices):
            for j in self.neighbors_of(i):
                if i < j:
                    out.append((i, int(j)))
        return out


def build_auxiliary(
    g: Graph, dense_limit: int = DENSE_LIMIT, nonadj: np.ndarray | None = None
) -> AuxiliaryGraph:
    """Construct the conflict graph, O(m^2) pair tests.

    nonadj overrides the non-adjacency mask used by the pair tests; the
    chain reduction passes the filled graph's mask while keeping the
    original edge list, which skips the fill edges entirely.
    """
    m = g.m
    eu, ev = g.edge_array()
    if nonadj is None:
        nonadj = g.nonadj
    dense = indptr = indices = None
    if m <= dense_limit:
        dense = kernels.aux_dense(eu, ev, nonadj)
        edge_count = int(dense.sum()) // 2
    else:
        ii, jj = kernels.aux_pairs(eu, ev, nonadj)
        edge_count = int(ii.size)
        deg = np.zeros(m, dtype=np.int64)
        for arr in (ii, jj):
            np.add.at(deg, arr, 1)
        indptr = np.zeros(m + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.zeros(edge_count * 2, dtype=np.int64)
        fill = indptr[:-1].copy()
        for i, j in zip(ii, jj):
            indices[fill[i]] = j
            fill[i] += 1
            indices[fill[j]] = i
            fill[j] += 1
        for i in range(m):  # ascending neighbor order within each row
            indices[indptr[i] : indptr[i + 1]].sort()

    comp_id = np.full(m, -1, dtype=np.int64)
    components: list[tuple[int, ...]] = []
    aux = AuxiliaryGraph(
        graph=g,
        dense=dense,
        indptr=indptr,
        indices=indices,
        edge_count=edge_count,
        comp_id=comp_id,
        components=(),
    )
    for start in range(m):
        if comp_id[start] >= 0:
            continue
        cid = len(components)
        comp_id[start] = cid
        queue = deque([start])
        members = [start]
        while queue:
            x = queue.popleft()
            for y in aux.neighbors_of(x):
                if comp_id[y] < 0:
                    comp_id[y] = cid
                    members.append(int(y))
                    queue.append(int(y))
        components.append(tuple(sorted(members)))
    comp_id.setflags(write=False)
    object.__setattr__(aux, "components", tuple(components))
    return aux


def serialize_auxiliary(aux: AuxiliaryGraph) -> str:
    """Header 'vertices edges', then one 'u-v' line per vertex and one
    'u-v w-x' line per auxiliary edge, all ascending and 1-based."""
    g = aux.graph
    lines = [f"{aux.n_vertices} {aux.edge_count}"]
    lines.extend(f"{u + 1}-{v + 1}" for u, v in g.edges)
    for i, j in aux.edge_pairs():
        a, b = g.edges[i], g.edges[j]
        lines.append(f"{a[0] + 1}-{a[1] + 1} {b[0] + 1}-{b[1] + 1}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OddCycleCertificate:
    """Odd cycle in the auxiliary graph: consecutive entries (cyclically)
    are conflicting edge pairs of G, so no proper 2-coloring exists."""

    aux_vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.aux_vertices)


def _extract_odd_cycle(parent: dict[int, int], x: int, y: int) -> list[int]:
    path_x = [x]
    while path_x[-1] in parent:
        path_x.append(parent[path_x[-1]])
    up = set(path_x)
    path_y = [y]
    while path_y[-1] not in up:
        path_y.append(parent[path_y[-1]])
    lca = path_y[-1]
    return path_x[: path_x.index(lca) + 1] + path_y[-2::-1]


def two_color(aux: AuxiliaryGraph, order: VertexOrdering) -> TriPartition | OddCycleCertificate:
    """Proper 2-coloring of the conflict graph as a TriPartition.

    Isolated vertices get class 0.  In each non-trivial component the
    forced coloring is normalized so that the component's smallest vertex
    under the rank-pair order gets class 1.  A same-parity edge found
    during BFS yields an odd-cycle certificate instead.
    """
    g = aux.graph
    labels = np.zeros(g.m, dtype=np.int8)
    for comp in aux.components:
        if len(comp) == 1:
            continue
        root = comp[0]
        parity = {root: 0}
        parent: dict[int, int] = {}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in aux.neighbors_of(x):
                y = int(y)
                if y not in parity:
                    parity[y] = parity[x] ^ 1
                    parent[y] = x
                    queue.append(y)
                elif parity[y] == parity[x]:
                    cyc = _extract_odd_cycle(parent, x, y)
                    return OddCycleCertificate(
                        aux_vertices=tuple(cyc),
                        edges=tuple(g.edges[i] for i in cyc),
                    )
        lead = min(comp, key=lambda i: order.pair_key(g.edges[i]))
        base = parity[lead]
        for i, p in parity.items():
            labels[i] = 1 if p == base else 2
    return TriPartition(g, tuple(int(c) for c in labels))
