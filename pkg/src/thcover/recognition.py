"""Recognition of the graph classes the cover algorithms lean on.

Threshold graphs are exactly the graphs with no alternating 4-cycle (two
edges ab, cd with bc, ad non-edges), equivalently the graphs that can be
emptied by repeatedly deleting a vertex that is isolated or universal in
the remainder.  is_threshold uses the elimination form to accept and the
4-cycle scan to produce a refutation, so the two characterizations check
each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import PreconditionError
from .graph import Edge, Graph, PatternWitness, find_induced


@dataclass(frozen=True)
class ThresholdCertificate:
    """Either an elimination order (kind 'elimination') or an alternating
    4-cycle a, b, c, d with ab, cd edges and bc, ad non-edges ('violation')."""

    kind: str
    elimination: tuple[int, ...] | None = None
    violation: tuple[int, int, int, int] | None = None

    def violation_edges(self) -> tuple[Edge, Edge]:
        a, b, c, d = self.violation
        return (min(a, b), max(a, b)), (min(c, d), max(c, d))

    def violation_nonedges(self) -> tuple[Edge, Edge]:
        a, b, c, d = self.violation
        return (min(b, c), max(b, c)), (min(a, d), max(a, d))


def is_threshold(g: Graph) -> tuple[bool, ThresholdCertificate]:
    """Decide thresholdness with a certificate either way.

    Elimination is greedy and safe: every non-empty threshold graph has an
    isolated or universal vertex, and the class is hereditary, so removing
    the smallest-id such vertex never dead-ends on a yes instance.
    """
    deg = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    alive = np.ones(g.n, dtype=np.bool_)
    remaining = g.n
    order: list[int] = []
    while remaining:
        pick = -1
        for v in range(g.n):
            if alive[v] and deg[v] == 0:
                pick = v
                break
        if pick < 0:
            for v in range(g.n):
                if alive[v] and deg[v] == remaining - 1:
                    pick = v
                    break
        if pick < 0:
            eu, ev = g.edge_array()
            out = kernels.first_ac4(eu, ev, g.nonadj)
            vio = tuple(int(x) for x in out)
            return False, ThresholdCertificate(kind="violation", violation=vio)
        order.append(pick)
        alive[pick] = False
        remaining -= 1
        for u in np.flatnonzero(g.adj[pick] & alive):
            deg[u] -= 1
    return True, ThresholdCertificate(kind="elimination", elimination=tuple(order))


def is_chain(g: Graph, partition: tuple[list[int], list[int]]) -> tuple[bool, PatternWitness | None]:
    """Chain test for a bipartite graph: no two edges may induce a 2K2.

    The partition must cover all vertices and every edge must cross it.
    """
    a, b = partition
    side = np.full(g.n, -1, dtype=np.int8)
    for v in a:
        side[v] = 0
    for v in b:
        side[v] = 1
    if sorted(list(a) + list(b)) != list(range(g.n)):
        raise PreconditionError("partition must cover every vertex exactly once")
    for u, v in g.edges:
        if side[u] == side[v]:
            raise PreconditionError(f"edge ({u}, {v}) does not cross the partition")
    wit = find_induced(g, "2K2")
    return (wit is None), wit


def split_partition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Split partition (clique X, independent set Y), or None.

    Tries every prefix of the degree-descending order (ids break ties) as
    the clique side; for split graphs some prefix works.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(g.n + 1):
        x, y = order[:k], order[k:]
        if all(g.has_edge(u, v) for i, u in enumerate(x) for v in x[i + 1 :]):
            if not any(g.has_edge(u, v) for i, u in enumerate(y) for v in y[i + 1 :]):
                return sorted(x), sorted(y)
    return None


def is_paraglider_free(g: Graph) -> tuple[bool, PatternWitness | None]:
    """True iff g has no induced paraglider (complement of P3 + K2)."""
    wit = find_induced(g, "paraglider")
    return (wit is None), wit
