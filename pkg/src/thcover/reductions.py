"""Fast paths for restricted graph classes and the chain-cover reduction.

Split graphs admit a cover from any vertex ordering with no recoloring
phase; paraglider-free graphs need the Lex-BFS ordering but never a
pentagon, so recoloring can be dropped.  Bipartite graphs reduce to the
split case by completing one side into a clique: the filled graph is
threshold-coverable iff the original is chain-coverable, and the fill
edges are isolated in the filled graph's conflict graph, so the reduction
stays quadratic in the original edge count.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .auxiliary import OddCycleCertificate, build_auxiliary, two_color
from .cover import CoverResult, cover2
from .errors import PreconditionError
from .graph import Edge, Graph, VertexOrdering
from .partition import TriPartition
from .recognition import is_chain, is_paraglider_free, split_partition


def cover2_split(
    g: Graph, order_seed: int | None = None, verify: bool = False
) -> CoverResult:
    """Cover a split graph: any ordering, no recoloring phase.

    The identity ordering is used unless order_seed asks for a seeded
    shuffle (property tests exercise the any-ordering claim with it).
    """
    if split_partition(g) is None:
        raise PreconditionError("input is not a split graph")
    if order_seed is None:
        order = VertexOrdering.identity(g.n)
    else:
        seq = list(range(g.n))
        random.Random(order_seed).shuffle(seq)
        order = VertexOrdering.from_sequence(seq)
    return cover2(g, ordering=order, skip_phase3=True, verify=verify)


def cover2_paraglider_free(g: Graph, verify: bool = False) -> CoverResult:
    """Cover a paraglider-free graph: Lex-BFS ordering, no recoloring phase."""
    free, witness = is_paraglider_free(g)
    if not free:
        raise PreconditionError(
            f"input contains a paraglider on vertices {witness.vertices}",
            witness=witness,
        )
    return cover2(g, skip_phase3=True, verify=verify)


# ----------------------------------------------------------------------------
# bipartite graphs: 2-chain covers via the filled graph


def bipartition(g: Graph) -> tuple[list[int], list[int]]:
    """Proper 2-coloring of g by BFS parity, smallest-id roots.

    Raises PreconditionError carrying an odd-cycle witness when g is not
    bipartite.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if side[y] < 0:
                    side[y] = side[x] ^ 1
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    up_x = [x]
                    while up_x[-1] != root:
                        up_x.append(parent[up_x[-1]])
                    up_y = [y]
                    while up_y[-1] not in up_x:
                        up_y.append(parent[up_y[-1]])
                    lca = up_y[-1]
                    cycle = up_x[: up_x.index(lca) + 1] + up_y[-2::-1]
                    raise PreconditionError(
                        f"graph is not bipartite: odd cycle {tuple(cycle)}",
                        witness=tuple(cycle),
                    )
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


@dataclass(frozen=True)
class HatGraph:
    """A bipartite graph with one side completed into a clique."""

    graph: Graph
    base: Graph
    clique: tuple[int, ...]
    independent: tuple[int, ...]
    fill_edges: frozenset[Edge]


def hat_graph(g: Graph, partition: tuple[list[int], list[int]], side: str) -> HatGraph:
    """Complete the chosen side ('A' = first, 'B' = second) into a clique."""
    if side not in ("A", "B"):
        raise ValueError("side must be 'A' or 'B'")
    a, b = partition
    if sorted(list(a) + list(b)) != list(range(g.n)):
        raise PreconditionError("partition must cover every vertex exactly once")
    aset = set(a)
    for u, v in g.edges:
        if (u in aset) == (v in aset):
            raise PreconditionError(f"edge ({u}, {v}) does not cross the partition")
    clique = sorted(a if side == "A" else b)
    other = sorted(b if side == "A" else a)
    fills = frozenset(
        (u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]
    )
    filled = Graph.from_edges(g.n, list(g.edges) + sorted(fills))
    return HatGraph(
        graph=filled,
        base=g,
        clique=tuple(clique),
        independent=tuple(other),
        fill_edges=fills,
    )


@dataclass(frozen=True)
class ChainCoverResult:
    """Two chain subgraphs covering a bipartite graph, or an odd-cycle
    certificate in the conflict graph restricted to the real edges."""

    c1: frozenset[Edge] | None
    c2: frozenset[Edge] | None
    certificate: OddCycleCertificate | None
    partition: tuple[tuple[int, ...], tuple[int, ...]]
    clique_side: str
    colored_partition: TriPartition | None

    @property
    def found(self) -> bool:
        return self.c1 is not None


def chain_cover2(g: Graph, side: str | None = None) -> ChainCoverResult:
    """Cover a bipartite graph by two chain subgraphs, or certify failure.

    The conflict graph is built over the real edges only, using the filled
    graph's non-adjacency: fill edges are isolated in the filled graph's
    conflict graph, so dropping them changes nothing and keeps the work
    O(m^2) in the original edge count.  The clique side defaults to the
    smaller part (fewer fill edges).
    """
    a, b = bipartition(g)
    if side is None:
        side = "A" if len(a) <= len(b) else "B"
    hat = hat_graph(g, (a, b), side)
    aux = build_auxiliary(g, nonadj=hat.graph.nonadj)
    colored = two_color(aux, VertexOrdering.identity(g.n))
    parts = (tuple(a), tuple(b))
    if isinstance(colored, OddCycleCertificate):
        return ChainCoverResult(
            c1=None, c2=None, certificate=colored, partition=parts,
            clique_side=side, colored_partition=None,
        )
    shared = colored.class_edges(0)
    return ChainCoverResult(
        c1=colored.class_edges(1) | shared,
        c2=colored.class_edges(2) | shared,
        certificate=None,
        partition=parts,
        clique_side=side,
        colored_partition=colored,
    )


def verify_chain_cover(g: Graph, res: ChainCoverResult) -> bool:
    if not res.found:
        return False
    if (res.c1 | res.c2) != set(g.edges):
        return False
    part = (list(res.partition[0]), list(res.partition[1]))
    ok1, _ = is_chain(g.subgraph(res.c1), part)
    ok2, _ = is_chain(g.subgraph(res.c2), part)
    return ok1 and ok2
