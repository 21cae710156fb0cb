"""Naive reference implementations used to referee the package.

Everything here recomputes answers from first principles (itertools over
vertex tuples, explicit set algebra), deliberately sharing no code with the
library, so disagreements point at real bugs.
"""

from __future__ import annotations

import itertools
import random

from thcover import Graph, TriPartition, VertexOrdering

Edge = tuple[int, int]

PATTERN_EDGES: dict[str, tuple[Edge, ...]] = {
    "2K2": ((0, 1), (2, 3)),
    "P4": ((0, 1), (1, 2), (2, 3)),
    "C4": ((0, 1), (1, 2), (2, 3), (0, 3)),
    "C5": ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
    "paraglider": ((0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)),
}


def e1(tokens: str) -> list[Edge]:
    """Edges from compact 1-based digit pairs: "14 23" -> [(0, 3), (1, 2)]."""
    out = []
    for tok in tokens.split():
        u, v = int(tok[0]) - 1, int(tok[1]) - 1
        out.append((min(u, v), max(u, v)))
    return out


def fz1(tokens: str) -> frozenset[Edge]:
    return frozenset(e1(tokens))


def g1(n: int, tokens: str) -> Graph:
    return Graph.from_edges(n, e1(tokens))


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_threshold(n: int, p: float, rng: random.Random) -> Graph:
    """Creation sequence: each vertex arrives universal w.p. p else isolated."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []
    for k, v in enumerate(verts):
        if k and rng.random() < p:
            edges.extend((min(v, u), max(v, u)) for u in verts[:k])
    return Graph.from_edges(n, edges)


def tri(g: Graph, one: str = "", two: str = "") -> TriPartition:
    """TriPartition from 1-based edge tokens; unlisted edges are class 0."""
    s1, s2 = fz1(one), fz1(two)
    labels = tuple(1 if e in s1 else 2 if e in s2 else 0 for e in g.edges)
    return TriPartition(g, labels)


def naive_induced(g: Graph, pattern: str) -> tuple[int, ...] | None:
    """First ordered vertex tuple (lexicographic) inducing the pattern."""
    template = {frozenset(p) for p in PATTERN_EDGES[pattern]}
    k = 5 if pattern in ("C5", "paraglider") else 4
    for tup in itertools.permutations(range(g.n), k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                if g.has_edge(tup[i], tup[j]) != (frozenset((i, j)) in template):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tup
    return None


def naive_is_threshold(g: Graph) -> bool:
    return all(naive_induced(g, p) is None for p in ("2K2", "P4", "C4"))


def naive_is_split(g: Graph) -> bool:
    return all(naive_induced(g, p) is None for p in ("2K2", "C4", "C5"))


def naive_aux_edges(g: Graph) -> set[tuple[int, int]]:
    """Edge-index pairs (i < j) bounding an alternating 4-cycle."""
    out = set()
    for i, j in itertools.combinations(range(g.m), 2):
        a, b = g.edges[i]
        c, d = g.edges[j]
        if len({a, b, c, d}) < 4:
            continue
        if (not g.has_edge(b, c) and not g.has_edge(a, d)) or (
            not g.has_edge(a, c) and not g.has_edge(b, d)
        ):
            out.add((i, j))
    return out


def label_better(a: list[int], b: list[int]) -> bool:
    """Lex order on ascending position lists; equal prefix, longer wins."""
    for x, y in zip(a, b):
        if x != y:
            return x < y
    return len(a) > len(b)


def simulate_lexbfs(g: Graph, rng: random.Random | None = None) -> VertexOrdering:
    """Label simulation; smallest-id tie-break, or random when rng given."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    remaining = set(range(g.n))
    seq: list[int] = []
    while remaining:
        pool = sorted(remaining)
        best = pool[0]
        for v in pool[1:]:
            if label_better(labels[v], labels[best]):
                best = v
        if rng is not None:
            ties = [v for v in pool if labels[v] == labels[best]]
            best = rng.choice(ties)
        seq.append(best)
        remaining.discard(best)
        pos = len(seq)
        for u in g.neighbors(best):
            if u in remaining:
                labels[u].append(pos)
    return VertexOrdering.from_sequence(tuple(seq))


def four_point_violations(g: Graph, order: VertexOrdering) -> list[tuple[int, int, int]]:
    """Triples a < b < c (by rank) with ab a non-edge and ac an edge must
    have some x before a with xb an edge and xc a non-edge."""
    seq = order.sequence
    out = []
    for ia in range(len(seq)):
        a = seq[ia]
        for ib in range(ia + 1, len(seq)):
            b = seq[ib]
            if g.has_edge(a, b):
                continue
            for ic in range(ib + 1, len(seq)):
                c = seq[ic]
                if not g.has_edge(a, c):
                    continue
                if not any(
                    g.has_edge(x, b) and not g.has_edge(x, c) for x in seq[:ia]
                ):
                    out.append((a, b, c))
    return out


def naive_pentagons(
    g: Graph, tp: TriPartition, strict_only: bool
) -> list[tuple[int, ...]]:
    """All (a, b, c, d, e, klass) pentagon tuples, brute force."""
    out = []
    lab = {}
    for e, l in zip(g.edges, tp.labels):
        lab[e] = l
        lab[e[1], e[0]] = l

    def cls(u, v):
        return lab.get((u, v), -1)

    for a, b, c, d, e in itertools.permutations(range(g.n), 5):
        for i in (1, 2):
            o = 3 - i
            if cls(a, b) != i or cls(a, e) != i:
                continue
            if cls(b, c) != o or cls(b, d) != o or cls(e, c) != o or cls(e, d) != o:
                continue
            if g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, e):
                continue
            if cls(c, d) == i or (not strict_only and cls(c, d) == 0):
                out.append((a, b, c, d, e, i))
    return out


def naive_switch_paths(
    g: Graph, tp: TriPartition, strict_only: bool
) -> list[tuple[int, ...]]:
    out = []
    for x, y, z, w in itertools.permutations(range(g.n), 4):
        if g.has_edge(x, w):
            continue
        for i in (1, 2):
            o = 3 - i
            xy, zw, yz = tp.matrix()[x, y], tp.matrix()[z, w], tp.matrix()[y, z]
            if yz != o:
                continue
            good = (xy == i and zw == i) if strict_only else (
                xy in (0, i) and zw in (0, i) and xy >= 0 and zw >= 0
            )
            if good:
                out.append((x, y, z, w, i))
    return out


def naive_switch_cycles(g: Graph, tp: TriPartition) -> list[tuple[int, ...]]:
    m = tp.matrix()
    out = []
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        for i in (1, 2):
            o = 3 - i
            if m[a, b] in (0, i) and m[c, d] in (0, i) and m[b, c] == o and m[a, d] == o:
                out.append((a, b, c, d, i))
    return out


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus v, vertices relabeled downward."""
    keep = [u for u in range(g.n) if u != v]
    pos = {u: k for k, u in enumerate(keep)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a != v and b != v]
    return Graph.from_edges(g.n - 1, edges)
