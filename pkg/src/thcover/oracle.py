"""Independent ground truth: brute-force searches, generators, and the
equivalence sweep.

Nothing here reuses the production kernels.  The brute-force cover search
works from the definition alone (a threshold subgraph contains no two
edges of an alternating 4-cycle relative to itself), so it can referee the
main pipeline rather than echo it.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

import numpy as np

from .auxiliary import AuxiliaryGraph
from .errors import PreconditionError, ThcoverError
from .graph import Edge, Graph

BRUTE_EDGE_LIMIT = 20


def _disjoint_pair_masks(g: Graph) -> list[tuple[int, int, int, int]]:
    """For every disjoint edge pair (i, j), bitmasks of the edges that must
    be absent from a part for each interleaving of an alternating 4-cycle.

    Cross pairs that are non-edges of g are absent from every part and
    contribute nothing; cross pairs that are edges contribute their bit.
    """
    out = []
    for i, (a, b) in enumerate(g.edges):
        for j in range(i + 1, g.m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                continue
            m1 = m2 = 0
            for u, v in ((b, c), (a, d)):
                if g.has_edge(u, v):
                    m1 |= 1 << g.edge_index[(min(u, v), max(u, v))]
            for u, v in ((a, c), (b, d)):
                if g.has_edge(u, v):
                    m2 |= 1 << g.edge_index[(min(u, v), max(u, v))]
            out.append((i, j, m1, m2))
    return out


def _mask_is_threshold(x: int, pairs: list[tuple[int, int, int, int]]) -> bool:
    for i, j, m1, m2 in pairs:
        if (x >> i) & 1 and (x >> j) & 1 and ((x & m1) == 0 or (x & m2) == 0):
            return False
    return True


def _threshold_table(m: int, pairs: list[tuple[int, int, int, int]]) -> np.ndarray:
    """_mask_is_threshold evaluated for every edge subset at once."""
    xs = np.arange(1 << m, dtype=np.int64)
    ok = np.ones(1 << m, dtype=np.bool_)
    for i, j, m1, m2 in pairs:
        bad = ((xs >> i) & 1).astype(bool)
        bad &= ((xs >> j) & 1).astype(bool)
        if m1 and m2:
            bad &= ((xs & m1) == 0) | ((xs & m2) == 0)
        ok &= ~bad
    return ok


def _superset_closure(flags: np.ndarray, m: int) -> np.ndarray:
    """out[X] = flags true on some superset of X, by a per-bit sweep."""
    out = flags.copy()
    for b in range(m):
        v = out.reshape(-1, 2, 1 << b)
        v[:, 0, :] |= v[:, 1, :]
    return out


def brute_thd_le2(g: Graph) -> tuple[bool, tuple[frozenset[Edge], frozenset[Edge]] | None]:
    """Decide thd(g) <= 2 by exhaustive search, with a witness cover.

    Any cover assigns each conflicted edge to exactly one part (a part
    holding both edges of an alternating 4-cycle is not threshold, and a
    conflicted edge missing from both parts leaves its partner uncoverable),
    so a conflict graph with no proper 2-coloring settles the answer as no.
    The converse shortcut of placing every unconflicted edge in both parts
    is tried first but is not complete: some covers must keep an
    unconflicted edge out of one part (smallest such inputs have six
    vertices).  When the shortcut finds nothing, fall back to a subset
    sweep over all 2^m edge sets, which decides from the definition alone.
    """
    if g.m > BRUTE_EDGE_LIMIT:
        raise PreconditionError(
            f"brute force is limited to {BRUTE_EDGE_LIMIT} edges, got {g.m}"
        )
    m = g.m
    pairs = _disjoint_pair_masks(g)
    conflicts: list[list[int]] = [[] for _ in range(m)]
    for i, j, m1, m2 in pairs:
        if m1 == 0 or m2 == 0:
            conflicts[i].append(j)
            conflicts[j].append(i)

    comp_of = [-1] * m
    comps: list[list[int]] = []
    for start in range(m):
        if comp_of[start] >= 0 or not conflicts[start]:
            continue
        cid = len(comps)
        stack, members = [start], []
        comp_of[start] = cid
        while stack:
            x = stack.pop()
            members.append(x)
            for y in conflicts[x]:
                if comp_of[y] < 0:
                    comp_of[y] = cid
                    stack.append(y)
        comps.append(sorted(members))

    parity = [0] * m
    for members in comps:  # 2-color each component, or fail outright
        seen = {members[0]: 0}
        stack = [members[0]]
        while stack:
            x = stack.pop()
            for y in conflicts[x]:
                if y not in seen:
                    seen[y] = seen[x] ^ 1
                    stack.append(y)
                elif seen[y] == seen[x]:
                    return False, None
        for v, p in seen.items():
            parity[v] = p

    f0_mask = 0
    for i in range(m):
        if not conflicts[i]:
            f0_mask |= 1 << i
    comp_masks = []
    for members in comps:
        one = sum(1 << i for i in members if parity[i] == 0)
        two = sum(1 << i for i in members if parity[i] == 1)
        comp_masks.append((one, two))

    # first component's orientation is fixed: swapping the parts globally
    # gives the same unordered cover
    for flips in itertools.product((0, 1), repeat=max(len(comps) - 1, 0)):
        x1, x2 = f0_mask, f0_mask
        for k, (one, two) in enumerate(comp_masks):
            if k > 0 and flips[k - 1]:
                one, two = two, one
            x1 |= one
            x2 |= two
        if _mask_is_threshold(x1, pairs) and _mask_is_threshold(x2, pairs):
            part1 = frozenset(e for i, e in enumerate(g.edges) if (x1 >> i) & 1)
            part2 = frozenset(e for i, e in enumerate(g.edges) if (x2 >> i) & 1)
            return True, (part1, part2)

    # complete fallback: a cover exists iff some threshold subset leaves a
    # complement that still extends to a threshold subset
    ok = _threshold_table(m, pairs)
    ext = _superset_closure(ok, m)
    xs = np.arange(1 << m, dtype=np.int64)
    full = (1 << m) - 1
    hits = ok & ext[full ^ xs]
    if not hits.any():
        return False, None
    x1 = int(hits.argmax())
    comp = full ^ x1
    x2 = int(xs[ok & ((xs & comp) == comp)][0])
    part1 = frozenset(e for i, e in enumerate(g.edges) if (x1 >> i) & 1)
    part2 = frozenset(e for i, e in enumerate(g.edges) if (x2 >> i) & 1)
    return True, (part1, part2)


def aux_bipartite(aux: AuxiliaryGraph) -> bool:
    """Naive parity-BFS bipartiteness of the conflict graph (cross-check
    for two_color, which must succeed on exactly these instances)."""
    color = [-1] * aux.n_vertices
    for start in range(aux.n_vertices):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in aux.neighbors_of(x):
                y = int(y)
                if color[y] < 0:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def brute_chain_cover2(g: Graph, partition: tuple[list[int], list[int]]) -> bool:
    """Exhaustive 2-chain-cover search over all pairs of edge subsets.

    A subset X is chain iff no two member edges have both cross pairs
    outside X; with per-pair masks this is a subset sweep plus a
    superset-closure DP, O(2^m * m^2) overall.
    """
    if g.m > BRUTE_EDGE_LIMIT:
        raise PreconditionError(
            f"brute force is limited to {BRUTE_EDGE_LIMIT} edges, got {g.m}"
        )
    aset = set(partition[0])
    for u, v in g.edges:
        if (u in aset) == (v in aset):
            raise PreconditionError(f"edge ({u}, {v}) does not cross the partition")
    m = g.m
    if m == 0:
        return True
    full = (1 << m) - 1
    xs = np.arange(1 << m, dtype=np.int64)
    chain = np.ones(1 << m, dtype=np.bool_)
    for i, (a, b) in enumerate(g.edges):
        for j in range(i + 1, m):
            c, d = g.edges[j]
            if a in (c, d) or b in (c, d):
                continue
            cross = 0
            for u, v in ((a, c), (a, d), (b, c), (b, d)):
                e = (min(u, v), max(u, v))
                if e in g.edge_index:
                    cross |= 1 << g.edge_index[e]
            # in a bipartite graph only the two crossing pairs can be edges,
            # so 2K2 inside X means: i, j in X and no cross edge in X
            bad = ((xs >> i) & 1).astype(bool) & ((xs >> j) & 1).astype(bool)
            bad &= (xs & cross) == 0
            chain &= ~bad
    extendable = _superset_closure(chain, m)  # X has a chain superset
    return bool(np.any(chain & extendable[full ^ xs]))


# ----------------------------------------------------------------------------
# generators

MODES = (
    "exhaustive",
    "random-gnp",
    "union-of-two-threshold",
    "union-of-two-chain",
    "random-split",
)


@dataclass(frozen=True)
class GenSpec:
    """Instance family: mode, size, edge-probability knob, 64-bit seed, and
    sample count (ignored by the exhaustive mode)."""

    mode: str
    n: int
    p: float = 0.5
    seed: int = 0
    samples: int = 100

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "exhaustive" and self.n > 7:
            raise PreconditionError("exhaustive mode is limited to n <= 7")


def _random_threshold_edges(n: int, p: float, rng: random.Random) -> set[Edge]:
    """Random creation sequence: each new vertex is universal with
    probability p, isolated otherwise."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges: set[Edge] = set()
    for k, v in enumerate(verts):
        if k and rng.random() < p:
            edges.update((min(v, u), max(v, u)) for u in verts[:k])
    return edges


def _random_chain_edges(a: list[int], b: list[int], rng: random.Random) -> set[Edge]:
    """Random nested neighborhoods via vertex weights."""
    wa = {v: rng.random() for v in a}
    wb = {v: rng.random() for v in b}
    return {
        (min(u, v), max(u, v))
        for u in a
        for v in b
        if wa[u] + wb[v] >= 1.0
    }


def generate(spec: GenSpec):
    """Deterministic stream of graphs for the given family."""
    n = spec.n
    if spec.mode == "exhaustive":
        slots = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(slots)):
            yield Graph.from_edges(n, [e for k, e in enumerate(slots) if (mask >> k) & 1])
        return

    rng = random.Random(spec.seed)
    for _ in range(spec.samples):
        if spec.mode == "random-gnp":
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(n), 2)
                if rng.random() < spec.p
            ]
            yield Graph.from_edges(n, edges)
        elif spec.mode == "union-of-two-threshold":
            edges = _random_threshold_edges(n, spec.p, rng)
            edges |= _random_threshold_edges(n, spec.p, rng)
            yield Graph.from_edges(n, edges)
        elif spec.mode == "union-of-two-chain":
            sides = [rng.randrange(2) for _ in range(n)]
            a = [v for v in range(n) if sides[v] == 0]
            b = [v for v in range(n) if sides[v] == 1]
            edges = _random_chain_edges(a, b, rng)
            edges |= _random_chain_edges(a, b, rng)
            yield Graph.from_edges(n, edges)
        else:  # random-split
            verts = list(range(n))
            rng.shuffle(verts)
            k = rng.randint(0, n)
            clique, indep = verts[:k], verts[k:]
            edges = {(min(u, v), max(u, v)) for i, u in enumerate(clique) for v in clique[i + 1 :]}
            for u in clique:
                for v in indep:
                    if rng.random() < spec.p:
                        edges.add((min(u, v), max(u, v)))
            yield Graph.from_edges(n, edges)


# ----------------------------------------------------------------------------
# the sweep


class SweepFailure(ThcoverError):
    """An instance where the pipeline and the oracles disagree; carries the
    offending graph in serialized form."""

    def __init__(self, message: str, graph_text: str):
        self.graph_text = graph_text
        super().__init__(f"{message}\n{graph_text}")


@dataclass(frozen=True)
class SweepReport:
    spec: GenSpec
    instances: int
    yes: int
    no: int
    brute_checked: int
    elapsed: float


def equivalence_sweep(spec: GenSpec) -> SweepReport:
    """Run every instance through the three-way agreement check.

    Asserts bipartite conflict graph == brute force == pipeline success;
    on yes instances additionally verifies the cover and that the
    obstruction scans come back empty (strict ones after coloring, all of
    them after recoloring).  Instances above the brute-force edge guard
    skip only the brute-force leg.  Raises SweepFailure on the first
    disagreement.
    """
    from .auxiliary import build_auxiliary
    from .cover import cover2, detect_pentagon, detect_switching, verify_cover
    from .graph import serialize_graph

    t0 = time.perf_counter()
    instances = yes = no = brute_checked = 0
    for g in generate(spec):
        instances += 1
        text = serialize_graph(g)

        def fail(msg: str):
            raise SweepFailure(msg, text)

        bip = aux_bipartite(build_auxiliary(g))
        res = cover2(g, verify=True)
        if res.found != bip:
            fail(f"pipeline={res.found} but bipartite conflict graph={bip}")
        if g.m <= BRUTE_EDGE_LIMIT:
            brute_checked += 1
            ok, witness = brute_thd_le2(g)
            if ok != bip:
                fail(f"brute force={ok} but bipartite conflict graph={bip}")
            if ok and not verify_cover(g, *witness):
                fail("brute force returned an invalid witness cover")
        if res.found:
            yes += 1
            if not res.log.verify.ok:
                fail("pipeline cover failed verification")
            colored, final = res.colored_partition, res.partition
            if detect_pentagon(colored, strict_only=True):
                fail("strict pentagon survived the coloring phase")
            if detect_switching(colored, "path", strict_only=True):
                fail("strict switching path survived the coloring phase")
            if detect_pentagon(final):
                fail("pentagon survived recoloring")
            if detect_switching(final, "path"):
                fail("switching path survived recoloring")
            if detect_switching(final, "cycle"):
                fail("switching cycle survived recoloring")
        else:
            no += 1
            cert = res.certificate
            if len(cert) % 2 == 0 or len(cert) < 3:
                fail("odd-cycle certificate has even or trivial length")
    return SweepReport(
        spec=spec,
        instances=instances,
        yes=yes,
        no=no,
        brute_checked=brute_checked,
        elapsed=time.perf_counter() - t0,
    )
