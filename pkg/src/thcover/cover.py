"""Threshold-cover construction: ordering, coloring, recoloring, assembly.

cover2 runs the full pipeline: a Lex-BFS ordering fixes how each conflict
component is colored, the shared class is then cleaned up by moving every
class-0 edge that closes a pentagon into the part opposite the pentagon's
exclusive class, and the two parts are the exclusive classes plus what
remains shared.  A non-bipartite conflict graph yields an odd-cycle
certificate and there is no size-2 cover at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .auxiliary import OddCycleCertificate, build_auxiliary, two_color
from .backend import kernels
from .errors import InvariantError
from .graph import Edge, Graph, VertexOrdering
from .lexbfs import lexbfs
from .partition import TriPartition
from .recognition import is_threshold


@dataclass(frozen=True)
class PentagonWitness:
    """Vertices (a, b, c, d, e): ab, ae in the exclusive class, bc, bd, ec,
    ed in the other, cd shared (strict: same class as ab), ac, ad, be
    non-edges."""

    vertices: tuple[int, int, int, int, int]
    klass: int
    strict: bool


@dataclass(frozen=True)
class SwitchingWitness:
    """Path (x, y, z, w): xy, zw in class i or shared, yz opposite, xw a
    non-edge.  Cycle (a, b, c, d): all four boundary pairs are edges, ab,
    cd in class i or shared, bc, ad opposite.  strict is None for cycles."""

    kind: str
    vertices: tuple[int, int, int, int]
    klass: int
    strict: bool | None


def detect_pentagon(tp: TriPartition, strict_only: bool = False) -> PentagonWitness | None:
    """Exhaustive O(n^5) scan; first witness in lexicographic tuple order."""
    out = kernels.find_pentagon(tp.matrix(), tp.graph.nonadj, strict_only)
    if out[0] < 0:
        return None
    return PentagonWitness(
        vertices=tuple(int(x) for x in out[:5]),
        klass=int(out[5]),
        strict=bool(out[6]),
    )


def detect_switching(tp: TriPartition, kind: str, strict_only: bool = False) -> SwitchingWitness | None:
    """Exhaustive O(n^4) scan for switching paths or cycles."""
    if kind == "path":
        out = kernels.find_switch_path(tp.matrix(), tp.graph.nonadj, strict_only)
        if out[0] < 0:
            return None
        return SwitchingWitness(
            kind="path",
            vertices=tuple(int(x) for x in out[:4]),
            klass=int(out[4]),
            strict=bool(out[5]),
        )
    if kind == "cycle":
        if strict_only:
            raise ValueError("switching cycles have no strict form")
        out = kernels.find_switch_cycle(tp.matrix())
        if out[0] < 0:
            return None
        return SwitchingWitness(
            kind="cycle",
            vertices=tuple(int(x) for x in out[:4]),
            klass=int(out[4]),
            strict=None,
        )
    raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")


def detect_hexagon(tp: TriPartition) -> tuple[tuple[int, ...], int] | None:
    """Alternating hexagon scan, O(n^6), for partitions with no shared class:
    six distinct vertices with three same-class edges joined cyclically by
    three non-edges."""
    if tp.sizes()[0]:
        raise ValueError("fold class 0 away before scanning for hexagons")
    out = kernels.find_hexagon(tp.matrix(), tp.graph.nonadj)
    if out[0] < 0:
        return None
    return tuple(int(x) for x in out[:6]), int(out[6])


def pentagon_recolor_sets(tp: TriPartition) -> tuple[frozenset[Edge], frozenset[Edge]]:
    """S_i: shared edges cd completing a pentagon whose exclusive class is i.

    The two sets must be disjoint; overlap would make the recoloring
    ill-defined and signals a bug upstream, not bad input.
    """
    g = tp.graph
    f0 = [e for e, lab in zip(g.edges, tp.labels) if lab == 0]
    if not f0:
        return frozenset(), frozenset()
    arr = np.asarray(f0, dtype=np.int64)
    flags = kernels.recolor_flags(tp.matrix(), g.nonadj, arr[:, 0], arr[:, 1])
    s1 = frozenset(e for e, f in zip(f0, flags) if f & 1)
    s2 = frozenset(e for e, f in zip(f0, flags) if f & 2)
    both = s1 & s2
    if both:
        raise InvariantError(f"pentagon classes overlap on shared edges {sorted(both)}")
    return s1, s2


def apply_recolor(tp: TriPartition, s1: frozenset[Edge], s2: frozenset[Edge]) -> TriPartition:
    """Resolve pentagons: S1 joins class 2, S2 joins class 1, the rest of
    class 0 stays shared."""
    if s1 & s2:
        raise InvariantError("recolor sets must be disjoint")
    return tp.relabel(to_one=s2, to_two=s1)


def assemble_cover(tp: TriPartition) -> tuple[frozenset[Edge], frozenset[Edge]]:
    """Parts are exclusive classes plus the shared class."""
    shared = tp.class_edges(0)
    return tp.class_edges(1) | shared, tp.class_edges(2) | shared


def verify_cover(g: Graph, h1: frozenset[Edge], h2: frozenset[Edge]) -> bool:
    ok, _, _, _ = cover_report(g, h1, h2)
    return ok


def cover_report(
    g: Graph, h1: frozenset[Edge], h2: frozenset[Edge]
) -> tuple[bool, bool, bool, bool]:
    """(overall, union covers E, h1 threshold, h2 threshold)."""
    covers = (h1 | h2) == set(g.edges)
    t1, _ = is_threshold(g.subgraph(h1))
    t2, _ = is_threshold(g.subgraph(h2))
    return covers and t1 and t2, covers, t1, t2


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    covers: bool
    h1_threshold: bool
    h2_threshold: bool


@dataclass(frozen=True)
class RunLog:
    """What each phase did, enough to replay or explain a run."""

    phases: tuple[str, ...]
    order: VertexOrdering
    aux_vertices: int
    aux_edges: int
    sizes_colored: tuple[int, int, int] | None = None
    sizes_final: tuple[int, int, int] | None = None
    recolored_to_one: tuple[Edge, ...] = ()
    recolored_to_two: tuple[Edge, ...] = ()
    verify: VerifyReport | None = None


@dataclass(frozen=True)
class CoverResult:
    """Either a cover (h1, h2) or an odd-cycle certificate, never both."""

    h1: frozenset[Edge] | None
    h2: frozenset[Edge] | None
    certificate: OddCycleCertificate | None
    partition: TriPartition | None
    colored_partition: TriPartition | None
    log: RunLog

    @property
    def found(self) -> bool:
        return self.h1 is not None


def cover2(
    g: Graph,
    ordering: VertexOrdering | None = None,
    skip_phase1: bool = False,
    skip_phase3: bool = False,
    verify: bool = False,
    dense_limit: int | None = None,
) -> CoverResult:
    """Decide whether two threshold subgraphs can cover g, constructively.

    An explicit ordering (or skip_phase1, which means the identity) replaces
    the Lex-BFS phase; skip_phase3 stops after coloring.  Truncated runs can
    produce non-threshold parts on yes instances; with verify=True that
    outcome lands in the log rather than being an error.
    """
    phases: list[str] = []
    if ordering is not None:
        if ordering.n != g.n:
            raise ValueError("ordering size does not match the graph")
        order = ordering
        phases.append("ordering-override")
    elif skip_phase1:
        order = VertexOrdering.identity(g.n)
        phases.append("identity-order")
    else:
        order = lexbfs(g)
        phases.append("lexbfs")

    aux = build_auxiliary(g) if dense_limit is None else build_auxiliary(g, dense_limit)
    colored = two_color(aux, order)
    phases.append("two-color")
    if isinstance(colored, OddCycleCertificate):
        log = RunLog(
            phases=tuple(phases),
            order=order,
            aux_vertices=aux.n_vertices,
            aux_edges=aux.edge_count,
        )
        return CoverResult(
            h1=None, h2=None, certificate=colored, partition=None,
            colored_partition=None, log=log,
        )

    final = colored
    s1: frozenset[Edge] = frozenset()
    s2: frozenset[Edge] = frozenset()
    if not skip_phase3:
        s1, s2 = pentagon_recolor_sets(colored)
        final = apply_recolor(colored, s1, s2)
        phases.append("pentagon-recolor")

    h1, h2 = assemble_cover(final)
    phases.append("assemble")
    report = None
    if verify:
        ok, covers, t1, t2 = cover_report(g, h1, h2)
        report = VerifyReport(ok=ok, covers=covers, h1_threshold=t1, h2_threshold=t2)
    log = RunLog(
        phases=tuple(phases),
        order=order,
        aux_vertices=aux.n_vertices,
        aux_edges=aux.edge_count,
        sizes_colored=colored.sizes(),
        sizes_final=final.sizes(),
        recolored_to_one=tuple(sorted(s2)),
        recolored_to_two=tuple(sorted(s1)),
        verify=report,
    )
    return CoverResult(
        h1=h1, h2=h2, certificate=None, partition=final,
        colored_partition=colored, log=log,
    )
