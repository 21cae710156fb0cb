"""Lexicographic breadth-first search and ordering verification.

The production implementation is partition refinement; verify_lexbfs
re-derives the label of every vertex at every step, so it accepts any
valid Lex-BFS ordering regardless of how ties were broken.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexOrdering


def lexbfs(g: Graph) -> VertexOrdering:
    """Lex-BFS ordering by partition refinement, O(n^2).

    Classes hold candidate vertices in ascending id order and the head
    class always contains exactly the vertices of best label, so popping
    its first element breaks every tie toward the smallest id.  On a
    disconnected graph this restarts at the smallest unplaced id.
    """
    partition: list[list[int]] = [list(range(g.n))] if g.n else []
    seq: list[int] = []
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        seq.append(v)
        refined: list[list[int]] = []
        for cell in partition:
            hit = [u for u in cell if g.adj[v, u]]
            miss = [u for u in cell if not g.adj[v, u]]
            if hit:
                refined.append(hit)
            if miss:
                refined.append(miss)
        partition = refined
    return VertexOrdering.from_sequence(seq)


@dataclass(frozen=True)
class LexBfsViolation:
    """First step at which the chosen vertex did not have a best label."""

    step: int  # 1-based position in the sequence
    chosen: int
    better: int


def _label_less(a: list[int], b: list[int]) -> bool:
    """Labels are ascending position lists; missing entries rank last."""
    for x, y in zip(a, b):
        if x != y:
            return x < y
    return len(a) > len(b)


def verify_lexbfs(g: Graph, order: VertexOrdering) -> tuple[bool, LexBfsViolation | None]:
    """Check the defining property by naive label simulation, O(n^2 log n).

    At each step the next vertex must carry a lexicographically maximal
    label (list of placed-neighbor positions); any tie-break is accepted.
    """
    if order.n != g.n:
        raise ValueError("ordering size does not match the graph")
    labels: dict[int, list[int]] = {v: [] for v in range(g.n)}
    placed: set[int] = set()
    for step, v in enumerate(order.sequence, start=1):
        for u in range(g.n):
            if u not in placed and u != v and _label_less(labels[u], labels[v]):
                return False, LexBfsViolation(step=step, chosen=v, better=u)
        placed.add(v)
        for u in g.neighbors(v):
            if u not in placed:
                labels[u].append(step)
    return True, None
