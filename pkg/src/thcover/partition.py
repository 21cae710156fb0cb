"""Three-way edge partitions: class 0 is shared, classes 1 and 2 are the
exclusive parts of a candidate two-subgraph cover."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Edge, Graph


@dataclass(frozen=True, eq=False)
class TriPartition:
    graph: Graph
    labels: tuple[int, ...]  # one of 0, 1, 2 per edge index

    def __post_init__(self):
        if len(self.labels) != self.graph.m:
            raise ValueError("one label per edge required")
        if any(c not in (0, 1, 2) for c in self.labels):
            raise ValueError("labels must be 0, 1, or 2")

    def label_of(self, e: Edge) -> int:
        return self.labels[self.graph.edge_index[e]]

    def class_edges(self, c: int) -> frozenset[Edge]:
        return frozenset(e for e, lab in zip(self.graph.edges, self.labels) if lab == c)

    def sizes(self) -> tuple[int, int, int]:
        counts = [0, 0, 0]
        for lab in self.labels:
            counts[lab] += 1
        return tuple(counts)  # type: ignore[return-value]

    def matrix(self) -> np.ndarray:
        """n x n int8 class matrix: -1 off the edges, labels on them."""
        cached = getattr(self, "_matrix", None)
        if cached is None:
            g = self.graph
            cached = np.full((g.n, g.n), -1, dtype=np.int8)
            for (u, v), lab in zip(g.edges, self.labels):
                cached[u, v] = cached[v, u] = lab
            cached.setflags(write=False)
            object.__setattr__(self, "_matrix", cached)
        return cached

    def relabel(self, to_one: Iterable[Edge], to_two: Iterable[Edge]) -> "TriPartition":
        """Move the given class-0 edges into classes 1 and 2."""
        labels = list(self.labels)
        for e in to_one:
            labels[self.graph.edge_index[e]] = 1
        for e in to_two:
            labels[self.graph.edge_index[e]] = 2
        return TriPartition(self.graph, tuple(labels))

    def fold(self, picks: Sequence[int]) -> "TriPartition":
        """Assign every class-0 edge a class from picks (one entry per
        class-0 edge, in edge order); the result has no shared edges."""
        labels = list(self.labels)
        it = iter(picks)
        for i, lab in enumerate(labels):
            if lab == 0:
                choice = next(it)
                if choice not in (1, 2):
                    raise ValueError("fold picks must be 1 or 2")
                labels[i] = choice
        return TriPartition(self.graph, tuple(labels))
