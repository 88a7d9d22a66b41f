"""Graphs built on named vertices (grid coordinates or peripheral names)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .graph import Graph, enumerate_cycles_upto


@dataclass(frozen=True)
class LabeledGraph:
    """A Graph together with the construction labels of its vertices.

    ``labels[v]`` is the label of vertex ``v`` (usually a ``(row, col)``
    tuple); ``index`` is the inverse map. ``names`` carries peripheral
    aliases such as ``("z", 3)`` pointing at vertex ids, and ``exterior``
    holds ids of edges added to close a block into a tiling.
    """

    graph: Graph
    labels: tuple[Hashable, ...]
    names: dict = field(default_factory=dict)
    exterior: frozenset[int] = frozenset()
    bricks: tuple[tuple[int, ...], ...] = ()

    @property
    def index(self) -> dict:
        return {lab: v for v, lab in enumerate(self.labels)}

    def vertex(self, label: Hashable) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def edge_id(self, a: Hashable, b: Hashable) -> int:
        """Edge id between two labelled vertices."""
        idx = self.index
        eid = self.graph.edge_between(idx[a], idx[b])
        if eid is None:
            raise KeyError(f"no edge between {a!r} and {b!r}")
        return eid


class Builder:
    """Mutable helper that assembles a LabeledGraph in insertion order."""

    def __init__(self) -> None:
        self.labels: list[Hashable] = []
        self.index: dict[Hashable, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.edge_keys: dict[frozenset, int] = {}
        self.exterior: set[int] = set()
        self.names: dict = {}
        self.bricks: list[tuple] = []

    def add_vertex(self, label: Hashable) -> int:
        if label in self.index:
            return self.index[label]
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def has(self, label: Hashable) -> bool:
        return label in self.index

    def add_edge(self, a: Hashable, b: Hashable, exterior: bool = False) -> int:
        u, v = self.index[a], self.index[b]
        if u == v:
            raise ValueError(f"loop at {a!r}")
        key = frozenset((u, v))
        if key in self.edge_keys:
            raise ValueError(f"duplicate edge {a!r} - {b!r}")
        eid = len(self.edges)
        self.edges.append((min(u, v), max(u, v)))
        self.edge_keys[key] = eid
        if exterior:
            self.exterior.add(eid)
        return eid

    def has_edge(self, a: Hashable, b: Hashable) -> bool:
        if a not in self.index or b not in self.index:
            return False
        return frozenset((self.index[a], self.index[b])) in self.edge_keys

    def remove_edges(self, pairs: Iterable[tuple[Hashable, Hashable]]) -> None:
        drop = set()
        for a, b in pairs:
            if a in self.index and b in self.index:
                key = frozenset((self.index[a], self.index[b]))
                if key in self.edge_keys:
                    drop.add(self.edge_keys[key])
        self._rebuild(drop_edges=drop)

    def remove_vertices(self, labels: Iterable[Hashable]) -> None:
        gone = {self.index[lab] for lab in labels if lab in self.index}
        drop = {eid for eid, (u, v) in enumerate(self.edges) if u in gone or v in gone}
        self._rebuild(drop_edges=drop, drop_vertices=gone)

    def degree(self, label: Hashable) -> int:
        v = self.index[label]
        return sum((u == v) + (w == v) for u, w in self.edges)

    def _rebuild(self, drop_edges: set[int] = frozenset(), drop_vertices: set[int] = frozenset()) -> None:
        old_labels, old_edges, old_ext = self.labels, self.edges, self.exterior
        self.labels, self.index = [], {}
        self.edges, self.edge_keys, self.exterior = [], {}, set()
        for v, lab in enumerate(old_labels):
            if v not in drop_vertices:
                self.add_vertex(lab)
        for eid, (u, v) in enumerate(old_edges):
            if eid not in drop_edges:
                self.add_edge(old_labels[u], old_labels[v], exterior=eid in old_ext)

    def mark_bricks(self) -> None:
        """Remember the brick-shaped hexagons of the current block.

        A brick is a 6-cycle on grid labels with three vertices in each of two
        consecutive rows. They break ties when a graph admits several cell
        collections.
        """
        g = Graph(len(self.labels), self.edges)
        for cyc in enumerate_cycles_upto(g, 6):
            labs = [self.labels[v] for v in cyc.vertices]
            if len(labs) != 6 or not all(isinstance(lab[0], int) for lab in labs):
                continue
            rows = sorted(lab[0] for lab in labs)
            if rows[0] == rows[2] and rows[3] == rows[5] and rows[3] == rows[0] + 1:
                self.bricks.append(tuple(labs))

    def build(self) -> LabeledGraph:
        names = {k: self.index[lab] for k, lab in self.names.items()}
        bricks = tuple(
            tuple(self.index[lab] for lab in brick)
            for brick in self.bricks
            if all(lab in self.index for lab in brick)
        )
        return LabeledGraph(
            Graph(len(self.labels), self.edges),
            tuple(self.labels),
            names,
            frozenset(self.exterior),
            bricks,
        )
