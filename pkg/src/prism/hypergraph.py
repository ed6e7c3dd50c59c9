"""Labeled hypergraph structure and graph-level operations.

A hypergraph here is a set of named nodes plus labeled hyperedges (each a
non-empty node set). It supports diameter computation, clique expansion to a
weighted graph, majority-rule reconstruction of sub-hypergraphs from a node
partition, and connected-component splitting.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

Edge = tuple[int, tuple[int, ...]]  # (label id, member node ids)


@dataclass(frozen=True)
class LabeledHypergraph:
    """Immutable labeled hypergraph over integer node ids.

    Node ids index ``node_names``; label ids index ``label_names``. Edge
    members are deduplicated but keep their first-occurrence order so the
    originating ground atoms can be recovered.
    """

    node_names: tuple[str, ...]
    label_names: tuple[str, ...]
    edges: tuple[Edge, ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def build(
        cls,
        node_names: tuple[str, ...] | list[str],
        label_names: tuple[str, ...] | list[str],
        edges: list[Edge] | tuple[Edge, ...],
    ) -> "LabeledHypergraph":
        node_names = tuple(node_names)
        label_names = tuple(label_names)
        n = len(node_names)
        if len(set(node_names)) != n:
            raise ValueError("duplicate node names")
        normalized: list[Edge] = []
        incidence: list[list[int]] = [[] for _ in range(n)]
        for eid, (label, members) in enumerate(edges):
            if not 0 <= label < len(label_names):
                raise ValueError(f"edge {eid}: unknown label id {label}")
            seen: dict[int, None] = {}
            for v in members:
                if not 0 <= v < n:
                    raise ValueError(f"edge {eid}: node id {v} out of range")
                seen.setdefault(v)
            if not seen:
                raise ValueError(f"edge {eid}: empty hyperedge")
            dedup = tuple(seen)
            normalized.append((label, dedup))
            for v in dedup:
                incidence[v].append(eid)
        return cls(
            node_names=node_names,
            label_names=label_names,
            edges=tuple(normalized),
            incidence=tuple(tuple(ids) for ids in incidence),
        )

    @property
    def n_nodes(self) -> int:
        return len(self.node_names)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_labels(self) -> int:
        return len(self.label_names)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def neighbors(self, v: int) -> set[int]:
        out: set[int] = set()
        for eid in self.incidence[v]:
            out.update(self.edges[eid][1])
        out.discard(v)
        return out

    def restrict(self, edge_ids: list[int], keep_nodes: set[int]) -> "LabeledHypergraph":
        """Sub-hypergraph of the given edges plus any isolated kept nodes.

        Node and label names are preserved; ids are re-indexed in ascending
        parent-id order so results are canonical.
        """
        nodes = set(keep_nodes)
        labels_used: set[int] = set()
        for eid in edge_ids:
            label, members = self.edges[eid]
            nodes.update(members)
            labels_used.add(label)
        node_ids = sorted(nodes)
        node_map = {v: i for i, v in enumerate(node_ids)}
        label_ids = sorted(labels_used)
        label_map = {l: i for i, l in enumerate(label_ids)}
        new_edges: list[Edge] = [
            (label_map[self.edges[eid][0]], tuple(node_map[v] for v in self.edges[eid][1]))
            for eid in edge_ids
        ]
        return LabeledHypergraph.build(
            tuple(self.node_names[v] for v in node_ids),
            tuple(self.label_names[l] for l in label_ids),
            new_edges,
        )


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph in CSR form, no self-loops, weights > 0.

    ``ids`` maps local indices back to the node ids of the hypergraph the
    graph was derived from (restriction keeps the original ids).
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    ids: np.ndarray

    @classmethod
    def from_pairs(cls, n: int, pair_weights: dict[tuple[int, int], float], ids=None) -> "WeightedGraph":
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for (i, j), w in pair_weights.items():
            if i == j:
                raise ValueError("self-loops are not allowed")
            if w <= 0:
                raise ValueError("weights must be strictly positive")
            adj[i].append((j, w))
            adj[j].append((i, w))
        indptr = np.zeros(n + 1, dtype=np.int64)
        indices_l: list[int] = []
        weights_l: list[float] = []
        for i in range(n):
            adj[i].sort()
            indptr[i + 1] = indptr[i] + len(adj[i])
            for j, w in adj[i]:
                indices_l.append(j)
                weights_l.append(w)
        return cls(
            n=n,
            indptr=indptr,
            indices=np.asarray(indices_l, dtype=np.int64),
            weights=np.asarray(weights_l, dtype=np.float64),
            ids=np.arange(n, dtype=np.int64) if ids is None else np.asarray(ids, dtype=np.int64),
        )

    @property
    def degrees(self) -> np.ndarray:
        out = np.zeros(self.n)
        np.add.at(out, np.repeat(np.arange(self.n), np.diff(self.indptr)), self.weights)
        return out

    def weight(self, i: int, j: int) -> float:
        lo, hi = self.indptr[i], self.indptr[i + 1]
        row = self.indices[lo:hi]
        k = np.searchsorted(row, j)
        if k < len(row) and row[k] == j:
            return float(self.weights[lo + k])
        return 0.0

    def adjacency_dict(self) -> dict[tuple[int, int], float]:
        out: dict[tuple[int, int], float] = {}
        for i in range(self.n):
            for k in range(self.indptr[i], self.indptr[i + 1]):
                j = int(self.indices[k])
                if i < j:
                    out[(i, j)] = float(self.weights[k])
        return out

    def subgraph(self, nodes: np.ndarray) -> "WeightedGraph":
        """Induced subgraph on ``nodes`` (local indices), dropping cut edges."""
        nodes = np.asarray(sorted(nodes), dtype=np.int64)
        pos = -np.ones(self.n, dtype=np.int64)
        pos[nodes] = np.arange(len(nodes))
        pairs: dict[tuple[int, int], float] = {}
        for local_i, i in enumerate(nodes):
            for k in range(self.indptr[i], self.indptr[i + 1]):
                j = int(self.indices[k])
                if pos[j] >= 0 and i < j:
                    pairs[(local_i, int(pos[j]))] = float(self.weights[k])
        return WeightedGraph.from_pairs(len(nodes), pairs, ids=self.ids[nodes])

    def components(self) -> list[np.ndarray]:
        """Connected components as arrays of local indices, by smallest index."""
        seen = np.zeros(self.n, dtype=bool)
        comps: list[np.ndarray] = []
        for start in range(self.n):
            if seen[start]:
                continue
            queue = deque([start])
            seen[start] = True
            comp = [start]
            while queue:
                u = queue.popleft()
                for k in range(self.indptr[u], self.indptr[u + 1]):
                    v = int(self.indices[k])
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(np.asarray(sorted(comp), dtype=np.int64))
        return comps


def diameter(h: LabeledHypergraph) -> int:
    """Longest shortest path (in edges traversed) over connected node pairs.

    Disconnected pairs are ignored; on a disconnected hypergraph this is the
    maximum over its components.
    """
    if h.n_nodes == 0:
        raise ValueError("diameter of an empty hypergraph")
    adjacency = [sorted(h.neighbors(v)) for v in range(h.n_nodes)]
    best = 0
    dist = np.empty(h.n_nodes, dtype=np.int64)
    for start in range(h.n_nodes):
        dist.fill(-1)
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        best = max(best, int(dist.max()))
    return best


def to_weighted_graph(h: LabeledHypergraph) -> WeightedGraph:
    """Clique expansion: each hyperedge of cardinality c >= 2 adds weight
    1/(c-1) to every node pair inside it, accumulated across edges."""
    if h.n_nodes == 0:
        raise ValueError("cannot expand an empty hypergraph")
    pairs: dict[tuple[int, int], float] = {}
    for _, members in h.edges:
        c = len(members)
        if c < 2:
            continue
        w = 1.0 / (c - 1)
        ordered = sorted(members)
        for a in range(c):
            for b in range(a + 1, c):
                key = (ordered[a], ordered[b])
                pairs[key] = pairs.get(key, 0.0) + w
    return WeightedGraph.from_pairs(h.n_nodes, pairs)


def majority_subhypergraph(
    h: LabeledHypergraph, part: list[set[int]] | list[list[int]]
) -> list[LabeledHypergraph]:
    """Split into one sub-hypergraph per part, assigning each edge to the part
    holding a strict majority of its members.

    Edges with no strict-majority part go to the part containing their lowest
    node id, so every edge survives in exactly one output. Each output keeps
    its part's nodes plus any out-of-part endpoints of its assigned edges.
    """
    parts = [set(p) for p in part]
    covered: set[int] = set()
    total = 0
    for p in parts:
        total += len(p)
        covered |= p
    if total != h.n_nodes or covered != set(range(h.n_nodes)):
        raise ValueError("part is not a partition of the hypergraph's nodes")
    owner = np.empty(h.n_nodes, dtype=np.int64)
    for pi, p in enumerate(parts):
        for v in p:
            owner[v] = pi
    assigned: list[list[int]] = [[] for _ in parts]
    for eid, (_, members) in enumerate(h.edges):
        counts = np.bincount(owner[list(members)], minlength=len(parts))
        top = int(counts.argmax())
        if counts[top] * 2 > len(members):
            assigned[top].append(eid)
        else:
            assigned[int(owner[min(members)])].append(eid)
    return [h.restrict(eids, p) for eids, p in zip(assigned, parts)]


def connected_components(h: LabeledHypergraph) -> list[LabeledHypergraph]:
    """Maximal connected sub-hypergraphs, ordered by smallest node id."""
    n = h.n_nodes
    comp = -np.ones(n, dtype=np.int64)
    n_comp = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        queue = deque([start])
        comp[start] = n_comp
        while queue:
            u = queue.popleft()
            for eid in h.incidence[u]:
                for v in h.edges[eid][1]:
                    if comp[v] < 0:
                        comp[v] = n_comp
                        queue.append(v)
        n_comp += 1
    out: list[LabeledHypergraph] = []
    for ci in range(n_comp):
        nodes = {int(v) for v in np.flatnonzero(comp == ci)}
        eids = [eid for eid, (_, members) in enumerate(h.edges) if comp[members[0]] == ci]
        out.append(h.restrict(eids, nodes))
    return out
