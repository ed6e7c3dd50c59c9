"""Hierarchical bipartitioning of the clique-expanded graph.

Recursive sweep cuts on the second eigenvector of the symmetric normalized
Laplacian; recursion stops when the subgraph is already well connected
(lambda2 above a threshold) or a proposed cut would create a side smaller
than ``n_min``. Sub-hypergraphs are rebuilt by majority rule so no node or
edge is lost.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypergraph import (
    LabeledHypergraph,
    WeightedGraph,
    majority_subhypergraph,
    to_weighted_graph,
)


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class SpectralConfig:
    lambda2_max: float = 0.8
    n_min: int = 8
    eig_tolerance: float = 1e-8
    eig_max_iters: int = 10000

    def __post_init__(self):
        if not 0 < self.lambda2_max <= 2:
            raise ValueError("lambda2_max must be in (0, 2]")
        if self.n_min < 2:
            raise ValueError("n_min must be at least 2")
        if self.eig_tolerance <= 0 or self.eig_max_iters < 1:
            raise ValueError("bad eigensolver settings")


def _laplacian_matvec(g: WeightedGraph, inv_sqrt_deg: np.ndarray, x: np.ndarray) -> np.ndarray:
    # L_sym x = x - D^{-1/2} W D^{-1/2} x
    y = inv_sqrt_deg * x
    wy = np.zeros_like(x)
    rows = np.repeat(np.arange(g.n), np.diff(g.indptr))
    np.add.at(wy, rows, g.weights * y[g.indices])
    return x - inv_sqrt_deg * wy


def second_eigenpair(g: WeightedGraph, cfg: SpectralConfig) -> tuple[float, np.ndarray]:
    """Second-smallest eigenpair of the symmetric normalized Laplacian.

    Deflated power iteration on 2I - L_sym with the trivial eigenvector
    D^(1/2)*1 projected out. Converges when the residual
    ||L_sym v - lambda v|| drops below ``eig_tolerance``; the returned
    eigenvector has its first non-negligible component positive.
    """
    if g.n < 2:
        raise ValueError("graph must have at least 2 nodes")
    if len(g.components()) != 1:
        raise DisconnectedGraphError("second_eigenpair requires a connected graph")
    deg = g.degrees
    inv_sqrt_deg = 1.0 / np.sqrt(deg)
    trivial = np.sqrt(deg)
    trivial /= np.linalg.norm(trivial)

    rng = np.random.Generator(np.random.Philox(0xC0FFEE))
    x = rng.standard_normal(g.n)
    x -= trivial * (trivial @ x)
    x /= np.linalg.norm(x)

    lam = 0.0
    for _ in range(cfg.eig_max_iters):
        lx = _laplacian_matvec(g, inv_sqrt_deg, x)
        lam = float(x @ lx)
        if np.linalg.norm(lx - lam * x) <= cfg.eig_tolerance:
            break
        y = 2.0 * x - lx  # (2I - L_sym) x
        y -= trivial * (trivial @ y)
        ny = np.linalg.norm(y)
        if ny > 1e-300:
            x = y / ny
    else:
        raise ConvergenceError(
            f"eigensolver did not reach residual {cfg.eig_tolerance} "
            f"in {cfg.eig_max_iters} iterations"
        )
    nz = np.flatnonzero(np.abs(x) > 1e-12)
    if len(nz) and x[nz[0]] < 0:
        x = -x
    return lam, x


def cheeger_sweep_cut(g: WeightedGraph, v2: np.ndarray) -> tuple[set[int], set[int], float]:
    """Best prefix cut of the v2 ordering by conductance.

    Nodes are sorted by their eigenvector component (ties by index); among the
    n-1 prefix sets the one minimizing cut(S)/min(vol(S), vol(~S)) is
    returned, with ties going to the shortest prefix.
    """
    n = g.n
    order = np.lexsort((np.arange(n), v2))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    deg = g.degrees
    total_vol = float(deg.sum())

    best_phi = np.inf
    best_k = 1
    cut = 0.0
    vol = 0.0
    in_s = np.zeros(n, dtype=bool)
    for k in range(1, n):
        u = order[k - 1]
        in_s[u] = True
        vol += deg[u]
        for idx in range(g.indptr[u], g.indptr[u + 1]):
            v = int(g.indices[idx])
            w = float(g.weights[idx])
            cut += -w if in_s[v] else w
        phi = cut / min(vol, total_vol - vol)
        if phi < best_phi:
            best_phi = phi
            best_k = k
    side = {int(v) for v in order[:best_k]}
    rest = {int(v) for v in order[best_k:]}
    return side, rest, float(best_phi)


def get_clusters(g: WeightedGraph, cfg: SpectralConfig) -> list[set[int]]:
    """Recursive sweep-cut bipartition; returns leaf node sets.

    Disconnected subgraphs split into their components outright (a zero-cost
    cut). Otherwise recursion stops when lambda2 exceeds ``lambda2_max`` or
    the proposed cut leaves a side smaller than ``n_min``. Leaves are sorted
    by their smallest node id.
    """
    if g.n == 0:
        raise ValueError("graph must be non-empty")

    leaves: list[set[int]] = []

    def recurse(sub: WeightedGraph) -> None:
        if sub.n == 1:
            leaves.append({int(sub.ids[0])})
            return
        comps = sub.components()
        if len(comps) > 1:
            for comp in comps:
                recurse(sub.subgraph(comp))
            return
        lam2, v2 = second_eigenpair(sub, cfg)
        if lam2 > cfg.lambda2_max:
            leaves.append({int(i) for i in sub.ids})
            return
        side, rest, _ = cheeger_sweep_cut(sub, v2)
        if min(len(side), len(rest)) < cfg.n_min:
            leaves.append({int(i) for i in sub.ids})
            return
        recurse(sub.subgraph(np.asarray(sorted(side))))
        recurse(sub.subgraph(np.asarray(sorted(rest))))

    recurse(g)
    leaves.sort(key=min)
    return leaves


def hcluster(h: LabeledHypergraph, cfg: SpectralConfig) -> list[LabeledHypergraph]:
    """Cut the hypergraph along sparse cuts of its clique expansion.

    The node partition from ``get_clusters`` is turned back into
    sub-hypergraphs by majority rule, conserving every node and edge.
    """
    if h.n_nodes == 0:
        raise ValueError("hypergraph must be non-empty")
    parts = get_clusters(to_weighted_graph(h), cfg)
    if len(parts) == 1:
        return [h]
    return majority_subhypergraph(h, parts)
