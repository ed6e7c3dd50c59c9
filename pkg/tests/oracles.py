"""Independent oracles used to derive expected test values.

These deliberately avoid the code paths they check: dense eigensolves for
the power-iteration eigensolver, exhaustive enumeration for sweep cuts and
2-means, mpmath special functions for the scipy-backed quantiles, and a
Monte-Carlo generalized chi-squared for the gamma approximation.
"""

from itertools import combinations

import mpmath
import numpy as np

mpmath.mp.dps = 30


def dense_second_eigenpair(g):
    """Full symmetric eigensolve of the normalized Laplacian."""
    n = g.n
    W = np.zeros((n, n))
    for (i, j), w in g.adjacency_dict().items():
        W[i, j] = W[j, i] = w
    d = W.sum(axis=1)
    dm = np.diag(1.0 / np.sqrt(d))
    lsym = np.eye(n) - dm @ W @ dm
    vals, vecs = np.linalg.eigh(lsym)
    return float(vals[1]), vecs[:, 1]


def conductance(g, side):
    """Cut weight over the smaller side's volume, from the raw adjacency."""
    side = set(side)
    adj = g.adjacency_dict()
    deg = {}
    cut = 0.0
    for (i, j), w in adj.items():
        deg[i] = deg.get(i, 0.0) + w
        deg[j] = deg.get(j, 0.0) + w
        if (i in side) != (j in side):
            cut += w
    vol_s = sum(deg.get(i, 0.0) for i in side)
    vol_c = sum(deg.values()) - vol_s
    return cut / min(vol_s, vol_c)


def best_bipartition_conductance(g):
    """Minimum conductance over every non-trivial bipartition."""
    n = g.n
    best = np.inf
    for r in range(1, n // 2 + 1):
        for side in combinations(range(n), r):
            best = min(best, conductance(g, side))
    return best


def best_sweep_prefix_conductance(g, v2):
    """Minimum conductance over the n-1 prefixes of the v2 ordering."""
    order = np.lexsort((np.arange(g.n), v2))
    return min(conductance(g, order[:k]) for k in range(1, g.n))


def t_isf_mpmath(p, df):
    """Student-t inverse survival via mpmath's survival function and
    bisection."""
    p = mpmath.mpf(p)
    df = mpmath.mpf(df)

    def survival(x):
        # S(x) = I_{df/(df+x^2)}(df/2, 1/2) / 2 for x >= 0
        z = df / (df + x * x)
        return mpmath.betainc(df / 2, mpmath.mpf(1) / 2, 0, z, regularized=True) / 2

    if p == mpmath.mpf(1) / 2:
        return 0.0
    lo, hi = mpmath.mpf(0), mpmath.mpf(1)
    while survival(hi) > p:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if survival(mid) > p:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def gamma_isf_mpmath(alpha, shape, rate):
    """Gamma inverse survival via mpmath's regularized upper gamma and
    bisection."""
    alpha = mpmath.mpf(alpha)
    shape = mpmath.mpf(shape)
    rate = mpmath.mpf(rate)

    def survival(x):
        return mpmath.gammainc(shape, a=rate * x, regularized=True)

    lo, hi = mpmath.mpf(0), mpmath.mpf(1)
    while survival(hi) > alpha:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if survival(mid) > alpha:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def block_deviation_covariance(means, N, m):
    """Full block covariance of the member-vs-mean count deviations."""
    p = np.asarray(means, dtype=float) / N
    S = N * (np.diag(p) - np.outer(p, p))
    return np.kron(np.eye(m) - np.full((m, m), 1.0 / m), S)


def genchi2_mc_quantile(weights, q, n_samples, rng):
    """Monte-Carlo quantile of a weighted sum of independent chi-squared(1)
    variables."""
    total = np.zeros(n_samples)
    for w in weights:
        total += w * rng.chisquare(1, size=n_samples)
    return float(np.quantile(total, q))


def best_two_partition_sse(points):
    """Exhaustive minimum within-cluster sum of squares over all two-way
    splits (first point pinned to side one to halve the search)."""
    points = np.asarray(points, dtype=float)
    n = len(points)
    best = (np.inf, None)
    for mask in range(0, 2 ** (n - 1)):
        side = [0] + [i for i in range(1, n) if (mask >> (i - 1)) & 1]
        rest = [i for i in range(1, n) if not (mask >> (i - 1)) & 1]
        if not rest:
            continue
        sse = 0.0
        for group in (side, rest):
            pts = points[group]
            sse += ((pts - pts.mean(axis=0)) ** 2).sum()
        if sse < best[0] - 1e-12:
            best = (sse, (frozenset(side), frozenset(rest)))
    return best
