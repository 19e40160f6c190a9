"""Graph corpora: exhaustive non-isomorphic graphs for small n, random graphs."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import CapabilityError, GraphSizeError
from .graph import Graph, are_isomorphic, _refined_invariants, count_components, is_connected, mask_members

EXHAUSTIVE_CAP = 8

# graphs / connected graphs up to isomorphism on n = 1..8 vertices
KNOWN_COUNTS = {1: (1, 1), 2: (2, 1), 3: (4, 2), 4: (11, 6), 5: (34, 21), 6: (156, 112), 7: (1044, 853), 8: (12346, 11117)}


def _bucket_key(g: Graph) -> tuple:
    triangles = sum((g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges())
    return (g.m, triangles, tuple(sorted(_refined_invariants(g))))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    out: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    new = n - 1
    for base in _all_graphs(n - 1):
        for nbrs in range(1 << new):
            adj = list(base.adj) + [nbrs]
            for u in mask_members(nbrs):
                adj[u] |= 1 << new
            g = Graph(n, adj)
            bucket = buckets.setdefault(_bucket_key(g), [])
            if any(are_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            out.append(g)
    return tuple(out)


def nonisomorphic_graphs(n: int, connected: bool = True) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism (one labelled representative each)."""
    if n < 1:
        raise GraphSizeError("n must be positive")
    if n > EXHAUSTIVE_CAP:
        raise CapabilityError(f"exhaustive generation is capped at n <= {EXHAUSTIVE_CAP}")
    graphs = _all_graphs(n)
    if connected:
        return [g for g in graphs if is_connected(g)]
    return list(graphs)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_connected_graph(n: int, p: float, rng: np.random.Generator, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; falls back to adding a random spanning tree."""
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    g = random_graph(n, p, rng)
    order = rng.permutation(n).tolist()
    edges = set(g.edges())
    for i in range(1, n):
        u, v = order[i], order[int(rng.integers(i))]
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def force_min_degree(g: Graph, delta: int, rng: np.random.Generator) -> Graph | None:
    """Randomly add and delete edges until the minimum degree is exactly ``delta``.

    Returns ``None`` when a connected graph with that minimum degree was not reached.
    """
    n = g.n
    if not 0 < delta < n:
        return None
    adj = list(g.adj)

    def deg(v: int) -> int:
        return adj[v].bit_count()

    for v in range(n):
        while deg(v) < delta:
            cands = [u for u in range(n) if u != v and not adj[v] >> u & 1]
            u = cands[int(rng.integers(len(cands)))]
            adj[v] |= 1 << u
            adj[u] |= 1 << v
    if min(deg(v) for v in range(n)) > delta:
        v = int(rng.integers(n))
        nbrs = mask_members(adj[v])
        rng.shuffle(nbrs)
        for u in nbrs:
            if deg(v) == delta:
                break
            if deg(u) > delta:
                adj[v] &= ~(1 << u)
                adj[u] &= ~(1 << v)
    out = Graph(n, adj)
    if min(out.degrees()) != delta or count_components(out.adj, (1 << n) - 1) != 1:
        return None
    return out
