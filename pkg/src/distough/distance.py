"""Shortest-path distances, Wiener index and squared-distance sum."""

from __future__ import annotations

import numpy as np

from .errors import ConnectivityError
from .graph import Graph, is_connected


def distance_matrix(g: Graph) -> np.ndarray:
    """BFS distance matrix of a connected graph as a read-only ``int64`` array."""
    if not is_connected(g):
        raise ConnectivityError("distance matrix is undefined for a disconnected graph")
    n = g.n
    adj = g.adj
    dm = np.zeros((n, n), dtype=np.int64)
    for source in range(n):
        row = dm[source]
        seen = 1 << source
        frontier = seen
        depth = 0
        while frontier:
            depth += 1
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & ~seen
            seen |= frontier
            f = frontier
            while f:
                low = f & -f
                row[low.bit_length() - 1] = depth
                f ^= low
    dm.setflags(write=False)
    return dm


def wiener_index(dm: np.ndarray) -> int:
    """Sum of distances over unordered vertex pairs."""
    return int(np.triu(dm, 1).sum())


def wiener2_index(dm: np.ndarray) -> int:
    """Sum of squared distances over unordered vertex pairs."""
    upper = np.triu(dm, 1)
    return int((upper * upper).sum())


def diameter(dm: np.ndarray) -> int:
    return int(dm.max())
