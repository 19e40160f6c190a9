from __future__ import annotations

import numpy as np
import pytest

from distough.errors import CapabilityError
from distough.generate import KNOWN_COUNTS, force_min_degree, nonisomorphic_graphs, random_connected_graph
from distough.graph import are_isomorphic, is_connected, min_degree


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_known_values(n):
    total, connected = KNOWN_COUNTS[n]
    assert len(nonisomorphic_graphs(n, connected=False)) == total
    assert len(nonisomorphic_graphs(n)) == connected


def test_representatives_are_pairwise_nonisomorphic():
    gs = nonisomorphic_graphs(5, connected=False)
    for i, g in enumerate(gs):
        for h in gs[i + 1 :]:
            assert not are_isomorphic(g, h)


def test_exhaustive_cap():
    with pytest.raises(CapabilityError):
        nonisomorphic_graphs(9)


def test_random_connected_graph_is_connected():
    rng = np.random.default_rng(3)
    for _ in range(50):
        assert is_connected(random_connected_graph(9, 0.1, rng))


def test_force_min_degree():
    rng = np.random.default_rng(11)
    hits = 0
    for _ in range(40):
        g = force_min_degree(random_connected_graph(12, 0.5, rng), 2, rng)
        if g is not None:
            hits += 1
            assert min_degree(g) == 2 and is_connected(g)
    assert hits > 0
