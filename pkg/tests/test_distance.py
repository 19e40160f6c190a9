from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from distough.distance import diameter, distance_matrix, wiener2_index, wiener_index
from distough.errors import ConnectivityError
from distough.graph import complete_graph, disjoint_union, empty_graph, join, path_graph

from conftest import connected_graphs


def test_complete_graph_distances():
    dm = distance_matrix(complete_graph(6))
    assert (dm == 1 - np.eye(6, dtype=int)).all()
    assert (dm.sum(axis=1) == 5).all()
    assert wiener_index(dm) == wiener2_index(dm) == 15


def test_path_distances():
    dm = distance_matrix(path_graph(3))
    assert dm[0, 2] == 2 and dm[0, 1] == dm[1, 2] == 1
    assert wiener_index(dm) == 4
    assert wiener2_index(dm) == 6


def test_thm1_extremal_wiener_index():
    g = join(complete_graph(2), disjoint_union(complete_graph(13), empty_graph(3)))
    d, n = 2, 18
    closed = (d + 1) * (2 * n - d - 2) + (n - 2 * d - 1) * (n + d) + d * (n - 1)
    assert wiener_index(distance_matrix(g)) == closed // 2 == 195


def test_thm2_extremal_wiener2_index():
    g = join(complete_graph(1), disjoint_union(complete_graph(17), empty_graph(1)))
    assert wiener2_index(distance_matrix(g)) == 222


def test_disconnected_input_is_rejected():
    with pytest.raises(ConnectivityError):
        distance_matrix(empty_graph(2))


def test_matrix_is_read_only():
    dm = distance_matrix(path_graph(4))
    with pytest.raises(ValueError):
        dm[0, 1] = 5


@given(connected_graphs(1, 10))
def test_distance_matrix_invariants(g):
    dm = distance_matrix(g)
    assert (dm == dm.T).all()
    assert (np.diag(dm) == 0).all()
    if g.n > 1:
        assert dm[~np.eye(g.n, dtype=bool)].min() >= 1
    # triangle inequality via min-plus composition
    assert (dm <= (dm[:, :, None] + dm[None, :, :]).min(axis=1)).all()
    w, w2 = wiener_index(dm), wiener2_index(dm)
    assert w2 >= w and (w2 == w) == (diameter(dm) <= 1)


@given(connected_graphs(2, 9))
def test_adding_an_edge_never_increases_distances(g):
    missing = g.non_edges()
    if not missing:
        return
    h = g.add_edge(*missing[0])
    assert (distance_matrix(h) <= distance_matrix(g)).all()


@given(connected_graphs(1, 6), connected_graphs(1, 6))
def test_join_distances(g1, g2):
    g = join(g1, g2)
    dm = distance_matrix(g)
    off = ~np.eye(g.n, dtype=bool)
    adj = np.array([[g.has_edge(i, j) for j in range(g.n)] for i in range(g.n)])
    assert set(np.unique(dm[off]).tolist()) <= {1, 2}
    assert ((dm == 2) == (~adj & off)).all()
