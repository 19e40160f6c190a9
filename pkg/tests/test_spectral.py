from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings

from distough.distance import distance_matrix
from distough.errors import CapabilityError, GraphSizeError, MatrixValidityError
from distough.graph import complete_graph, disjoint_union, empty_graph, join, path_graph
from distough.poly import Polynomial
from distough.spectral import (
    char_poly,
    largest_real_root,
    positive_eigenvalue_count,
    rayleigh_lower_bound,
    spectral_radius,
    wiener2_lower_bound,
    wiener2_upper_bound,
)

from conftest import connected_graphs


def thm1_star_18():
    return join(complete_graph(2), disjoint_union(complete_graph(13), empty_graph(3)))


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_complete_graph_radius(n):
    res = spectral_radius(distance_matrix(complete_graph(n)))
    assert res.lambda1 == pytest.approx(n - 1, abs=1e-12)
    assert res.is_positive


def test_path_radius():
    res = spectral_radius(distance_matrix(path_graph(3)))
    assert res.lambda1 == pytest.approx(1 + math.sqrt(3), rel=1e-12)
    assert res.vector.max() == 1.0
    assert res.residual <= 1e-9 * res.lambda1


def test_thm1_extremal_radius_two_routes():
    dm = distance_matrix(thm1_star_18())
    full = spectral_radius(dm).lambda1
    root = largest_real_root(Polynomial.from_descending([1, -17, -124, -28]))
    assert abs(full - root) <= 1e-8
    assert round(full, 2) == 22.55
    assert full == pytest.approx(22.5531672859, abs=1e-9)


def test_tight_mode_agrees():
    dm = distance_matrix(thm1_star_18())
    assert spectral_radius(dm, tight=True).lambda1 == pytest.approx(spectral_radius(dm).lambda1, abs=1e-12)


@pytest.mark.parametrize("bad", [[[0, 1], [2, 0]], [[0, -1], [-1, 0]], [[1, 2, 3]], []])
def test_matrix_validity(bad):
    with pytest.raises(MatrixValidityError):
        spectral_radius(bad)


def test_char_poly_examples():
    assert char_poly([[1, 0], [0, 1]]) == Polynomial.from_descending([1, -2, 1])
    assert char_poly(distance_matrix(path_graph(3))) == Polynomial.from_descending([1, 0, -6, -4])
    r = [[4, 26, 2], [6, 12, 2], [3, 13, 1]]
    assert str(char_poly(r)) == "x^3 - 17x^2 - 124x - 28"


def test_char_poly_cap():
    with pytest.raises(CapabilityError):
        char_poly(np.zeros((41, 41), dtype=int))


def test_char_poly_rational_entries():
    from fractions import Fraction

    p = char_poly([[Fraction(1, 2), 1], [1, 0]])
    assert p == Polynomial([-1, Fraction(-1, 2), 1])


def test_bound_examples():
    dm = distance_matrix(path_graph(3))
    assert rayleigh_lower_bound(dm) == pytest.approx(8 / 3)
    assert wiener2_upper_bound(dm) == pytest.approx(math.sqrt(8))
    k7 = distance_matrix(complete_graph(7))
    assert rayleigh_lower_bound(k7) == wiener2_upper_bound(k7) == 6
    k2 = distance_matrix(complete_graph(2))
    assert wiener2_lower_bound(k2) == spectral_radius(k2).lambda1 == pytest.approx(1.0)
    with pytest.raises(GraphSizeError):
        wiener2_upper_bound(distance_matrix(complete_graph(1)))


def test_thm2_tilde_rayleigh_example():
    # K_3 v (K_14 u 2K_1): tau = 2, c - 1 = 2, n = 19
    g = join(complete_graph(3), disjoint_union(complete_graph(14), empty_graph(2)))
    assert rayleigh_lower_bound(distance_matrix(g)) == pytest.approx(400 / 19)


@settings(max_examples=80)
@given(connected_graphs(2, 9))
def test_radius_properties(g):
    dm = distance_matrix(g)
    res = spectral_radius(dm)
    rows = dm.sum(axis=1)
    assert rows.min() - 1e-9 <= res.lambda1 <= rows.max() + 1e-9
    assert res.is_positive
    assert res.residual <= 1e-9 * max(1.0, res.lambda1)
    assert rayleigh_lower_bound(dm) <= res.lambda1 + 1e-9 <= wiener2_upper_bound(dm) + 2e-9
    if positive_eigenvalue_count(dm) == 1:
        assert wiener2_lower_bound(dm) <= res.lambda1 + 1e-9


@settings(max_examples=30)
@given(connected_graphs(2, 8))
def test_char_poly_vanishes_at_radius(g):
    dm = distance_matrix(g)
    p = char_poly(dm)
    lam = spectral_radius(dm).lambda1
    assert p.degree == g.n and p.leading == 1 and p.is_integral()
    scale = float(max(abs(c) for c in p.coeffs))
    assert abs(p(lam)) <= 1e-6 * scale * max(1.0, lam) ** g.n
    assert largest_real_root(p) == pytest.approx(lam, abs=1e-8)
