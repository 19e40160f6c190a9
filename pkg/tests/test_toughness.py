from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distough.errors import CapabilityError, ConnectivityError, UndefinedToughnessError
from distough.extremal import FamilyParams, build_family
from distough.generate import nonisomorphic_graphs
from distough.graph import Graph, complete_graph, count_components, cycle_graph, empty_graph, join, path_graph
from distough.toughness import (
    classic_toughness,
    find_tau_violation,
    independence_number,
    is_tau_tough,
    tau_lower_bound,
    tau_toughness,
    vertex_connectivity,
)

from conftest import connected_graphs


def k13() -> Graph:
    return join(complete_graph(1), empty_graph(3))


def noncomplete(g: Graph) -> bool:
    return not g.is_complete()


def test_star_values():
    t = tau_toughness(k13())
    assert (t.value, t.witness, t.components) == (Fraction(1, 2), (0,), 3)
    assert classic_toughness(k13()).value == Fraction(1, 3)


def test_cycle_classic_toughness():
    assert classic_toughness(cycle_graph(5)).value == 1


def test_extremal_witnesses():
    t = tau_toughness(build_family(FamilyParams("thm1-star", n=12, delta=2)))
    assert (t.value, t.witness, t.components) == (Fraction(2, 3), (0, 1), 4)
    t = tau_toughness(build_family(FamilyParams("thm2-star", n=12, tau_num=3)))
    assert (t.value, t.witness) == (2, (0, 1))


def test_input_errors():
    with pytest.raises(UndefinedToughnessError):
        tau_toughness(complete_graph(4))
    with pytest.raises(ConnectivityError):
        tau_toughness(empty_graph(3))
    with pytest.raises(CapabilityError):
        tau_toughness(path_graph(21))


def test_is_tau_tough_examples():
    g = build_family(FamilyParams("thm1-star", n=18, delta=2))
    assert not is_tau_tough(g, 1)
    assert is_tau_tough(complete_graph(5).remove_edge(0, 1), 1)
    assert is_tau_tough(k13(), Fraction(1, 2))
    assert not is_tau_tough(k13(), Fraction(2, 3))


def test_is_tau_tough_beyond_the_cap_when_the_bound_settles_it():
    g = complete_graph(30).remove_edge(0, 1)
    assert is_tau_tough(g, 5)


def test_pendant_path_bound():
    assert tau_lower_bound(path_graph(4)) == Fraction(1, 1)
    assert independence_number(cycle_graph(7)) == 3
    assert vertex_connectivity(cycle_graph(7)) == 2


@settings(max_examples=80)
@given(connected_graphs(3, 9).filter(noncomplete))
def test_tau_dominates_classic_and_witness_is_valid(g):
    tau, t = tau_toughness(g), classic_toughness(g)
    assert tau.value >= t.value
    full = (1 << g.n) - 1
    for rep, den in ((tau, tau.components - 1), (t, t.components)):
        assert count_components(g.adj, full & ~rep.witness_mask) == rep.components
        assert rep.value == Fraction(len(rep.witness), den)


@settings(max_examples=60)
@given(connected_graphs(3, 9).filter(noncomplete))
def test_lower_bound_is_sound(g):
    assert tau_lower_bound(g) <= tau_toughness(g).value


@settings(max_examples=60)
@given(connected_graphs(3, 9).filter(noncomplete), st.randoms(use_true_random=False))
def test_value_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert tau_toughness(g.relabel(perm)).value == tau_toughness(g).value


@settings(max_examples=60)
@given(connected_graphs(3, 9).filter(noncomplete), st.sampled_from([Fraction(1, 3), Fraction(1, 2), 1, Fraction(3, 2), 2]))
def test_violation_search_agrees_with_enumeration(g, tau):
    bad = find_tau_violation(g, tau)
    assert (bad is None) == (tau_toughness(g).value >= tau)
    if bad is not None:
        assert bad.value < tau


def test_adding_an_edge_never_decreases_tau():
    for g in nonisomorphic_graphs(6):
        if g.is_complete():
            continue
        base = tau_toughness(g).value
        for u, v in g.non_edges():
            h = g.add_edge(u, v)
            if not h.is_complete():
                assert tau_toughness(h).value >= base


def test_violation_search_beyond_the_cap():
    g = build_family(FamilyParams("thm2-star", n=27, tau_num=2))
    bad = find_tau_violation(g, 2)
    assert bad is not None and bad.value == 1 and bad.witness == (0,)


def test_violation_search_budget():
    g = path_graph(40)
    with pytest.raises(CapabilityError):
        find_tau_violation(g, 5, max_subsets=1000)
