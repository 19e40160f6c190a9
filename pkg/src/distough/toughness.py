"""Exact toughness t(G) and its variant tau(G) = min |S|/(c(G-S) - 1) by subset enumeration."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import networkx as nx

from .errors import CapabilityError, ConnectivityError, UndefinedToughnessError
from .graph import Graph, count_components, is_connected, mask_members

ENUMERATION_CAP = 20


@dataclass(frozen=True)
class ToughnessReport:
    value: Fraction
    witness: tuple[int, ...]
    components: int

    @property
    def witness_mask(self) -> int:
        return sum(1 << v for v in self.witness)


def _check_input(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapabilityError(f"toughness enumeration is capped at n <= {cap}, got n={g.n}")
    if not is_connected(g):
        raise ConnectivityError("toughness is defined for connected graphs")
    if g.is_complete():
        raise UndefinedToughnessError("toughness is undefined for complete graphs")


def _minimise(g: Graph, denominator: Callable[[int], int]) -> ToughnessReport:
    adj = g.adj
    full = (1 << g.n) - 1
    best_num, best_den = None, 1
    best_mask, best_c = 0, 0
    # masks are visited in increasing order, so on a full tie the first one stays
    for mask in range(1, full):
        c = count_components(adj, full & ~mask)
        if c < 2:
            continue
        size = mask.bit_count()
        den = denominator(c)
        if best_num is not None:
            lhs, rhs = size * best_den, best_num * den
            if lhs > rhs or (lhs == rhs and size >= best_num):
                continue
        best_num, best_den = size, den
        best_mask, best_c = mask, c
    return ToughnessReport(Fraction(best_num, best_den), tuple(mask_members(best_mask)), best_c)


def tau_toughness(g: Graph, cap: int = ENUMERATION_CAP) -> ToughnessReport:
    """min |S| / (c(G-S) - 1) over all S with c(G-S) > 1.

    Ties are broken by smaller |S|, then by the smaller bitmask, so the
    witness is deterministic.
    """
    _check_input(g, cap)
    return _minimise(g, lambda c: c - 1)


def classic_toughness(g: Graph, cap: int = ENUMERATION_CAP) -> ToughnessReport:
    """min |S| / c(G-S) over all S with c(G-S) > 1."""
    _check_input(g, cap)
    return _minimise(g, lambda c: c)


def independence_number(g: Graph) -> int:
    adj = g.adj

    def solve(avail: int) -> int:
        if not avail:
            return 0
        # vertices of degree <= 1 inside avail can always be taken
        f = avail
        while f:
            low = f & -f
            v = low.bit_length() - 1
            if (adj[v] & avail).bit_count() <= 1:
                return 1 + solve(avail & ~low & ~adj[v])
            f ^= low
        v = max(mask_members(avail), key=lambda u: (adj[u] & avail).bit_count())
        bit = 1 << v
        return max(solve(avail & ~bit), 1 + solve(avail & ~bit & ~adj[v]))

    return solve((1 << g.n) - 1)


def vertex_connectivity(g: Graph) -> int:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.node_connectivity(nxg)


def tau_lower_bound(g: Graph) -> Fraction:
    """kappa(G) / (alpha(G) - 1), a lower bound on tau(G) for connected non-complete G.

    Any S with c(G-S) >= 2 is a vertex cut, so |S| >= kappa, and picking one
    vertex per component of G-S gives an independent set, so c(G-S) <= alpha.
    """
    if g.is_complete():
        raise UndefinedToughnessError("toughness is undefined for complete graphs")
    return Fraction(vertex_connectivity(g), independence_number(g) - 1)


def is_tau_tough(g: Graph, tau, cap: int = ENUMERATION_CAP) -> bool:
    """True iff tau(G) >= tau, compared exactly.

    The cheap lower bound settles dense graphs without enumeration; otherwise
    the exact minimum is computed.
    """
    tau = Fraction(tau)
    if not is_connected(g):
        raise ConnectivityError("toughness is defined for connected graphs")
    if tau_lower_bound(g) >= tau:
        return True
    return tau_toughness(g, cap).value >= tau


def find_tau_violation(g: Graph, tau, max_subsets: int = 1 << 21) -> ToughnessReport | None:
    """Search for a cut S with |S| < tau * (c(G-S) - 1); exact, with no order cap.

    Picking one vertex per component of G-S gives an independent set, so
    c(G-S) <= alpha and a violating S has |S| < tau * (alpha - 1). Only
    subsets below that size are scanned, which is cheap for the dense graphs
    near the spectral thresholds. Raises ``CapabilityError`` when there are
    more than ``max_subsets`` of them.
    Returns the first violating cut found (smallest size first), or None.
    """
    tau = Fraction(tau)
    if not is_connected(g):
        raise ConnectivityError("toughness is defined for connected graphs")
    if g.is_complete():
        raise UndefinedToughnessError("toughness is undefined for complete graphs")
    alpha = independence_number(g)
    bound = tau * (alpha - 1)
    top = math.ceil(bound) - 1  # largest integer strictly below bound
    sizes = range(1, min(top, g.n - 2) + 1)
    if sum(math.comb(g.n, k) for k in sizes) > max_subsets:
        raise CapabilityError(f"cuts of size <= {top} at n={g.n} exceed {max_subsets} subsets")
    adj, full = g.adj, (1 << g.n) - 1
    for k in sizes:
        for combo in itertools.combinations(range(g.n), k):
            mask = sum(1 << v for v in combo)
            c = count_components(adj, full & ~mask)
            if c >= 2 and k < tau * (c - 1):
                return ToughnessReport(Fraction(k, c - 1), combo, c)
    return None
