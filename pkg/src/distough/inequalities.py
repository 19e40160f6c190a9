"""Grid sweeps of the auxiliary inequalities behind the three toughness theorems.

Each named claim is a concrete inequality (or identity) between closed-form
expressions in the integer parameters. The sweep evaluates every claim at
every integer point allowed by the corresponding theorem's hypotheses, in
exact rational arithmetic, and records violations with their coordinates.
Claims that compare two spectral radii use float roots with the package-wide
1e-8 slack.

Three families of parameters are swept:

* theorem 1: minimum degree ``delta`` and order ``n >= max(9 delta, delta^2/2 + 3 delta + 3)``;
* theorem 2: integer ``tau >= 2`` and ``n >= 4 tau^2 + 5 tau + 1``;
* theorem 3: integer ``b = 1/tau >= 1`` and ``n >= 4/b + b + 5``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import ParameterError
from .extremal import (
    clique_star_quotient,
    eval_P_Rdelta,
    eval_P_Rsdelta,
    eval_P_Rtaus,
    join_distance_sums,
    quotient_Rdelta,
    quotient_Rsdelta,
)
from .poly import Polynomial
from .spectral import COMPARE_SLACK

EVALUATION_CAP = 100_000

F = Fraction


# ----------------------------------------------------------------------------
# hypotheses
# ----------------------------------------------------------------------------


def thm1_min_order(delta: int) -> int:
    return math.ceil(max(F(9 * delta), F(delta * delta, 2) + 3 * delta + 3))


def thm2_min_order(tau: int) -> int:
    return 4 * tau * tau + 5 * tau + 1


def thm3_min_order(b: int) -> int:
    return math.ceil(F(4, b) + b + 5)


# ----------------------------------------------------------------------------
# closed-form functions from the proofs
# ----------------------------------------------------------------------------


def case2_gap_factor(x, n, d, s):
    """Quadratic factor of P(R_delta, x) - P(R_s, x) = (s - delta) * factor."""
    return x * x + (2 * n - 5 * d - 5 * s - 6) * x - (s + d - 1) * n + 2 * (s * s + s * d + d * d - s - d) - 6


def cut_order_bound(s, d):
    """Largest order compatible with every part of a cut having at most 2(delta - s) + 1 vertices."""
    return -2 * s * s + (2 * d - 2) * s + 4 * d + 2


def gap_at_clique_radius(n, s, d):
    """(P(R_delta, y) - P(R_{s,delta}, y)) / (delta - s) at y = n - delta - 2, as a polynomial in n."""
    return (
        3 * s * n * n
        + (4 * d + 2 * s**3 - (2 * d + 3) * s * s - (9 * d + 9) * s + 4) * n
        - s**4
        - (d + 1) * s**3
        + (2 * d * d + 6 * d + 4) * s * s
        + (6 * d * d + 11 * d + 5) * s
        - 5 * d * d
        - 9 * d
        - 4
    )


def gap_vertex(s, d):
    """Abscissa of the vertex of ``gap_at_clique_radius`` as a function of n."""
    return F(-2 * s**3 + (2 * d + 3) * s * s + (9 * d + 9) * s - 4 * d - 4, 6 * s)


def gap_vertex_bound(s, d):
    """Concave upper bound on ``gap_vertex`` in s."""
    return -F(1, 3) * s * s + F(2 * d + 3, 6) * s + F(3 * d + 3, 2)


def derivative_gap(s, n, d):
    """(P' (R_delta) - P'(R_{s,delta})) / (delta - s) at x = n - delta - 2."""
    return 2 * s**3 - (2 * d + 2) * s * s + (4 * n - 7 * d - 7) * s + 4 * d - n + 4


def derivative_gap_slope(s, n, d):
    return 6 * s * s - 4 * (d + 1) * s + 4 * n - 7 * d - 7


def wiener_profile(x, n, t):
    """Twice the Wiener index of K_{t x - 1} v (K_{n-(t+1)x+1} u x K_1) as a function of x = c - 1."""
    return -(2 * t + 1) * x * x + (2 * n + 1) * x + n * n - n


def thm3_gap_factor(x, n, t, s):
    """Quadratic factor of P(R_tau, x) - P(R_{tau,s}, x) = (s - 1)/tau^2 * factor."""
    return (
        t * x * x
        + (2 * n * t - 3 * s * t - 2 * s - 3 * t * t - 6 * t - 2) * x
        - n * (s * t + t * t - t)
        + s * s * t
        + s * s
        + s * t * t
        - s
        - t * t
        - 4 * t
        - 1
    )


# ----------------------------------------------------------------------------
# bookkeeping
# ----------------------------------------------------------------------------


@dataclass
class ClaimResult:
    theorem: int
    name: str
    statement: str
    checked: int = 0
    violations: int = 0
    worst_margin: float = math.inf
    first_violations: list[dict] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def is_open(self) -> bool:
        if self.checked >= EVALUATION_CAP:
            self.truncated = True
            return False
        return True

    def record(self, ok: bool, margin, **point) -> None:
        self.checked += 1
        m = float(margin)
        if m < self.worst_margin:
            self.worst_margin = m
        if not ok:
            self.violations += 1
            if len(self.first_violations) < 5:
                self.first_violations.append({k: (str(v) if isinstance(v, Fraction) else v) for k, v in point.items()})


@dataclass
class InequalityReport:
    theorem: int
    results: list[ClaimResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def complete(self) -> bool:
        return not any(r.truncated for r in self.results)

    def violated(self) -> list[ClaimResult]:
        return [r for r in self.results if not r.ok]

    def rows(self) -> list[dict]:
        return [
            {
                "theorem": r.theorem,
                "claim": r.name,
                "statement": r.statement,
                "checked": r.checked,
                "violations": r.violations,
                "worst_margin": r.worst_margin,
                "truncated": r.truncated,
                "first_violation": r.first_violations[0] if r.first_violations else None,
            }
            for r in self.results
        ]


class _Claims:
    def __init__(self, theorem: int):
        self.theorem = theorem
        self.results: dict[str, ClaimResult] = {}

    def add(self, name: str, statement: str) -> None:
        self.results[name] = ClaimResult(self.theorem, name, statement)

    def __getitem__(self, name: str) -> ClaimResult:
        return self.results[name]

    def report(self) -> InequalityReport:
        return InequalityReport(self.theorem, list(self.results.values()))


def _ge(res: ClaimResult, lhs, rhs, **pt) -> None:
    if res.is_open():
        res.record(lhs >= rhs, lhs - rhs, **pt)


def _gt(res: ClaimResult, lhs, rhs, **pt) -> None:
    if res.is_open():
        res.record(lhs > rhs, lhs - rhs, **pt)


def _eq(res: ClaimResult, lhs, rhs, **pt) -> None:
    if res.is_open():
        res.record(lhs == rhs, -abs(lhs - rhs), **pt)


def _radius(p: Polynomial) -> float:
    """Largest real root of a cubic in floats: companion roots then two Newton steps."""
    coeffs = [float(c) for c in p.descending()]
    roots = np.roots(coeffs)
    real = roots[np.abs(roots.imag) <= 1e-7 * np.maximum(1.0, np.abs(roots))].real
    x = float(real.max())
    dp = p.derivative()
    for _ in range(2):
        d = dp(x)
        if d == 0:
            break
        x -= p(x) / d
    return x


# ----------------------------------------------------------------------------
# grids
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    """Parameter box; n runs from the theorem's minimum order up to ``n_max``."""

    param_min: int
    param_max: int
    n_max: int = 200
    n_min: int | None = None


DEFAULT_GRIDS = {1: Grid(2, 8), 2: Grid(2, 5), 3: Grid(1, 5)}
PARAM_FLOOR = {1: (2, "delta >= 2"), 2: (2, "tau >= 2 (integer)"), 3: (1, "1/tau >= 1 (integer)")}


def _check_grid(theorem: int, grid: Grid) -> None:
    if theorem not in PARAM_FLOOR:
        raise ParameterError(f"theorem must be 1, 2 or 3, got {theorem}")
    floor, constraint = PARAM_FLOOR[theorem]
    if grid.param_min < floor:
        raise ParameterError(f"grid outside hypothesis: {constraint}")
    if grid.param_max < grid.param_min:
        raise ParameterError("empty parameter range")
    if grid.n_min is not None:
        need = _MIN_ORDER[theorem](grid.param_min)
        if grid.n_min < need:
            names = {1: "n >= max(9 delta, delta^2/2 + 3 delta + 3)", 2: "n >= 4 tau^2 + 5 tau + 1", 3: "n >= 4 tau + 1/tau + 5"}
            raise ParameterError(f"grid outside hypothesis: {names[theorem]} (needs n >= {need} at the smallest parameter)")


_MIN_ORDER = {1: thm1_min_order, 2: thm2_min_order, 3: thm3_min_order}


def _orders(grid: Grid, floor: int) -> range:
    return range(max(floor, grid.n_min or floor), grid.n_max + 1)


# ----------------------------------------------------------------------------
# theorem 1
# ----------------------------------------------------------------------------


def _sweep_thm1(grid: Grid) -> InequalityReport:
    C = _Claims(1)
    C.add("star_wiener_closed_form", "2W(G*) = (d+1)(2n-d-2) + (n-2d-1)(n+d) + d(n-1)")
    C.add("star_rayleigh_expansion", "2W(G*)/n = n + 2d + 1 - (3d^2 + 5d + 2)/n")
    C.add("star_rayleigh_bound", "2W(G*)/n >= n + d + 1")
    C.add("star_radius_above_n_plus_d_plus_1", "lambda1(R_d) > n + d + 1")
    C.add("case2_gap_identity", "P(R_d,x) - P(R_s,x) = (s-d) * case2_gap_factor(x)")
    C.add("case2_vertex_left_of_bound", "-n + 5s/2 + 5d/2 + 3 < n + d + 1")
    C.add("case2_gap_at_bound_expansion", "case2_gap_factor(n+d+1) = 2s^2 - (6n+3d+7)s + 3n^2 - 2dn - n - 2d^2 - 11d - 11")
    C.add("case2_gap_at_bound_vs_largest_s", "case2_gap_factor(n+d+1) >= n^2/2 - (7d/2 + 1/2)n - 2d^2 - 8d - 2")
    C.add("case2_largest_s_vs_constant", "n^2/2 - (7d/2 + 1/2)n - 2d^2 - 8d - 2 >= 2d^2 - 3d - 1")
    C.add("case2_constant_positive", "2d^2 - 3d - 1 > 0")
    C.add("case2_gap_positive", "case2_gap_factor(n+d+1) > 0")
    C.add("case2_radius_order", "lambda1(R_s) > lambda1(R_d) for d+1 <= s <= (n-2)/2")
    C.add("case3_order_bound", "max_{1<=s<=d-1} cut_order_bound(s) < max(9d, d^2/2 + 3d + 3)")
    C.add("case3_order_bound_large_d", "d >= 3: cut_order_bound(s) <= d^2/2 + 3d + 5/2")
    C.add("case3_order_bound_small_d", "2 <= d <= 3: cut_order_bound(s) < 6d")
    C.add("subcase1_perron_relations", "Perron entries of R_d satisfy 2x3 >= x1 > 0 and x2 > x3 > 0")
    C.add("subcase1_quadratic_form", "d(d-1)(2x3-x1)x1 + (d-1)(n-2d-1)x2x3 + (d-1)(n-2d-1)x2^2 > 0")
    C.add("subcase1_radius_order", "lambda1(R_{1,d}) > lambda1(R_d)")
    C.add("subcase2_vertex_bound", "gap_vertex(s) <= gap_vertex_bound(s)")
    C.add("subcase2_vertex_bound_max", "gap_vertex_bound(s) <= d^2/12 + 7d/4 + 27/16 < d^2/2 + 2d + 2")
    C.add("subcase2_gap_chain_identity", "gap at n0 = d^2/2+2d+2 equals its closed-form expansion")
    C.add("subcase2_gap_chain_steps", "each lower-bound step for the gap at n0 holds and the last is > 0")
    C.add("subcase2_gap_identity", "P(R_d, n-d-2) - P(R_{s,d}, n-d-2) = (d-s) * gap_at_clique_radius(n)")
    C.add("subcase2_gap_positive", "gap_at_clique_radius(n) > 0")
    C.add("subcase2_derivative_gap_identity", "P'(R_d,x) - P'(R_{s,d},x) = (d-s)[(2s-2)x + 2s^3 - (2d+2)s^2 - (5d-2n+3)s + 2d + n], and equals (d-s) h(s) at x = n-d-2")
    C.add("subcase2_slope_bound", "derivative_gap_slope(s) > 0 on 2 <= s <= d-1, with the stated minimum bounds")
    C.add("subcase2_derivative_gap_at_two", "derivative_gap(2) = 7n - 18d - 2 >= 45d - 2 > 0")
    C.add("subcase2_derivative_gap_positive", "derivative_gap(s) > 0")
    C.add("subcase2_star_derivative", "vertex of P'(R_d) < n-d-2 and P'(R_d, n-d-2) >= 19d^2 - 47d + 6 > 0")
    C.add("subcase2_radius_order", "lambda1(R_{s,d}) > lambda1(R_d)")

    for d in range(grid.param_min, grid.param_max + 1):
        n0 = thm1_min_order(d)
        # case 3 order bound depends only on d
        ns = [cut_order_bound(s, d) for s in range(1, d)]
        if ns:
            _gt(C["case3_order_bound"], n0, max(ns), d=d)
            if d >= 3:
                _ge(C["case3_order_bound_large_d"], F(d * d, 2) + 3 * d + F(5, 2), max(ns), d=d)
            if d <= 3:
                _gt(C["case3_order_bound_small_d"], 6 * d, max(ns), d=d)
        _gt(C["case2_constant_positive"], 2 * d * d - 3 * d - 1, 0, d=d)
        if d >= 3:
            for s in range(2, d):
                _ge(C["subcase2_vertex_bound"], gap_vertex_bound(s, d), gap_vertex(s, d), d=d, s=s)
                top = gap_vertex_bound(F(2 * d + 3, 4), d)
                ok = gap_vertex_bound(s, d) <= top == F(d * d, 12) + F(7 * d, 4) + F(27, 16) and top < F(d * d, 2) + 2 * d + 2
                if C["subcase2_vertex_bound_max"].is_open():
                    C["subcase2_vertex_bound_max"].record(ok, F(d * d, 2) + 2 * d + 2 - top, d=d, s=s)
                nb = F(d * d, 2) + 2 * d + 2
                v0 = gap_at_clique_radius(nb, s, d)
                v1 = F(d, 4) * (d * (3 * s * d * d - (4 * s * s - 6 * s - 8) * d + 4 * s**3 - 14 * s * s + 6 * s + 20) + 12 * s**3 - 16 * s * s - 4 * s + 28) - (s - 1) * (s**3 - 2 * s * s + 1) + 3
                v2 = F(d, 4) * (d * (3 * s**3 - 6 * s * s + 23 * s + 28) + 12 * s**3 - 16 * s * s - 4 * s + 28) - (s - 1) * (s**3 - 2 * s * s + 1) + 3
                v3 = F(d, 4) * (3 * s**4 + 6 * s**3 + 7 * s * s + 24 * s + 28) - (s - 1) * (s**3 - 2 * s * s + 1) + 3
                v4 = F(3 * s**5 + 2 * s**4 + 19 * s**3 + 16 * s * s + 24 * s + 16, 4)
                _eq(C["subcase2_gap_chain_identity"], v0, v1, d=d, s=s)
                steps_ok = v1 >= v2 >= v3 >= v4 > 0
                if C["subcase2_gap_chain_steps"].is_open():
                    C["subcase2_gap_chain_steps"].record(steps_ok, min(v1 - v2, v2 - v3, v3 - v4, v4), d=d, s=s)

        for n in _orders(grid, n0):
            star = eval_P_Rdelta(n, d)
            lam_star = _radius(star)
            two_w = (d + 1) * (2 * n - d - 2) + (n - 2 * d - 1) * (n + d) + d * (n - 1)
            w_oracle, _ = join_distance_sums(d, [n - 2 * d - 1] + [1] * (d + 1))
            _eq(C["star_wiener_closed_form"], two_w, 2 * w_oracle, d=d, n=n)
            _eq(C["star_rayleigh_expansion"], F(two_w, n), n + 2 * d + 1 - F(3 * d * d + 5 * d + 2, n), d=d, n=n)
            _ge(C["star_rayleigh_bound"], F(two_w, n), n + d + 1, d=d, n=n)
            _gt(C["star_radius_above_n_plus_d_plus_1"], lam_star, n + d + 1, d=d, n=n)

            # case 2: d + 1 <= s <= (n - 2)/2
            x0 = n + d + 1
            low = F(n * n, 2) - (F(7 * d, 2) + F(1, 2)) * n - 2 * d * d - 8 * d - 2
            _ge(C["case2_largest_s_vs_constant"], low, 2 * d * d - 3 * d - 1, d=d, n=n)
            for s in range(d + 1, (n - 2) // 2 + 1):
                f_at = case2_gap_factor(x0, n, d, s)
                if C["case2_gap_identity"].is_open():
                    lhs = eval_P_Rdelta(n, d) - eval_P_Rdelta(n, s)
                    rhs = (s - d) * Polynomial([case2_gap_factor(0, n, d, s), 2 * n - 5 * d - 5 * s - 6, 1])
                    C["case2_gap_identity"].record(lhs == rhs, 0 if lhs == rhs else -1, d=d, n=n, s=s)
                _gt(C["case2_vertex_left_of_bound"], x0, -n + F(5 * s, 2) + F(5 * d, 2) + 3, d=d, n=n, s=s)
                expansion = 2 * s * s - (6 * n + 3 * d + 7) * s + 3 * n * n - 2 * d * n - n - 2 * d * d - 11 * d - 11
                _eq(C["case2_gap_at_bound_expansion"], f_at, expansion, d=d, n=n, s=s)
                _ge(C["case2_gap_at_bound_vs_largest_s"], f_at, low, d=d, n=n, s=s)
                _gt(C["case2_gap_positive"], f_at, 0, d=d, n=n, s=s)
                if C["case2_radius_order"].is_open():
                    lam_s = _radius(eval_P_Rdelta(n, s))
                    C["case2_radius_order"].record(lam_s > lam_star + COMPARE_SLACK, lam_s - lam_star, d=d, n=n, s=s)

            # case 3, subcase 1 (s = 1)
            if C["subcase1_perron_relations"].is_open():
                w, vecs = np.linalg.eig(quotient_Rdelta(n, d).as_array())
                k = int(np.argmax(w.real))
                x1, x2, x3 = np.abs(vecs[:, k].real)
                rel = 2 * x3 >= x1 > 0 and x2 > x3 > 0
                C["subcase1_perron_relations"].record(rel, min(2 * x3 - x1, x2 - x3), d=d, n=n)
                q = d * (d - 1) * (2 * x3 - x1) * x1 + (d - 1) * (n - 2 * d - 1) * x2 * x3 + (d - 1) * (n - 2 * d - 1) * x2 * x2
                # d = 2 makes the first term vanish; still strictly positive through the other two
                C["subcase1_quadratic_form"].record(q > 0, q, d=d, n=n)
            if C["subcase1_radius_order"].is_open():
                lam_p = _radius(quotient_Rsdelta(n, 1, d).char_poly())
                C["subcase1_radius_order"].record(lam_p > lam_star + COMPARE_SLACK, lam_p - lam_star, d=d, n=n)

            # case 3, subcase 2 (2 <= s <= d - 1)
            if d >= 3:
                y = n - d - 2
                dstar = star.derivative()
                vertex = F(d + n - 3, 3)
                ok = vertex <= y - F(14 * d, 3) + 1 < y
                pd = dstar(y)
                closed = n * n - (8 * d + 7) * n + 10 * d * d + 16 * d + 6
                ok = ok and pd == closed and closed >= 19 * d * d - 47 * d + 6 > 0
                if C["subcase2_star_derivative"].is_open():
                    C["subcase2_star_derivative"].record(ok, min(closed - (19 * d * d - 47 * d + 6), y - vertex), d=d, n=n)

                if 3 <= d <= 5:
                    m2 = derivative_gap_slope(2, n, d)
                    slope_ok = m2 == 4 * n - 15 * d + 9 and m2 >= 2 * d * d - 3 * d + 3 > 0
                    slope_margin = m2 - (2 * d * d - 3 * d + 3)
                else:
                    mv = derivative_gap_slope(F(d + 1, 3), n, d)
                    claimed = 4 * n - F(2 * d * d, 3) - F(25 * d, 3) - F(23, 3)
                    slope_ok = mv == claimed and mv >= F(4 * d * d, 3) + 3 * d + F(7, 3) > 0
                    slope_margin = mv - (F(4 * d * d, 3) + 3 * d + F(7, 3))
                slope_ok = slope_ok and all(derivative_gap_slope(s, n, d) > 0 for s in range(2, d))
                if C["subcase2_slope_bound"].is_open():
                    C["subcase2_slope_bound"].record(slope_ok, slope_margin, d=d, n=n)
                h2 = derivative_gap(2, n, d)
                if C["subcase2_derivative_gap_at_two"].is_open():
                    C["subcase2_derivative_gap_at_two"].record(h2 == 7 * n - 18 * d - 2 and h2 >= 45 * d - 2 > 0, h2 - (45 * d - 2), d=d, n=n)

                for s in range(2, d):
                    if n - s - (d - s + 1) * (s + 1) < 1:
                        continue
                    g = gap_at_clique_radius(n, s, d)
                    prime = eval_P_Rsdelta(n, s, d)
                    _eq(C["subcase2_gap_identity"], star(y) - prime(y), (d - s) * g, d=d, n=n, s=s)
                    _gt(C["subcase2_gap_positive"], g, 0, d=d, n=n, s=s)
                    if C["subcase2_derivative_gap_identity"].is_open():
                        lin = Polynomial([2 * s**3 - (2 * d + 2) * s * s - (5 * d - 2 * n + 3) * s + 2 * d + n, 2 * s - 2])
                        diff = dstar - prime.derivative()
                        ok = diff == (d - s) * lin and diff(y) == (d - s) * derivative_gap(s, n, d)
                        C["subcase2_derivative_gap_identity"].record(ok, 0 if ok else -1, d=d, n=n, s=s)
                    _gt(C["subcase2_derivative_gap_positive"], derivative_gap(s, n, d), 0, d=d, n=n, s=s)
                    if C["subcase2_radius_order"].is_open():
                        lam_p = _radius(quotient_Rsdelta(n, s, d).char_poly())
                        C["subcase2_radius_order"].record(lam_p > lam_star + COMPARE_SLACK, lam_p - lam_star, d=d, n=n, s=s)
    return C.report()


# ----------------------------------------------------------------------------
# theorem 2
# ----------------------------------------------------------------------------


def _sweep_thm2(grid: Grid) -> InequalityReport:
    C = _Claims(2)
    C.add("tilde_wiener_closed_form", "2W(K_{tx-1} v (K_{n-(t+1)x+1} u xK_1)) = wiener_profile(x)")
    C.add("profile_endpoint_gap", "wiener_profile(n/(t+1)) - wiener_profile(2) = (n-2t-2)(n-4t^2-5t-1)/(t+1)^2 >= 0")
    C.add("profile_endpoint_gap_vanishes_at_min_order", "the endpoint gap is 0 at n = 4t^2 + 5t + 1")
    C.add("profile_minimum_at_two", "wiener_profile(x) >= wiener_profile(2) for 2 <= x <= n/(t+1)")
    C.add("profile_at_two_closed_form", "wiener_profile(2) = n^2 + 3n - 8t - 2")
    C.add("profile_at_two_over_n_at_least_n_plus_3", "wiener_profile(2)/n >= n + 3")
    C.add("profile_at_two_over_n_exceeds_n_plus_2", "wiener_profile(2)/n > n + 2")
    C.add("star_wiener2_closed_form", "W2(K_{t-1} v (K_{n-t} u K_1)) = n^2/2 + 5n/2 - 3t")
    C.add("star_upper_bound_below_n_plus_2", "2(n-1)W2(G*)/n = (n-1)(n^2+5n-6t)/n < (n+2)^2 - 9")
    C.add("radius_order", "lambda1(G~) > lambda1(G*) for every admissible c >= 3")

    for t in range(grid.param_min, grid.param_max + 1):
        n_lo = thm2_min_order(t)
        for n in _orders(grid, n_lo):
            phi2 = wiener_profile(2, n, t)
            top = F(n, t + 1)
            gap = wiener_profile(top, n, t) - phi2
            factored = F((n - 2 * t - 2) * (n - 4 * t * t - 5 * t - 1), (t + 1) ** 2)
            if C["profile_endpoint_gap"].is_open():
                C["profile_endpoint_gap"].record(gap == factored and gap >= 0, gap, t=t, n=n)
            if n == n_lo:
                _eq(C["profile_endpoint_gap_vanishes_at_min_order"], gap, 0, t=t, n=n)
            _eq(C["profile_at_two_closed_form"], phi2, n * n + 3 * n - 8 * t - 2, t=t, n=n)
            _ge(C["profile_at_two_over_n_at_least_n_plus_3"], F(phi2, n), n + 3, t=t, n=n)
            _gt(C["profile_at_two_over_n_exceeds_n_plus_2"], F(phi2, n), n + 2, t=t, n=n)
            _, w2 = join_distance_sums(t - 1, [n - t, 1])
            _eq(C["star_wiener2_closed_form"], F(w2), F(n * n, 2) + F(5 * n, 2) - 3 * t, t=t, n=n)
            bound_sq = F(2 * (n - 1) * w2, n)
            if C["star_upper_bound_below_n_plus_2"].is_open():
                ok = bound_sq == F((n - 1) * (n * n + 5 * n - 6 * t), n) and bound_sq < (n + 2) ** 2 - 9
                C["star_upper_bound_below_n_plus_2"].record(ok, (n + 2) ** 2 - 9 - bound_sq, t=t, n=n)
            lam_star = _radius(clique_star_quotient(t - 1, n - t, 1, 1).char_poly())
            for x in range(2, n // (t + 1) + 1):
                core, big = t * x - 1, n - (t + 1) * x + 1
                w, _ = join_distance_sums(core, [big] + [1] * x)
                _eq(C["tilde_wiener_closed_form"], 2 * w, wiener_profile(x, n, t), t=t, n=n, c=x + 1)
                _ge(C["profile_minimum_at_two"], wiener_profile(x, n, t), phi2, t=t, n=n, c=x + 1)
                if C["radius_order"].is_open():
                    lam = _radius(clique_star_quotient(core, big, x, 1).char_poly())
                    C["radius_order"].record(lam > lam_star + COMPARE_SLACK, lam - lam_star, t=t, n=n, c=x + 1)
    return C.report()


# ----------------------------------------------------------------------------
# theorem 3
# ----------------------------------------------------------------------------


def _sweep_thm3(grid: Grid) -> InequalityReport:
    C = _Claims(3)
    C.add("star_wiener_closed_form", "2W(G*) = (1+b)(2n-3) + (n-b-2)(n+b) + n - 1")
    C.add("star_rayleigh_expansion", "2W(G*)/n = n + 2b + 1 - 4/n - 5b/n - b^2/n")
    C.add("star_rayleigh_bound", "2W(G*)/n >= n + b + 1")
    C.add("star_radius_above_n_plus_b_plus_1", "lambda1(R_{tau,1}) > n + b + 1")
    C.add("gap_identity", "P(R_tau,x) - P(R_{tau,s},x) = (s-1)/tau^2 * thm3_gap_factor(x)")
    C.add("gap_vertex_left_of_bound", "-n + 3s/2 + sb + 3tau/2 + 3 + b <= n + b + 1")
    C.add("gap_at_bound_expansion", "thm3_gap_factor(n+b+1) equals its closed-form quadratic in s")
    C.add("gap_at_bound_minimised_at_largest_s", "thm3_gap_factor(n+b+1) >= its value at s = (n-2)/(1+b)")
    C.add("gap_at_bound_positive", "thm3_gap_factor(n+b+1) > 0")
    C.add("gap_chain_steps", "each stated lower bound at s = (n-2)/(1+b) dominates the next")
    C.add("gap_chain_final_positive", "(-12t^6 - 33t^5 - 14t^4 + 24t^3 + 22t^2 + 5t)/((t^2+t)(t+1)) > 0")
    C.add("radius_order", "lambda1(G~) > lambda1(G*) for every admissible s >= 2")

    for b in range(grid.param_min, grid.param_max + 1):
        t = F(1, b)
        final = (-12 * t**6 - 33 * t**5 - 14 * t**4 + 24 * t**3 + 22 * t * t + 5 * t) / ((t * t + t) * (t + 1))
        _gt(C["gap_chain_final_positive"], final, 0, b=b)
        for n in _orders(grid, thm3_min_order(b)):
            two_w = (1 + b) * (2 * n - 3) + (n - b - 2) * (n + b) + n - 1
            w, _ = join_distance_sums(1, [n - b - 2] + [1] * (b + 1))
            _eq(C["star_wiener_closed_form"], two_w, 2 * w, b=b, n=n)
            _eq(C["star_rayleigh_expansion"], F(two_w, n), n + 2 * b + 1 - F(4, n) - F(5 * b, n) - F(b * b, n), b=b, n=n)
            _ge(C["star_rayleigh_bound"], F(two_w, n), n + b + 1, b=b, n=n)
            star = eval_P_Rtaus(n, b, 1)
            lam_star = _radius(star)
            _gt(C["star_radius_above_n_plus_b_plus_1"], lam_star, n + b + 1, b=b, n=n)

            X = n + b + 1
            s_top = F(n - 2, 1 + b)

            def expansion(s):
                return (
                    (t + 1) * s * s
                    + (-4 * n * t - 2 * n + t * t - 3 * t - 6 - 2 / t) * s
                    - 4 * t * t
                    - 12 * t
                    - 7
                    - 1 / t
                    + 3 * n * n * t
                    + n * (-4 * t * t - t + 2)
                )

            e_top = expansion(s_top)
            e3 = (n * n * t * t - (3 * t**4 + 4 * t**3 + t * t) * n - 6 * t**4 - 6 * t**3 - 7 * t * t - 4 * t - 1) / (t * t + t)
            if C["gap_chain_steps"].is_open():
                C["gap_chain_steps"].record(e_top >= e3 >= final, min(e_top - e3, e3 - final), b=b, n=n)
            for s in range(2, int(s_top) + 1):
                a_at = thm3_gap_factor(X, n, t, s)
                if C["gap_identity"].is_open():
                    lhs = star - eval_P_Rtaus(n, b, s)
                    fac = Polynomial([thm3_gap_factor(0, n, t, s), 2 * n * t - 3 * s * t - 2 * s - 3 * t * t - 6 * t - 2, t])
                    rhs = F(s - 1) / (t * t) * fac
                    C["gap_identity"].record(lhs == rhs, 0 if lhs == rhs else -1, b=b, n=n, s=s)
                vertex = -n + F(3 * s, 2) + s * b + F(3, 2) * t + 3 + b
                _ge(C["gap_vertex_left_of_bound"], X, vertex, b=b, n=n, s=s)
                _eq(C["gap_at_bound_expansion"], a_at, expansion(F(s)), b=b, n=n, s=s)
                _ge(C["gap_at_bound_minimised_at_largest_s"], a_at, e_top, b=b, n=n, s=s)
                _gt(C["gap_at_bound_positive"], a_at, 0, b=b, n=n, s=s)
                if C["radius_order"].is_open():
                    lam = _radius(clique_star_quotient(s, n - s - (s * b + 1), s * b + 1, 1).char_poly())
                    C["radius_order"].record(lam > lam_star + COMPARE_SLACK, lam - lam_star, b=b, n=n, s=s)
    return C.report()


_SWEEPS = {1: _sweep_thm1, 2: _sweep_thm2, 3: _sweep_thm3}


def proof_inequality_suite(theorem: int, grid: Grid | None = None) -> InequalityReport:
    """Sweep every claim for one theorem over ``grid`` (defaults: delta 2..8, tau 2..5, 1/tau 1..5, n <= 200)."""
    grid = grid or DEFAULT_GRIDS.get(theorem)
    if grid is None:
        raise ParameterError(f"theorem must be 1, 2 or 3, got {theorem}")
    _check_grid(theorem, grid)
    return _SWEEPS[theorem](grid)


def iter_claims(report: InequalityReport) -> Iterator[ClaimResult]:
    yield from report.results
