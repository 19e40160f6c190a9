"""Lemma property suites, theorem checks and counterexample search.

Every theorem check produces a :class:`CheckRecord` whose verdict is one of

* ``pass``: the implication holds for this graph (premise false, the graph is
  the exceptional extremal graph, or the toughness conclusion was verified);
* ``fail``: premise true, not the exceptional graph, and a violating cut was found;
* ``not-applicable``: the theorem's order/degree hypothesis is not met;
* ``spectral-only``: premise true but toughness could not be decided within
  budget; never counted as a pass.
"""

from __future__ import annotations

import shlex
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .distance import distance_matrix
from .errors import CapabilityError, DistoughError, ParameterError
from .extremal import (
    FamilyParams,
    build_family,
    canonical_partition,
    detect_equitable,
    family_layout,
    join_of_cliques,
    matches_join_family,
)
from .generate import nonisomorphic_graphs, random_connected_graph, random_graph
from .graph import Graph, format_graph6, is_connected, min_degree, parse_graph6
from .inequalities import thm1_min_order, thm2_min_order, thm3_min_order
from .poly import largest_real_root
from .spectral import (
    COMPARE_SLACK,
    positive_eigenvalue_count,
    rayleigh_lower_bound,
    spectral_radius,
    wiener2_lower_bound,
    wiener2_upper_bound,
)
from .toughness import ENUMERATION_CAP, find_tau_violation, tau_toughness

VERDICTS = ("pass", "fail", "not-applicable", "spectral-only", "error")
LEMMAS = ("le1", "le2", "le3", "le4", "le5", "le6")
DEFAULT_BUDGET = 1_000_000


# ----------------------------------------------------------------------------
# records
# ----------------------------------------------------------------------------


@dataclass
class CheckRecord:
    graph6: str
    claim: str
    verdict: str
    n: int | None = None
    min_degree: int | None = None
    lambda1: float | None = None
    rayleigh: float | None = None
    sqrt_bound: float | None = None
    tau: Fraction | None = None
    threshold: float | None = None
    detail: str = ""
    witness: tuple[int, ...] = ()
    repro: str = ""

    def row(self) -> dict:
        d = asdict(self)
        d["tau"] = None if self.tau is None else str(self.tau)
        d["witness"] = " ".join(map(str, self.witness))
        return d


@dataclass
class LemmaReport:
    lemma: str
    checked: int = 0
    violations: int = 0
    worst_margin: float = float("inf")
    incomplete: bool = False
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and not self.incomplete

    def note(self, margin: float, ok: bool, **info) -> None:
        self.checked += 1
        self.worst_margin = min(self.worst_margin, float(margin))
        if not ok:
            self.violations += 1
            if len(self.failures) < 10:
                self.failures.append(info)

    def row(self) -> dict:
        return {
            "lemma": self.lemma,
            "checked": self.checked,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "incomplete": self.incomplete,
            "first_failure": self.failures[0] if self.failures else None,
        }


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = DEFAULT_BUDGET if limit is None else limit
        self.used = 0

    def take(self, k: int = 1) -> bool:
        if self.used + k > self.limit:
            return False
        self.used += k
        return True


def _radius(g: Graph) -> float:
    return spectral_radius(distance_matrix(g)).lambda1


# ----------------------------------------------------------------------------
# per-graph metrics
# ----------------------------------------------------------------------------


def graph_metrics(g: Graph, exact_tau: bool = True) -> CheckRecord:
    g6 = format_graph6(g)
    rec = CheckRecord(g6, "metrics", "pass", n=g.n, min_degree=min_degree(g))
    dm = distance_matrix(g)
    rec.lambda1 = spectral_radius(dm).lambda1
    rec.rayleigh = rayleigh_lower_bound(dm)
    if g.n >= 2:
        rec.sqrt_bound = wiener2_upper_bound(dm)
    if g.is_complete():
        rec.detail = "tau undefined (complete graph)"
    elif not exact_tau:
        pass
    elif g.n > ENUMERATION_CAP:
        rec.detail = f"tau not computed (n > {ENUMERATION_CAP})"
    else:
        t = tau_toughness(g)
        rec.tau, rec.witness = t.value, t.witness
    return rec


def cmd_metrics(lines: Iterable[str]) -> Iterator[CheckRecord]:
    """One record per non-blank input line, in input order; bad lines give error records."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
            yield graph_metrics(g)
        except (DistoughError, ValueError) as exc:
            yield CheckRecord(text, "metrics", "error", detail=f"line {lineno}: {exc}")


# ----------------------------------------------------------------------------
# theorems
# ----------------------------------------------------------------------------


def theorem_parameter(theorem: int, g: Graph, param: int | None) -> int | None:
    """delta for theorem 1 (taken from the graph), tau for theorem 2, 1/tau for theorem 3."""
    if theorem == 1:
        return min_degree(g)
    if param is None:
        raise ParameterError(f"theorem {theorem} needs an explicit {'tau' if theorem == 2 else '1/tau'}")
    return param


def hypothesis(theorem: int, n: int, param: int) -> tuple[bool, str]:
    if theorem == 1:
        if param < 2:
            return False, "minimum degree >= 2"
        need = thm1_min_order(param)
        return n >= need, f"n >= max(9 delta, delta^2/2 + 3 delta + 3) = {need}"
    if theorem == 2:
        if param < 2:
            raise ParameterError("theorem 2 needs an integer tau >= 2")
        need = thm2_min_order(param)
        return n >= need, f"n >= 4 tau^2 + 5 tau + 1 = {need}"
    if theorem == 3:
        if param < 1:
            raise ParameterError("theorem 3 needs an integer 1/tau >= 1")
        need = thm3_min_order(param)
        return n >= need, f"n >= 4 tau + 1/tau + 5 = {need}"
    raise ParameterError(f"theorem must be 1, 2 or 3, got {theorem}")


def extremal_params(theorem: int, n: int, param: int) -> FamilyParams:
    if theorem == 1:
        return FamilyParams("thm1-star", n=n, delta=param)
    if theorem == 2:
        return FamilyParams("thm2-star", n=n, tau_num=param)
    return FamilyParams("thm3-star", n=n, tau_den=param)


def threshold_tau(theorem: int, param: int) -> Fraction:
    return {1: Fraction(1), 2: Fraction(param), 3: Fraction(1, param)}[theorem]


@lru_cache(maxsize=None)
def threshold_radius(theorem: int, n: int, param: int, tol: float = 1e-10) -> float:
    """Distance spectral radius of the extremal graph, from its 3x3 quotient polynomial."""
    s, parts = family_layout(extremal_params(theorem, n, param))
    q = detect_equitable(distance_matrix(join_of_cliques(s, parts)), canonical_partition(s, parts))
    return largest_real_root(q.char_poly(), tol=tol)


def _repro(theorem: int, g6: str, param: int | None, slack: float = COMPARE_SLACK) -> str:
    opt = "" if theorem == 1 or param is None else (f" --tau {param}" if theorem == 2 else f" --tau-den {param}")
    if slack != COMPARE_SLACK:
        opt += f" --tolerance {slack!r}"
    return f"echo {shlex.quote(g6)} | distough check-theorem {theorem}{opt} --input -"


def check_theorem_graph(
    theorem: int,
    g: Graph,
    param: int | None = None,
    slack: float = COMPARE_SLACK,
    max_subsets: int = 1 << 21,
) -> CheckRecord:
    """Evaluate one theorem's implication on one graph."""
    g6 = format_graph6(g)
    claim = f"theorem{theorem}"
    if not is_connected(g):
        return CheckRecord(g6, claim, "not-applicable", n=g.n, detail="graph is disconnected")
    p = theorem_parameter(theorem, g, param)
    ok, text = hypothesis(theorem, g.n, p)
    rec = CheckRecord(g6, claim, "not-applicable", n=g.n, min_degree=min_degree(g))
    if not ok:
        rec.detail = f"hypothesis unmet: {text}"
        return rec
    dm = distance_matrix(g)
    lam = spectral_radius(dm).lambda1
    star = threshold_radius(theorem, g.n, p)
    rec.lambda1, rec.threshold = lam, star
    rec.rayleigh = rayleigh_lower_bound(dm)
    rec.sqrt_bound = wiener2_upper_bound(dm)
    if abs(lam - star) <= 2 * slack:
        # near the boundary: recompute both sides to 1e-12 before comparing
        lam = spectral_radius(dm, tight=True).lambda1
        star = threshold_radius(theorem, g.n, p, tol=1e-14)
        premise = lam <= star + slack
        near = "; boundary re-verified at 1e-12"
    else:
        premise = lam <= star + slack
        near = ""
    if not premise:
        rec.verdict, rec.detail = "pass", "premise false: radius above threshold" + near
        return rec
    s, parts = family_layout(extremal_params(theorem, g.n, p))
    if matches_join_family(g, s, parts):
        rec.verdict, rec.detail = "pass", "exceptional extremal graph (structural match)" + near
        return rec
    tau = threshold_tau(theorem, p)
    if g.is_complete():
        rec.verdict, rec.detail = "pass", "complete graph: no cut set, tau-tough by convention" + near
        return rec
    try:
        bad = find_tau_violation(g, tau, max_subsets=max_subsets)
    except CapabilityError as exc:
        rec.verdict, rec.detail = "spectral-only", f"toughness undecided: {exc}" + near
        return rec
    if bad is None:
        rec.verdict, rec.detail = "pass", f"tau-tough verified (tau >= {tau})" + near
        return rec
    rec.verdict = "fail"
    rec.tau, rec.witness = bad.value, bad.witness
    rec.detail = f"cut with |S|/(c-1) = {bad.value} < {tau}" + near
    rec.repro = _repro(theorem, g6, param, slack)
    return rec


def extremal_neighbourhood(theorem: int, n: int, param: int) -> list[Graph]:
    """The extremal graph and every graph obtained from it by adding one edge."""
    g = build_family(extremal_params(theorem, n, param))
    return [g] + [g.add_edge(u, v) for u, v in g.non_edges()]


def cmd_check_theorem(
    theorem: int,
    graphs: Iterable[Graph] | None = None,
    param: int | None = None,
    n: int | None = None,
    slack: float = COMPARE_SLACK,
) -> Iterator[CheckRecord]:
    """Check each input graph, or the extremal graph and its one-edge extensions when no input is given."""
    if graphs is None:
        p = param if param is not None else (2 if theorem in (1, 2) else 1)
        order = n if n is not None else {1: thm1_min_order, 2: thm2_min_order, 3: thm3_min_order}[theorem](p)
        graphs = extremal_neighbourhood(theorem, order, p)
        if theorem == 1:
            param = None
        else:
            param = p
    for g in graphs:
        yield check_theorem_graph(theorem, g, param, slack)


# ----------------------------------------------------------------------------
# counterexample search
# ----------------------------------------------------------------------------


@dataclass
class SearchReport:
    theorem: int
    strategy: str
    n: int
    param: int
    sampled: int = 0
    premise_true: int = 0
    exceptional: int = 0
    verified: int = 0
    spectral_only: int = 0
    not_applicable: int = 0
    violations: list[CheckRecord] = field(default_factory=list)
    spectral_only_records: list[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def complete(self) -> bool:
        return self.spectral_only == 0

    def row(self) -> dict:
        return {
            "theorem": self.theorem,
            "strategy": self.strategy,
            "n": self.n,
            "param": self.param,
            "sampled": self.sampled,
            "premise_true": self.premise_true,
            "exceptional": self.exceptional,
            "verified": self.verified,
            "spectral_only": self.spectral_only,
            "not_applicable": self.not_applicable,
            "violations": len(self.violations),
        }


def _shuffle(g: Graph, rng: np.random.Generator) -> Graph:
    return g.relabel(rng.permutation(g.n).tolist())


def _candidate(theorem: int, n: int, param: int, rng: np.random.Generator) -> Graph | None:
    """One random graph from a mixture concentrated near the spectral threshold."""
    star = build_family(extremal_params(theorem, n, param))
    kind = int(rng.integers(4))
    if kind == 0:
        # extremal graph plus a few edges
        g = star
        for _ in range(int(rng.integers(1, 4))):
            missing = g.non_edges()
            if not missing:
                break
            g = g.add_edge(*missing[int(rng.integers(len(missing)))])
    elif kind == 1:
        # move one edge of the extremal graph
        edges, missing = star.edges(), star.non_edges()
        g = star.remove_edge(*edges[int(rng.integers(len(edges)))])
        g = g.add_edge(*missing[int(rng.integers(len(missing)))])
    elif kind == 2:
        # complement of a sparse random graph
        g = random_graph(n, float(rng.uniform(0.5, 3.0)) / n, rng).complement()
    else:
        g = random_connected_graph(n, float(rng.uniform(0.5, 1.0)), rng)
    if theorem == 1:
        g = _pin_min_degree(g, param, rng)
    if g is None or not is_connected(g):
        return None
    return _shuffle(g, rng)


def _pin_min_degree(g: Graph, delta: int, rng: np.random.Generator) -> Graph | None:
    """Delete random edges at one vertex until some vertex has degree exactly ``delta``."""
    degs = g.degrees()
    if min(degs) == delta:
        return g
    if min(degs) < delta:
        return None
    v = int(rng.integers(g.n))
    for u in rng.permutation(g.neighbors(v)).tolist():
        if g.degree(v) == delta:
            break
        if g.degree(u) > delta:
            g = g.remove_edge(v, u)
    return g if min(g.degrees()) == delta else None


def _tally(report: SearchReport, rec: CheckRecord) -> None:
    report.sampled += 1
    if rec.verdict == "not-applicable":
        report.not_applicable += 1
        return
    if rec.detail.startswith("premise false"):
        return
    report.premise_true += 1
    if rec.verdict == "fail":
        report.violations.append(rec)
    elif rec.verdict == "spectral-only":
        report.spectral_only += 1
        report.spectral_only_records.append(rec)
    elif rec.detail.startswith("exceptional"):
        report.exceptional += 1
    else:
        report.verified += 1


def cmd_search_counterexample(
    theorem: int,
    strategy: str = "random",
    param: int | None = None,
    n: int | None = None,
    samples: int = 10_000,
    seed: int = 0,
    slack: float = COMPARE_SLACK,
    budget: int | None = None,
) -> SearchReport:
    """Look for graphs violating a theorem.

    ``random`` draws ``samples`` hypothesis-satisfying graphs at order ``n``
    (default: the smallest admissible order); ``exhaustive`` walks every
    connected graph of order ``n`` up to isomorphism.
    """
    p = param if param is not None else (2 if theorem in (1, 2) else 1)
    order = n if n is not None else {1: thm1_min_order, 2: thm2_min_order, 3: thm3_min_order}[theorem](p)
    report = SearchReport(theorem, strategy, order, p)
    arg = None if theorem == 1 else p
    if strategy == "exhaustive":
        if order > 10:
            raise CapabilityError(f"exhaustive search is limited to n <= 10, got n={order}")
        for g in nonisomorphic_graphs(order):
            _tally(report, check_theorem_graph(theorem, g, arg, slack))
        return report
    if strategy != "random":
        raise ParameterError(f"unknown strategy {strategy!r}; expected random or exhaustive")
    ok, text = hypothesis(theorem, order, p)
    if not ok:
        raise ParameterError(f"order {order} violates the hypothesis {text}")
    rng = np.random.default_rng(seed)
    tries = 0
    limit = budget if budget is not None else 50 * samples
    while report.sampled < samples and tries < limit:
        tries += 1
        g = _candidate(theorem, order, p, rng)
        if g is None:
            continue
        rec = check_theorem_graph(theorem, g, arg, slack)
        if rec.verdict == "not-applicable":
            continue
        _tally(report, rec)
    return report


# ----------------------------------------------------------------------------
# lemma suites
# ----------------------------------------------------------------------------


def lemma_edge_deletion(graphs: Iterable[Graph] | None = None, n: int = 6, budget: int | None = None) -> LemmaReport:
    """Deleting a non-bridge edge strictly raises the distance spectral radius."""
    rep = LemmaReport("le1")
    bud = _Budget(budget)
    corpus = nonisomorphic_graphs(n) if graphs is None else graphs
    for g in corpus:
        if not is_connected(g):
            continue
        lam = _radius(g)
        for u, v in g.edges():
            h = g.remove_edge(u, v)
            if not is_connected(h):
                continue
            if not bud.take():
                rep.incomplete = True
                return rep
            margin = _radius(h) - lam
            rep.note(margin, margin > 1e-9, graph6=format_graph6(g), edge=(u, v), value=margin)
    return rep


def _le2_instances(max_order: int = 30) -> Iterator[FamilyParams]:
    for d in range(1, 8):
        for n in range(2 * d + 2, max_order + 1, 3):
            yield FamilyParams("thm1-star", n=n, delta=d)
    for s in range(1, 5):
        for n in range(2 * s + 3, max_order + 1, 5):
            yield FamilyParams("thm1-tilde", n=n, s=s)
    for d in range(3, 6):
        for s in range(1, d):
            floor = s + (d - s + 1) * (s + 1) + 1
            for n in range(floor, max_order + 1, 4):
                yield FamilyParams("thm1-prime", n=n, s=s, delta=d)
    for t in range(2, 6):
        for n in range(t + 1, max_order + 1, 4):
            yield FamilyParams("thm2-star", n=n, tau_num=t)
        for c in range(2, 5):
            for n in range((t + 1) * (c - 1), max_order + 1, 5):
                yield FamilyParams("thm2-tilde", n=n, c=c, tau_num=t)
    for b in range(1, 5):
        for s in range(1, 4):
            for n in range(s + s * b + 2, max_order + 1, 4):
                yield FamilyParams("thm3-tilde" if s > 1 else "thm3-star", n=n, s=s, tau_den=b)
    for parts in ((5, 3, 1), (6, 4, 2, 1), (4, 4, 2), (7, 3, 3, 1), (3, 2, 1, 1), (8, 5, 2)):
        for s in (1, 2, 3):
            yield FamilyParams("generic-ksv", s=s, parts=parts)


def lemma_quotient(max_order: int = 30, budget: int | None = None) -> LemmaReport:
    """Equitable quotient radius equals the full distance spectral radius."""
    rep = LemmaReport("le2")
    bud = _Budget(budget)
    for p in _le2_instances(max_order):
        if not bud.take():
            rep.incomplete = True
            break
        s, parts = family_layout(p)
        g = join_of_cliques(s, parts)
        dm = distance_matrix(g)
        q = detect_equitable(dm, canonical_partition(s, parts))
        if not q:
            rep.note(-1.0, False, family=p.family, n=g.n, detail="partition not equitable")
            continue
        gap = abs(largest_real_root(q.char_poly()) - spectral_radius(dm).lambda1)
        rep.note(-gap, gap <= 1e-8, family=p.family, n=g.n, s=s, parts=parts, gap=gap)
    return rep


def compositions(total: int, parts: int, floor: int = 1, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` integers, each >= floor, summing to ``total``."""
    cap = total if cap is None else cap
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total - floor * (parts - 1)), floor - 1, -1):
        if first * parts < total:
            break
        for rest in compositions(total - first, parts - 1, floor, first):
            yield (first,) + rest


def lemma_composition(
    p_values: Iterable[int] = (1,),
    max_s: int = 3,
    max_c: int = 4,
    max_order: int = 12,
    large_part: bool = False,
    name: str = "le3",
    budget: int | None = None,
) -> LemmaReport:
    """Among K_s v (K_{n_1} u ... u K_{n_c}), the one with all small parts at the floor is the unique minimiser."""
    rep = LemmaReport(name)
    bud = _Budget(budget)
    for p in p_values:
        for s in range(1, max_s + 1):
            for c in range(2, max_c + 1):
                for n in range(s + p * c, max_order + 1):
                    best = (n - s - p * (c - 1),) + (p,) * (c - 1)
                    if large_part and best[0] < 2 * p:
                        continue
                    lam_best = _radius(join_of_cliques(s, best))
                    for comp in compositions(n - s, c, p):
                        if large_part and comp[0] < 2 * p:
                            continue
                        if comp == best:
                            continue
                        if not bud.take():
                            rep.incomplete = True
                            return rep
                        margin = _radius(join_of_cliques(s, comp)) - lam_best
                        rep.note(margin, margin > 1e-9, s=s, c=c, n=n, p=p, composition=comp, value=margin)
    return rep


def lemma_bounds(count: int = 1000, max_order: int = 9, seed: int = 0, budget: int | None = None) -> tuple[LemmaReport, LemmaReport]:
    """2W/n <= lambda1 <= sqrt(2(n-1)W2/n), with equality in the upper bound exactly on complete graphs.

    The second report also covers ``lambda1 >= sqrt(W2)`` for graphs with a
    single positive distance eigenvalue (equality exactly for K_2).
    """
    from .graph import complete_graph

    lo_rep, hi_rep = LemmaReport("le5"), LemmaReport("le6")
    bud = _Budget(budget)
    rng = np.random.default_rng(seed)
    corpus: list[Graph] = [complete_graph(k) for k in range(2, max_order + 1)]
    while len(corpus) < count + max_order - 1:
        k = int(rng.integers(2, max_order + 1))
        corpus.append(random_connected_graph(k, float(rng.uniform(0.15, 0.95)), rng))
    for g in corpus:
        if not bud.take():
            lo_rep.incomplete = hi_rep.incomplete = True
            break
        dm = distance_matrix(g)
        lam = spectral_radius(dm).lambda1
        g6 = format_graph6(g)
        low = rayleigh_lower_bound(dm)
        lo_rep.note(lam - low, lam - low >= -1e-9, graph6=g6, value=lam - low)
        up = wiener2_upper_bound(dm)
        gap = up - lam
        if g.is_complete():
            hi_rep.note(-abs(gap), abs(gap) <= 1e-9, graph6=g6, detail="equality expected on K_n", gap=gap)
        else:
            hi_rep.note(gap, gap > 1e-9, graph6=g6, detail="strict inequality expected", gap=gap)
        if positive_eigenvalue_count(dm) == 1:
            low2 = wiener2_lower_bound(dm)
            gap2 = lam - low2
            if g.n == 2:
                hi_rep.note(-abs(gap2), abs(gap2) <= 1e-9, graph6=g6, detail="equality expected on K_2", gap=gap2)
            else:
                hi_rep.note(gap2, gap2 > 1e-9, graph6=g6, detail="strict lower bound expected", gap=gap2)
    return lo_rep, hi_rep


def cmd_check_lemma(which: str, graphs: Iterable[Graph] | None = None, seed: int = 0, budget: int | None = None) -> list[LemmaReport]:
    if which == "le1":
        return [lemma_edge_deletion(graphs, budget=budget)]
    if which == "le2":
        return [lemma_quotient(budget=budget)]
    if which == "le3":
        return [lemma_composition((1,), name="le3", budget=budget)]
    if which == "le4":
        return [lemma_composition((1, 2), large_part=True, name="le4", budget=budget)]
    if which in ("le5", "le6"):
        lo, hi = lemma_bounds(seed=seed, budget=budget)
        return [lo if which == "le5" else hi]
    raise ParameterError(f"unknown lemma {which!r}; expected one of {', '.join(LEMMAS)}")


def parse_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


__all__ = [
    "CheckRecord",
    "LemmaReport",
    "SearchReport",
    "VERDICTS",
    "check_theorem_graph",
    "cmd_check_lemma",
    "cmd_check_theorem",
    "cmd_metrics",
    "cmd_search_counterexample",
    "compositions",
    "extremal_neighbourhood",
    "graph_metrics",
    "hypothesis",
    "lemma_bounds",
    "lemma_composition",
    "lemma_edge_deletion",
    "lemma_quotient",
    "threshold_radius",
]
