"""Join-of-cliques graph families, equitable partitions and their quotient matrices.

Every family here has the shape ``K_s v (K_{n_1} u ... u K_{n_c})``: a clique
core joined to a disjoint union of cliques. Vertices are laid out with the
core first (labels ``0..s-1``) followed by the parts in the order given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ParameterError, PartitionError
from .graph import MAX_ORDER, Graph, complete_graph, join, mask_members, union_all
from .poly import Polynomial
from .spectral import char_poly

FAMILIES = (
    "thm1-star",
    "thm1-tilde",
    "thm1-prime",
    "thm2-star",
    "thm2-tilde",
    "thm3-star",
    "thm3-tilde",
    "generic-ksv",
)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int | None = None
    delta: int | None = None
    s: int | None = None
    c: int | None = None
    tau_num: int = 1
    tau_den: int = 1
    parts: tuple[int, ...] = ()

    @property
    def tau(self) -> Fraction:
        return Fraction(self.tau_num, self.tau_den)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ParameterError(f"side condition violated: {what}")


def _need(value, name: str):
    if value is None:
        raise ParameterError(f"parameter {name} is required for this family")
    return value


def family_layout(p: FamilyParams) -> tuple[int, tuple[int, ...]]:
    """Return ``(core size, clique part sizes)`` for a family, checking its side conditions."""
    f = p.family
    if f == "thm1-star":
        n, d = _need(p.n, "n"), _need(p.delta, "delta")
        _require(d >= 1, "delta >= 1")
        _require(n >= 2 * d + 2, "n >= 2*delta + 2")
        return d, (n - 2 * d - 1,) + (1,) * (d + 1)
    if f == "thm1-tilde":
        n, s = _need(p.n, "n"), _need(p.s, "s")
        _require(s >= 1, "s >= 1")
        _require(n >= 2 * s + 2, "n >= 2*s + 2")
        return s, (n - 2 * s - 1,) + (1,) * (s + 1)
    if f == "thm1-prime":
        n, s, d = _need(p.n, "n"), _need(p.s, "s"), _need(p.delta, "delta")
        _require(1 <= s <= d - 1, "1 <= s <= delta - 1")
        big = n - s - (d - s + 1) * (s + 1)
        _require(big >= 1, "n - s - (delta - s + 1)(s + 1) >= 1")
        return s, (big,) + (d - s + 1,) * (s + 1)
    if f in ("thm2-star", "thm2-tilde"):
        _require(p.tau_den == 1 and p.tau_num >= 2, "tau is an integer >= 2")
        t, n = p.tau_num, _need(p.n, "n")
        if f == "thm2-star":
            _require(n >= t + 1, "n >= tau + 1")
            return t - 1, (n - t, 1)
        c = _need(p.c, "c")
        _require(c >= 2, "c >= 2")
        big = n - (t + 1) * (c - 1) + 1
        _require(big >= 1, "n - (tau + 1)(c - 1) + 1 >= 1")
        return t * (c - 1) - 1, (big,) + (1,) * (c - 1)
    if f in ("thm3-star", "thm3-tilde"):
        _require(p.tau_num == 1 and p.tau_den >= 1, "1/tau is a positive integer")
        b, n = p.tau_den, _need(p.n, "n")
        s = 1 if f == "thm3-star" else _need(p.s, "s")
        _require(s >= 1, "s >= 1")
        big = n - s - (s * b + 1)
        _require(big >= 1, "n - s - (s/tau + 1) >= 1")
        return s, (big,) + (1,) * (s * b + 1)
    if f == "generic-ksv":
        s, parts = _need(p.s, "s"), tuple(p.parts)
        _require(s >= 1, "s >= 1")
        _require(len(parts) >= 1 and min(parts) >= 1, "all parts >= 1")
        _require(all(a >= b for a, b in zip(parts, parts[1:])), "parts are non-increasing")
        if p.n is not None:
            _require(sum(parts) == p.n - s, "sum of parts == n - s")
        return s, parts
    raise ParameterError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")


def join_of_cliques(s: int, parts: Sequence[int]) -> Graph:
    """``K_s v (K_{parts[0]} u K_{parts[1]} u ...)``."""
    if s < 1 or not parts or min(parts) < 1:
        raise ParameterError("core and every part need at least one vertex")
    return join(complete_graph(s), union_all(complete_graph(k) for k in parts))


def build_family(p: FamilyParams) -> Graph:
    s, parts = family_layout(p)
    n = s + sum(parts)
    _require(n <= MAX_ORDER, f"order {n} <= {MAX_ORDER}")
    g = join_of_cliques(s, parts)
    # audits against closed forms
    expected_m = s * (s - 1) // 2 + sum(k * (k - 1) // 2 for k in parts) + s * (n - s)
    expected_delta = s + min(parts) - 1
    if g.n != n or g.m != expected_m or min(g.degrees()) != expected_delta:
        raise RuntimeError(f"construction audit failed for {p}")
    if p.family == "thm1-star" and expected_delta != p.delta:
        raise RuntimeError("thm1-star must have minimum degree delta")
    return g


def matches_join_family(g: Graph, s: int, parts: Sequence[int]) -> bool:
    """Decide exactly whether ``g`` is isomorphic to ``K_s v (K_{n_1} u ... u K_{n_c})`` with c >= 2.

    With two or more parts the core is precisely the set of universal
    vertices, and deleting it must leave disjoint cliques of the given sizes.
    """
    if len(parts) < 2 or g.n != s + sum(parts):
        raise ParameterError("recognition needs at least two parts and matching order")
    full = (1 << g.n) - 1
    universal = [v for v in range(g.n) if g.adj[v] | (1 << v) == full]
    if len(universal) != s:
        return False
    core = sum(1 << v for v in universal)
    rest = full & ~core
    sizes = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        block = (g.adj[v] & ~core) | (1 << v)
        for u in mask_members(block):
            if (g.adj[u] & ~core) | (1 << u) != block:
                return False
        sizes.append(block.bit_count())
        rest &= ~block
    return sorted(sizes) == sorted(parts)


# ----------------------------------------------------------------------------
# partitions and quotients
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise PartitionError("empty block")
            for v in b:
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in two blocks")
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} outside 0..{n - 1}")
                seen.add(v)
        if len(seen) != n:
            raise PartitionError(f"blocks cover {len(seen)} of {n} indices")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int | Fraction, ...], ...]
    sizes: tuple[int, ...] = field(default=())

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def rows(self) -> list[list[int | Fraction]]:
        return [list(r) for r in self.entries]

    def char_poly(self) -> Polynomial:
        return char_poly(self.rows())

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class NotEquitable:
    """First violation found: ``row`` of block ``block_i`` has a different sum over block ``block_j``."""

    block_i: int
    block_j: int
    row: int
    expected: int
    found: int

    def __bool__(self) -> bool:
        return False


def detect_equitable(dm, part: Partition) -> QuotientMatrix | NotEquitable:
    """Check constant block row sums exactly; return the quotient matrix or the first violation."""
    m = np.asarray(dm)
    if not np.issubdtype(m.dtype, np.integer):
        raise PartitionError("detect_equitable needs an integer matrix")
    part.validate(m.shape[0])
    entries = []
    for i, bi in enumerate(part.blocks):
        row_out = []
        for j, bj in enumerate(part.blocks):
            sums = m[np.ix_(bi, bj)].sum(axis=1)
            first = int(sums[0])
            for k, value in enumerate(sums):
                if int(value) != first:
                    return NotEquitable(i, j, bi[k], first, int(value))
            row_out.append(first)
        entries.append(tuple(row_out))
    return QuotientMatrix(tuple(entries), part.sizes)


def canonical_partition(s: int, parts: Sequence[int]) -> Partition:
    """Blocks (small parts, largest part, core) when all non-largest parts share one size;
    otherwise one block per clique followed by the core."""
    starts = []
    pos = s
    for k in parts:
        starts.append(range(pos, pos + k))
        pos += k
    core = tuple(range(s))
    if len(parts) >= 2 and len(set(parts[1:])) == 1:
        small = tuple(v for r in starts[1:] for v in r)
        return Partition((small, tuple(starts[0]), core))
    return Partition(tuple(tuple(r) for r in starts) + (core,))


def family_partition(p: FamilyParams) -> Partition:
    s, parts = family_layout(p)
    return canonical_partition(s, parts)


def clique_star_quotient(s: int, a: int, b: int, p: int) -> QuotientMatrix:
    """Quotient of D(K_s v (K_a u bK_p)) for blocks (bK_p, K_a, K_s), derived from block distances."""
    small = b * p
    entries = (
        ((p - 1) + 2 * p * (b - 1), 2 * a, s),
        (2 * small, a - 1, s),
        (small, a, s - 1),
    )
    return QuotientMatrix(entries, (small, a, s))


def quotient_Rdelta(n: int, delta: int) -> QuotientMatrix:
    """Quotient of the Theorem 1 extremal graph K_d v (K_{n-2d-1} u (d+1)K_1)."""
    d = delta
    _require(d >= 1 and n >= 2 * d + 2, "delta >= 1 and n >= 2*delta + 2")
    entries = (
        (2 * d, 2 * (n - 2 * d - 1), d),
        (2 * (d + 1), n - 2 * d - 2, d),
        (d + 1, n - 2 * d - 1, d - 1),
    )
    return QuotientMatrix(entries, (d + 1, n - 2 * d - 1, d))


def quotient_Rsdelta(n: int, s: int, delta: int) -> QuotientMatrix:
    """Quotient of K_s v (K_{n-s-(d-s+1)(s+1)} u (s+1)K_{d-s+1})."""
    d = delta
    _require(1 <= s <= d - 1, "1 <= s <= delta - 1")
    big = n - s - (d - s + 1) * (s + 1)
    _require(big >= 1, "n - s - (delta - s + 1)(s + 1) >= 1")
    entries = (
        ((d - s) + 2 * s * (d - s + 1), 2 * big, s),
        (2 * (s + 1) * (d - s + 1), big - 1, s),
        ((s + 1) * (d - s + 1), big, s - 1),
    )
    return QuotientMatrix(entries, ((s + 1) * (d - s + 1), big, s))


def quotient_Rtaus(n: int, tau_den: int, s, tau_num: int = 1) -> QuotientMatrix:
    """Quotient of K_s v (K_{n-s-(s/tau+1)} u (s/tau+1)K_1) with tau = tau_num/tau_den.

    Entries are exact rationals; they are integral whenever s/tau is.
    """
    _require(tau_num >= 1 and tau_den >= 1, "tau > 0")
    tau = Fraction(tau_num, tau_den)
    s = Fraction(s)
    q = s / tau
    big = n - s - (q + 1)
    _require(s > 0 and big > 0, "s > 0 and n - s - (s/tau + 1) > 0")
    entries = tuple(
        tuple(Fraction(x) for x in row)
        for row in (
            (2 * q, 2 * big, s),
            (2 * (q + 1), big - 1, s),
            (q + 1, big, s - 1),
        )
    )
    entries = tuple(tuple(x.numerator if x.denominator == 1 else x for x in row) for row in entries)
    return QuotientMatrix(entries, (q + 1, big, s))


# ----------------------------------------------------------------------------
# closed-form characteristic polynomials
# ----------------------------------------------------------------------------


def eval_P_Rdelta(n: int, delta: int) -> Polynomial:
    d = delta
    return Polynomial.from_descending(
        [
            1,
            -(n + d - 3),
            -((2 * d + 5) * n - 5 * d * d - 6 * (d + 1)),
            (d * d - d - 4) * n - 2 * d * d * (d - 1) + 6 * d + 4,
        ]
    )


def eval_P_Rsdelta(n: int, s: int, delta: int) -> Polynomial:
    d = delta
    x2 = s * s - (d + 1) * s - n + 3
    x1 = (
        2 * s**4
        - (4 * d + 2) * s**3
        + (2 * d * d - 3 * d + 2 * n - 3) * s * s
        + (5 * d * d - 2 * n * d + n + 5 * d) * s
        + 3 * d * d
        - 3 * n * d
        + 6 * d
        - 5 * n
        + 6
    )
    # the constant term includes the trailing +4
    x0 = (
        -(s**5)
        + (2 * d + 3) * s**4
        - (d * d + 3 * d + n) * s**3
        + (n * d - 6 * d + 2 * n - 5) * s * s
        + (4 * d * d - n * d + 4 * d + 2 * n) * s
        + 3 * d * d
        - 3 * n * d
        + 6 * d
        - 4 * n
        + 4
    )
    return Polynomial.from_descending([1, x2, x1, x0])


def eval_P_Rtaus(n: int, tau_den: int, s, tau_num: int = 1) -> Polynomial:
    t = Fraction(tau_num, tau_den)
    s = Fraction(s)
    t2 = t * t
    x2 = (-n * t2 - s * t + 3 * t2) / t2
    x1 = (-2 * n * s * t - 5 * n * t2 + 3 * s * s * t + 2 * s * s + 3 * s * t + 3 * s * t2 + 6 * t2) / t2
    x0 = (
        n * s * s * t
        + n * s * t2
        - 2 * n * s * t
        - 4 * n * t2
        - s**3 * t
        - s**3
        - t2 * s * s
        + s * s * t
        + 2 * s * s
        + 2 * s * t2
        + 4 * s * t
        + 4 * t2
    ) / t2
    return Polynomial.from_descending([1, x2, x1, x0])


# ----------------------------------------------------------------------------
# distance sums of joins of cliques
# ----------------------------------------------------------------------------


def join_distance_sums(s: int, parts: Sequence[int]) -> tuple[int, int]:
    """``(W, W2)`` of ``K_s v (u K_{n_i})``: pairs in different parts are at distance 2, all others at 1."""
    n = s + sum(parts)
    far = ((n - s) ** 2 - sum(k * k for k in parts)) // 2
    pairs = n * (n - 1) // 2
    return pairs + far, pairs + 3 * far
