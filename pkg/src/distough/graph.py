"""Immutable simple graphs on at most 62 labelled vertices.

Adjacency is stored as one integer bitmask per vertex, so vertex subsets are
plain ints throughout the package (bit ``v`` set means vertex ``v`` is in the
set). Functions that take a vertex set also accept any iterable of labels.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    CapabilityError,
    EmptyRemainderError,
    Graph6ParseError,
    GraphSizeError,
)

MAX_ORDER = 62
ISOMORPHISM_CAP = 16

VertexSet = int


def as_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise GraphSizeError(f"graph order must be in 1..{MAX_ORDER}, got {n}")


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality is equality of labelled
    adjacency, not isomorphism.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        _check_order(n)
        if len(adj) != n:
            raise ValueError("adjacency list length does not match n")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adj)
        for v, a in enumerate(adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in mask_members(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = adj
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitmask of every vertex."""
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return mask_members(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in mask_members(self._adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in range(u + 1, self._n) if not self._adj[u] >> v & 1]

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u}, {v})")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self._n, adj)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self._n, adj)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm is not a permutation of the vertex labels")
        return Graph.from_edges(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> Graph:
        full = (1 << self._n) - 1
        return Graph(self._n, [full & ~a & ~(1 << v) for v, a in enumerate(self._adj)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m}, graph6={format_graph6(self)!r})"


# ----------------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    """``n`` isolated vertices (written nK_1)."""
    _check_order(n)
    return Graph(n, [0] * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphSizeError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    n = n1 + g2.n
    if n > MAX_ORDER:
        raise GraphSizeError(f"union would have {n} > {MAX_ORDER} vertices")
    return Graph(n, list(g1.adj) + [a << n1 for a in g2.adj])


def union_all(graphs: Iterable[Graph]) -> Graph:
    graphs = list(graphs)
    if not graphs:
        raise GraphSizeError("union of no graphs has no vertices")
    out = graphs[0]
    for g in graphs[1:]:
        out = disjoint_union(out, g)
    return out


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g`` (kG)."""
    if k < 1:
        raise GraphSizeError("need at least one copy")
    return union_all([g] * k)


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    if n > MAX_ORDER:
        raise GraphSizeError(f"join would have {n} > {MAX_ORDER} vertices")
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    adj = [a | high for a in g1.adj] + [(a << n1) | low for a in g2.adj]
    return Graph(n, adj)


# ----------------------------------------------------------------------------
# connectivity
# ----------------------------------------------------------------------------


def _components_of(adj: Sequence[int], remaining: int) -> list[int]:
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def count_components(adj: Sequence[int], remaining: int) -> int:
    """Number of components of the subgraph induced by the mask ``remaining``."""
    c = 0
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        c += 1
    return c


def components_after_deletion(g: Graph, s: int | Iterable[int] = 0) -> tuple[int, list[list[int]]]:
    """Return ``c(G - S)`` and the vertex lists of the components of ``G - S``.

    Components are listed in order of their smallest vertex.
    """
    mask = as_mask(s)
    full = (1 << g.n) - 1
    if mask & ~full:
        raise ValueError("vertex set contains labels outside the graph")
    remaining = full & ~mask
    if not remaining:
        raise EmptyRemainderError("S = V(G) leaves an empty graph")
    comps = _components_of(g.adj, remaining)
    return len(comps), [mask_members(c) for c in comps]


def is_connected(g: Graph) -> bool:
    return count_components(g.adj, (1 << g.n) - 1) == 1


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


# ----------------------------------------------------------------------------
# graph6
# ----------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def format_graph6(g: Graph) -> str:
    n = g.n
    bits = [(g.adj[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        data.append(chr(63 + value))
    return chr(63 + n) + "".join(data)


def parse_graph6(line: str | bytes) -> Graph:
    """Parse one graph6 line (single size byte, so n <= 62)."""
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from None
    text = line.rstrip("\r\n")
    base = 0
    if text.startswith(_HEADER):
        text = text[len(_HEADER) :]
        base = len(_HEADER)
    if not text:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside the graph6 range", base + i)
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6ParseError("multi-byte size (n > 62) is not supported", base)
    if n == 0:
        raise Graph6ParseError("graph with zero vertices", base)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(text) - 1 != nbytes:
        raise Graph6ParseError(f"expected {nbytes} data bytes for n={n}, got {len(text) - 1}", base + min(len(text), 1 + nbytes))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(text[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - nbits
    if pad and (ord(text[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + len(text) - 1)
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [parse_graph6(line) for line in lines if line.strip()]


# ----------------------------------------------------------------------------
# isomorphism
# ----------------------------------------------------------------------------


def _refined_invariants(g: Graph) -> list[tuple]:
    """Two rounds of neighbourhood-degree refinement."""
    deg = g.degrees()
    level1 = [(deg[v], tuple(sorted(deg[u] for u in g.neighbors(v)))) for v in range(g.n)]
    return [(level1[v], tuple(sorted(level1[u] for u in g.neighbors(v)))) for v in range(g.n)]


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by refined backtracking (orders up to 16)."""
    if max(g1.n, g2.n) > ISOMORPHISM_CAP:
        raise CapabilityError(f"isomorphism is only decided for n <= {ISOMORPHISM_CAP}")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    inv1 = _refined_invariants(g1)
    inv2 = _refined_invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return False

    n = g1.n
    classes: dict[tuple, list[int]] = {}
    for v in range(n):
        classes.setdefault(inv2[v], []).append(v)
    # map rarest classes first, then stay adjacent to already-mapped vertices
    order: list[int] = []
    seen = 0
    remaining = sorted(range(n), key=lambda v: (len(classes[inv1[v]]), -g1.degree(v)))
    while remaining:
        pick = next((v for v in remaining if g1.adj[v] & seen), remaining[0])
        remaining.remove(pick)
        order.append(pick)
        seen |= 1 << pick

    a1, a2 = g1.adj, g2.adj
    image = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in classes[inv1[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:depth]:
                if (a1[v] >> u & 1) != (a2[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)
