from __future__ import annotations

from hypothesis import strategies as st

from distough.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    g = draw(graphs(min_n, max_n))
    # add a random spanning path so the result is connected
    order = draw(st.permutations(list(range(g.n))))
    for a, b in zip(order, order[1:]):
        if not g.has_edge(a, b):
            g = g.add_edge(a, b)
    assert is_connected(g)
    return g


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
