import pytest
from hypothesis import strategies as st

from dpgraph import Graph, cycle_graph, pendant_c5_graph, petersen_graph
from dpgraph.generators import enumerate_labeled_connected
from dpgraph.metrics import is_connected


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def fig1():
    return pendant_c5_graph()


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture(scope="session")
def connected_upto5():
    return [g for n in range(1, 6) for g in enumerate_labeled_connected(n)]


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    for (u, v), keep in zip(pairs, chosen):
        if keep:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    g = Graph(n, adj)
    if connected:
        from hypothesis import assume
        assume(is_connected(g))
    return g


def connected_graphs(min_n=1, max_n=8):
    return graphs(min_n=min_n, max_n=max_n, connected=True)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
