import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from binedge.graph import Graph

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph.from_edges(n, chosen)
    if connected:
        # chain the components together so the graph is connected
        comps = sorted(min(c) for c in nx.connected_components(to_nx(g)))
        extra = [(comps[i], comps[i + 1]) for i in range(len(comps) - 1)]
        g = Graph.from_edges(n, list(chosen) + extra)
    return g


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


@st.composite
def permutations_of(draw, n):
    perm = draw(st.permutations(list(range(1, n + 1))))
    return dict(zip(range(1, n + 1), perm))


def relabel(g: Graph, perm: dict) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
