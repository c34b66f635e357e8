import json
import random
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from binedge.graph import Graph, complete_bipartite, parse_graph, path_graph

FIXTURES = Path(__file__).parent / "fixtures"


def g6_stream(name: str) -> list[Graph]:
    lines = (FIXTURES / name).read_text().split()
    return [parse_graph(line) for line in lines]


def from_nx(h) -> Graph:
    mapping = {v: i + 1 for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges()])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n=1, max_n=6, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if connected and n > 1:
        # random spanning tree first, then extra edges
        order = draw(st.permutations(list(range(1, n + 1))))
        tree = set()
        for k in range(1, n):
            parent = order[draw(st.integers(0, k - 1))]
            tree.add(tuple(sorted((order[k], parent))))
        extra = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
        return Graph.from_edges(n, tree | extra)
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def k35():
    # one side {1..5}, the other {6,7,8}
    return complete_bipartite(5, 3)


@pytest.fixture(scope="session")
def path5():
    return path_graph(5)


@pytest.fixture(scope="session")
def path5_fixture():
    return json.loads((FIXTURES / "path5_P.json").read_text())


def gens_to_key(gens: list[str]) -> tuple:
    """(sorted S, sorted edges) from a transcribed generator list like ['x2','y2','D13']."""
    s = sorted({int(g[1:]) for g in gens if g[0] in "xy"})
    xs = {int(g[1:]) for g in gens if g[0] == "x"}
    ys = {int(g[1:]) for g in gens if g[0] == "y"}
    assert xs == ys
    edges = sorted((int(g[1]), int(g[2])) for g in gens if g[0] == "D")
    return (tuple(s), tuple(edges))


def connected_atlas(max_n: int) -> list[Graph]:
    return [from_nx(h) for h in nx.graph_atlas_g()
            if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
