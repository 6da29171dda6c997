import sys

import numpy as np
import pytest

from lattice_exit.lattice import make_graph, random_downward

CHAIN = [(5, 5), (3, 4), (2, 1)]


def chain_graph():
    return make_graph(2, CHAIN, [((5, 5), (3, 4)), ((3, 4), (2, 1))])


def diamond_graph():
    z, a, b, c = (9, 9), (2, 7), (3, 4), (2, 1)
    return make_graph(2, [z, a, b, c], [(z, a), (z, b), (b, c)])


def graph_corpus(n=200, seed=20261016):
    """Seeded small graphs: k in {2, 3}, at most 12 vertices."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for i in range(n):
        k = 2 if i % 2 == 0 else 3
        bound = 6 if k == 2 else 4
        n_vertices = int(rng.integers(1, 13))
        density = float(rng.uniform(0.1, 0.9))
        out.append(random_downward(k, bound, density, seed=i, n_vertices=n_vertices))
    return out


@pytest.fixture(scope="session")
def corpus():
    return graph_corpus()


@pytest.fixture
def chain():
    return chain_graph()


@pytest.fixture
def diamond():
    return diamond_graph()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
