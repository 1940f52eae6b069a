import pytest

from graphprod.graphs import (SimpleGraph, complete_bipartite, complete_graph,
                              cycle_graph, edgeless_graph, path_graph,
                              petersen_graph)


@pytest.fixture(scope="session")
def c4():
    return cycle_graph(4)


@pytest.fixture(scope="session")
def c5():
    return cycle_graph(5)


@pytest.fixture(scope="session")
def c6():
    return cycle_graph(6)


@pytest.fixture(scope="session")
def petersen():
    return petersen_graph()


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture(scope="session")
def path5():
    return path_graph(5)


@pytest.fixture(scope="session")
def edge():
    return SimpleGraph.from_edges(2, [(0, 1)])


@pytest.fixture(scope="session")
def free2():
    return edgeless_graph(2)
