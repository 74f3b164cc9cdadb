import networkx as nx
import pytest

from girthkiss.graph_core import MultiGraph, from_edge_list


def from_nx(G) -> MultiGraph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return from_edge_list(G.number_of_nodes(), sorted(G.edges()))


def heawood():
    return nx.heawood_graph()


CUBIC_MOORE = {
    "K4": lambda: nx.complete_graph(4),
    "K33": lambda: nx.complete_bipartite_graph(3, 3),
    "Petersen": nx.petersen_graph,
    "Heawood": heawood,
}


@pytest.fixture(params=sorted(CUBIC_MOORE))
def moore_graph(request):
    return request.param, from_nx(CUBIC_MOORE[request.param]())


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="run the n=16 census and other long checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
