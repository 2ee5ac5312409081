from __future__ import annotations

from pathlib import Path

import pytest

from projroute import Graph, build_projection, build_table, load_edge_list

FIXTURES = Path(__file__).parent / "fixtures"

FIG1_TEXT = "undirected\n1 2\n1 4\n2 3\n2 7\n3 4\n3 5\n4 6\n5 7\n6 7\n"
FIG2_TEXT = "directed\n1 2\n1 4\n2 3\n2 7\n3 2\n3 4\n3 5\n4 1\n4 6\n5 3\n6 7\n7 5\n7 6\n"

# Printed projections, with the typeset superscript kept as ``^``.
PAPER_PROJECTIONS = {
    ("fig1", 1): "1^(2^(3^(4,5), 7^(5,6)), 4^(3^(2,5), 6^(7)))",
    ("fig1", 3): "3^(2^(1,7), 4^(1,6), 5^(7))",
    ("fig1", 5): "5^(3^(2^(1,7), 4^(1,6)), 7^(2^(1,3), 6^(4)))",
    ("fig2", 1): "1^(2^(3^(4,5), 7^(5,6)), 4^(6^(7)))",
    ("fig2", 3): "3^(2^(7), 4^(1,6), 5)",
    ("fig2", 5): "5^(3^(2^(7), 4^(1,6)))",
}


def canonical(paper_text: str) -> str:
    return paper_text.replace("^", "").replace(" ", "")


def paper_graph(name: str) -> Graph:
    return load_edge_list(FIG1_TEXT if name == "fig1" else FIG2_TEXT)


def table_for(name: str, source: int):
    return build_table(build_projection(paper_graph(name), source))


@pytest.fixture
def fig1() -> Graph:
    return load_edge_list(FIG1_TEXT)


@pytest.fixture
def fig2() -> Graph:
    return load_edge_list(FIG2_TEXT)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
