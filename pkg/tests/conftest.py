import itertools

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from hyperq import build_hypergraph

ACCEPTANCE_LINES = []


@pytest.fixture
def k4():
    """Complete 3-graph on four vertices; Spec(Q) = {9, 1, 1, 1}."""
    return build_hypergraph(3, ["123", "124", "134", "234"])


@pytest.fixture
def fig1():
    return build_hypergraph(3, ["123", "145", "345"])


@pytest.fixture
def twins():
    return build_hypergraph(3, ["123", "124"])


@pytest.fixture
def p3():
    return build_hypergraph(2, [["a", "b"], ["b", "c"]])


@pytest.fixture
def c4():
    return build_hypergraph(2, [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])


def single_edge(k):
    return build_hypergraph(k, [[str(i) for i in range(1, k + 1)]])


@st.composite
def hypergraphs(draw, ks=(2, 3, 4), n_max=8, connected=None, min_edges=1):
    from hyperq import is_connected

    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k, max(k, n_max)))
    pool = list(itertools.combinations(range(1, n + 1), k))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=min(min_edges, len(pool)),
                           max_size=min(len(pool), 12), unique=True))
    assume(len(chosen) >= min_edges)
    h = build_hypergraph(k, chosen)
    if connected is not None:
        assume(is_connected(h) == connected)
    return h


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
