import random
from pathlib import Path

import pytest

from pathreg.corpus import read_graph6_file
from pathreg.graph import (
    Graph,
    complete_graph,
    cricket_graph,
    cycle_graph,
    disjoint_edges,
    path_graph,
    star_graph,
)
from pathreg.ideal import MonomialIdeal, minimal_elements

NAMED = {
    "K2": complete_graph(2),
    "K3": complete_graph(3),
    "K4": complete_graph(4),
    "P3": path_graph(3),
    "P4": path_graph(4),
    "P5": path_graph(5),
    "P6": path_graph(6),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "2K2": disjoint_edges(2),
    "K13": star_graph(3),
    "cricket": cricket_graph(),
}


@pytest.fixture
def named():
    return NAMED


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def random_ideal(rng: random.Random, max_vars: int = 8, max_gens: int = 7) -> MonomialIdeal:
    """Random nonzero proper squarefree ideal."""
    n = rng.randint(1, max_vars)
    k = rng.randint(1, max_gens)
    monos = set()
    for _ in range(k):
        m = 0
        while m == 0:
            m = rng.getrandbits(n) & rng.getrandbits(n) | (1 << rng.randrange(n))
        monos.add(m)
    return MonomialIdeal(n, minimal_elements(monos))


CORPUS8 = Path(__file__).resolve().parent.parent / "data" / "gapfree_n8.g6"


@pytest.fixture(scope="session")
def corpus8():
    return read_graph6_file(CORPUS8)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
