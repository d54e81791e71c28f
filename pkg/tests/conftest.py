import functools
from types import SimpleNamespace

import pytest

from wqhswitch.arcs import denniston_arc
from wqhswitch.gf2h import Field
from wqhswitch.linrep import build_line_graph, build_line_set
from wqhswitch.switching import apply_switch, build_partition, find_switching_config


@functools.lru_cache(maxsize=None)
def denniston_case(h, m):
    F = Field(h)
    K = denniston_arc(F, m)
    L = build_line_set(F, K)
    G = build_line_graph(L)
    cfg = find_switching_config(F, K, (1 << m) - 1)
    ps = build_partition(cfg, L)
    Gp = apply_switch(G, ps)
    return SimpleNamespace(h=h, m=m, F=F, q=F.q, K=K, L=L, G=G, cfg=cfg, ps=ps, Gp=Gp, t=len(K) - 1)


@pytest.fixture(scope="session")
def gq():
    """The (h, m) = (2, 1) case: line graph of the GQ of order (3, 5)."""
    return denniston_case(2, 1)


@pytest.fixture(scope="session")
def case31():
    return denniston_case(3, 1)


@pytest.fixture(scope="session")
def case32():
    return denniston_case(3, 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
