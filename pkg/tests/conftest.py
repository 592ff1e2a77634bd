import math

import numpy as np
import pytest
from hypothesis import strategies as st

from tuza.constructions import random_uniform_hypergraph
from tuza.hypergraph import Hypergraph


@st.composite
def uniform_hypergraphs(draw, k_range=(2, 5), n_max=12, m_max=8):
    k = draw(st.integers(*k_range))
    n = draw(st.integers(k, n_max))
    m = draw(st.integers(0, min(m_max, math.comb(n, k))))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_uniform_hypergraph(k, n, m, seed=seed)


def seeded_instances(count, seed, k_range=(2, 5), n_max=12, m_max=8):
    """Deterministic stream of random uniform hypergraphs for counted sweeps."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        k = int(rng.integers(k_range[0], k_range[1] + 1))
        n = int(rng.integers(k, n_max + 1))
        m = int(rng.integers(0, min(m_max, math.comb(n, k)) + 1))
        yield random_uniform_hypergraph(k, n, m, rng=rng)


@pytest.fixture
def single_edge7():
    return Hypergraph.from_edges(7, [range(7)], 7)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
