from __future__ import annotations

import warnings

import numpy as np
import pytest
from hypothesis import strategies as st

from qwsed.errors import SupportAmbiguityWarning
from qwsed.graph import from_edge_list

nonzero_weights = st.floats(min_value=-2, max_value=2, allow_nan=False).filter(lambda w: abs(w) > 1e-2)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, weighted=True, bipartite=False):
    n = draw(st.integers(min_n, max_n))
    side = [i % 2 for i in range(n)]
    pairs = set()
    for i in range(1, n):
        choices = [j for j in range(i) if not bipartite or side[j] != side[i]]
        pairs.add((draw(st.sampled_from(choices)), i))
    for a in range(n):
        for b in range(a + 1, n):
            if (not bipartite or side[a] != side[b]) and draw(st.booleans()):
                pairs.add((a, b))
    edges = [(a, b, draw(nonzero_weights) if weighted else 1) for a, b in sorted(pairs)]
    return from_edge_list(n, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _quiet_support_warnings():
    # random weights can leave projector columns in the grey zone
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SupportAmbiguityWarning)
        yield
