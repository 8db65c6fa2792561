from __future__ import annotations

import math
import warnings

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from qwsed.errors import BadParams, IndexOutOfRange, SupportAmbiguityWarning
from qwsed.families import FamilySpec, build
from qwsed.graph import complete_graph, cycle_graph, from_edge_list, path_graph, star_graph, subdivision
from qwsed.spectral import (
    cospectral,
    cycle_diagonal_oracle,
    eigendecompose,
    path_diagonal_oracle,
    periodicity,
    support,
    walk_diagonal,
)

from .conftest import connected_graphs


class TestEigendecompose:
    def test_p3(self):
        S = eigendecompose(path_graph(3))
        assert np.allclose(S.eigenvalues, [math.sqrt(2), 0, -math.sqrt(2)], atol=1e-12)

    def test_subdivided_star(self):
        S = eigendecompose(subdivision(star_graph(3)))
        assert np.allclose(S.eigenvalues, [2, 1, 0, -1, -2], atol=1e-10)
        assert S.multiplicities == (1, 2, 1, 2, 1)

    def test_k4(self):
        S = eigendecompose(complete_graph(4))
        assert np.allclose(S.eigenvalues, [3, -1])
        assert S.multiplicities == (1, 3)

    def test_zero_is_snapped(self):
        S = eigendecompose(path_graph(5))
        assert 0.0 in S.eigenvalues.tolist()

    def test_read_only(self):
        S = eigendecompose(path_graph(3))
        with pytest.raises(ValueError):
            S.projectors[0, 0, 0] = 1.0

    def test_empty(self):
        with pytest.raises(BadParams):
            eigendecompose(from_edge_list(0, []))

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(min_n=1, max_n=8))
    def test_projector_algebra(self, G):
        S = eigendecompose(G)
        P = S.projectors
        n = G.n
        assert np.allclose(P.sum(axis=0), np.eye(n), atol=1e-9)
        assert np.allclose(np.einsum("k,kij->ij", S.eigenvalues, P), G.adjacency, atol=1e-9)
        for a in range(len(P)):
            assert np.allclose(P[a] @ P[a], P[a], atol=1e-9)
            assert np.allclose(P[a], P[a].T, atol=1e-12)
            for b in range(a + 1, len(P)):
                assert np.allclose(P[a] @ P[b], 0, atol=1e-9)
        assert sum(S.multiplicities) == n

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_n=8), st.lists(st.floats(0, 20), min_size=1, max_size=10))
    def test_unitarity(self, G, times):
        S = eigendecompose(G)
        for t in times:
            U = S.transition(t)
            assert np.allclose((np.abs(U) ** 2).sum(axis=1), 1, atol=1e-9)
            assert np.allclose(U, scipy.linalg.expm(1j * t * G.adjacency), atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=8, bipartite=True))
    def test_bipartite_symmetry(self, G):
        S = eigendecompose(G)
        lam = S.eigenvalues
        assert np.allclose(lam, -lam[::-1], atol=1e-8 * max(1, abs(lam).max()))
        assert S.multiplicities == S.multiplicities[::-1]
        for u in range(G.n):
            d = S.diagonals(u)
            assert np.allclose(d, d[::-1], atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=8, bipartite=True))
    def test_nonzero_support_mass_at_most_half(self, G):
        S = eigendecompose(G)
        for u in range(G.n):
            prof = support(S, u)
            has_zero = any(S.eigenvalues[k] == 0 for k in prof.support)
            for k, E in zip(prof.support, prof.diagonals):
                if S.eigenvalues[k] != 0:
                    assert E <= 0.5 + 1e-9
                    if has_zero:
                        assert E < 0.5


class TestSupport:
    def test_subdivided_star_center(self):
        G = subdivision(star_graph(3))
        S = eigendecompose(G)
        prof = support(S, 0)
        assert np.allclose(S.eigenvalues[list(prof.support)], [2, 0, -2])
        # independent oracle: the null space of A from scipy; null vector (1,-1,-1,-1) on centre and leaves
        N = scipy.linalg.null_space(G.adjacency)
        e0 = float((N[0] ** 2).sum())
        assert abs(e0 - 0.25) < 1e-12
        assert abs(prof.diagonal_of(S.index_of(0.0)) - 0.25) < 1e-9

    def test_p3_middle(self):
        S = eigendecompose(path_graph(3))
        prof = support(S, 1)
        assert np.allclose(S.eigenvalues[list(prof.support)], [math.sqrt(2), -math.sqrt(2)])

    def test_k5(self):
        S = eigendecompose(complete_graph(5))
        prof = support(S, 2)
        assert prof.support == (0, 1)
        assert abs(prof.diagonal_of(1) - 0.8) < 1e-12

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            support(eigendecompose(path_graph(3)), 3)

    def test_grey_zone_warns(self):
        S = eigendecompose(path_graph(3))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SupportAmbiguityWarning)
            prof = support(S, 1, support_tol=0.9)  # column norms 1/sqrt2 fall below the threshold
        assert prof.support == () and prof.ambiguous == (0, 2)
        assert any(issubclass(w.category, SupportAmbiguityWarning) for w in caught)


class TestWalk:
    def test_k5_minimum(self):
        S = eigendecompose(complete_graph(5))
        assert abs(abs(walk_diagonal(S, 0, math.pi / 5)) - 0.6) < 1e-12

    @settings(max_examples=20, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_time_zero(self, G):
        S = eigendecompose(G)
        for u in range(G.n):
            assert abs(walk_diagonal(S, u, 0.0) - 1) < 1e-9

    def test_c8_sign(self):
        S = eigendecompose(cycle_graph(8))
        assert walk_diagonal(S, 0, math.pi / 2).real <= 0

    def test_vectorized(self):
        S = eigendecompose(path_graph(4))
        t = np.linspace(0, 3, 7)
        assert np.allclose(walk_diagonal(S, 1, t), [walk_diagonal(S, 1, x) for x in t])


class TestPeriodicity:
    def test_c4(self):
        S = eigendecompose(cycle_graph(4))
        rep = periodicity(S, 0)
        assert rep.periodic and abs(rep.period - math.pi) < 1e-12 and rep.verified
        assert abs(abs(walk_diagonal(S, 0, math.pi)) - 1) < 1e-9

    def test_pendant_path_not_periodic(self):
        G = build(FamilySpec("pendant_path_Gn", {"n": 5}))
        rep = periodicity(eigendecompose(G), 5)
        assert not rep.periodic and rep.reason == "fails"

    def test_k2(self):
        rep = periodicity(eigendecompose(complete_graph(2)), 0)
        assert rep.periodic and abs(rep.period - math.pi) < 1e-12 and rep.reason == "two-eigenvalues"

    def test_sqrt_period(self):
        # P_3 end: support {sqrt2, 0, -sqrt2}, differences multiples of sqrt2
        rep = periodicity(eigendecompose(path_graph(3)), 0)
        assert rep.periodic and rep.reason == "ratio-condition-sqrt"
        assert abs(rep.period - 2 * math.pi / math.sqrt(2)) < 1e-12 and rep.verified

    def test_minimal(self):
        S = eigendecompose(complete_graph(5))
        rep = periodicity(S, 0)
        assert abs(rep.period - 2 * math.pi / 5) < 1e-12
        t = np.linspace(1e-3, rep.period - 1e-3, 2000)
        assert np.abs(walk_diagonal(S, 0, t)).max() < 1 - 1e-6


class TestCospectral:
    def test_examples(self):
        assert cospectral(eigendecompose(path_graph(3)), 0, 2)
        assert not cospectral(eigendecompose(path_graph(4)), 0, 1)
        assert cospectral(eigendecompose(star_graph(3)), 1, 3)

    def test_equal_walks(self):
        S = eigendecompose(star_graph(3))
        t = np.linspace(0, 5, 50)
        assert np.allclose(walk_diagonal(S, 1, t), walk_diagonal(S, 2, t))


class TestOracles:
    def test_path_sign(self):
        assert path_diagonal_oracle(9, 1, math.pi / math.sqrt(2)).real <= 0

    def test_path_zero(self):
        assert abs(path_diagonal_oracle(4, 2, 0.0) - 1) < 1e-12

    def test_path_cross_check(self):
        S = eigendecompose(path_graph(5))
        assert abs(path_diagonal_oracle(5, 3, 1.0) - walk_diagonal(S, 2, 1.0)) < 1e-12

    def test_cycle(self):
        assert cycle_diagonal_oracle(8, math.pi / 2).real <= 0
        assert abs(abs(cycle_diagonal_oracle(4, math.pi)) - 1) < 1e-12
        assert abs(cycle_diagonal_oracle(7, 0.0) - 1) < 1e-12

    def test_bad_inputs(self):
        with pytest.raises(IndexOutOfRange):
            path_diagonal_oracle(4, 5, 0.0)
        with pytest.raises(BadParams):
            cycle_diagonal_oracle(2, 0.0)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_agreement(self, n):
        grid = np.linspace(0, 10, 100)
        S = eigendecompose(path_graph(n))
        for u in range(n):
            assert np.allclose(path_diagonal_oracle(n, u + 1, grid), walk_diagonal(S, u, grid), atol=1e-9)
        if n >= 3:
            Sc = eigendecompose(cycle_graph(n))
            assert np.allclose(cycle_diagonal_oracle(n, grid), walk_diagonal(Sc, 0, grid), atol=1e-9)
