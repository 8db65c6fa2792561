from __future__ import annotations

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwsed.errors import (
    ArityMismatch,
    BadRoot,
    Disconnected,
    DuplicateEdge,
    IndexOutOfRange,
    NotUnweighted,
    SchemaError,
    SelfLoop,
    ZeroWeight,
)
from qwsed.graph import (
    WeightedGraph,
    bipartite_double,
    bipartition,
    cartesian_product,
    complete_graph,
    count_perfect_matchings_capped,
    cycle_graph,
    from_edge_list,
    path_graph,
    pendant_groups,
    rooted_product,
    star_graph,
    subdivision,
    twin_sets,
    unweighted,
)
from qwsed.spectral import eigendecompose

from .conftest import connected_graphs


def edge_set(G):
    return {(u, v) for u, v, _ in G.edges}


def is_isomorphic(G, H):
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    target = edge_set(H)
    for perm in itertools.permutations(range(G.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in edge_set(G)} == target:
            return True
    return False


class TestFromEdgeList:
    def test_path(self):
        G = from_edge_list(3, [(0, 1, 1), (1, 2, 1)])
        assert G.n == 3 and edge_set(G) == {(0, 1), (1, 2)}

    def test_cycle(self):
        G = from_edge_list(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
        assert all(G.degree(u) == 2 for u in range(4))

    @pytest.mark.parametrize(
        "edges, err",
        [
            ([(0, 1, 1), (1, 1, 1)], SelfLoop),
            ([(0, 1, 1), (1, 0, 2)], DuplicateEdge),
            ([(0, 1, 0)], ZeroWeight),
            ([(0, 3, 1)], IndexOutOfRange),
            ([(-1, 0, 1)], IndexOutOfRange),
        ],
    )
    def test_rejects(self, edges, err):
        with pytest.raises(err) as exc:
            from_edge_list(3, edges)
        assert str(edges[-1][0]) in str(exc.value)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            from_edge_list(2, [(0, 1, 0)])

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_adjacency_symmetric(self, G):
        A = G.adjacency
        assert np.array_equal(A, A.T)
        assert np.all(np.diag(A) == 0)


class TestBipartition:
    def test_c4(self):
        b = bipartition(cycle_graph(4))
        assert {b.side_a, b.side_b} == {frozenset({0, 2}), frozenset({1, 3})}

    def test_c3(self):
        assert bipartition(cycle_graph(3)) is None

    def test_p5(self):
        b = bipartition(path_graph(5))
        assert b.side_a == {0, 2, 4} and b.side_b == {1, 3}

    def test_requires_connected(self):
        with pytest.raises(Disconnected):
            bipartition(unweighted(4, [(0, 1), (2, 3)]))


class TestTwins:
    def test_star(self):
        (ts,) = twin_sets(star_graph(3))
        assert ts.members == {1, 2, 3} and ts.kind == "independent"

    def test_k4(self):
        (ts,) = twin_sets(complete_graph(4))
        assert ts.members == {0, 1, 2, 3} and ts.kind == "clique"

    def test_p4(self):
        assert twin_sets(path_graph(4)) == []

    def test_weighted_rejected(self):
        with pytest.raises(NotUnweighted):
            twin_sets(from_edge_list(3, [(0, 1, 2), (1, 2, 1)]))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=7, weighted=False))
    def test_definition(self, G):
        for ts in twin_sets(G):
            assert len(ts.members) >= 2
            for a, b in itertools.combinations(ts.members, 2):
                assert G.neighbors[a] - {b} == G.neighbors[b] - {a}
                assert (b in G.neighbors[a]) == (ts.kind == "clique")


def brute_matchings(G):
    count = 0
    for sub in itertools.combinations(G.edges, G.n // 2):
        covered = [x for u, v, _ in sub for x in (u, v)]
        if len(set(covered)) == G.n:
            count += 1
    return count if G.n % 2 == 0 else 0


class TestMatchings:
    def test_examples(self):
        assert count_perfect_matchings_capped(path_graph(4)).count_capped == 1
        assert count_perfect_matchings_capped(cycle_graph(4)).count_capped == 2
        assert count_perfect_matchings_capped(path_graph(5)).count_capped == 0

    @settings(max_examples=80, deadline=None)
    @given(connected_graphs(min_n=2, max_n=8, weighted=False))
    def test_against_enumeration(self, G):
        rep = count_perfect_matchings_capped(G)
        assert rep.count_capped == min(2, brute_matchings(G))
        if rep.count_capped:
            covered = sorted(x for e in rep.sample for x in e)
            assert covered == list(range(G.n))
            assert all(G.weight(u, v) != 0 for u, v in rep.sample)
        else:
            assert rep.sample is None


def test_pendant_groups():
    assert pendant_groups(star_graph(3)) == {0: [1, 2, 3]}
    assert pendant_groups(path_graph(4)) == {}


class TestOperators:
    def test_double_of_triangle_is_hexagon(self):
        assert is_isomorphic(bipartite_double(cycle_graph(3)), cycle_graph(6))

    def test_double_of_k2_disconnects(self):
        D = bipartite_double(complete_graph(2))
        assert D.n == 4 and len(D.components()) == 2

    def test_double_numbering(self):
        D = bipartite_double(path_graph(3))
        assert edge_set(D) == {(0, 4), (1, 3), (1, 5), (2, 4)}

    def test_double_of_k3_spectrum(self):
        # frozen from eigendecomposing the 6-vertex double
        S = eigendecompose(bipartite_double(complete_graph(3)))
        assert np.allclose(S.eigenvalues, [2, 1, -1, -2], atol=1e-8)
        assert S.multiplicities == (1, 2, 2, 1)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_double_spectrum(self, G):
        S = eigendecompose(G)
        D = eigendecompose(bipartite_double(G))
        got = np.sort(np.repeat(D.eigenvalues, D.multiplicities))
        want = np.sort(np.concatenate([np.linalg.eigvalsh(G.adjacency), -np.linalg.eigvalsh(G.adjacency)]))
        assert np.allclose(got, want, atol=1e-8)
        assert set(np.round(np.abs(D.eigenvalues), 6)) == set(np.round(np.abs(S.eigenvalues), 6))

    def test_subdivision_examples(self):
        assert is_isomorphic(subdivision(cycle_graph(3)), cycle_graph(6))
        assert is_isomorphic(subdivision(path_graph(3)), path_graph(5))
        G3 = subdivision(star_graph(3))
        assert G3.n == 7 and sorted(G3.degree(u) for u in range(7)) == [1, 1, 1, 2, 2, 2, 3]

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_subdivision_properties(self, G):
        S = subdivision(G)
        assert S.n == G.n + len(G.edges)
        assert bipartition(S) is not None

    def test_products(self):
        assert is_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4))
        grid = cartesian_product(path_graph(2), path_graph(3))
        assert grid.n == 6 and len(grid.edges) == 7
        H = cartesian_product(complete_graph(3), complete_graph(3))
        assert H.n == 9 and all(H.degree(u) == 4 for u in range(9))

    def test_product_numbering(self):
        G = cartesian_product(path_graph(2), path_graph(3))
        assert (0, 1) in edge_set(G) and (0, 3) in edge_set(G) and (2, 5) in edge_set(G)

    def test_rooted_products(self):
        K2 = complete_graph(2)
        assert is_isomorphic(rooted_product(path_graph(2), [(K2, 0), (K2, 1)]), path_graph(4))
        cat = rooted_product(path_graph(3), [(K2, 0)] * 3)
        assert cat.n == 6 and edge_set(cat) == {(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)}
        C = rooted_product(cycle_graph(4), [(K2, 0)] * 4)
        assert C.n == 8 and all(C.degree(u) == 3 for u in range(4))

    def test_rooted_product_errors(self):
        K2 = complete_graph(2)
        with pytest.raises(ArityMismatch):
            rooted_product(path_graph(3), [(K2, 0)])
        with pytest.raises(BadRoot):
            rooted_product(path_graph(2), [(K2, 0), (K2, 2)])


class TestJson:
    def test_round_trip(self):
        G = from_edge_list(3, [(0, 1, 0.5), (1, 2, -2)], labels=["a", "b", "c"])
        H = WeightedGraph.from_json(G.to_json())
        assert H == G

    @pytest.mark.parametrize(
        "doc, field",
        [
            ({"edges": []}, "'n'"),
            ({"n": 2}, "'edges'"),
            ({"n": -1, "edges": []}, "'n'"),
            ({"n": 2, "edges": [[0, 1]]}, "edges[0]"),
            ({"n": 2, "edges": [[0, 1, "x"]]}, "edges[0]"),
            ({"n": 2, "edges": [], "labels": ["a"]}, "'labels'"),
        ],
    )
    def test_schema_errors(self, doc, field):
        with pytest.raises(SchemaError) as exc:
            WeightedGraph.from_dict(doc)
        assert field in str(exc.value)

    def test_bad_json(self):
        with pytest.raises(SchemaError):
            WeightedGraph.from_json("{not json")

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_round_trip_property(self, G):
        assert WeightedGraph.from_dict(json.loads(G.to_json())) == G


@given(st.integers(1, 6))
def test_named_graph_sizes(n):
    assert path_graph(n).n == n
    assert len(complete_graph(n).edges) == n * (n - 1) // 2
    assert star_graph(n).n == n + 1
