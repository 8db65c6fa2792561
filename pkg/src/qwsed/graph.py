"""Weighted simple graphs and the graph operators used to build walk substrates.

Vertex numbering of every operator output is fixed:

* ``bipartite_double``: copy ``(i, u)`` is vertex ``i * n + u``.
* ``subdivision``: original vertices keep their index, the midpoint of the
  ``k``-th edge is vertex ``n + k``.
* ``cartesian_product``: ``(u, v)`` is vertex ``u * |V(H)| + v``.
* ``rooted_product``: the base graph keeps ``0..n-1``; the non-root vertices
  of each attachment follow in attachment order, each block in its own
  vertex order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
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

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    @cached_property
    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            A[u, v] = w
            A[v, u] = w
        A.setflags(write=False)
        return A

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def weight(self, u: int, v: int) -> float:
        return float(self.adjacency[u, v])

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in sorted(self.neighbors[x]):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise Disconnected(
                f"graph has {len(self.components())} components; a connected graph is required"
            )

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexOutOfRange(f"vertex {u} out of range for n={self.n}")

    # JSON

    def to_dict(self) -> dict:
        out: dict = {"n": self.n, "edges": [[u, v, _json_number(w)] for u, v, w in self.edges]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> WeightedGraph:
        if not isinstance(data, dict):
            raise SchemaError("graph JSON must be an object")
        if "n" not in data or "edges" not in data:
            missing = "n" if "n" not in data else "edges"
            raise SchemaError(f"graph JSON is missing field '{missing}'")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise SchemaError("field 'n' must be a nonnegative integer")
        if not isinstance(data["edges"], list):
            raise SchemaError("field 'edges' must be a list")
        edges = []
        for k, e in enumerate(data["edges"]):
            if (
                not isinstance(e, list)
                or len(e) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e[:2])
                or not isinstance(e[2], (int, float))
                or isinstance(e[2], bool)
            ):
                raise SchemaError(f"field 'edges[{k}]' must be [int, int, number]")
            edges.append((e[0], e[1], e[2]))
        labels = data.get("labels")
        if labels is not None and (
            not isinstance(labels, list)
            or len(labels) != n
            or not all(isinstance(s, str) for s in labels)
        ):
            raise SchemaError("field 'labels' must be a list of n strings")
        return from_edge_list(n, edges, labels)

    @classmethod
    def from_json(cls, text: str) -> WeightedGraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def _json_number(w: float) -> int | float:
    return int(w) if float(w).is_integer() else float(w)


def from_edge_list(
    n: int,
    edges: Iterable[Sequence[float]],
    labels: Sequence[str] | None = None,
) -> WeightedGraph:
    """Validate an edge list and build a graph. Edges are ``(u, v, w)`` triples."""
    seen: set[tuple[int, int]] = set()
    clean: list[Edge] = []
    for e in edges:
        u, v, w = int(e[0]), int(e[1]), e[2]
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}, {w}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}, {w}) is a loop")
        if w == 0:
            raise ZeroWeight(f"edge ({u}, {v}, {w}) has zero weight")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}, {w}) repeats the pair {key}")
        seen.add(key)
        w = float(w)
        clean.append((key[0], key[1], int(w) if w.is_integer() else w))
    return WeightedGraph(n, tuple(clean), tuple(labels) if labels is not None else None)


def unweighted(n: int, pairs: Iterable[tuple[int, int]]) -> WeightedGraph:
    return from_edge_list(n, [(u, v, 1) for u, v in pairs])


# structure


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]


def two_coloring(G: WeightedGraph) -> list[int] | None:
    """BFS 2-coloring of every component (lowest vertex of each gets color 0)."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.neighbors[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(G: WeightedGraph) -> bool:
    return two_coloring(G) is not None


def bipartition(G: WeightedGraph) -> Bipartition | None:
    G.require_connected()
    color = two_coloring(G)
    if color is None:
        return None
    return Bipartition(
        frozenset(u for u in range(G.n) if color[u] == 0),
        frozenset(u for u in range(G.n) if color[u] == 1),
    )


@dataclass(frozen=True)
class TwinSet:
    members: frozenset[int]
    kind: str  # "independent" or "clique"


def twin_sets(G: WeightedGraph) -> list[TwinSet]:
    """Maximal twin sets of an unweighted graph.

    Non-adjacent twins share their open neighbourhood, adjacent twins share
    their closed neighbourhood; both relations are equivalences and no vertex
    can be in a nontrivial class of each.
    """
    if not G.is_unweighted:
        raise NotUnweighted("twin sets are only defined for unweighted graphs")
    open_cls: dict[frozenset[int], list[int]] = {}
    closed_cls: dict[frozenset[int], list[int]] = {}
    for u in range(G.n):
        open_cls.setdefault(G.neighbors[u], []).append(u)
        closed_cls.setdefault(G.neighbors[u] | {u}, []).append(u)
    out = [TwinSet(frozenset(m), "independent") for m in open_cls.values() if len(m) >= 2]
    out += [TwinSet(frozenset(m), "clique") for m in closed_cls.values() if len(m) >= 2]
    return sorted(out, key=lambda ts: min(ts.members))


def pendant_groups(G: WeightedGraph) -> dict[int, list[int]]:
    """Map each vertex to its pendant neighbours, keeping vertices with two or more."""
    groups: dict[int, list[int]] = {}
    for u in range(G.n):
        if G.degree(u) == 1:
            (x,) = G.neighbors[u]
            if G.degree(x) > 1 or x > u:
                groups.setdefault(x, []).append(u)
    return {x: sorted(p) for x, p in sorted(groups.items()) if len(p) >= 2}


@dataclass(frozen=True)
class MatchingReport:
    count_capped: int
    sample: tuple[tuple[int, int], ...] | None = None


def count_perfect_matchings_capped(G: WeightedGraph) -> MatchingReport:
    """Count perfect matchings by backtracking, stopping after the second one."""
    if G.n % 2:
        return MatchingReport(0)
    matched = [False] * G.n
    current: list[tuple[int, int]] = []
    found: list[tuple[tuple[int, int], ...]] = []

    def extend() -> None:
        try:
            u = matched.index(False)
        except ValueError:
            found.append(tuple(current))
            return
        matched[u] = True
        for v in sorted(G.neighbors[u]):
            if matched[v]:
                continue
            matched[v] = True
            current.append((u, v))
            extend()
            current.pop()
            matched[v] = False
            if len(found) >= 2:
                break
        matched[u] = False

    extend()
    count = min(2, len(found))
    return MatchingReport(count, found[0] if found else None)


# operators


def bipartite_double(G: WeightedGraph) -> WeightedGraph:
    n = G.n
    edges = []
    for u, v, w in G.edges:
        edges.append((u, n + v, w))
        edges.append((n + u, v, w))
    return from_edge_list(2 * n, edges)


def subdivision(G: WeightedGraph) -> WeightedGraph:
    edges = []
    for k, (u, v, w) in enumerate(G.edges):
        mid = G.n + k
        edges.append((u, mid, w))
        edges.append((mid, v, w))
    return from_edge_list(G.n + len(G.edges), edges)


def cartesian_product(G: WeightedGraph, H: WeightedGraph) -> WeightedGraph:
    m = H.n
    edges = []
    for u in range(G.n):
        for a, b, w in H.edges:
            edges.append((u * m + a, u * m + b, w))
    for a, b, w in G.edges:
        for v in range(m):
            edges.append((a * m + v, b * m + v, w))
    return from_edge_list(G.n * m, edges)


def rooted_product(
    G: WeightedGraph, attachments: Sequence[tuple[WeightedGraph, int]]
) -> WeightedGraph:
    if len(attachments) != G.n:
        raise ArityMismatch(f"{len(attachments)} rooted graphs given for {G.n} base vertices")
    edges = list(G.edges)
    nxt = G.n
    for i, (Y, root) in enumerate(attachments):
        if not 0 <= root < Y.n:
            raise BadRoot(f"root {root} is not a vertex of attachment {i} (n={Y.n})")
        index = {root: i}
        for y in range(Y.n):
            if y != root:
                index[y] = nxt
                nxt += 1
        edges += [(index[a], index[b], w) for a, b, w in Y.edges]
    return from_edge_list(nxt, edges)


# small named graphs


def path_graph(n: int) -> WeightedGraph:
    return unweighted(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> WeightedGraph:
    return unweighted(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> WeightedGraph:
    return unweighted(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(m: int) -> WeightedGraph:
    return unweighted(m + 1, [(0, i) for i in range(1, m + 1)])
