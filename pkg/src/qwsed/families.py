"""Named graph families with the verdicts expected on them.

Vertex numbering per family:

* ``path``, ``cycle``: consecutive integers along the path/cycle.
* ``weighted_end_path``: the end vertex 0 carries the edge of weight ``1/alpha``.
* ``weighted_c4k``: vertex 1 is ``v``; edges {0,1} and {1,2} have weight ``1/alpha``.
* ``star``, ``weighted_star``: centre 0, leaves 1..m.
* ``subdivided_star``: centre 0, leaves 1..m, degree-two vertices m+1..2m.
* ``pendant_path_Gn``: path 0..n-1, pendant vertex n attached to vertex 1.
* ``complete_multipartite``, ``cocktail_party``: parts are consecutive blocks.
* ``threshold``: cells are consecutive blocks in the order given.
* ``five_eigenvalue``: each component lists its joined part then its other
  part; the apex ``v`` is the last vertex.
* ``shrikhande``: vertex ``4a + b`` for ``(a, b)`` in Z4 x Z4.
* ``hamming``, ``doob``: Cartesian product numbering, factors left to right.
* ``complete_minus_edge``: the removed edge is {0, 1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .arith import EigenvalueClass, Integer, RatioSqrt, recognize, sqrt_class, squarefree_split, two_adic
from .errors import BadParams
from .graph import (
    WeightedGraph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    star_graph,
    subdivision,
    unweighted,
)

SED, NOT, INC = "sedentary", "not_sedentary", "inconclusive"


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.name, tuple(sorted((k, repr(v)) for k, v in self.params.items()))))

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"


@dataclass(frozen=True)
class VertexExpectation:
    vertices: tuple[int, ...]
    status: str
    bound: float | None = None  # certified lower bound the cascade should report
    bound_exact: bool = True  # False: reported bound must be at least ``bound``
    infimum: float | None = None  # true infimum of |U(t)_{uu}|
    infimum_time: float | None = None
    guard: str | None = None  # hypothesis the expectation relies on


@dataclass(frozen=True)
class ExpectedProfile:
    spectrum: list[tuple[EigenvalueClass | float, int]] | None
    vertex_expectations: list[VertexExpectation]
    double_expectations: list[VertexExpectation] = field(default_factory=list)


def _value(c) -> float:
    return float(c) if isinstance(c, (int, float)) else c.value


# builders


def _int(params: dict, key: str, lo: int, default: Any = None) -> int:
    val = params.get(key, default)
    if val is None:
        raise BadParams(f"missing parameter '{key}'")
    if isinstance(val, float) and val.is_integer():
        val = int(val)
    if not isinstance(val, int) or isinstance(val, bool) or val < lo:
        raise BadParams(f"parameter '{key}' must be an integer >= {lo}, got {val!r}")
    return val


def _real(params: dict, key: str, default: float) -> float:
    val = params.get(key, default)
    try:
        val = float(val)
    except (TypeError, ValueError):
        raise BadParams(f"parameter '{key}' must be a real number, got {val!r}") from None
    if val == 0 or not math.isfinite(val):
        raise BadParams(f"parameter '{key}' must be finite and nonzero")
    return val


def _sizes(params: dict, key: str, lo: int = 1) -> list[int]:
    val = params.get(key)
    if isinstance(val, str):
        val = [int(x) for x in val.split(",") if x.strip()]
    if not isinstance(val, (list, tuple)) or not val or not all(isinstance(x, int) and x >= lo for x in val):
        raise BadParams(f"parameter '{key}' must be a list of integers >= {lo}")
    return list(val)


def _weighted_end_path(p):
    n = _int(p, "n", 3)
    if n % 2 == 0:
        raise BadParams("weighted_end_path needs odd n")
    alpha = _real(p, "alpha", math.sqrt((n - 1) / 2) + 1)
    edges = [(0, 1, 1 / alpha)] + [(i, i + 1, 1) for i in range(1, n - 1)]
    return from_edge_list(n, edges)


def _weighted_c4k(p):
    k = _int(p, "k", 1)
    alpha = _real(p, "alpha", math.sqrt(2 * k - 1) + 1)
    n = 4 * k
    edges = [(i, (i + 1) % n, 1 / alpha if i in (0, 1) else 1) for i in range(n)]
    return from_edge_list(n, edges)


def _weights(p) -> list[float]:
    val = p.get("weights")
    if isinstance(val, str):
        val = [float(x) for x in val.split(",") if x.strip()]
    if not isinstance(val, (list, tuple)) or len(val) < 2 or any(float(w) == 0 for w in val):
        raise BadParams("parameter 'weights' must list at least two nonzero leaf weights")
    return [float(w) for w in val]


def _weighted_star(p):
    ws = _weights(p)
    return from_edge_list(len(ws) + 1, [(0, i + 1, w) for i, w in enumerate(ws)])


def _pendant_path(p):
    n = _int(p, "n", 3)
    if n % 2 == 0:
        raise BadParams("pendant_path_Gn needs odd n")
    return unweighted(n + 1, [(i, i + 1) for i in range(n - 1)] + [(1, n)])


def complete_multipartite_graph(parts: list[int]) -> WeightedGraph:
    starts = np.cumsum([0] + parts)
    block = [i for i, s in enumerate(parts) for _ in range(s)]
    n = int(starts[-1])
    return unweighted(n, [(a, b) for a in range(n) for b in range(a + 1, n) if block[a] != block[b]])


def _multipartite(p):
    parts = _sizes(p, "parts")
    if len(parts) < 2:
        raise BadParams("complete_multipartite needs at least two parts")
    return complete_multipartite_graph(parts)


def _cocktail(p):
    return complete_multipartite_graph([2] * _int(p, "m", 2))


def parse_cells(cells) -> list[tuple[str, int]]:
    if isinstance(cells, str):
        out = []
        for tok in cells.replace(" ", "").split(","):
            if len(tok) < 2 or tok[0].upper() not in "OK" or not tok[1:].isdigit():
                raise BadParams(f"threshold cell '{tok}' must look like O3 or K2")
            out.append((tok[0].upper(), int(tok[1:])))
        cells = out
    cells = [(str(c).upper(), int(s)) for c, s in cells]
    if not cells or cells[-1][0] != "K":
        raise BadParams("threshold cells must end with a K cell (the graph is connected)")
    if cells[0][1] < 2 or any(s < 1 for _, s in cells):
        raise BadParams("threshold cells need first size >= 2 and all sizes >= 1")
    for (a, _), (b, _) in zip(cells, cells[1:]):
        if a == b:
            raise BadParams("threshold cells must alternate between O and K")
    return cells


def threshold_graph(cells) -> WeightedGraph:
    """Union an O cell in, join a K cell on, in the order listed."""
    cells = parse_cells(cells)
    n = 0
    edges: list[tuple[int, int]] = []
    for kind, size in cells:
        new = list(range(n, n + size))
        if kind == "K":
            edges += [(a, b) for i, a in enumerate(new) for b in new[i + 1 :]]
            edges += [(a, b) for a in range(n) for b in new]
        n += size
    return unweighted(n, edges)


def _components(p) -> list[tuple[int, int]]:
    comps = p.get("components")
    if isinstance(comps, str):
        comps = [tuple(int(x) for x in c.split("x")) for c in comps.split(",")]
    try:
        comps = [(int(a), int(b)) for a, b in comps]
    except (TypeError, ValueError):
        raise BadParams("components must be a list of (joined_part, other_part) sizes") from None
    if len(comps) < 2:
        raise BadParams("five_eigenvalue needs f > 1 components")
    if any(a < 1 or b < 1 for a, b in comps):
        raise BadParams("component part sizes must be positive")
    if len({a * b for a, b in comps}) != 1:
        raise BadParams("all components must have the same number of edges e")
    if len({tuple(sorted(c)) for c in comps}) != len(comps):
        raise BadParams("components must be mutually non-isomorphic")
    return comps


def five_eigenvalue_graph(comps: list[tuple[int, int]]) -> WeightedGraph:
    edges = []
    joined = []
    n = 0
    for a, b in comps:
        A = list(range(n, n + a))
        B = list(range(n + a, n + a + b))
        edges += [(x, y) for x in A for y in B]
        joined += A
        n += a + b
    edges += [(x, n) for x in joined]
    return unweighted(n + 1, edges)


def shrikhande_graph() -> WeightedGraph:
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = set()
    for a in range(4):
        for b in range(4):
            for da, db in conn:
                x, y = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
                edges.add((min(x, y), max(x, y)))
    G = unweighted(16, sorted(edges))
    _check_srg(G, 16, 6, 2, 2)
    return G


def _check_srg(G: WeightedGraph, v: int, k: int, lam: int, mu: int) -> None:
    A = (G.adjacency != 0).astype(int)
    A2 = A @ A
    ok = G.n == v and all(G.degree(x) == k for x in range(v))
    off = ~np.eye(v, dtype=bool)
    ok = ok and np.all(A2[(A == 1) & off] == lam) and np.all(A2[(A == 0) & off] == mu)
    if not ok:
        raise BadParams(f"construction is not SRG({v},{k},{lam},{mu})")


def _product(graphs: list[WeightedGraph]) -> WeightedGraph:
    G = graphs[0]
    for H in graphs[1:]:
        G = cartesian_product(G, H)
    return G


def _hamming(p):
    d, q = _int(p, "d", 1), _int(p, "q", 2)
    return _product([complete_graph(q)] * d)


def _doob(p):
    ell, d = _int(p, "ell", 1), _int(p, "d", 1)
    return _product([shrikhande_graph()] * ell + [complete_graph(4)] * d)


def _kn_minus_e(p):
    n = _int(p, "n", 3)
    return unweighted(n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)])


BUILDERS: dict[str, Callable[[dict], WeightedGraph]] = {
    "path": lambda p: path_graph(_int(p, "n", 2)),
    "weighted_end_path": _weighted_end_path,
    "cycle": lambda p: cycle_graph(_int(p, "n", 3)),
    "weighted_c4k": _weighted_c4k,
    "star": lambda p: star_graph(_int(p, "m", 2)),
    "weighted_star": _weighted_star,
    "subdivided_star": lambda p: subdivision(star_graph(_int(p, "m", 2))),
    "pendant_path_Gn": _pendant_path,
    "complete": lambda p: complete_graph(_int(p, "n", 2)),
    "complete_multipartite": _multipartite,
    "cocktail_party": _cocktail,
    "threshold": lambda p: threshold_graph(p.get("cells", "")),
    "five_eigenvalue": lambda p: five_eigenvalue_graph(_components(p)),
    "shrikhande": lambda p: shrikhande_graph(),
    "hamming": _hamming,
    "doob": _doob,
    "complete_minus_edge": _kn_minus_e,
}


def build(spec: FamilySpec) -> WeightedGraph:
    try:
        builder = BUILDERS[spec.name]
    except KeyError:
        raise BadParams(f"unknown family '{spec.name}'; known: {', '.join(sorted(BUILDERS))}") from None
    return builder(dict(spec.params))


# expectations


def _all(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _cos_spectrum(values) -> list[tuple[float, int]]:
    vals = sorted((round(float(x), 12) for x in values), reverse=True)
    out: list[tuple[float, int]] = []
    for x in vals:
        if out and abs(out[-1][0] - x) < 1e-9:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((x, 1))
    return [(0.0 if abs(x) < 1e-9 else x, m) for x, m in out]


def _exp_path(p):
    n = _int(p, "n", 2)
    spec = _cos_spectrum(2 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1))
    return ExpectedProfile(spec, [VertexExpectation(_all(n), NOT)])


def _exp_weighted_end_path(p):
    n = _int(p, "n", 3)
    alpha = _real(p, "alpha", math.sqrt((n - 1) / 2) + 1)
    E0 = alpha**2 / (alpha**2 + (n - 1) / 2)
    if E0 <= 0.5:
        return ExpectedProfile(None, [])
    return ExpectedProfile(None, [VertexExpectation((0,), SED, bound=2 * E0 - 1, guard="|alpha| > sqrt((n-1)/2)")])


def _exp_cycle(p):
    n = _int(p, "n", 3)
    spec = _cos_spectrum(2 * math.cos(2 * math.pi * j / n) for j in range(n))
    ve, de = [], []
    if n % 2 == 0:
        ve.append(VertexExpectation(_all(n), NOT))
    elif n == 3:
        ve.append(VertexExpectation(_all(3), SED, bound=1 / 3, infimum=1 / 3, infimum_time=math.pi / 3))
    if n % 2:
        de.append(VertexExpectation(_all(n), NOT, guard="odd cycles are nonsingular"))
    return ExpectedProfile(spec, ve, de)


def _exp_c4k(p):
    k = _int(p, "k", 1)
    alpha = _real(p, "alpha", math.sqrt(2 * k - 1) + 1)
    lb = alpha**2 / (alpha**2 + 2 * k - 1)
    if lb <= 0.5:
        return ExpectedProfile(None, [])
    return ExpectedProfile(
        None, [VertexExpectation((1,), SED, bound=2 * lb - 1, bound_exact=False, guard="|alpha| > sqrt(2k-1)")]
    )


def _exp_star(p):
    m = _int(p, "m", 2)
    spec = [(sqrt_class(m), 1), (Integer(0), m - 1), (_neg(sqrt_class(m)), 1)]
    ve = [VertexExpectation((0,), NOT)]
    if m >= 3:
        ve.append(VertexExpectation(tuple(range(1, m + 1)), SED, bound=(m - 2) / m))
    else:
        ve.append(VertexExpectation((1, 2), NOT))
    return ExpectedProfile(spec, ve)


def _exp_weighted_star(p):
    ws = _weights(p)
    tot = sum(w * w for w in ws)
    ve = []
    if len(ws) == 2 and abs(abs(ws[0]) - abs(ws[1])) < 1e-12:
        ve.append(VertexExpectation((1, 2), NOT, guard="equal weights give perfect state transfer"))
    else:
        for i, w in enumerate(ws):
            lb = 1 - w * w / tot
            if lb > 0.5:
                ve.append(VertexExpectation((i + 1,), SED, bound=2 * lb - 1, bound_exact=False))
    return ExpectedProfile(None, ve)


def _neg(c):
    if isinstance(c, Integer):
        return Integer(-c.k)
    return RatioSqrt(-c.p, c.q, c.delta)


def _exp_subdivided_star(p):
    m = _int(p, "m", 2)
    r = sqrt_class(m + 1)
    spec = [(r, 1), (Integer(1), m - 1), (Integer(0), 1), (Integer(-1), m - 1), (_neg(r), 1)]
    return ExpectedProfile(spec, [VertexExpectation(_all(2 * m + 1), NOT)])


def _exp_pendant_path(p):
    n = _int(p, "n", 3)
    return ExpectedProfile(None, [VertexExpectation((n,), SED, bound=1 / n, infimum=1 / n)])


def _exp_complete(p):
    n = _int(p, "n", 2)
    spec = [(Integer(n - 1), 1), (Integer(-1), n - 1)]
    if n == 2:
        return ExpectedProfile(spec, [VertexExpectation(_all(2), NOT)])
    b = 1 - 2 / n
    return ExpectedProfile(
        spec,
        [VertexExpectation(_all(n), SED, bound=b, infimum=b, infimum_time=math.pi / n)],
        [VertexExpectation(_all(n), NOT, guard="K_n is nonsingular")],
    )


def _exp_multipartite(p):
    parts = _sizes(p, "parts")
    starts = np.cumsum([0] + parts)
    if all(s == 2 for s in parts):
        return _exp_cocktail({"m": len(parts)})
    ve, de = [], []
    for i, s in enumerate(parts):
        if s >= 3:
            block = tuple(range(int(starts[i]), int(starts[i + 1])))
            ve.append(VertexExpectation(block, SED, bound=(s - 2) / s, bound_exact=False))
            de.append(VertexExpectation(block, SED))
    # with two parts the graph is bipartite and has no connected double
    return ExpectedProfile(None, ve, de if len(parts) >= 3 else [])


def _exp_cocktail(p):
    m = _int(p, "m", 2)
    status = SED if m % 2 else NOT
    spec = [(Integer(2 * m - 2), 1), (Integer(0), m), (Integer(-2), m - 1)]
    ve = [VertexExpectation(_all(2 * m), status)]
    de = [VertexExpectation(_all(2 * m), status)] if m >= 3 else []
    return ExpectedProfile(spec, ve, de)


def _exp_threshold(p):
    cells = parse_cells(p.get("cells", ""))
    ve, de = [], []
    n = 0
    for kind, size in cells:
        if size >= 3:
            block = tuple(range(n, n + size))
            ve.append(VertexExpectation(block, SED, bound=(size - 2) / size, bound_exact=False))
            de.append(VertexExpectation(block, SED))
        n += size
    bip = len(cells) == 2 and cells[1][1] == 1  # a star
    return ExpectedProfile(None, ve, [] if bip else de)


def _exp_five(p):
    comps = _components(p)
    e = comps[0][0] * comps[0][1]
    f = len(comps)
    n_h = sum(a + b for a, b in comps)
    deg_v = sum(a for a, _ in comps)
    lam, rte = sqrt_class(e + deg_v), sqrt_class(e)
    spec = [(lam, 1), (rte, f - 1), (Integer(0), n_h - 2 * f + 1), (_neg(rte), f - 1), (_neg(lam), 1)]
    # the null vector of the joined side weighs the apex at 1 / (1 + sum 1/b_j)
    apex_e0 = Fraction(1) / (1 + sum(Fraction(1, b) for _, b in comps))
    if apex_e0 > Fraction(1, 2):
        ve = [VertexExpectation((n_h,), SED, bound=float(2 * apex_e0 - 1), guard="apex null mass above 1/2")]
    elif apex_e0 < Fraction(1, 2):
        ve = [VertexExpectation((n_h,), NOT, guard="apex null mass below 1/2, one positive eigenvalue")]
    else:
        ve = []
    # all integer relations a*lam + b*sqrt(e) = 0: none unless the square-free parts agree
    (pl, dl), (pe, de_) = squarefree_split(e + deg_v), squarefree_split(e)
    if dl != de_:
        odd_relation = False
    else:
        g = math.gcd(pl, pe)
        odd_relation = (pe // g + pl // g) % 2 == 1
    start = 0
    for a, b in comps:
        joined = tuple(range(start, start + a))
        other = tuple(range(start + a, start + a + b))
        start += a + b
        for part, in_joined in ((joined, True), (other, False)):
            size = len(part)
            if size >= 3:
                ve.append(VertexExpectation(part, SED, guard="part of size >= 3 (twin set)"))
            elif size == 2 and e >= 4 and e % 2 == 0 and {a, b} == {2, e // 2}:
                if in_joined:
                    ve.append(VertexExpectation(part, SED if odd_relation else NOT,
                                                guard="parity of relations a*lambda + b*sqrt(e) = 0"))
                else:
                    ve.append(VertexExpectation(part, SED, guard="extra null vector on the unjoined side"))
            elif size == 1 and e >= 4 and {a, b} == {1, e}:
                if in_joined:
                    ve.append(VertexExpectation(part, NOT, guard="0 outside the support"))
                else:
                    ints = isinstance(lam, Integer) and isinstance(rte, Integer)
                    if dl != de_ or (ints and two_adic(lam.k) == two_adic(rte.k)):
                        ve.append(VertexExpectation(part, NOT, guard="equal 2-adic integers or independent"))
    return ExpectedProfile(spec, ve)


def _exp_shrikhande(p):
    spec = [(Integer(6), 1), (Integer(2), 6), (Integer(-2), 9)]
    return ExpectedProfile(
        spec, [VertexExpectation(_all(16), SED, bound=1 / 8, infimum=0.25, infimum_time=math.pi / 4)]
    )


def _exp_hamming(p):
    d, q = _int(p, "d", 1), _int(p, "q", 2)
    n = q**d
    if q == 2:
        return ExpectedProfile(None, [VertexExpectation(_all(n), NOT)])
    inf = (1 - 2 / q) ** d
    heavy = ((q - 1) / q) ** d
    bound = 2 * heavy - 1 if heavy > 0.5 else inf
    spec = [(Integer(d * (q - 1) - q * i), math.comb(d, i) * (q - 1) ** i) for i in range(d + 1)]
    return ExpectedProfile(spec, [VertexExpectation(_all(n), SED, bound=bound, infimum=inf, infimum_time=math.pi / q)])


def _exp_doob(p):
    ell, d = _int(p, "ell", 1), _int(p, "d", 1)
    n = 16**ell * 4**d
    inf = 1 / 2 ** (2 * ell + d)
    heavy = (9 / 16) ** ell * (3 / 4) ** d
    bound = 2 * heavy - 1 if heavy > 0.5 else inf
    return ExpectedProfile(None, [VertexExpectation(_all(n), SED, bound=bound, infimum=inf, infimum_time=math.pi / 4)])


def _exp_kn_minus_e(p):
    n = _int(p, "n", 3)
    ve = [VertexExpectation((0, 1), NOT)]
    rest = tuple(range(2, n))
    if n >= 5:
        ve.append(VertexExpectation(rest, SED, bound=(n - 4) / (n - 2), guard="n - 2 >= 3 twins"))
    else:
        ve.append(VertexExpectation(rest, NOT, guard="n <= 4: half case without odd relation"))
    de = [VertexExpectation(_all(n), NOT)] if n >= 4 else []
    return ExpectedProfile(None, ve, de)


EXPECTATIONS: dict[str, Callable[[dict], ExpectedProfile]] = {
    "path": _exp_path,
    "weighted_end_path": _exp_weighted_end_path,
    "cycle": _exp_cycle,
    "weighted_c4k": _exp_c4k,
    "star": _exp_star,
    "weighted_star": _exp_weighted_star,
    "subdivided_star": _exp_subdivided_star,
    "pendant_path_Gn": _exp_pendant_path,
    "complete": _exp_complete,
    "complete_multipartite": _exp_multipartite,
    "cocktail_party": _exp_cocktail,
    "threshold": _exp_threshold,
    "five_eigenvalue": _exp_five,
    "shrikhande": _exp_shrikhande,
    "hamming": _exp_hamming,
    "doob": _exp_doob,
    "complete_minus_edge": _exp_kn_minus_e,
}


def expected(spec: FamilySpec) -> ExpectedProfile:
    build(spec)  # validates params
    return EXPECTATIONS[spec.name](dict(spec.params))


def spectrum_values(profile: ExpectedProfile) -> list[tuple[float, int]]:
    """Expected spectrum as descending ``(value, multiplicity)`` floats."""
    out = [(_value(c), m) for c, m in profile.spectrum or [] if m > 0]
    return sorted(out, key=lambda vm: -vm[0])


def parse_param(text: str) -> tuple[str, Any]:
    """Parse ``key=value`` from the command line; JSON values are accepted."""
    import json

    if "=" not in text:
        raise BadParams(f"parameter '{text}' must look like key=value")
    key, raw = text.split("=", 1)
    try:
        val = json.loads(raw)
    except json.JSONDecodeError:
        val = raw
    return key.strip(), val


CORPUS: list[FamilySpec] = (
    [FamilySpec("path", {"n": n}) for n in (2, 3, 4, 5, 7, 9)]
    + [FamilySpec("weighted_end_path", {"n": 5, "alpha": 2}), FamilySpec("weighted_end_path", {"n": 7})]
    + [FamilySpec("cycle", {"n": n}) for n in (3, 4, 5, 6, 8)]
    + [FamilySpec("weighted_c4k", {"k": 2, "alpha": 3}), FamilySpec("weighted_c4k", {"k": 1})]
    + [FamilySpec("star", {"m": m}) for m in (2, 3, 5)]
    + [FamilySpec("weighted_star", {"weights": [1, 2]}), FamilySpec("weighted_star", {"weights": [1, 1]}),
       FamilySpec("weighted_star", {"weights": [1, 0.5, 3]})]
    + [FamilySpec("subdivided_star", {"m": m}) for m in (2, 3, 8)]
    + [FamilySpec("pendant_path_Gn", {"n": n}) for n in (3, 5)]
    + [FamilySpec("complete", {"n": n}) for n in (2, 3, 5)]
    + [FamilySpec("complete_multipartite", {"parts": [3, 2, 1]}), FamilySpec("complete_multipartite", {"parts": [3, 3, 4]})]
    + [FamilySpec("cocktail_party", {"m": m}) for m in (3, 4, 5)]
    + [FamilySpec("threshold", {"cells": "O3,K2,O1,K1"})]
    + [FamilySpec("five_eigenvalue", {"components": [[1, 4], [2, 2]]})]
    + [FamilySpec("shrikhande"), FamilySpec("hamming", {"d": 2, "q": 3}), FamilySpec("doob", {"ell": 1, "d": 1})]
    + [FamilySpec("complete_minus_edge", {"n": n}) for n in (3, 4, 5, 6)]
)


def recognized_spectrum(values) -> list[EigenvalueClass]:
    return [recognize(float(v)) for v in values]


def fraction(x: float) -> Fraction:
    return Fraction(x).limit_denominator(10**6)
