"""Per-vertex sedentariness verdicts.

A vertex ``u`` is sedentary when ``inf_{t>0} |U(t)_{uu}|`` is positive. The
cascade in ``classify_vertex`` tries structural certificates first, then
number-theoretic ones, then falls back to a numeric scan of ``|U(t)_{uu}|``.
Every certificate carries enough data to replay its check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .arith import (
    Surd,
    _canonical,
    _matches,
    find_relation,
    relation_lattice,
    two_adic,
    two_adic_fraction,
)
from .errors import (
    BipartiteInput,
    NoPendantGroup,
    NotHalfCase,
    PreconditionViolated,
    SupportTooLarge,
    TooManyValues,
    UnrecognizedEigenvalues,
)
from .graph import (
    WeightedGraph,
    bipartite_double,
    count_perfect_matchings_capped,
    pendant_groups,
    two_coloring,
    twin_sets,
)
from .spectral import (
    SpectralDecomposition,
    VertexProfile,
    eigendecompose,
    periodicity,
    support,
    walk_diagonal,
)

SEDENTARY = "sedentary"
NOT_SEDENTARY = "not_sedentary"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ClassifyOptions:
    horizon: float = 200.0
    step: float | None = None
    coeff_bound: int = 32
    relation_tol: float = 1e-9
    recognize_tol: float = 1e-9
    half_tol: float = 1e-8
    attach_scan: bool = True


@dataclass(frozen=True)
class Certificate:
    kind: str
    status: str
    data: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    vertex: int | None
    status: str
    certificate: Certificate
    lower_bound: float | None = None
    witness_time: float | None = None
    numeric_min: float | None = None
    horizon: float | None = None
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"vertex": self.vertex, "status": self.status, "certificate": self.certificate.kind}
        for key in ("lower_bound", "witness_time", "numeric_min", "horizon"):
            val = getattr(self, key)
            if val is not None:
                out[key] = float(val)
        return out


def _verdict(u, cert: Certificate, **kw) -> Verdict:
    data = cert.data
    kw.setdefault("lower_bound", data.get("bound"))
    kw.setdefault("witness_time", data.get("witness_time"))
    return Verdict(u, cert.status, cert, **kw)


# numeric scan


@dataclass(frozen=True)
class ScanResult:
    times: np.ndarray
    values: np.ndarray  # complex U(t)_{uu}
    magnitudes: np.ndarray
    global_min: float
    argmin: float
    horizon: float
    step: float
    refined: tuple[tuple[float, complex], ...] = ()
    periodic: bool = False


def auto_step(S: SpectralDecomposition) -> float:
    lmax = float(np.abs(S.eigenvalues).max())
    return 0.01 if lmax == 0 else min(0.01, math.pi / (8 * lmax))


def _evaluate(lam: np.ndarray, d: np.ndarray, t: np.ndarray, chunk: int = 50_000) -> np.ndarray:
    out = np.empty(len(t), dtype=complex)
    for a in range(0, len(t), chunk):
        out[a : a + chunk] = np.exp(1j * np.multiply.outer(t[a : a + chunk], lam)) @ d
    return out


def numeric_scan(
    S: SpectralDecomposition,
    u: int,
    horizon: float = 200.0,
    step: float | None = None,
    use_period: bool = True,
    refine: int = 10,
) -> ScanResult:
    """Grid scan of ``|U(t)_{uu}|`` on ``[0, horizon]`` with local refinement.

    For a periodic vertex the horizon is replaced by one period, which makes
    the reported minimum the true infimum.
    """
    prof = support(S, u)
    lam = S.eigenvalues[list(prof.support)]
    d = np.array(prof.diagonals)
    periodic = False
    if use_period:
        try:
            rep = periodicity(S, u)
        except UnrecognizedEigenvalues:
            rep = None
        if rep is not None and rep.periodic and rep.period is not None:
            horizon, periodic = rep.period, True
    h = step if step is not None else auto_step(S)
    m = max(2, int(math.ceil(horizon / h)))
    times = np.linspace(0.0, horizon, m + 1)
    vals = _evaluate(lam, d, times)
    mags = np.abs(vals)

    def sq(t: float) -> float:
        return float(abs(np.exp(1j * lam * t) @ d) ** 2)

    inner = np.flatnonzero((mags[1:-1] <= mags[:-2]) & (mags[1:-1] <= mags[2:])) + 1
    cand = list(inner[np.argsort(mags[inner], kind="stable")][:refine])
    refined = []
    for i in cand:
        res = minimize_scalar(
            sq, bounds=(times[i - 1], times[i + 1]), method="bounded", options={"xatol": 1e-10}
        )
        t = float(res.x)
        refined.append((t, complex(np.exp(1j * lam * t) @ d)))
    best_i = int(np.argmin(mags[1:])) + 1
    gmin, garg = float(mags[best_i]), float(times[best_i])
    for t, v in refined:
        if abs(v) < gmin:
            gmin, garg = abs(v), t
    return ScanResult(times, vals, mags, gmin, garg, float(horizon), float(h), tuple(refined), periodic)


def _first_real_root(S: SpectralDecomposition, u: int, scan: ScanResult) -> float | None:
    """First sign change of ``Re U(t)_{uu}`` along the scan, polished by bisection."""
    re = scan.values.real
    hits = np.flatnonzero(re[1:] <= 0)
    if not len(hits):
        for t, v in scan.refined:
            if v.real <= 0:
                return t
        return None
    i = int(hits[0]) + 1
    if re[i] == 0:
        return float(scan.times[i])
    f = lambda t: walk_diagonal(S, u, t).real  # noqa: E731
    return float(brentq(f, scan.times[i - 1], scan.times[i], xtol=1e-14, rtol=1e-15))


# structural certificates


def twin_set_large(G: WeightedGraph, S: SpectralDecomposition, u: int) -> Certificate | None:
    if not G.is_unweighted:
        return None
    for ts in twin_sets(G):
        if u in ts.members and len(ts.members) >= 3:
            k = S.index_of(0.0 if ts.kind == "independent" else -1.0, 1e-8)
            E = float(S.projectors[k, u, u])
            return Certificate(
                "twin_set_large",
                SEDENTARY,
                {"twin_set": sorted(ts.members), "twin_kind": ts.kind, "eigenvalue_index": k,
                 "diagonal": E, "bound": 2 * E - 1},
            )
    return None


def projection_heavy(
    S: SpectralDecomposition, profile: VertexProfile, margin: float = 1e-9
) -> Certificate | None:
    if not profile.support:
        return None
    j = int(np.argmax(profile.diagonals))
    E = profile.diagonals[j]
    if E <= 0.5 + margin:
        return None
    k = profile.support[j]
    return Certificate(
        "projection_heavy",
        SEDENTARY,
        {"eigenvalue_index": k, "eigenvalue": float(S.eigenvalues[k]), "diagonal": E, "bound": 2 * E - 1},
    )


def pendant_group(
    G: WeightedGraph, S: SpectralDecomposition, tol: float = 1e-8
) -> list[tuple[int, Certificate]]:
    """Sedentary certificates for pendant vertices sharing a neighbour.

    Vectors supported on the pendants of ``x`` and orthogonal to their edge
    weights lie in the null space, so ``(E_0)_{pp} >= 1 - w_p^2 / sum_q w_q^2``.
    """
    groups = pendant_groups(G)
    if not groups:
        raise NoPendantGroup("no vertex has two or more pendant neighbours")
    out = []
    k0 = S.index_of(0.0, 1e-8)
    for x, pend in groups.items():
        w2 = {p: G.weight(p, x) ** 2 for p in pend}
        total = sum(w2.values())
        twins = len(pend) >= 3 and G.is_unweighted
        for p in pend:
            lb = 1 - w2[p] / total
            data = {"center": x, "pendants": pend, "projector_lower_bound": lb}
            if lb > 0.5 + tol:
                data["bound"] = 2 * lb - 1
                out.append((p, Certificate("twin_set_large" if twins else "pendant_group", SEDENTARY, data)))
            elif len(pend) == 2 and k0 is not None:
                # equal weights: decided only by the actual null-space mass
                E = float(S.projectors[k0, p, p])
                if E > 0.5 + tol:
                    data.update(diagonal=E, bound=2 * E - 1)
                    out.append((p, Certificate("pendant_group", SEDENTARY, data)))
    return sorted(out, key=lambda pc: pc[0])


def unique_pm(G: WeightedGraph, S: SpectralDecomposition | None = None) -> Certificate | None:
    if two_coloring(G) is None:
        return None
    rep = count_perfect_matchings_capped(G)
    if rep.count_capped == 1:
        return Certificate("unique_perfect_matching", NOT_SEDENTARY, {"matching": [list(e) for e in rep.sample]})
    S = S if S is not None else eigendecompose(G)
    if len(S.eigenvalues) % 2 == 0:
        return Certificate("even_distinct_eigenvalues", NOT_SEDENTARY, {"distinct": len(S.eigenvalues)})
    return None


def bipartite_zero_free(G: WeightedGraph, S: SpectralDecomposition, profile: VertexProfile) -> Certificate | None:
    if two_coloring(G) is None:
        return None
    if any(S.eigenvalues[k] == 0.0 for k in profile.support):
        return None
    return Certificate("bipartite_zero_free", NOT_SEDENTARY, {"support": list(profile.support)})


# number-theoretic certificates (bipartite, 0 in support, (E_0)_{uu} < 1/2)


def _zero_mass(S: SpectralDecomposition, profile: VertexProfile) -> float | None:
    for k, E in zip(profile.support, profile.diagonals):
        if S.eigenvalues[k] == 0.0:
            return E
    return None


def _positive(S: SpectralDecomposition, profile: VertexProfile) -> list[int]:
    return [k for k in profile.support if S.eigenvalues[k] > 0]


def _real_witness(S, u, t: float) -> float | None:
    return t if walk_diagonal(S, u, t).real <= 1e-9 else None


def cor18_tests(
    S: SpectralDecomposition, profile: VertexProfile, opts: ClassifyOptions | None = None
) -> Certificate | None:
    """Single positive eigenvalue, equal 2-adic integers, or Q-independent positives."""
    opts = opts or ClassifyOptions()
    E0 = _zero_mass(S, profile)
    if E0 is None or E0 >= 0.5:
        raise PreconditionViolated("needs 0 in the support with (E_0)_uu < 1/2")
    pos = _positive(S, profile)
    if len(pos) == 1:
        lam = float(S.eigenvalues[pos[0]])
        return Certificate(
            "single_positive", NOT_SEDENTARY,
            {"eigenvalue_index": pos[0], "witness_time": math.pi / lam, "value_at_witness": 2 * E0 - 1},
        )
    surds = [S.surd(k, opts.recognize_tol) for k in pos]
    if all(s is not None and s.radicands in ((1,),) and s.coefficient(1).denominator == 1 for s in surds):
        ints = [int(s.coefficient(1)) for s in surds]
        nus = {two_adic(k) for k in ints}
        if len(nus) == 1:
            (eta,) = nus
            return Certificate(
                "equal_two_adic", NOT_SEDENTARY,
                {"positive_support": ints, "nu2": eta, "witness_time": math.pi / 2**eta},
            )
    if all(s is not None for s in surds):
        if not relation_lattice(surds):
            return Certificate("linear_independent", NOT_SEDENTARY,
                               {"positive_support": pos, "evidence": "exact"})
        return None
    try:
        rel = find_relation([float(S.eigenvalues[k]) for k in pos], opts.coeff_bound, opts.relation_tol)
    except TooManyValues:
        return None
    if rel is None:
        return Certificate(
            "linear_independent", NOT_SEDENTARY,
            {"positive_support": pos, "evidence": "bounded-evidence", "coeff_bound": opts.coeff_bound},
        )
    return None


@dataclass(frozen=True)
class SubsetCertificate:
    subset_s: tuple[int, ...]
    alpha_mass: float
    zeta: float
    s_prime: tuple[int, ...]
    relation_audit: tuple[tuple[tuple[int, ...], int], ...]
    exact: bool
    zeta_ratio: tuple[int, int] | None = None
    witness_time: float | None = None


def _zeta_ratio(zeta: float) -> tuple[int, int] | None:
    r = Fraction(zeta / math.pi).limit_denominator(64)
    return (r.numerator, r.denominator) if abs(float(r) - zeta / math.pi) <= 1e-12 else None


def _passes(g: int, ratio: tuple[int, int] | None) -> bool:
    # every D in gZ must satisfy zeta * D in 2*pi*Z
    if g == 0:
        return True
    if ratio is None:
        return False
    a, b = ratio
    return g % b == 0 and (a * (g // b)) % 2 == 0


def kronecker_conditions(
    relations: list[tuple[int, ...]], alpha: float, zetas: list[float] | None = None
) -> tuple[float, tuple[int, int] | None, tuple[int, ...], list[tuple[tuple[int, ...], int]]] | None:
    """Find ``zeta`` and a sign pattern ``S'`` compatible with every relation.

    ``relations`` are integer tuples over the subset values (a lattice basis
    when exact). Returns ``(zeta, (a, b) or None, S' positions, audit)``.
    Any ``zeta`` with ``cos(zeta) <= -1/(4*alpha)`` works, so ``pi`` is
    tried after ``arccos(-1/(4*alpha))``.
    """
    if alpha < 0.25:
        return None
    m = len(relations[0]) if relations else None
    if zetas is None:
        zetas = [math.acos(-1 / (4 * alpha))]
        if abs(zetas[0] - math.pi) > 1e-12:
            zetas.append(math.pi)
    for zeta in zetas:
        ratio = _zeta_ratio(zeta)
        if not relations:
            return zeta, ratio, (), []
        for size in range(m + 1):
            for sp in itertools.combinations(range(m), size):
                Ds = [sum(x if j not in sp else -x for j, x in enumerate(rel)) for rel in relations]
                if _passes(math.gcd(*Ds) if Ds else 0, ratio):
                    return zeta, ratio, sp, list(zip(relations, Ds))
    return None


def _box_relations(values: list[float], bound: int, tol: float) -> list[tuple[int, ...]]:
    v = np.asarray(values, dtype=float)
    _, found = _matches(v, bound, tol * float(np.abs(v).sum()), None, count_only=False)
    return sorted({_canonical(f) for f in found if any(f)})


def kronecker_subset(
    S: SpectralDecomposition, profile: VertexProfile, opts: ClassifyOptions | None = None
) -> SubsetCertificate | None:
    opts = opts or ClassifyOptions()
    E0 = _zero_mass(S, profile)
    if E0 is None or E0 >= 0.5:
        raise PreconditionViolated("needs 0 in the support with (E_0)_uu < 1/2")
    pos = _positive(S, profile)
    if len(pos) > 6:
        raise SupportTooLarge(f"positive support has {len(pos)} values; at most 6 are searched")
    mass = dict(zip(profile.support, profile.diagonals))
    for size in range(1, len(pos) + 1):
        for sub in itertools.combinations(pos, size):
            alpha = sum(mass[k] for k in sub)
            if alpha < 0.25:
                continue
            surds = [S.surd(k, opts.recognize_tol) for k in sub]
            exact = all(s is not None for s in surds)
            if exact:
                rels = relation_lattice(surds)
            else:
                rels = _box_relations([float(S.eigenvalues[k]) for k in sub], min(opts.coeff_bound, 8),
                                      opts.relation_tol)
            found = kronecker_conditions(rels, alpha)
            if found is None:
                continue
            zeta, ratio, sp, audit = found
            witness = None
            for k in sub:
                witness = _real_witness(S, profile.vertex, zeta / float(S.eigenvalues[k]))
                if witness is not None:
                    break
            return SubsetCertificate(
                tuple(sub), alpha, zeta, tuple(sub[j] for j in sp), tuple(audit), exact, ratio, witness
            )
    return None


# the half case (E_theta)_{uu} = 1/2


def _conjugate(s: Surd) -> Surd:
    return Surd.make((d, c if d == 1 else -c) for d, c in s.terms)


def _odd_relation_bound(rel, masses) -> float:
    return 1.0 / sum(l * l / (2 * E) for l, E in zip(rel, masses) if l)


def half_case_parity(
    S: SpectralDecomposition, profile: VertexProfile, theta_index: int, opts: ClassifyOptions | None = None
) -> Certificate | None:
    """Decide the case ``(E_theta)_{uu} = 1/2`` by the parity of integer relations.

    ``u`` is sedentary iff some integer relation among the differences
    ``lambda - theta`` has an odd coefficient sum. Returns None when only a
    bounded search was possible and it found no odd relation.
    """
    opts = opts or ClassifyOptions()
    if theta_index not in profile.support:
        raise NotHalfCase(f"eigenvalue index {theta_index} is not in the support of vertex {profile.vertex}")
    Et = profile.diagonal_of(theta_index)
    if abs(Et - 0.5) > opts.half_tol:
        raise NotHalfCase(f"(E_theta)_uu = {Et!r} is not 1/2")
    others = [k for k in profile.support if k != theta_index]
    masses = [profile.diagonal_of(k) for k in others]
    base = {"theta_index": theta_index, "relation_indices": others}
    surds = [S.surd(k, opts.recognize_tol) for k in profile.support]
    if all(s is not None for s in surds):
        st = S.surd(theta_index, opts.recognize_tol)
        diffs = [S.surd(k, opts.recognize_tol) - st for k in others]
        dirs = [d.direction() for d in diffs]
        deltas = {d[0] for d in dirs if d is not None}
        closed = all(_conjugate(s) in surds for s in surds) and all(
            set(s.radicands) <= {1} | deltas for s in surds
        )
        if all(d is not None for d in dirs) and len(deltas) == 1 and closed:
            (delta,) = deltas
            cs = [c for _, c in dirs]
            nus = [two_adic_fraction(c) for c in cs]
            if len(set(nus)) == 1:
                eta = nus[0]
                odd_den = math.lcm(*(c.denominator >> two_adic(c.denominator) for c in cs))
                t = math.pi * odd_den / (2.0**eta * math.sqrt(delta))
                return Certificate(
                    "half_case_parity", NOT_SEDENTARY,
                    {**base, "route": "two_adic", "delta": delta, "nu2": eta, "witness_time": t,
                     "witness_kind": "zero"},
                )
            i = nus.index(min(nus))
            j = next(k for k, nu in enumerate(nus) if nu != nus[i])
            L = math.lcm(cs[i].denominator, cs[j].denominator)
            ai, aj = int(cs[i] * L), int(cs[j] * L)
            g = math.gcd(ai, aj)
            rel = [0] * len(others)
            rel[i], rel[j] = aj // g, -ai // g
            return Certificate(
                "half_case_parity", SEDENTARY,
                {**base, "route": "two_adic", "delta": delta, "relation": rel,
                 "bound": _odd_relation_bound(rel, masses)},
            )
        basis = relation_lattice(diffs)
        odd = [b for b in basis if sum(b) % 2]
        if odd:
            rel = list(min(odd, key=lambda b: sum(l * l / (2 * E) for l, E in zip(b, masses))))
            return Certificate(
                "half_case_parity", SEDENTARY,
                {**base, "route": "exact_lattice", "relation": rel, "bound": _odd_relation_bound(rel, masses)},
            )
        return Certificate("half_case_parity", NOT_SEDENTARY,
                           {**base, "route": "exact_lattice", "basis": [list(b) for b in basis]})
    theta = float(S.eigenvalues[theta_index])
    diffs_f = [float(S.eigenvalues[k]) - theta for k in others]
    try:
        rel = find_relation(diffs_f, opts.coeff_bound, opts.relation_tol, odd_sum=True)
    except TooManyValues:
        return None
    if rel is None:
        return None
    return Certificate(
        "half_case_parity", SEDENTARY,
        {**base, "route": "bounded_search", "relation": list(rel), "bound": _odd_relation_bound(rel, masses)},
    )


# the cascade


def _scan_fields(scan: ScanResult | None) -> dict:
    if scan is None:
        return {}
    return {"numeric_min": scan.global_min, "horizon": scan.horizon}


def classify_vertex(
    G: WeightedGraph, S: SpectralDecomposition, u: int, opts: ClassifyOptions | None = None
) -> Verdict:
    opts = opts or ClassifyOptions()
    G.require_connected()
    G.check_vertex(u)
    prof = support(S, u)
    bip = two_coloring(G) is not None
    scan_cache: list[ScanResult] = []

    def scan() -> ScanResult:
        if not scan_cache:
            scan_cache.append(numeric_scan(S, u, opts.horizon, opts.step))
        return scan_cache[0]

    def done(cert: Certificate, flags: tuple[str, ...] = (), **kw) -> Verdict:
        extra = _scan_fields(scan()) if opts.attach_scan else {}
        extra.update(kw)
        if cert.status == NOT_SEDENTARY and cert.data.get("witness_time") is None and bip and opts.attach_scan:
            root = _first_real_root(S, u, scan())
            if root is not None:
                extra.setdefault("witness_time", root)
        return _verdict(u, cert, flags=flags, **extra)

    cert = twin_set_large(G, S, u)
    if cert:
        return done(cert)
    cert = projection_heavy(S, prof, margin=opts.half_tol)
    if cert:
        return done(cert)
    if pendant_groups(G):
        for p, c in pendant_group(G, S, opts.half_tol):
            if p == u:
                return done(c)
    if bip:
        cert = unique_pm(G, S)
        if cert:
            return done(cert)
        cert = bipartite_zero_free(G, S, prof)
        if cert:
            return done(cert)
    E0 = _zero_mass(S, prof)
    below_half = E0 is not None and E0 < 0.5 - opts.half_tol
    if bip and below_half:
        cert = cor18_tests(S, prof, opts)
        if cert:
            flags = ("bounded-evidence",) if cert.data.get("evidence") == "bounded-evidence" else ()
            return done(cert, flags)
    halves = [k for k, E in zip(prof.support, prof.diagonals) if abs(E - 0.5) <= opts.half_tol]
    half_audit = None
    for k in halves:
        cert = half_case_parity(S, prof, k, opts)
        if cert:
            return done(cert, ("half-case",))
        half_audit = {"theta_index": k, "coeff_bound": opts.coeff_bound}
    if bip and below_half and len(_positive(S, prof)) <= 6:
        sc = kronecker_subset(S, prof, opts)
        if sc:
            data = {
                "subset_s": list(sc.subset_s), "alpha_mass": sc.alpha_mass, "zeta": sc.zeta,
                "s_prime": list(sc.s_prime), "relation_audit": [[list(r), d] for r, d in sc.relation_audit],
                "witness_time": sc.witness_time,
            }
            flags = () if sc.exact else ("bounded-evidence",)
            return done(Certificate("kronecker_subset", NOT_SEDENTARY, data), flags)
    return _numeric_verdict(S, u, prof, bip, scan(), opts, half_audit)


def _numeric_verdict(S, u, prof, bip, sc: ScanResult, opts, half_audit) -> Verdict:
    base = {"numeric_min": sc.global_min, "horizon": sc.horizon}
    if bip:
        root = _first_real_root(S, u, sc)
        if root is not None:
            cert = Certificate("numeric_witness", NOT_SEDENTARY, {"witness_time": root, "witness_kind": "real_sign"})
            return _verdict(u, cert, **base)
    if sc.global_min <= 1e-9:
        cert = Certificate("numeric_witness", NOT_SEDENTARY, {"witness_time": sc.argmin, "witness_kind": "zero"})
        return _verdict(u, cert, **base)
    if sc.periodic and sc.global_min >= 1e-6:
        cert = Certificate("periodic_minimum", SEDENTARY,
                           {"bound": sc.global_min, "period": sc.horizon, "argmin": sc.argmin})
        return _verdict(u, cert, **base)
    data = {"argmin": sc.argmin}
    if half_audit:
        data["half_case"] = half_audit
    flags = ("half-case-unresolved",) if half_audit else ()
    return Verdict(u, INCONCLUSIVE, Certificate("numeric_scan", INCONCLUSIVE, data), flags=flags, **base)


def classify_graph(
    G: WeightedGraph, opts: ClassifyOptions | None = None, S: SpectralDecomposition | None = None
) -> list[Verdict]:
    S = S if S is not None else eigendecompose(G)
    return [classify_vertex(G, S, u, opts) for u in range(G.n)]


# verdict transfer


def cartesian_classify(vx: Verdict, vy: Verdict) -> Verdict:
    """Verdict for ``(x, y)`` in a Cartesian product from the factor verdicts.

    ``U(t)`` of a Cartesian product is the tensor product of the factors', so
    magnitudes (and hence lower bounds) multiply.
    """
    data = {"factors": [vx.to_dict(), vy.to_dict()]}
    if vx.status == SEDENTARY and vy.status == SEDENTARY:
        b = vx.lower_bound * vy.lower_bound
        return Verdict(None, SEDENTARY, Certificate("cartesian_combine", SEDENTARY, {**data, "bound": b}), lower_bound=b)
    if NOT_SEDENTARY in (vx.status, vy.status):
        return Verdict(None, NOT_SEDENTARY, Certificate("cartesian_combine", NOT_SEDENTARY, data))
    return Verdict(None, INCONCLUSIVE, Certificate("cartesian_combine", INCONCLUSIVE, data))


def double_classify(
    G: WeightedGraph,
    S: SpectralDecomposition,
    u: int,
    verdict_u: Verdict,
    opts: ClassifyOptions | None = None,
) -> Verdict:
    """Verdict shared by both copies ``u`` and ``n + u`` of ``u`` in the bipartite double."""
    if two_coloring(G) is not None:
        raise BipartiteInput("the bipartite double of a bipartite graph is disconnected")
    opts = opts or ClassifyOptions()
    prof = support(S, u)
    copies = [u, G.n + u]
    E0 = _zero_mass(S, prof)
    if E0 is None:
        cert = Certificate("double_transfer", NOT_SEDENTARY, {"copies": copies, "route": "zero_free"})
        return Verdict(u, NOT_SEDENTARY, cert)
    if E0 > 0.5 + opts.half_tol:
        b = 2 * E0 - 1
        cert = Certificate("double_transfer", SEDENTARY, {"copies": copies, "route": "heavy", "bound": b})
        return Verdict(u, SEDENTARY, cert, lower_bound=b)
    if abs(E0 - 0.5) <= opts.half_tol:
        data = {"copies": copies, "route": "half", "source": verdict_u.to_dict()}
        if verdict_u.status == SEDENTARY:
            cd = verdict_u.certificate.data
            rel, idx = cd.get("relation"), cd.get("relation_indices")
            if rel is not None and idx is not None:
                # each nonzero eigenvalue keeps at least half its mass in the double
                b = 1.0 / sum(l * l / prof.diagonal_of(k) for l, k in zip(rel, idx) if l)
                cert = Certificate("double_transfer", SEDENTARY, {**data, "bound": b})
                return Verdict(u, SEDENTARY, cert, lower_bound=b)
            return _direct_double(G, u, opts, ("half-case-direct",))
        cert = Certificate("double_transfer", verdict_u.status, data)
        return Verdict(u, verdict_u.status, cert, witness_time=verdict_u.witness_time)
    return _direct_double(G, u, opts, ("direct",))


def _direct_double(G: WeightedGraph, u: int, opts: ClassifyOptions, flags) -> Verdict:
    D = bipartite_double(G)
    v = classify_vertex(D, eigendecompose(D), u, opts)
    return replace(v, flags=v.flags + tuple(flags))
