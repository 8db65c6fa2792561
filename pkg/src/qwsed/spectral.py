"""Spectral decomposition of a weighted adjacency matrix and the walk it drives.

The transition matrix is ``U(t) = exp(itA) = sum_k exp(i*lam_k*t) E_k`` where
``E_k`` is the orthogonal projector onto the ``lam_k`` eigenspace. Everything
here is assembled from the projectors, never from a series expansion.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .arith import Surd, fraction_gcd, recognize_surd
from .errors import (
    BadParams,
    ConvergenceFailure,
    IndexOutOfRange,
    SupportAmbiguityWarning,
    UnrecognizedEigenvalues,
)
from .graph import WeightedGraph

SUPPORT_TOL = 1e-8
AMBIGUOUS_FLOOR = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray  # distinct, descending
    multiplicities: tuple[int, ...]
    projectors: np.ndarray  # shape (k, n, n)
    cluster_tol: float
    _surds: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.projectors.shape[1]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def index_of(self, value: float, tol: float = 1e-6) -> int | None:
        hits = np.flatnonzero(np.abs(self.eigenvalues - value) <= tol)
        return int(hits[0]) if len(hits) else None

    def diagonals(self, u: int) -> np.ndarray:
        """``(E_k)_{uu}`` for every eigenvalue index ``k``."""
        return self.projectors[:, u, u].copy()

    def surd(self, k: int, tol: float = 1e-9) -> Surd | None:
        """Exact form of eigenvalue ``k`` if it can be recognized, cached per tolerance."""
        key = (k, tol)
        if key not in self._surds:
            self._surds[key] = recognize_surd(float(self.eigenvalues[k]), tol)
        return self._surds[key]

    def transition(self, t: float) -> np.ndarray:
        phases = np.exp(1j * self.eigenvalues * t)
        return np.tensordot(phases, self.projectors, axes=1)


def eigendecompose(G: WeightedGraph, cluster_tol: float = 1e-8) -> SpectralDecomposition:
    if G.n < 1:
        raise BadParams("graph must have at least one vertex")
    try:
        w, V = np.linalg.eigh(G.adjacency)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigensolver did not converge: {exc}") from None
    w, V = w[::-1], V[:, ::-1]
    scale = max(1.0, float(np.abs(w).max()))
    thresh = cluster_tol * scale
    groups: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[i - 1] - w[i] < thresh:
            groups[-1].append(i)
        else:
            groups.append([i])
    values, mults, projs = [], [], []
    for g in groups:
        lam = float(np.mean(w[g]))
        if abs(lam) <= thresh:
            lam = 0.0
        Vc = V[:, g]
        P = Vc @ Vc.T
        projs.append((P + P.T) / 2)
        values.append(lam)
        mults.append(len(g))
    proj = np.array(projs)
    proj.setflags(write=False)
    vals = np.array(values)
    vals.setflags(write=False)
    return SpectralDecomposition(vals, tuple(mults), proj, cluster_tol)


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    support: tuple[int, ...]
    diagonals: tuple[float, ...]
    ambiguous: tuple[int, ...] = ()

    def diagonal_of(self, k: int) -> float:
        return self.diagonals[self.support.index(k)]


def support(S: SpectralDecomposition, u: int, support_tol: float = SUPPORT_TOL) -> VertexProfile:
    if not 0 <= u < S.n:
        raise IndexOutOfRange(f"vertex {u} out of range for n={S.n}")
    norms = np.linalg.norm(S.projectors[:, :, u], axis=1)
    idx = tuple(int(k) for k in np.flatnonzero(norms > support_tol))
    grey = tuple(int(k) for k in np.flatnonzero((norms >= AMBIGUOUS_FLOOR) & (norms <= support_tol)))
    if grey:
        warnings.warn(
            f"vertex {u}: projector column norms {norms[list(grey)]} are near the support threshold",
            SupportAmbiguityWarning,
            stacklevel=2,
        )
    diags = tuple(float(S.projectors[k, u, u]) for k in idx)
    return VertexProfile(u, idx, diags, grey)


def _terms(S: SpectralDecomposition, u: int) -> tuple[np.ndarray, np.ndarray]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SupportAmbiguityWarning)
        prof = support(S, u)
    return S.eigenvalues[list(prof.support)], np.array(prof.diagonals)


def walk_diagonal(S: SpectralDecomposition, u: int, t):
    """``U(t)_{uu}``; ``t`` may be a scalar or an array."""
    lam, d = _terms(S, u)
    tt = np.asarray(t, dtype=float)
    out = np.exp(1j * np.multiply.outer(tt, lam)) @ d
    return complex(out) if tt.ndim == 0 else out


def cospectral(S: SpectralDecomposition, u: int, v: int) -> bool:
    for x in (u, v):
        if not 0 <= x < S.n:
            raise IndexOutOfRange(f"vertex {x} out of range for n={S.n}")
    return bool(np.allclose(S.diagonals(u), S.diagonals(v), rtol=0, atol=1e-9))


# periodicity


@dataclass(frozen=True)
class PeriodicityReport:
    periodic: bool
    period: float | None
    reason: str  # ratio-condition-integer | ratio-condition-sqrt | ratio-condition-numeric | two-eigenvalues | fails
    verified: bool | None = None
    half_period_passes: bool | None = None


def _finish(S, u, period: float, reason: str) -> PeriodicityReport:
    mag = abs(walk_diagonal(S, u, period))
    half = abs(walk_diagonal(S, u, period / 2))
    return PeriodicityReport(True, period, reason, abs(mag - 1) <= 1e-8, abs(half - 1) <= 1e-8)


def periodicity(S: SpectralDecomposition, u: int, recognize_tol: float = 1e-9) -> PeriodicityReport:
    """Decide the ratio condition on the eigenvalue support of ``u``.

    With recognized values the decision is exact: differences must all be
    rational multiples of one ``sqrt(delta)``; the period is ``2*pi/(g*sqrt(delta))``
    for ``g`` the gcd of those rational multiples.
    """
    prof = support(S, u)
    idx = list(prof.support)
    if len(idx) == 1:
        return PeriodicityReport(True, None, "single-eigenvalue", True, True)
    if len(idx) == 2:
        gap = abs(S.eigenvalues[idx[0]] - S.eigenvalues[idx[1]])
        return _finish(S, u, 2 * math.pi / gap, "two-eigenvalues")
    surds = [S.surd(k, recognize_tol) for k in idx]
    if all(s is not None for s in surds):
        diffs = [s - surds[0] for s in surds[1:]]
        dirs = [d.direction() for d in diffs]
        deltas = {d[0] for d in dirs if d is not None}
        if any(d is None for d in dirs) or len(deltas) != 1:
            return PeriodicityReport(False, None, "fails")
        (delta,) = deltas
        g = fraction_gcd(c for _, c in dirs)
        reason = "ratio-condition-integer" if delta == 1 else "ratio-condition-sqrt"
        return _finish(S, u, 2 * math.pi / (float(g) * math.sqrt(delta)), reason)
    # some value escaped recognition; fall back to ratios of differences
    lam = S.eigenvalues[idx]
    diffs = lam[1:] - lam[0]
    ratios = diffs / diffs[0]
    fracs = []
    for r in ratios:
        surd = recognize_surd(float(r), recognize_tol)
        if surd is None:
            raise UnrecognizedEigenvalues(
                f"vertex {u}: support ratio {float(r)!r} is neither rational nor a recognized surd"
            )
        if not surd.is_rational:
            return PeriodicityReport(False, None, "fails")
        fracs.append(surd.coefficient(1))
    g = fraction_gcd(fracs)
    return _finish(S, u, 2 * math.pi / (float(g) * abs(diffs[0])), "ratio-condition-numeric")


# closed forms for paths and cycles


def path_diagonal_oracle(n: int, u: int, t):
    """``U(t)_{uu}`` on the unweighted path with vertices labelled ``1..n``."""
    if not 1 <= u <= n:
        raise IndexOutOfRange(f"path vertex {u} outside 1..{n}")
    j = np.arange(1, n + 1)
    theta = j * math.pi / (n + 1)
    w = 2 / (n + 1) * np.sin(u * theta) ** 2
    tt = np.asarray(t, dtype=float)
    out = np.exp(2j * np.multiply.outer(tt, np.cos(theta))) @ w
    return complex(out) if tt.ndim == 0 else out


def cycle_diagonal_oracle(n: int, t):
    """``U(t)_{uu}`` on the unweighted cycle ``C_n`` (the same for every vertex)."""
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    lam = 2 * np.cos(2 * math.pi * np.arange(n) / n)
    tt = np.asarray(t, dtype=float)
    out = np.exp(1j * np.multiply.outer(tt, lam)).sum(axis=-1) / n
    return complex(out) if tt.ndim == 0 else out


def distinct_count(S: SpectralDecomposition) -> int:
    return len(S.eigenvalues)


def exact_values(S: SpectralDecomposition, idx, tol: float = 1e-9) -> list[Surd] | None:
    out = [S.surd(k, tol) for k in idx]
    return None if any(s is None for s in out) else out

