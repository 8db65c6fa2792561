"""Arithmetic recognition of eigenvalues and integer relations among them.

Two routes are kept apart on purpose:

* ``integer_relation`` is a bounded exhaustive search on floating point
  values. Finding a relation is evidence; finding none is only "none up to
  the bound".
* ``relation_lattice`` works on recognized values (``Surd``) and returns an
  exact basis of every integer relation, using the linear independence of
  square roots of distinct square-free integers over Q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import TooManyValues, ZeroInput

MAX_DELTA = 10_000
MAX_PQ = 64


def _squarefree_table(limit: int) -> np.ndarray:
    ok = np.ones(limit + 1, dtype=bool)
    ok[0] = False
    for k in range(2, int(math.isqrt(limit)) + 1):
        ok[k * k :: k * k] = False
    return ok


_SQUAREFREE = _squarefree_table(MAX_DELTA)


def is_squarefree(d: int) -> bool:
    if d <= MAX_DELTA:
        return bool(_SQUAREFREE[d]) if d >= 0 else False
    return all(d % (k * k) for k in range(2, math.isqrt(d) + 1))


def squarefree_split(k: int) -> tuple[int, int]:
    """Write a positive integer as ``b*b*d`` with ``d`` square-free; returns ``(b, d)``."""
    b, d = 1, k
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            b *= f
        f += 1
    return b, d


# eigenvalue classes


@dataclass(frozen=True)
class Integer:
    k: int

    @property
    def value(self) -> float:
        return float(self.k)

    def surd(self) -> Surd:
        return Surd.rational(self.k)


@dataclass(frozen=True)
class RatioSqrt:
    p: int
    q: int
    delta: int

    @property
    def value(self) -> float:
        return self.p / self.q * math.sqrt(self.delta)

    def surd(self) -> Surd:
        return Surd(((self.delta, Fraction(self.p, self.q)),))


@dataclass(frozen=True)
class Unrecognized:
    value: float

    def surd(self) -> None:
        return None


EigenvalueClass = Integer | RatioSqrt | Unrecognized


def sqrt_class(k: int) -> Integer | RatioSqrt:
    """Exact class of the square root of a nonnegative integer."""
    if k == 0:
        return Integer(0)
    b, d = squarefree_split(k)
    return Integer(b) if d == 1 else RatioSqrt(b, 1, d)


def recognize(value: float, tol: float = 1e-7) -> EigenvalueClass:
    """Snap ``value`` to an integer or to ``(p/q)*sqrt(delta)``.

    Candidates are scanned with ``q`` then ``p`` ascending (both at most 64),
    ``delta`` square-free and at most 10**4.
    """
    k = round(value)
    if abs(value - k) <= tol:
        return Integer(int(k))
    sign = 1 if value > 0 else -1
    a = abs(value)
    q = np.arange(1, MAX_PQ + 1)[:, None]
    p = np.arange(1, MAX_PQ + 1)[None, :]
    x = (q * a / p) ** 2
    d = np.rint(x).astype(np.int64)
    ok = (d >= 1) & (d <= MAX_DELTA)
    d_safe = np.where(ok, d, 1)
    ok &= _SQUAREFREE[d_safe]
    ok &= np.abs(p / q * np.sqrt(d_safe) - a) <= tol
    ok &= np.gcd(p, q) == 1
    hits = np.argwhere(ok)
    if len(hits) == 0:
        return Unrecognized(float(value))
    qi, pi = hits[0]
    return RatioSqrt(sign * int(pi + 1), int(qi + 1), int(d_safe[qi, pi]))


def two_adic(k: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if k == 0:
        raise ZeroInput("nu_2(0) is undefined")
    k = abs(int(k))
    return (k & -k).bit_length() - 1


def two_adic_fraction(x: Fraction) -> int:
    if x == 0:
        raise ZeroInput("nu_2(0) is undefined")
    return two_adic(x.numerator) - two_adic(x.denominator)


# quadratic surds


@dataclass(frozen=True)
class Surd:
    """Finite sum of rational multiples of square roots of square-free integers."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, pairs: Iterable[tuple[int, Fraction]]) -> Surd:
        acc: dict[int, Fraction] = {}
        for d, c in pairs:
            acc[d] = acc.get(d, Fraction(0)) + Fraction(c)
        return cls(tuple(sorted((d, c) for d, c in acc.items() if c != 0)))

    @classmethod
    def rational(cls, x: int | Fraction) -> Surd:
        return cls.make([(1, Fraction(x))])

    def __add__(self, other: Surd) -> Surd:
        return Surd.make(self.terms + other.terms)

    def __neg__(self) -> Surd:
        return Surd(tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other: Surd) -> Surd:
        return self + (-other)

    def __float__(self) -> float:
        return float(sum(float(c) * math.sqrt(d) for d, c in self.terms))

    def coefficient(self, d: int) -> Fraction:
        return dict(self.terms).get(d, Fraction(0))

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_rational(self) -> bool:
        return self.radicands in ((), (1,))

    def direction(self) -> tuple[int, Fraction] | None:
        """``(delta, c)`` when the surd equals ``c*sqrt(delta)``, else None."""
        if len(self.terms) == 1:
            return self.terms[0]
        return None


def _quadratic(value: float, tol: float) -> Surd | None:
    # (a + b*sqrt(delta)) / q with small q, integer a and b
    qs = np.arange(1, 5)
    bs = np.arange(1, 33)
    bound = int(math.ceil(abs(value) + 2))
    for q in qs:
        a = np.arange(-2 * q * bound, 2 * q * bound + 1)
        r = q * value - a
        rr = r[:, None] / bs[None, :]
        d = np.rint(rr**2).astype(np.int64)
        ok = (d >= 2) & (d <= MAX_DELTA)
        d_safe = np.where(ok, d, 1)
        ok &= _SQUAREFREE[d_safe]
        ok &= np.abs(np.abs(rr) * bs - bs * np.sqrt(d_safe)) <= tol * q
        order = np.argsort(np.abs(a), kind="stable")
        for ai in order:
            hit = np.flatnonzero(ok[ai])
            if len(hit):
                bi = hit[0]
                b = int(bs[bi]) * (1 if r[ai] > 0 else -1)
                dd = int(d_safe[ai, bi])
                return Surd.make([(1, Fraction(int(a[ai]), int(q))), (dd, Fraction(b, int(q)))])
    return None


def recognize_surd(value: float, tol: float = 1e-9) -> Surd | None:
    """Recognize ``value`` as an integer, ``(p/q)sqrt(d)`` or ``(a+b sqrt(d))/q``."""
    tol = tol * max(1.0, abs(value))
    cls = recognize(value, tol)
    if not isinstance(cls, Unrecognized):
        return cls.surd()
    return _quadratic(value, tol)


# exact relation lattices


def integer_kernel(rows: Sequence[Sequence[int]], m: int) -> list[tuple[int, ...]]:
    """Basis of ``{x in Z^m : R x = 0}`` by unimodular column reduction."""
    basis = [[int(i == j) for j in range(m)] for i in range(m)]
    for row in rows:
        c = [sum(r * b for r, b in zip(row, vec)) for vec in basis]
        while sum(1 for x in c if x) > 1:
            i = min((j for j in range(len(c)) if c[j]), key=lambda j: abs(c[j]))
            for j in range(len(c)):
                if j != i and c[j]:
                    f = c[j] // c[i]
                    c[j] -= f * c[i]
                    basis[j] = [x - f * y for x, y in zip(basis[j], basis[i])]
        basis = [vec for vec, x in zip(basis, c) if x == 0]
    return [tuple(v) for v in basis]


def relation_lattice(values: Sequence[Surd]) -> list[tuple[int, ...]]:
    """Exact basis of all integer tuples ``l`` with ``sum(l_j * values_j) == 0``."""
    radicands = sorted({d for v in values for d in v.radicands})
    rows = []
    for d in radicands:
        coeffs = [v.coefficient(d) for v in values]
        scale = math.lcm(*(c.denominator for c in coeffs))
        rows.append([int(c * scale) for c in coeffs])
    return integer_kernel(rows, len(values))


def fraction_gcd(xs: Iterable[Fraction]) -> Fraction:
    xs = [abs(Fraction(x)) for x in xs if x != 0]
    if not xs:
        return Fraction(0)
    num = math.gcd(*(x.numerator for x in xs))
    den = math.lcm(*(x.denominator for x in xs))
    return Fraction(num, den)


# bounded search


def _box(h: int, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rng = np.arange(-h, h + 1, dtype=np.int64)
    return np.array(list(itertools.product(rng, repeat=k)), dtype=np.int64).reshape(-1, k)


def _matches(values: np.ndarray, h: int, eps: float, odd: bool | None, count_only: bool):
    k = len(values)
    kl = k // 2
    left, right = _box(h, kl), _box(h, k - kl)
    sl, sr = left @ values[:kl], right @ values[kl:]
    pl, pr = left.sum(axis=1) % 2, right.sum(axis=1) % 2
    total = 0
    found = []
    for parity in (0, 1):
        lmask = pl == parity
        if odd is None:
            rmask = np.ones(len(right), dtype=bool) if parity == 0 else None
            if rmask is None:
                continue
            lmask = np.ones(len(left), dtype=bool)
        else:
            rmask = pr == ((1 - parity) if odd else parity)
        lidx = np.flatnonzero(lmask)
        order = lidx[np.argsort(sl[lidx], kind="stable")]
        ssorted = sl[order]
        ridx = np.flatnonzero(rmask)
        lo = np.searchsorted(ssorted, -sr[ridx] - eps, side="left")
        hi = np.searchsorted(ssorted, -sr[ridx] + eps, side="right")
        cnt = hi - lo
        total += int(cnt.sum())
        if not count_only:
            for r, a, b in zip(ridx[cnt > 0], lo[cnt > 0], hi[cnt > 0]):
                for li in order[a:b]:
                    found.append(tuple(int(x) for x in left[li]) + tuple(int(x) for x in right[r]))
    return total, found


def _canonical(rel: tuple[int, ...]) -> tuple[int, ...]:
    for x in rel:
        if x:
            return rel if x > 0 else tuple(-y for y in rel)
    return rel


def find_relation(
    values: Sequence[float], coeff_bound: int, tol: float, odd_sum: bool | None = None
) -> tuple[int, ...] | None:
    """Smallest-height integer relation, ties broken lexicographically.

    ``odd_sum=True`` restricts to relations whose coefficient sum is odd.
    Sign is normalised so the first nonzero coefficient is positive.
    """
    v = np.asarray(values, dtype=float)
    if not 1 <= len(v) <= 6:
        raise TooManyValues(f"relation search takes 1..6 values, got {len(v)}")
    eps = tol * float(np.abs(v).sum())
    zero_hit = 0 if odd_sum else 1  # the all-zero tuple always matches when parity allows
    total, _ = _matches(v, coeff_bound, eps, odd_sum, count_only=True)
    if total <= zero_hit:
        return None
    for h in range(1, coeff_bound + 1):
        _, found = _matches(v, h, eps, odd_sum, count_only=False)
        found = {_canonical(f) for f in found if any(f)}
        if found:
            return min(found)
    return None


def integer_relation(values: Sequence[float], coeff_bound: int, tol: float) -> tuple[int, ...] | None:
    """First nonzero integer tuple with ``|sum l_j v_j| <= tol * sum |v_j|``.

    Tuples are ordered by height ``max |l_j|`` and then lexicographically,
    with the first nonzero entry positive.
    """
    return find_relation(values, coeff_bound, tol)
