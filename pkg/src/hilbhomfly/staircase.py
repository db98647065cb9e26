"""Monomial ideals of ``C[[t^k, t^n]]`` as staircases, and their generating series.

With ``gcd(k, n) = 1`` every monomial ``t^(alpha*k + beta*n)`` has a unique
index ``(alpha, beta)`` with ``0 <= beta < k``.  A monomial ideal is cut out by
row lengths ``phi_{k-1} <= ... <= phi_0 <= phi_{k-1} + n``: row ``beta`` of the
ideal starts at ``alpha = phi_beta``.  Colength is ``sum(phi)``; the number of
minimal generators is the number of strict inequalities in that chain.

Profiles are stored ascending, ``phi = (phi_{k-1}, ..., phi_0)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import NotCoprime
from .poly import LaurentPoly, TruncSeries, expand_series

__all__ = [
    "Staircase",
    "enumerate_staircases",
    "histogram",
    "series_direct",
    "series_residue",
]


def _check(k: int, n: int):
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if gcd(k, n) != 1:
        raise NotCoprime(f"gcd({k}, {n}) = {gcd(k, n)}")


@dataclass(frozen=True)
class Staircase:
    k: int
    n: int
    phi: tuple[int, ...]

    def __post_init__(self):
        p = self.phi
        if len(p) != self.k:
            raise ValueError(f"profile needs {self.k} entries, got {len(p)}")
        if p and p[0] < 0:
            raise ValueError("profile entries must be nonnegative")
        if any(x > y for x, y in zip(p, p[1:])) or (p and p[-1] > p[0] + self.n):
            raise ValueError(f"{p} is not a staircase for ({self.k}, {self.n})")

    @property
    def length(self) -> int:
        return sum(self.phi)

    @property
    def generators(self) -> int:
        p = self.phi
        return sum(x < y for x, y in zip(p, p[1:])) + (p[-1] < p[0] + self.n)

    def stats(self) -> tuple[int, int]:
        return self.length, self.generators

    def exponents(self) -> list[int]:
        """Minimal monomial generators of the ideal as exponents of ``t``."""
        k, n, p = self.k, self.n, self.phi
        rows = {k - 1 - idx: v for idx, v in enumerate(p)}  # beta -> phi_beta
        out = []
        for beta in range(k):
            below = rows[beta - 1] if beta else rows[k - 1] + n
            if rows[beta] < below:
                out.append(rows[beta] * k + beta * n)
        return sorted(out)


def enumerate_staircases(k: int, n: int, lmax: int) -> Iterator[Staircase]:
    """Every staircase with colength at most ``lmax``, in lexicographic order of ``phi``."""
    _check(k, n)

    def rec(prefix: list[int], total: int):
        if len(prefix) == k:
            yield Staircase(k, n, tuple(prefix))
            return
        left = k - len(prefix)
        lo = prefix[-1] if prefix else 0
        hi = prefix[0] + n if prefix else lmax
        v = lo
        while v <= hi and total + v * left <= lmax:
            prefix.append(v)
            yield from rec(prefix, total + v)
            prefix.pop()
            v += 1

    yield from rec([], 0)


def histogram(k: int, n: int, lmax: int) -> Counter:
    """Counts of ``(l, m)`` over staircases with ``l <= lmax``.

    Dynamic programme over the profile with the smallest entry fixed; agrees
    with tallying :func:`enumerate_staircases` but never builds profiles.
    """
    _check(k, n)
    out: Counter = Counter()
    v0 = 0
    while v0 * k <= lmax:
        # (last value, running sum) -> Counter of strict-step counts
        states: dict[tuple[int, int], Counter] = {(v0, v0): Counter({0: 1})}
        for pos in range(1, k):
            left = k - pos - 1
            nxt: dict[tuple[int, int], Counter] = defaultdict(Counter)
            for (v, s), ms in states.items():
                for w in range(v, v0 + n + 1):
                    if s + w + w * left > lmax:
                        break
                    bump = 1 if w > v else 0
                    tgt = nxt[(w, s + w)]
                    for m, c in ms.items():
                        tgt[m + bump] += c
            states = nxt
        for (v, s), ms in states.items():
            bump = 1 if v < v0 + n else 0
            for m, c in ms.items():
                out[(s, m + bump)] += c
        v0 += 1
    return out


def _weights(max_m: int) -> list[LaurentPoly]:
    one_minus = LaurentPoly({(0, 0): 1, (2, 0): -1})
    out = [LaurentPoly.const(1)]
    for _ in range(max_m):
        out.append(out[-1] * one_minus)
    return out


def series_direct(k: int, n: int, order: int) -> TruncSeries:
    """``sum q^(2l) (1-a^2)^m`` over monomial ideals, modulo ``q**order``."""
    _check(k, n)
    hist = histogram(k, n, (order - 1) // 2)
    w = _weights(k)
    terms: dict[tuple[int, int], int] = defaultdict(int)
    for (l, m), c in hist.items():
        for (i, _), b in w[m].items():
            terms[(i, 2 * l)] += c * b
    return TruncSeries(LaurentPoly(terms), order)


def series_residue(k: int, n: int, order: int) -> TruncSeries:
    """The same series from the partial-fraction evaluation of the column residue.

    Columns shorter than ``k`` contribute the coefficient of ``xi**n`` in
    ``prod_i (1 - a^2 xi q^(2i)) / (1 - xi q^(2i))``; summing residues at
    ``xi = q^(-2j)`` gives::

        1/(1-q^2k) * sum_j q^(2nj) * prod_{i != j} 1/(1 - q^(2(i-j)))
                                 * prod_i (1 - a^2 q^(2(i-j)))

    Factors with ``i < j`` are rewritten ``1/(1-q^-2m) = -q^2m/(1-q^2m)`` so
    each term expands as a power series.
    """
    _check(k, n)
    total = TruncSeries(LaurentPoly(), order)
    for j in range(k):
        num = LaurentPoly.monomial(1, 0, 2 * n * j)
        denoms = [2 * k]
        for i in range(k):
            num = num * LaurentPoly({(0, 0): 1, (2, 2 * (i - j)): -1})
            if i < j:
                m = 2 * (j - i)
                num = num * LaurentPoly.monomial(-1, 0, m)
                denoms.append(m)
            elif i > j:
                denoms.append(2 * (i - j))
        total = total + expand_series(num, denoms, order)
    return total
