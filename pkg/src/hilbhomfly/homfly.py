"""HOMFLY polynomials of torus knots and links, q-factorials, Alexander polynomials.

Convention: ``a J(L+) - a^-1 J(L-) = (q - q^-1) J(L0)`` and ``J(unknot) = 1``,
with ``L+`` the positive crossing of the closed positive braid.  In this
convention the right-handed trefoil is ``a^2 q^2 + a^2 q^-2 - a^4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import NotCoprime, ParityError
from .poly import A, LaurentPoly, ZPoly, exact_div, substitute, to_z
from .semigroup import NumSemigroup

__all__ = [
    "t2_skein",
    "jones_torus",
    "qfact",
    "qbinom",
    "newton_identity_holds",
    "AlexanderPoly",
    "alexander_from_semigroup",
    "alexander_from_homfly",
    "conway",
]


def t2_skein(n: int) -> ZPoly:
    """HOMFLY of the (2, n) torus link from ``J_n = -a z J_{n-1} + a^2 J_{n-2}``.

    ``J_0`` is the two-component unlink ``(a - 1/a)/z``; ``J_1`` is the unknot.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    az = ZPoly.monomial(1, 1, 1)
    a2 = ZPoly.monomial(1, 2, 0)
    prev, cur = ZPoly({(1, -1): 1, (-1, -1): -1}), ZPoly.const(1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, -az * cur + a2 * prev
    return cur


@lru_cache(maxsize=None)
def qfact(r: int) -> LaurentPoly:
    """``[r]! = prod_{s=1..r} (1 - q^(2s))``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return LaurentPoly.const(1)
    return qfact(r - 1) * LaurentPoly({(0, 0): 1, (0, 2 * r): -1})


def qbinom(b: int, c: int) -> LaurentPoly:
    """Gaussian binomial ``[b]! / ([c]! [b-c]!)`` in ``q^2``."""
    if not 0 <= c <= b:
        raise ValueError(f"need 0 <= c <= b, got b={b}, c={c}")
    return exact_div(qfact(b), qfact(c) * qfact(b - c))


def newton_identity_holds(s: int) -> bool:
    """Check ``sum_r q^(r(r-1)) binom(s,r) t^r == prod_{r<s} (1 + q^(2r) t)``.

    The formal variable ``t`` is carried in the ``a`` slot.
    """
    lhs = sum(
        (LaurentPoly.monomial(1, r, r * (r - 1)) * qbinom(s, r) for r in range(s + 1)),
        LaurentPoly(),
    )
    rhs = LaurentPoly.const(1)
    for r in range(s):
        rhs = rhs * LaurentPoly({(0, 0): 1, (1, 2 * r): 1})
    return lhs == rhs


def _prod_range(lo: int, hi: int) -> LaurentPoly:
    # prod_{s=lo..hi} (1 - q^(2s))
    out = LaurentPoly.const(1)
    for s in range(lo, hi + 1):
        out = out * LaurentPoly({(0, 0): 1, (0, 2 * s): -1})
    return out


def jones_torus(k: int, n: int) -> LaurentPoly:
    """HOMFLY of the (k, n) torus knot from Jones' closed formula.

    Each ``1/([j]! [k-1-j]!)`` is brought over the common denominator
    ``([k-1]!)^2``; the whole sum is then divided once, exactly, by
    ``(1 - q^2k)(1 - a^2)([k-1]!)^2``.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if gcd(k, n) != 1:
        raise NotCoprime(f"gcd({k}, {n}) = {gcd(k, n)}")
    mu = (k - 1) * (n - 1)
    a2 = A * A
    num = LaurentPoly()
    for j in range(k):
        e = 2 * j * n + (k - 1 - j) * (k - j)
        term = LaurentPoly.monomial(-1 if j % 2 else 1, 0, e)
        for i in range(j + 1 - k, j + 1):
            term = term * (LaurentPoly.monomial(1, 0, 2 * i) - a2)
        term = term * _prod_range(j + 1, k - 1) * _prod_range(k - j, k - 1)
        num = num + term
    num = num * LaurentPoly({(0, 0): 1, (0, 2): -1}) * LaurentPoly.monomial(1, mu, -mu)
    den = LaurentPoly({(0, 0): 1, (0, 2 * k): -1}) * (1 - a2) * qfact(k - 1) ** 2
    return exact_div(num, den)


@dataclass(frozen=True)
class AlexanderPoly:
    """Integer polynomial in ``t``; ``coeffs[i]`` multiplies ``t^i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_normalized(self) -> bool:
        """In ``1 + t Z[t]``."""
        return bool(self.coeffs) and self.coeffs[0] == 1

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) or "0"


def alexander_from_semigroup(gamma: NumSemigroup) -> AlexanderPoly:
    """``(1 - t) sum_{g in Gamma} t^g = 1 - (1 - t) sum_{gaps} t^g``."""
    deg = gamma.conductor
    c = [0] * (deg + 1)
    c[0] = 1
    for g in gamma.gaps:
        c[g] -= 1
        c[g + 1] += 1
    return AlexanderPoly(tuple(c))


def alexander_from_homfly(J: LaurentPoly, mu: int) -> AlexanderPoly:
    """Alexander polynomial of a knot from its HOMFLY.

    ``a := -1`` gives the Conway polynomial; then ``Delta(q^-2) = (-q)^-mu Conway(q)``,
    which by the ``q -> -1/q`` symmetry of Conway is ``Delta(q^2) = q^mu Conway(q)``
    for even ``mu``.  The result is read off in ``t = q^-2``.
    """
    nabla = substitute(J, "a=-1")
    sign = -1 if mu % 2 else 1
    p = nabla * LaurentPoly.monomial(sign, 0, -mu)
    coeffs: dict[int, int] = {}
    for (_, e), c in p.items():
        if e % 2:
            raise ParityError(f"odd power q^{e} in (-q)^-{mu} * Conway; wrong mu or not a knot")
        if e > 0:
            raise ParityError(f"q^{e} lies outside the range fixed by mu = {mu}")
        coeffs[-e // 2] = c
    top = max(coeffs, default=0)
    return AlexanderPoly(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def conway(J: LaurentPoly) -> list[int]:
    """Coefficients ``n_i`` of ``J|_{a=-1} = sum n_i z^i``."""
    zp = to_z(substitute(J, "a=-1"))
    top = max((j for _, j in zp.keys()), default=-1)
    return [zp[(0, j)] for j in range(top + 1)]
