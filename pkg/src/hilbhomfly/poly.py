"""Exact Laurent polynomials in two variables and truncated q-series.

Three value types live here:

* :class:`LaurentPoly` -- integer Laurent polynomials in ``a`` and ``q``;
* :class:`ZPoly` -- the same ring written in ``a`` and ``z = q - 1/q``;
* :class:`TruncSeries` -- power series in ``q`` with coefficients in
  ``Z[a, 1/a]``, known modulo ``q**order``.

Coefficients are Python ints throughout.  Values are immutable once built.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .errors import NotDivisible, NotRepresentable, NotStabilized

__all__ = [
    "LaurentPoly",
    "ZPoly",
    "TruncSeries",
    "A",
    "Q",
    "Z",
    "exact_div",
    "substitute",
    "to_z",
    "from_z",
    "expand_series",
    "lift_series",
    "parse_poly",
    "DEFAULT_MARGIN",
]

DEFAULT_MARGIN = 20

Exponent = tuple[int, int]


class _Laurent2:
    """Integer Laurent polynomial in two named variables, stored sparsely."""

    VARS = ("x", "y")
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] | None = None):
        d: dict[Exponent, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                key = (int(i), int(j))
                d[key] = d.get(key, 0) + c
        self._terms = {k: c for k, c in d.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]):
        # trusted constructor: terms already free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int):
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: int = 1, i: int = 0, j: int = 0):
        return cls._raw({(i, j): c} if c else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key: Exponent) -> int:
        return self._terms.get(key, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def degrees(self, var: int) -> tuple[int, int]:
        """(min, max) exponent of variable ``var`` (0 or 1)."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        es = [k[var] for k in self._terms]
        return min(es), max(es)

    def row(self, i: int) -> dict[int, int]:
        """Coefficients of ``x**i`` as a map from y-exponent."""
        return {j: c for (ii, j), c in self._terms.items() if ii == i}

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        # descending first exponent, then descending second
        return sorted(self._terms.items(), key=lambda t: (-t[0][0], -t[0][1]))

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).const(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return type(self)._raw(d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d: dict[Exponent, int] = defaultdict(int)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                d[(i1 + i2, j1 + j2)] += c1 * c2
        return type(self)._raw({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) == 1:
                ((i, j), c), = self._terms.items()
                if c in (1, -1):
                    return type(self)._raw({(i * e, j * e): c ** (-e)})
            raise NotDivisible("only unit monomials have negative powers")
        result = type(self).const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, di: int = 0, dj: int = 0):
        """Multiply by the monomial ``x**di * y**dj``."""
        return type(self)._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- text form --------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"{type(self).__name__}({render(self)!r})"


class LaurentPoly(_Laurent2):
    """Integer Laurent polynomial in ``a`` and ``q``; keys are ``(a_exp, q_exp)``."""

    VARS = ("a", "q")
    __slots__ = ()


class ZPoly(_Laurent2):
    """Integer Laurent polynomial in ``a`` and ``z = q - 1/q``; keys are ``(a_exp, z_exp)``."""

    VARS = ("a", "z")
    __slots__ = ()


A = LaurentPoly.monomial(1, 1, 0)
Q = LaurentPoly.monomial(1, 0, 1)
Z = ZPoly.monomial(1, 0, 1)


# -- rendering / parsing ----------------------------------------------------

def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def render(p: _Laurent2) -> str:
    """Canonical text: descending a-exponent, then descending second exponent."""
    if not p:
        return "0"
    x, y = p.VARS
    out = []
    for (i, j), c in p.sorted_terms():
        factors = [_power(x, i)] if i else []
        if j:
            factors.append(_power(y, j))
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:\*?\s*[a-z]\s*(?:\^\s*-?\d+)?\s*)*)")
_FACTOR = re.compile(r"\*?\s*([a-z])\s*(?:\^\s*(-?\d+))?\s*")


def parse_poly(text: str, cls: type = LaurentPoly):
    """Parse the grammar produced by :func:`render` (sums of ``c*x^i*y^j``)."""
    x, y = cls.VARS
    text = text.strip()
    if text == "0":
        return cls()
    terms: dict[Exponent, int] = defaultdict(int)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, digits, mono = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (digits is None and not mono.strip()):
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator before {text[pos:]!r}")
        first = False
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        if digits and mono.strip() and not mono.lstrip().startswith("*"):
            raise ValueError(f"expected '*' after coefficient in {m.group(0)!r}")
        if not digits:
            mono = mono.lstrip().lstrip("*")
        i = j = 0
        for f in _FACTOR.finditer(mono):
            name, e = f.group(1), int(f.group(2)) if f.group(2) else 1
            if name == x:
                i += e
            elif name == y:
                j += e
            else:
                raise ValueError(f"unknown variable {name!r}")
        terms[(i, j)] += c
        pos = m.end()
    return cls(terms)


# -- exact division ---------------------------------------------------------

def exact_div(x: _Laurent2, y: _Laurent2) -> _Laurent2:
    """Return ``z`` with ``z * y == x``; raise :class:`NotDivisible` otherwise.

    Long division on lexicographically leading terms.  The quotient is confined
    to the box given by the degree bounds in each variable separately, which
    guarantees termination when no quotient exists.
    """
    if not y:
        raise ZeroDivisionError("division by the zero polynomial")
    cls = type(x)
    if not x:
        return cls()
    lead_y = max(y._terms)
    cy = y._terms[lead_y]
    (xa0, xa1), (xb0, xb1) = x.degrees(0), x.degrees(1)
    (ya0, ya1), (yb0, yb1) = y.degrees(0), y.degrees(1)
    lo0, hi0 = xa0 - ya0, xa1 - ya1
    lo1, hi1 = xb0 - yb0, xb1 - yb1
    if lo0 > hi0 or lo1 > hi1:
        raise NotDivisible(f"{x} is not divisible by {y}")
    rem = dict(x._terms)
    quot: dict[Exponent, int] = {}
    yterms = list(y._terms.items())
    while rem:
        lead = max(rem)
        e0, e1 = lead[0] - lead_y[0], lead[1] - lead_y[1]
        if not (lo0 <= e0 <= hi0 and lo1 <= e1 <= hi1):
            raise NotDivisible(f"{x} is not divisible by {y}")
        c, r = divmod(rem[lead], cy)
        if r:
            raise NotDivisible(f"{x} is not divisible by {y}")
        quot[(e0, e1)] = c
        for (i, j), d in yterms:
            key = (i + e0, j + e1)
            v = rem.get(key, 0) - c * d
            if v:
                rem[key] = v
            else:
                del rem[key]
    return cls._raw(quot)


# -- substitutions ----------------------------------------------------------

def _rule_key(rule: str) -> str:
    return rule.replace(" ", "").replace(":=", "=").replace("q^-1", "1/q").replace("q^2", "q2")


_RULES = {
    "a=-1": lambda i, j, c: ((0, j), c if i % 2 == 0 else -c),
    "a=q": lambda i, j, c: ((0, i + j), c),
    "a=q2": lambda i, j, c: ((0, 2 * i + j), c),
    "q=-1/q": lambda i, j, c: ((i, -j), c if j % 2 == 0 else -c),
    "q=1": lambda i, j, c: ((i, 0), c),
}


def substitute(x: LaurentPoly, rule: str) -> LaurentPoly:
    """Apply one of ``a:=-1``, ``a:=q``, ``a:=q^2``, ``q:=-1/q``, ``q:=1``, ``a:=0``."""
    key = _rule_key(rule)
    d: dict[Exponent, int] = defaultdict(int)
    if key == "a=0":
        for (i, j), c in x.items():
            if i < 0:
                raise ZeroDivisionError("a:=0 with negative powers of a")
            if i == 0:
                d[(0, j)] += c
    else:
        try:
            f = _RULES[key]
        except KeyError:
            raise ValueError(f"unsupported substitution {rule!r}") from None
        for (i, j), c in x.items():
            k, v = f(i, j, c)
            d[k] += v
    return LaurentPoly._raw({k: c for k, c in d.items() if c})


# -- z basis ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _z_power(d: int) -> tuple[tuple[int, int], ...]:
    # (q-exponent, coefficient) pairs of (q - 1/q)**d
    return tuple((d - 2 * r, comb(d, r) * (-1) ** r) for r in range(d + 1))


def to_z(x: LaurentPoly, denominator: int = 0) -> ZPoly:
    """Rewrite ``x / z**denominator`` in the basis ``a**i * z**j``.

    ``x`` itself must lie in ``Z[a, 1/a][z]``; the top q-degree is peeled off
    one power of ``z`` at a time.  ``denominator=1`` is the form needed for
    two-component links, whose HOMFLY carries a ``1/z``.
    """
    out: dict[Exponent, int] = {}
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for (i, j), c in x.items():
        rows[i][j] = c
    for i, rem in rows.items():
        while rem:
            d = max(rem)
            if d < 0:
                raise NotRepresentable(f"{x} is not a polynomial in z = q - 1/q")
            c = rem[d]
            out[(i, d - denominator)] = c
            for e, b in _z_power(d):
                v = rem.get(e, 0) - c * b
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
    return ZPoly._raw(out)


def from_z(x: ZPoly) -> LaurentPoly:
    """Expand ``z = q - 1/q``; negative powers of ``z`` are not Laurent in ``q``."""
    d: dict[Exponent, int] = defaultdict(int)
    for (i, j), c in x.items():
        if j < 0:
            raise NotRepresentable(f"{x} has negative powers of z")
        for e, b in _z_power(j):
            d[(i, e)] += c * b
    return LaurentPoly._raw({k: c for k, c in d.items() if c})


# -- truncated series -------------------------------------------------------

class TruncSeries:
    """Series in ``q`` with Laurent-in-``a`` coefficients, known modulo ``q**order``."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: LaurentPoly, order: int):
        self.order = order
        if any(j >= order for _, j in poly.keys()):
            poly = LaurentPoly._raw({k: c for k, c in poly.items() if k[1] < order})
        self.poly = poly

    @property
    def min_q(self) -> int:
        return min((j for _, j in self.poly.keys()), default=self.order)

    def coefficient(self, e: int) -> LaurentPoly:
        if e >= self.order:
            raise ValueError(f"q^{e} is beyond the truncation order {self.order}")
        return LaurentPoly._raw({(i, 0): c for (i, j), c in self.poly.items() if j == e})

    def coefficients(self) -> dict[int, LaurentPoly]:
        buckets: dict[int, dict[Exponent, int]] = defaultdict(dict)
        for (i, j), c in self.poly.items():
            buckets[j][(i, 0)] = c
        return {e: LaurentPoly._raw(b) for e, b in sorted(buckets.items())}

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.poly == other.poly

    def __hash__(self):
        return hash((self.order, self.poly))

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return TruncSeries(self.poly + other, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries(TruncSeries(self.poly, n).poly + TruncSeries(other.poly, n).poly, n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.poly * other, self.order)
        if isinstance(other, LaurentPoly):
            if not other:
                return TruncSeries(other, self.order)
            # a factor q^e moves the boundary of known coefficients by e
            n = self.order + other.degrees(1)[0]
            return TruncSeries(self.poly * other, n)
        if isinstance(other, TruncSeries):
            n = min(self.order + other.min_q, other.order + self.min_q)
            a = TruncSeries(self.poly, n - other.min_q).poly
            b = TruncSeries(other.poly, n - self.min_q).poly
            return TruncSeries(a * b, n)
        return NotImplemented

    __rmul__ = __mul__

    def substitute(self, rule: str) -> "TruncSeries":
        """Substitute in the a-coefficients; only rules that keep q-adic order make sense."""
        key = _rule_key(rule)
        if key in ("a=-1", "a=0"):
            return TruncSeries(substitute(self.poly, rule), self.order)
        if key in ("a=q", "a=q2"):
            amin = min((i for i, _ in self.poly.keys()), default=0)
            factor = 1 if key == "a=q" else 2
            return TruncSeries(substitute(self.poly, rule), self.order + min(0, factor * amin))
        raise ValueError(f"substitution {rule!r} is not defined on q-series")

    def first_mismatch(self, other: "TruncSeries") -> int | None:
        """Lowest q-exponent below the common order where the series differ."""
        n = min(self.order, other.order)
        diff = TruncSeries(self.poly, n).poly - TruncSeries(other.poly, n).poly
        if not diff:
            return None
        return min(j for _, j in diff.keys())

    def agrees_with(self, other: "TruncSeries") -> bool:
        return self.first_mismatch(other) is None

    def __repr__(self):
        return f"TruncSeries({render(self.poly)!r} + O(q^{self.order}))"


def expand_series(num: LaurentPoly, denom_exponents: Iterable[int], order: int) -> TruncSeries:
    """Expand ``num / prod(1 - q**m)`` as a series modulo ``q**order``."""
    ms = list(denom_exponents)
    if any(m <= 0 for m in ms):
        raise ValueError("denominator exponents must be positive")
    buckets: dict[int, dict[int, int]] = defaultdict(dict)
    for (i, j), c in num.items():
        if j < order:
            buckets[j][i] = c
    if not buckets:
        return TruncSeries(LaurentPoly(), order)
    lo = min(buckets)
    for m in ms:
        # y = x / (1 - q^m)  <=>  y_e = x_e + y_{e-m}
        for e in range(lo + m, order):
            src = buckets.get(e - m)
            if not src:
                continue
            dst = buckets[e]
            for i, c in src.items():
                v = dst.get(i, 0) + c
                if v:
                    dst[i] = v
                else:
                    del dst[i]
    terms = {(i, e): c for e, row in buckets.items() for i, c in row.items()}
    return TruncSeries(LaurentPoly._raw(terms), order)


def lift_series(s: TruncSeries, deg_bound: int, margin: int = DEFAULT_MARGIN) -> LaurentPoly:
    """Recover the Laurent polynomial a stabilized series represents.

    Every coefficient of q-degree in ``(deg_bound, s.order)`` must vanish, and
    at least ``margin`` such degrees must have been checked.
    """
    if s.order < deg_bound + margin:
        raise NotStabilized(
            f"truncation order {s.order} is below bound {deg_bound} + margin {margin}"
        )
    tail = sorted({j for _, j in s.poly.keys() if j > deg_bound})
    if tail:
        raise NotStabilized(f"nonzero coefficient at q^{tail[0]} above bound {deg_bound}")
    return s.poly
