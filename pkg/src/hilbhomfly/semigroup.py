"""Numerical semigroups, their modules, and valuation semigroups of series rings.

A unibranch plane curve germ with normalization ``O -> C[[t]]`` has value
semigroup ``Gamma = {ord_t f : f in O}``.  Shift classes of semigroup ideals
are indexed by Gamma-modules ``Delta`` with ``0 in Delta`` and
``Delta + Gamma <= Delta``; a semigroup ideal is ``i + Delta`` for its minimum
``i`` and colength ``i - #(Delta - Gamma)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable

from .errors import NotCofinite, NotContained, TruncationTooLow

__all__ = [
    "NumSemigroup",
    "GammaModule",
    "SeriesElement",
    "ShiftSet",
    "semigroup",
    "semigroup_from_series",
    "colength",
    "colength_direct",
    "modules",
    "module_shifts",
    "module_table",
]

RECHECK_STEP = 20


@dataclass(frozen=True)
class NumSemigroup:
    """Cofinite additive submonoid of the naturals.

    ``generators`` is the minimal generating set; ``gaps`` the finite complement.
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    conductor: int
    _gapset: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_gapset", frozenset(self.gaps))

    @property
    def delta(self) -> int:
        return len(self.gaps)

    @property
    def milnor(self) -> int:
        # unibranch: mu = 2 delta + 1 - b with b = 1
        return 2 * self.delta

    @property
    def multiplicity(self) -> int:
        return self.generators[0] if self.generators else 1

    def __contains__(self, x: int) -> bool:
        return x >= 0 and x not in self._gapset

    def members(self, upto: int) -> list[int]:
        """Elements below ``upto``."""
        return [x for x in range(upto) if x not in self._gapset]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "conductor": self.conductor,
            "delta": self.delta,
            "milnor": self.milnor,
        }


def _minimal_generators(member, bound: int) -> tuple[int, ...]:
    gens = []
    for x in range(1, bound):
        if member(x) and not any(member(y) and member(x - y) for y in range(1, x // 2 + 1)):
            gens.append(x)
    return tuple(gens)


def semigroup(gens: Iterable[int]) -> NumSemigroup:
    """Semigroup generated by ``gens``.

    The sieve stops at the first run of ``min(gens)`` consecutive members,
    after which every integer is a member.
    """
    gens = sorted(set(int(g) for g in gens if g != 0))
    if any(g < 0 for g in gens):
        raise ValueError("generators must be positive")
    if not gens:
        raise NotCofinite("empty generating set")
    if reduce(gcd, gens) != 1:
        raise NotCofinite(f"gcd of {gens} is {reduce(gcd, gens)}")
    g0 = gens[0]
    inside = [True]
    run = 1
    x = 0
    while run < g0:
        x += 1
        ok = any(x >= g and inside[x - g] for g in gens)
        inside.append(ok)
        run = run + 1 if ok else 0
    conductor = x - g0 + 1
    gaps = tuple(y for y in range(conductor) if not inside[y])

    def member(y):
        return y >= conductor or inside[y]

    return NumSemigroup(_minimal_generators(member, conductor + g0 + 1), gaps, conductor)


# -- power series generators -------------------------------------------------

class SeriesElement:
    """Power series in ``t`` with rational coefficients, known modulo ``t**order``.

    ``order=math.inf`` marks an exact polynomial.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[int, Fraction | int], order: float = math.inf):
        self.order = order
        self.coeffs = {e: Fraction(c) for e, c in coeffs.items() if c and 0 <= e < order}
        if any(e < 0 for e in coeffs):
            raise ValueError("power series cannot have negative exponents")

    @classmethod
    def parse(cls, text: str, order: float = math.inf) -> "SeriesElement":
        """Parse sums of ``c*t^k`` with integer or rational ``c``, e.g. ``t^6 + 1/2*t^7``."""
        coeffs: dict[int, Fraction] = {}
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty series")
        for m in re.finditer(r"([+-]?)([^+-]+)", s):
            sign, body = m.groups()
            tm = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(?:t(?:\^(\d+))?)?", body)
            if tm is None or body == "":
                raise ValueError(f"cannot parse series term {body!r}")
            c_txt, e_txt = tm.groups()
            has_t = "t" in body
            if c_txt is None and not has_t:
                raise ValueError(f"cannot parse series term {body!r}")
            c = Fraction(c_txt) if c_txt else Fraction(1)
            e = (int(e_txt) if e_txt else 1) if has_t else 0
            if sign == "-":
                c = -c
            coeffs[e] = coeffs.get(e, 0) + c
        if "".join(m.group(0) for m in re.finditer(r"([+-]?)([^+-]+)", s)) != s:
            raise ValueError(f"cannot parse series {text!r}")
        return cls(coeffs, order)

    def valuation(self) -> int | None:
        return min(self.coeffs, default=None)

    def truncate(self, order: int) -> "SeriesElement":
        return SeriesElement(self.coeffs, min(order, self.order))

    def __mul__(self, other: "SeriesElement") -> "SeriesElement":
        n = min(self.order, other.order)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < n:
                    out[e] = out.get(e, 0) + c1 * c2
        return SeriesElement(out, n)

    def __repr__(self):
        body = " + ".join(f"{c}*t^{e}" for e, c in sorted(self.coeffs.items())) or "0"
        return f"SeriesElement({body} + O(t^{self.order}))"


def _achieved_valuations(gens: list[SeriesElement], order: int) -> list[int]:
    """Valuations below ``order`` of the subring generated by ``gens``.

    Every product of generators with valuation below ``order`` is reduced
    against an echelon basis keyed by lowest exponent; the basis keys are
    exactly the valuations of ring elements below ``order``.
    """
    gens = [g.truncate(order) for g in gens]
    vals = [g.valuation() for g in gens]
    if any(v is None or v <= 0 for v in vals):
        raise ValueError("generators must have positive valuation")
    basis: dict[int, dict[int, Fraction]] = {}

    def insert(vec: dict[int, Fraction]):
        vec = dict(vec)
        while vec:
            lead = min(vec)
            row = basis.get(lead)
            if row is None:
                c = vec[lead]
                basis[lead] = {e: x / c for e, x in vec.items()}
                return
            c = vec[lead]
            for e, x in row.items():
                v = vec.get(e, 0) - c * x
                if v:
                    vec[e] = v
                else:
                    vec.pop(e, None)

    one = SeriesElement({0: 1}, order)

    def walk(start: int, mono: SeriesElement, val: int):
        insert(mono.coeffs)
        for idx in range(start, len(gens)):
            if val + vals[idx] < order:
                walk(idx, mono * gens[idx], val + vals[idx])

    walk(0, one, 0)
    return sorted(basis)


def _certify(achieved: list[int], order: int, run_length: int) -> NumSemigroup:
    have = set(achieved)
    run = 0
    for x in range(order):
        run = run + 1 if x in have else 0
        if run >= run_length:
            start = x - run_length + 1
            return semigroup([y for y in achieved if y < start] + list(range(start, start + run_length)))
    raise TruncationTooLow(f"no run of {run_length} consecutive valuations below t^{order}")


def semigroup_from_series(gens: list[SeriesElement], order: int) -> NumSemigroup:
    """Value semigroup of the ring generated by power series ``gens``.

    Certified when (a) a run of consecutive valuations as long as the smallest
    generator valuation appears below ``order`` and (b) the computation at
    ``order + 20`` returns the same semigroup.
    """
    if not gens:
        raise ValueError("need at least one generator")
    hi = order + RECHECK_STEP
    if any(g.order < hi for g in gens):
        raise TruncationTooLow(f"generators must be known modulo t^{hi} for the recheck")
    run_length = min(g.valuation() or 0 for g in gens)
    sg = _certify(_achieved_valuations(gens, order), order, run_length)
    again = _certify(_achieved_valuations(gens, hi), hi, run_length)
    if again != sg:
        raise TruncationTooLow(f"semigroup changed between t^{order} and t^{hi}")
    return sg


# -- modules ------------------------------------------------------------------

@dataclass(frozen=True)
class GammaModule:
    """Gamma-submodule of the naturals containing 0, keyed by its minimal generators."""

    parent: NumSemigroup
    min_generators: tuple[int, ...]
    extra_gap_count: int
    excess: frozenset = field(repr=False, compare=False)

    @classmethod
    def generated_by(cls, parent: NumSemigroup, gens: Iterable[int]) -> "GammaModule":
        gens = sorted(set(gens))
        if not gens or gens[0] != 0:
            raise ValueError("a module in Mod(Gamma) must contain 0")
        excess = frozenset(
            s for s in parent.gaps if any(s - g in parent for g in gens if g <= s)
        )
        return cls._from_excess(parent, excess)

    @classmethod
    def _from_excess(cls, parent: NumSemigroup, excess: frozenset) -> "GammaModule":
        mins = [0] + sorted(
            s for s in excess
            if not any(s - d in excess for d in parent.members(s + 1) if d > 0)
        )
        return cls(parent, tuple(mins), parent.delta - len(excess), excess)

    @property
    def m(self) -> int:
        """Number of minimal generators."""
        return len(self.min_generators)

    @property
    def excess_count(self) -> int:
        """``#(Delta - Gamma)``, the second column of the module table."""
        return self.parent.delta - self.extra_gap_count

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(g for g in self.parent.gaps if g not in self.excess)

    def __contains__(self, x: int) -> bool:
        return x in self.parent or x in self.excess

    def label(self) -> str:
        return "(" + ",".join(map(str, self.min_generators)) + ")"


def min_generators(delta: GammaModule) -> tuple[int, ...]:
    return delta.min_generators


def modules(gamma: NumSemigroup) -> list[GammaModule]:
    """All of Mod(Gamma), sorted by minimal generator list.

    ``Delta - Gamma`` is an up-set of the gaps under ``s <= s + gamma``; gaps are
    decided from the top down so each inclusion check only consults decided gaps.
    """
    gaps = sorted(gamma.gaps, reverse=True)
    gens = gamma.generators
    found: list[frozenset] = []

    def rec(idx: int, chosen: set):
        if idx == len(gaps):
            found.append(frozenset(chosen))
            return
        s = gaps[idx]
        rec(idx + 1, chosen)
        if all(s + g in gamma or s + g in chosen for g in gens):
            chosen.add(s)
            rec(idx + 1, chosen)
            chosen.discard(s)

    rec(0, set())
    mods = [GammaModule._from_excess(gamma, ex) for ex in found]
    return sorted(mods, key=lambda d: d.min_generators)


@dataclass(frozen=True)
class ShiftSet:
    """``exceptional`` members below ``threshold``, then every integer from ``threshold`` on."""

    exceptional: tuple[int, ...]
    threshold: int

    def __contains__(self, i: int) -> bool:
        return i >= self.threshold or i in self.exceptional

    def upto(self, n: int) -> list[int]:
        return [i for i in self.exceptional if i < n] + list(range(self.threshold, n))

    def __str__(self):
        return ", ".join([*map(str, self.exceptional), f"{self.threshold}+"])


def module_shifts(gamma: NumSemigroup, delta: GammaModule) -> ShiftSet:
    """``{i >= 0 : i + Delta <= Gamma}``; automatic once ``i`` reaches the conductor."""
    c = gamma.conductor
    low = [d for d in range(c) if d in delta]
    good = [i for i in range(c) if all(i + d in gamma for d in low)]
    t = c
    while t > 0 and t - 1 in good:
        t -= 1
    return ShiftSet(tuple(i for i in good if i < t), t)


def colength(gamma: NumSemigroup, delta: GammaModule, i: int) -> int:
    """``#Gamma - (i + Delta) = i - #(Delta - Gamma)`` for ``i + Delta <= Gamma``."""
    if i not in module_shifts(gamma, delta):
        raise NotContained(f"{i} + {delta.label()} is not contained in the semigroup")
    return i - delta.excess_count


def colength_direct(gamma: NumSemigroup, delta: GammaModule, i: int) -> int:
    """Brute-force count of ``Gamma - (i + Delta)``; used to check :func:`colength`."""
    return sum(1 for x in gamma.members(gamma.conductor + i) if x - i < 0 or (x - i) not in delta)


def module_table(gamma: NumSemigroup) -> list[dict]:
    """Rows (module, #(Delta - Gamma), shifts) for golden comparison."""
    rows = []
    for d in modules(gamma):
        sh = module_shifts(gamma, d)
        rows.append({
            "module": list(d.min_generators),
            "value": d.excess_count,
            "shifts": {"exceptional": list(sh.exceptional), "threshold": sh.threshold},
        })
    return rows
