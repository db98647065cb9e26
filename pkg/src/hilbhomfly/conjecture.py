"""Knot invariants against Hilbert-scheme generating functions.

The refined generating function of a unibranch germ is

    (a/q)^mu (1 - q^2) * sum over ideals q^(2 colength) (1 - a^2)^(m - 1)

and the checks here compare it with the HOMFLY polynomial: torus knots via
staircases, and the germ with local ring ``C[[t^4, t^6 + t^7]]`` via its
Gamma-module stratification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .errors import NotCoprime, NotRepresentable
from .homfly import alexander_from_homfly, alexander_from_semigroup, jones_torus, qbinom
from .poly import (
    LaurentPoly,
    TruncSeries,
    ZPoly,
    exact_div,
    expand_series,
    from_z,
    lift_series,
    render,
    substitute,
    to_z,
)
from .semigroup import GammaModule, NumSemigroup, SeriesElement, module_shifts, modules, semigroup_from_series
from .staircase import series_direct

__all__ = [
    "Report",
    "GenusExpansion",
    "StratumContribution",
    "verify_torus",
    "cable_4613_semigroup",
    "stratum_contributions",
    "assemble_4613",
    "verify_cable_4613",
    "CABLE_4613_HOMFLY",
    "genus_expansion",
    "genus_bounds",
    "sl1_check",
    "qbinom_corollary",
    "euler_jacobian",
]

ONE_MINUS_A2 = LaurentPoly({(0, 0): 1, (2, 0): -1})
ONE_MINUS_Q2 = LaurentPoly({(0, 0): 1, (0, 2): -1})


@dataclass
class Report:
    """Outcome of one verification; ``first_mismatch`` is ``None`` on success."""

    check: str
    parameters: dict
    status: str
    first_mismatch: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            **({"details": self.details} if self.details else {}),
        }


def _compare(check: str, params: dict, expected: TruncSeries, actual: TruncSeries, **details) -> Report:
    e = expected.first_mismatch(actual)
    if e is None:
        return Report(check, params, "pass", None, details)
    mm = {
        "q_exponent": e,
        "expected": render(expected.coefficient(e)),
        "actual": render(actual.coefficient(e)),
    }
    return Report(check, params, "fail", mm, details)


def _coprime(k: int, n: int):
    if gcd(k, n) != 1:
        raise NotCoprime(f"gcd({k}, {n}) = {gcd(k, n)}")


# -- torus knots ----------------------------------------------------------------

def verify_torus(k: int, n: int, order: int = 120) -> Report:
    """``(1 - a^2) J(T_k,n)`` against ``(a/q)^mu (1 - q^2)`` times the staircase series."""
    _coprime(k, n)
    mu = (k - 1) * (n - 1)
    rhs = series_direct(k, n, order) * (LaurentPoly.monomial(1, mu, -mu) * ONE_MINUS_Q2)
    lhs_poly = ONE_MINUS_A2 * jones_torus(k, n)
    lhs = TruncSeries(lhs_poly, rhs.order)
    top = max(j for _, j in lhs_poly.keys())
    return _compare(
        "verify-torus", {"k": k, "n": n, "trunc": order}, lhs, rhs,
        mu=mu, compared_below=rhs.order, polynomial_covered=top < rhs.order,
    )


def sl1_check(k: int, n: int, order: int = 120) -> Report:
    """The staircase series at ``a := q`` should be the constant 1."""
    _coprime(k, n)
    s = series_direct(k, n, order).substitute("a=q")
    return _compare("sl1", {"k": k, "n": n, "trunc": order}, TruncSeries(LaurentPoly.const(1), s.order), s)


def euler_jacobian(k: int, n: int) -> int:
    """``C(k+n, k) / (k+n)``, the Euler number of the compactified Jacobian."""
    _coprime(k, n)
    v, r = divmod(comb(k + n, k), k + n)
    if r:
        raise ArithmeticError(f"C({k + n},{k}) is not divisible by {k + n}")
    return v


def qbinom_corollary(k: int, n: int, order: int = 120) -> Report:
    """``(1 - q^2)`` times the ``a = 0`` staircase series against ``binom(k+n,k)/binom(k+n,1)``."""
    _coprime(k, n)
    s = series_direct(k, n, order)
    # one factor (1 - a^2) belongs to the m - 1 normalization; strip it before a := 0
    coeffs = {(i, e): c for e, co in s.coefficients().items()
              for (i, _), c in exact_div(co, ONE_MINUS_A2).items()}
    lhs = TruncSeries(LaurentPoly(coeffs), s.order).substitute("a=0") * ONE_MINUS_Q2
    b = k + n
    ratio_series = expand_series(qbinom(b, k) * ONE_MINUS_Q2, [2 * b], order)
    ratio = exact_div(qbinom(b, k), qbinom(b, 1))
    beauville = substitute(ratio, "q=1")[(0, 0)]
    return _compare(
        "qbinom-check", {"k": k, "n": n, "trunc": order}, ratio_series, lhs,
        ratio=render(ratio), q1_value=beauville, euler_jacobian=euler_jacobian(k, n),
    )


# -- the <4,6,13> germ ------------------------------------------------------------

def cable_4613_semigroup(order: int = 40) -> NumSemigroup:
    """Value semigroup of ``C[[t^4, t^6 + t^7]]`` computed from the series."""
    return semigroup_from_series([SeriesElement.parse("t^4"), SeriesElement.parse("t^6 + t^7")], order)


def _u(e: int) -> LaurentPoly:
    return ONE_MINUS_A2 ** e


# Euler-characteristic integrals over the strata U_{i+Delta} that differ from
# (1-a^2)^(m-1); every other module of <4,6,13> uses the generic value.
SPECIAL_STRATA: dict[tuple[int, ...], LaurentPoly] = {
    (0, 2): LaurentPoly(),
    (0, 2, 11): LaurentPoly(),
    (0, 2, 5): _u(2),
    (0, 2, 7): _u(1),
    (0, 2, 5, 7): _u(3),
    (0, 2, 7, 9): 2 * _u(2) - _u(1),
    (0, 2, 9): _u(1),
    (0, 2, 9, 11): _u(2),
}


@dataclass(frozen=True)
class StratumContribution:
    module: GammaModule
    c: LaurentPoly

    @property
    def special(self) -> bool:
        return self.module.min_generators in SPECIAL_STRATA


def stratum_contributions(gamma: NumSemigroup) -> list[StratumContribution]:
    out = []
    for d in modules(gamma):
        c = SPECIAL_STRATA.get(d.min_generators)
        if c is None:
            c = _u(d.m - 1)
        out.append(StratumContribution(d, c))
    return out


def hilbert_series_4613(order: int, gamma: NumSemigroup | None = None) -> TruncSeries:
    """``sum_Delta c_Delta sum_i q^(2(i - #(Delta - Gamma)))`` modulo ``q**order``, term by term."""
    gamma = gamma or cable_4613_semigroup()
    terms: dict[tuple[int, int], int] = {}
    for sc in stratum_contributions(gamma):
        d = sc.module
        shifts = module_shifts(gamma, d)
        for i in shifts.upto(order // 2 + d.excess_count + 1):
            e = 2 * (i - d.excess_count)
            if e >= order:
                continue
            for (ai, _), c in sc.c.items():
                terms[(ai, e)] = terms.get((ai, e), 0) + c
    return TruncSeries(LaurentPoly(terms), order)


def _closed_form_4613(gamma: NumSemigroup) -> LaurentPoly:
    # (1 - q^2) * sum_i q^(2(i-d)) with the tail i >= threshold summed as q^(2(t-d))/(1-q^2)
    total = LaurentPoly()
    for sc in stratum_contributions(gamma):
        d = sc.module
        sh = module_shifts(gamma, d)
        x = d.excess_count
        part = LaurentPoly.monomial(1, 0, 2 * (sh.threshold - x))
        for i in sh.exceptional:
            part = part + ONE_MINUS_Q2 * LaurentPoly.monomial(1, 0, 2 * (i - x))
        total = total + sc.c * part
    return total


def assemble_4613(order: int = 120, method: str = "series") -> LaurentPoly:
    """HOMFLY predicted for the germ ``C[[t^4, t^6 + t^7]]`` (mu = 16).

    ``method="series"`` sums shifts term by term to ``q**order`` and lifts;
    ``method="closed"`` sums the tail of shifts as a geometric series.
    """
    gamma = cable_4613_semigroup()
    mu = gamma.milnor
    norm = LaurentPoly.monomial(1, mu, -mu)
    if method == "closed":
        return norm * _closed_form_4613(gamma)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    s = hilbert_series_4613(order, gamma) * (norm * ONE_MINUS_Q2)
    return lift_series(s, mu)


def _rows(rows: dict[int, list[int]]) -> ZPoly:
    return ZPoly({(ai, 2 * h): c for ai, cs in rows.items() for h, c in enumerate(cs)})


# HOMFLY of the (2,13) cable of the trefoil, in a and z = q - 1/q.
CABLE_4613_HOMFLY = _rows({
    22: [-3, -4, -1],
    20: [20, 70, 84, 45, 11, 1],
    18: [-39, -220, -468, -496, -286, -91, -15, -1],
    16: [23, 179, 540, 836, 726, 365, 105, 16, 1],
})


def verify_cable_4613(order: int = 120) -> Report:
    J = assemble_4613(order)
    zp = to_z(J)
    expected = CABLE_4613_HOMFLY
    params = {"trunc": order}
    gamma = cable_4613_semigroup()
    gx = genus_expansion(J, gamma.milnor, 1)
    details = {
        "homfly": render(J),
        "n0_at_a0": gx.at_a0()[0],
        "alexander_consistent": alexander_from_homfly(J, gamma.milnor) == alexander_from_semigroup(gamma),
    }
    if zp == expected:
        return Report("verify-cable-4613", params, "pass", None, details)
    diff = zp - expected
    (ai, zj), _ = diff.sorted_terms()[0]
    mm = {"a_exponent": ai, "z_exponent": zj, "expected": expected[(ai, zj)], "actual": zp[(ai, zj)]}
    return Report("verify-cable-4613", params, "fail", mm, details)


# -- genus expansion ----------------------------------------------------------------

@dataclass(frozen=True)
class GenusExpansion:
    """``a^-mu (q^-1 - q)^(b-1) J = sum_h n_h(a^2) (q^-1 - q)^(2h)``.

    ``n[h][r]`` is the coefficient of ``a^(2r)`` in ``n_h``.
    """

    b: int
    mu: int
    n: tuple[tuple[int, ...], ...]

    def at_a0(self) -> list[int]:
        return [nh[0] if nh else 0 for nh in self.n]

    def max_h(self) -> int:
        return max((h for h, nh in enumerate(self.n) if any(nh)), default=-1)

    def a2_degree(self) -> int:
        return max((len(nh) - 1 for nh in self.n if nh), default=-1)

    def to_zpoly(self) -> ZPoly:
        """Rebuild ``J``; ``(q^-1 - q) = -z``."""
        terms: dict[tuple[int, int], int] = {}
        e = 1 - self.b
        sign = -1 if e % 2 else 1
        for h, nh in enumerate(self.n):
            for r, c in enumerate(nh):
                if c:
                    terms[(self.mu + 2 * r, 2 * h + e)] = sign * c
        return ZPoly(terms)

    def to_homfly(self) -> LaurentPoly:
        return from_z(self.to_zpoly())

    def to_dict(self) -> dict:
        return {"b": self.b, "mu": self.mu, "n": [list(nh) for nh in self.n], "n_at_a0": self.at_a0()}


def genus_expansion(J: LaurentPoly | ZPoly, mu: int, b: int = 1) -> GenusExpansion:
    """Change of basis from ``q`` to powers of ``(q^-1 - q)``; exact or NotRepresentable."""
    zp = J if isinstance(J, ZPoly) else to_z(J)
    shift = b - 1
    sign = -1 if shift % 2 else 1
    coeffs: dict[int, dict[int, int]] = {}
    for (i, j), c in zp.items():
        ai, zj = i - mu, j + shift
        if ai < 0 or ai % 2 or zj < 0 or zj % 2:
            raise NotRepresentable(
                f"term a^{i} z^{j} does not fit a^mu * Z[a^2, z^2] * z^(1-b) with mu={mu}, b={b}"
            )
        coeffs.setdefault(zj // 2, {})[ai // 2] = sign * c
    top = max(coeffs, default=-1)
    n = []
    for h in range(top + 1):
        row = coeffs.get(h, {})
        deg = max(row, default=-1)
        n.append(tuple(row.get(r, 0) for r in range(deg + 1)))
    gx = GenusExpansion(b, mu, tuple(n))
    if gx.to_zpoly() != zp:
        raise NotRepresentable("genus expansion does not reproduce its input")
    return gx


def genus_bounds(gx: GenusExpansion, multiplicity: int | None = None) -> dict:
    """Degree bounds: ``2h <= mu`` always; ``a^2``-degree at most the multiplicity (reported only)."""
    out = {"max_h": gx.max_h(), "h_bound_ok": 2 * gx.max_h() <= gx.mu, "a2_degree": gx.a2_degree()}
    if multiplicity is not None:
        out["multiplicity"] = multiplicity
        out["multiplicity_bound_ok"] = gx.a2_degree() <= multiplicity
    return out
