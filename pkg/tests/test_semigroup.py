import json
from itertools import combinations
from math import gcd
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hilbhomfly.errors import NotCofinite, NotContained, TruncationTooLow
from hilbhomfly.semigroup import (
    GammaModule, SeriesElement, colength, colength_direct, module_table,
    module_shifts, modules, semigroup, semigroup_from_series,
)

DATA = Path(__file__).parent / "data"


def closure(gens, bound):
    # plain reachability, used as an oracle
    seen = {0}
    for x in range(1, bound):
        if any(x - g in seen for g in gens if g <= x):
            seen.add(x)
    return seen


def brute_modules(gamma):
    gaps = gamma.gaps
    out = []
    for r in range(len(gaps) + 1):
        for extra in combinations(gaps, r):
            ex = set(extra)
            if all(s + g in gamma or s + g in ex for s in ex for g in gamma.generators):
                out.append(frozenset(ex))
    return out


def test_two_generator_gaps():
    g = semigroup([3, 5])
    assert g.gaps == (1, 2, 4, 7)
    assert g.conductor == 8
    assert g.delta == 4 and g.milnor == 8


@given(st.lists(st.integers(2, 15), min_size=1, max_size=4))
@settings(max_examples=80)
def test_semigroup_matches_closure(gens):
    d = 0
    for x in gens:
        d = gcd(d, x)
    if d != 1:
        with pytest.raises(NotCofinite):
            semigroup(gens)
        return
    g = semigroup(gens)
    bound = g.conductor + 2 * max(gens)
    members = closure(gens, bound)
    assert set(g.members(bound)) == members
    assert all(x in members for x in range(g.conductor, bound))
    assert g.conductor == 0 or g.conductor - 1 not in members
    # generators are minimal and generate
    assert closure(g.generators, bound) == members


def test_sylvester_count():
    for a, b in [(2, 3), (3, 4), (4, 5), (3, 7), (5, 7)]:
        g = semigroup([a, b])
        assert g.delta == (a - 1) * (b - 1) // 2
        assert g.conductor == (a - 1) * (b - 1)


def test_series_parse():
    s = SeriesElement.parse("t^6 + t^7 - 3/2*t^9")
    assert s.valuation() == 6
    assert s.coeffs[9] == pytest.approx(-1.5)


def test_semigroup_from_series_cable():
    g = semigroup_from_series([SeriesElement.parse("t^4"), SeriesElement.parse("t^6+t^7")], 40)
    assert g.generators == (4, 6, 13)
    assert g.gaps == (1, 2, 3, 5, 7, 9, 11, 15)
    assert g.delta == 8 and g.milnor == 16


def test_semigroup_from_series_monomials():
    g = semigroup_from_series([SeriesElement.parse("t^3"), SeriesElement.parse("t^5")], 30)
    assert g == semigroup([3, 5])


def test_semigroup_from_series_other_cable():
    g = semigroup_from_series([SeriesElement.parse("t^4"), SeriesElement.parse("t^6+t^9")], 40)
    assert g.generators == (4, 6, 15)


def test_semigroup_from_series_needs_precision():
    with pytest.raises(TruncationTooLow):
        semigroup_from_series([SeriesElement.parse("t^4", order=30), SeriesElement.parse("t^6+t^7", order=30)], 20)


@pytest.mark.parametrize("gens", [[4, 6, 13], [3, 5], [3, 7], [4, 5], [5, 6]])
def test_modules_match_brute_force(gens):
    g = semigroup(gens)
    ours = {frozenset(s for s in g.gaps if s in d) for d in modules(g)}
    assert ours == set(brute_modules(g))


def test_module_table_golden():
    golden = json.loads((DATA / "modules_4613.json").read_text())
    rows = module_table(semigroup([4, 6, 13]))
    got = {
        tuple(r["module"]): (r["value"], ",".join([*map(str, r["shifts"]["exceptional"]), f"{r['shifts']['threshold']}+"]))
        for r in rows
    }
    want = {tuple(r["module"]): (r["value"], r["shifts"]) for r in golden}
    assert got == want


def test_module_shifts_direct():
    g = semigroup([4, 6, 13])
    for d in modules(g):
        sh = module_shifts(g, d)
        low = [x for x in range(g.conductor + 1) if x in d]
        for i in range(g.conductor + 10):
            assert (i in sh) == all(i + x in g for x in low)


def test_colength_formula():
    g = semigroup([4, 6, 13])
    for d in modules(g):
        for i in module_shifts(g, d).upto(30):
            assert colength(g, d, i) == colength_direct(g, d, i)


def test_colength_rejects_bad_shift():
    g = semigroup([4, 6, 13])
    d = GammaModule.generated_by(g, [0, 1])
    with pytest.raises(NotContained):
        colength(g, d, 0)


def test_generated_by_needs_zero():
    with pytest.raises(ValueError):
        GammaModule.generated_by(semigroup([3, 5]), [1])
