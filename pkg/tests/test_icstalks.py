import json
import random
from dataclasses import replace

import pytest

from zastava.errors import NotDominantSum, NotStrictlyDominant, WrongSide
from zastava.icstalks import (
    COSTALK,
    STALK,
    Ambient,
    P_poly,
    P_table,
    build_table,
    bunU_stalk_table,
    consistency_check,
    crosscheck_gaitsgory,
    drinfeld_stalk_table,
    duality_check,
    gaitsgory_costalk,
    parity_check,
    reindex_check,
    stalk_poly_for_partition,
    support_condition_check,
    table_from_json,
    zastava_stalk_table,
)
from zastava.partitions import concat, enumerate_partitions
from zastava.ring import ONE, ZERO, QPolynomial
from zastava.rootdata import coweights_up_to_height, pairing_2rho


def P(*c):
    return QPolynomial(c)


def ranks_by_stratum(table):
    return {(e.stratum.nu, e.stratum.gamma): e.degree_ranks for e in table.entries}


def test_P_examples(systems):
    a1, a2 = systems["A1"], systems["A2"]
    for n in range(1, 6):
        assert P_poly(a1, (n,)) == QPolynomial.monomial(2 * n - 1)
    assert P_poly(a2, (1, 1)) == P(0, 1, 0, 1)
    assert P_poly(a2, (0, 0)) == ONE
    with pytest.raises(NotDominantSum):
        P_poly(a2, (1, -1))


def test_P_table_matches_pointwise(systems):
    for name in ("A2", "B2", "G2"):
        rs = systems[name]
        table = P_table(rs, (3, 3))
        for nu, poly in table.items():
            assert poly == P_poly(rs, nu)


def test_partition_poly_examples(systems):
    assert stalk_poly_for_partition(systems["A1"], ((1,), (1,))) == P(0, 0, 1)
    assert stalk_poly_for_partition(systems["A2"], ((1, 1),)) == P(0, 1, 0, 1)
    assert stalk_poly_for_partition(systems["A2"], ()) == ONE


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_degree_law(systems, name):
    rs = systems[name]
    for mu in coweights_up_to_height(rs.rank, 6)[1:]:
        p = P_poly(rs, mu)
        assert p[0] == 0
        assert p.degree == pairing_2rho(mu) - 1
        assert p.valuation % 2 == 1
        assert all(n % 2 == 1 for n, _ in p.items())


def test_multiplicativity(systems):
    rng = random.Random(17)
    for name in ("A2", "B2", "G2"):
        rs = systems[name]
        cache = {}
        pool = [g for nu in coweights_up_to_height(2, 4) for g in enumerate_partitions(nu)]
        for _ in range(100):
            g1, g2 = rng.choice(pool), rng.choice(pool)
            lhs = stalk_poly_for_partition(rs, concat(g1, g2), cache)
            rhs = stalk_poly_for_partition(rs, g1, cache) * stalk_poly_for_partition(rs, g2, cache)
            assert lhs == rhs


def test_gaitsgory_examples(systems):
    a1, a2 = systems["A1"], systems["A2"]
    assert gaitsgory_costalk(a1, (0,)) == ONE
    assert gaitsgory_costalk(a1, (-1,)) == P(0, 0, 1)
    assert gaitsgory_costalk(a1, (1,)) == ZERO
    assert crosscheck_gaitsgory(a1, (1,))
    assert crosscheck_gaitsgory(a2, (1, 1))
    assert crosscheck_gaitsgory(a1, (2,))
    with pytest.raises(NotStrictlyDominant):
        crosscheck_gaitsgory(a1, (0,))
    with pytest.raises(NotStrictlyDominant):
        crosscheck_gaitsgory(a2, (1, -1))


def test_zastava_table_examples(systems):
    a1, a2 = systems["A1"], systems["A2"]
    t = ranks_by_stratum(zastava_stalk_table(a1, (1,)))
    assert t == {((0,), ()): {-2: 1}, ((1,), ((1,),)): {-2: 1}}
    t = zastava_stalk_table(a1, (2,))
    assert len(t.entries) == 4
    assert all(e.degree_ranks == {-4: 1} for e in t.entries)
    t = ranks_by_stratum(zastava_stalk_table(a2, (1, 1)))
    assert t[((1, 1), ((1, 1),))] == {-2: 1, -4: 1}


def test_drinfeld_table_examples(systems):
    a1, a2 = systems["A1"], systems["A2"]
    t = drinfeld_stalk_table(a1, (0,), 0, 1, (0,))
    assert [e.degree_ranks for e in t.entries] == [{2: 1}]
    t = drinfeld_stalk_table(a1, (0,), 0, 1, (1,))
    assert [e.degree_ranks for e in t.entries] == [{2: 1}, {2: 1}]
    t = ranks_by_stratum(drinfeld_stalk_table(a2, (1, 1), 1, 2, (1, 1)))
    assert t[((1, 1), ((1, 1),))] == {-2: 1, -4: 1}


def test_bunU_table(systems):
    a1 = systems["A1"]
    t = bunU_stalk_table(a1, 0, (2,))
    # dims: |Gamma| - 2 mu - 1; degree base -dim
    for e in t.entries:
        assert e.stratum.dim == len(e.stratum.gamma) - 2 * e.stratum.mu[0] - 1
    assert parity_check(t)
    assert reindex_check(t)
    assert support_condition_check(t)
    t2 = bunU_stalk_table(systems["A2"], 2, (1, 1))
    assert parity_check(t2) and reindex_check(t2)
    assert {m % 2 for e in t2.entries for m in e.degree_ranks} == {1}


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_support_parity_duality(systems, name):
    rs = systems[name]
    for mu in coweights_up_to_height(rs.rank, 4):
        st = zastava_stalk_table(rs, mu, STALK)
        co = zastava_stalk_table(rs, mu, COSTALK)
        assert support_condition_check(st).ok
        assert parity_check(st).ok and parity_check(co).ok
        assert duality_check(st, co).ok
        assert reindex_check(st).ok and reindex_check(co).ok
        for e in st.entries:
            if e.stratum.is_open:
                assert e.degree_ranks == {-e.stratum.dim: 1}


@pytest.mark.parametrize("genus", [0, 1, 2])
def test_drinfeld_parity(systems, genus):
    for name in ("A1", "A2", "B2"):
        rs = systems[name]
        for torus_rank in (rs.rank, rs.rank + 1):
            t = drinfeld_stalk_table(rs, (1,) * rs.rank, genus, torus_rank, (2,) * rs.rank)
            r = parity_check(t)
            assert r.ok, str(r)
            assert support_condition_check(t).ok


def test_sl2_constant(systems):
    a1 = systems["A1"]
    for n in range(6):
        t = zastava_stalk_table(a1, (n,))
        assert all(e.degree_ranks == {-2 * n: 1} for e in t.entries)


def test_support_negative_control(systems):
    t = zastava_stalk_table(systems["A2"], (2, 1))
    assert support_condition_check(t).ok
    i = next(k for k, e in enumerate(t.entries) if not e.stratum.is_open)
    bad = t.entries[i]
    poly = bad.poly + 1
    base = -bad.stratum.dim
    corrupted = replace(bad, poly=poly, degree_ranks={base - n: c for n, c in poly.items()})
    entries = t.entries[:i] + (corrupted,) + t.entries[i + 1:]
    r = support_condition_check(replace(t, entries=entries))
    assert not r.ok
    assert any("constant term" in v for v in r.violations)
    assert str(list(bad.stratum.nu)) in str(r)
    with pytest.raises(WrongSide):
        support_condition_check(zastava_stalk_table(systems["A1"], (1,), COSTALK))


def test_parity_and_duality_negative_controls(systems):
    st = zastava_stalk_table(systems["A2"], (1, 1))
    co = zastava_stalk_table(systems["A2"], (1, 1), COSTALK)
    e = st.entries[-1]
    shifted = replace(e, poly=e.poly * QPolynomial.monomial(1),
                      degree_ranks={m - 1: r for m, r in e.degree_ranks.items()})
    bad = replace(st, entries=st.entries[:-1] + (shifted,))
    assert not parity_check(bad).ok
    assert not duality_check(bad, co).ok
    assert not consistency_check(bad).ok
    assert consistency_check(st).ok


def test_json_round_trip(systems):
    for tab in (zastava_stalk_table(systems["B2"], (2, 1)),
                drinfeld_stalk_table(systems["A2"], (1, 0), 2, 3, (1, 1), COSTALK),
                bunU_stalk_table(systems["A1"], 1, (3,))):
        text = json.dumps(tab.to_json())
        back = table_from_json(json.loads(text))
        assert back.entries == tab.entries
        assert back.ambient == tab.ambient
        assert json.dumps(back.to_json()) == text


def test_parallel_build_identical(systems):
    amb = Ambient.zastava(systems["A2"], (2, 2))
    assert build_table(amb, STALK, jobs=1).to_json() == build_table(amb, STALK, jobs=3).to_json()
