import pytest

from zastava.errors import HeightBoundExceeded
from zastava.qkostant import kostant_q, kostant_q_bruteforce, kostant_table
from zastava.ring import ONE, ZERO, QPolynomial
from zastava.rootdata import box, coweights_up_to_height, pairing_rho

from oracles import dict_to_coeffs, truncated_product


def P(*c):
    return QPolynomial(c)


def test_examples(systems):
    a1, a2 = systems["A1"], systems["A2"]
    for name, rs in systems.items():
        assert kostant_q(rs, rs.zero()) == ONE
    for n in range(1, 8):
        assert kostant_q(a1, (n,)) == QPolynomial.monomial(n)
    assert kostant_q(a2, (1, 1)) == P(0, 1, 1)
    assert kostant_q(a2, (2, 1)) == P(0, 0, 1, 1)
    assert kostant_q(a2, (-1, 1)) == ZERO


def test_frozen_values_from_oracle(systems):
    # values produced by exhaustive enumeration of coroot multisets
    frozen = {
        ("B2", (1, 1)): (0, 1, 1),
        ("B2", (2, 1)): (0, 1, 1, 1),
        ("B2", (1, 2)): (0, 0, 1, 1),
        ("B2", (2, 2)): (0, 0, 2, 1, 1),
        ("G2", (1, 1)): (0, 1, 1),
        ("G2", (1, 2)): (0, 1, 1, 1),
        ("G2", (2, 3)): (0, 1, 2, 2, 1, 1),
        ("A3", (1, 1, 1)): (0, 1, 2, 1),
    }
    for (name, lam), coeffs in frozen.items():
        assert kostant_q(systems[name], lam).coeffs == coeffs
        assert kostant_q_bruteforce(systems[name], lam).coeffs == coeffs


def test_bruteforce_examples(systems):
    assert kostant_q_bruteforce(systems["A2"], (1, 1)) == P(0, 1, 1)
    assert kostant_q_bruteforce(systems["A1"], (3,)) == P(0, 0, 0, 1)
    assert kostant_q_bruteforce(systems["A2"], (-1, 2)) == ZERO
    with pytest.raises(HeightBoundExceeded):
        kostant_q_bruteforce(systems["A2"], (7, 6))


def test_table_examples(systems):
    t = kostant_table(systems["A1"], (2,))
    assert t.values == {(0,): ONE, (1,): P(0, 1), (2,): P(0, 0, 1)}
    t = kostant_table(systems["A2"], (1, 1))
    assert t.values == {(0, 0): ONE, (1, 0): P(0, 1), (0, 1): P(0, 1), (1, 1): P(0, 1, 1)}
    assert kostant_table(systems["G2"], (0, 0)).values == {(0, 0): ONE}


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "C2", "G2", "A3"])
def test_table_invariants_and_oracle(systems, name):
    rs = systems[name]
    height = 6 if rs.rank <= 2 else 4
    for lam in coweights_up_to_height(rs.rank, height):
        fast = kostant_q(rs, lam)
        slow = kostant_q_bruteforce(rs, lam)
        assert fast == slow
        if any(lam):
            assert fast[0] == 0
            assert fast.degree == pairing_rho(lam)
            assert all(c >= 0 for c in fast.coeffs)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_order_independence(systems, name):
    rs = systems[name]
    bound = (3, 3)
    forward = kostant_table(rs, bound)
    backward = kostant_table(rs, bound, order=reversed(rs.positive_coroots))
    assert forward.values == backward.values


@pytest.mark.parametrize("name,bound", [("A2", (3, 3)), ("B2", (3, 2)), ("G2", (2, 4)), ("A3", (2, 2, 2))])
def test_generating_function(systems, name, bound):
    rs = systems[name]
    series = truncated_product(rs.positive_coroots, bound)
    table = kostant_table(rs, bound)
    for lam in box(bound):
        assert table[lam].coeffs == dict_to_coeffs(series.get(lam, {}))


def test_lowest_exponent_is_minimal_part_count(systems):
    from zastava.qkostant import enumerate_coroot_multisets

    rs = systems["G2"]
    for lam in coweights_up_to_height(2, 6):
        if any(lam):
            sizes = [len(m) for m in enumerate_coroot_multisets(rs, lam)]
            assert kostant_q(rs, lam).valuation == min(sizes)
            assert kostant_q(rs, lam)(1) == len(sizes)

