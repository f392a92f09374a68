"""Number theory, order spectra, and the exact statistics derived from them.

Every frozen integer below was regenerated with the brute-force graph oracle
(tests/test_powergraph.py checks the same numbers against explicit graphs).
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgx.errors import InputError, InvariantError
from pgx.groups import GroupTable
from pgx.spectrum import (
    GroupStats,
    OrderSpectrum,
    directed_arcs,
    divisors,
    factor,
    group_stats,
    is_prime,
    mutual_edges,
    order_spectrum,
    order_sum,
    phi_cyclic_prime_power,
    phi_sum,
    spectrum_cyclic,
    spectrum_product,
    stats_from_spectrum,
    totient,
    undirected_edges,
)
from pgx.constructors import cyclic


# ---------------------------------------------------------------------------
# Number theory
# ---------------------------------------------------------------------------

def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert not is_prime(-7) and not is_prime(0) and not is_prime(1)


def test_factor_examples():
    assert factor(1) == []
    assert factor(2) == [(2, 1)]
    assert factor(360) == [(2, 3), (3, 2), (5, 1)]
    assert factor(97) == [(97, 1)]
    assert factor(1024) == [(2, 10)]
    with pytest.raises(InputError):
        factor(0)


def test_totient_table():
    expected = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 7: 6, 8: 4, 9: 6,
                10: 4, 11: 10, 12: 4}
    assert {m: totient(m) for m in expected} == expected
    assert totient(97) == 96
    with pytest.raises(InputError):
        totient(0)


@given(st.integers(min_value=1, max_value=500))
def test_totient_counts_coprime_residues(m):
    import math
    assert totient(m) == sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]
    assert divisors(27) == [1, 3, 9, 27]


# ---------------------------------------------------------------------------
# OrderSpectrum construction and invariants
# ---------------------------------------------------------------------------

def test_spectrum_requires_unique_identity():
    with pytest.raises(InvariantError):
        OrderSpectrum({2: 3})
    with pytest.raises(InvariantError):
        OrderSpectrum({1: 2, 2: 1})


def test_spectrum_rejects_nondividing_order():
    with pytest.raises(InvariantError):
        OrderSpectrum({1: 1, 3: 1})     # total 2, but 3 does not divide 2


def test_spectrum_drops_zero_counts_and_compares_by_value():
    s = OrderSpectrum({1: 1, 2: 1, 4: 0})
    t = OrderSpectrum({2: 1, 1: 1})
    assert s == t and hash(s) == hash(t)
    assert 4 not in s and s.get(4) == 0
    assert s.to_pairs() == [[1, 1], [2, 1]]
    assert s.total == 2 and len(s) == 2 and list(s) == [1, 2]


def test_spectrum_check_flags_totient_indivisible_count():
    s = OrderSpectrum({1: 1, 4: 1, 2: 2})   # 1 element of order 4: phi(4)=2 must divide it
    with pytest.raises(InvariantError):
        s.check()
    OrderSpectrum({1: 1, 2: 1, 4: 2}).check()   # C4 passes


# ---------------------------------------------------------------------------
# Cyclic spectra and lcm convolution
# ---------------------------------------------------------------------------

def test_spectrum_cyclic_examples():
    assert dict(spectrum_cyclic(12).items()) == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}
    assert dict(spectrum_cyclic(25).items()) == {1: 1, 5: 4, 25: 20}
    assert dict(spectrum_cyclic(1).items()) == {1: 1}
    with pytest.raises(InputError):
        spectrum_cyclic(0)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=400))
def test_spectrum_cyclic_counts_are_totients(m):
    s = spectrum_cyclic(m)
    assert s.total == m
    assert set(s) == set(divisors(m))
    for d in s:
        assert s[d] == totient(d)


@pytest.mark.parametrize("m", list(range(1, 61)))
def test_spectrum_cyclic_matches_brute_tally(m):
    assert spectrum_cyclic(m) == order_spectrum(cyclic(m))


def test_spectrum_product_identity_and_klein():
    c2 = spectrum_cyclic(2)
    assert spectrum_product(spectrum_cyclic(1), c2) == c2
    assert dict(spectrum_product(c2, c2).items()) == {1: 1, 2: 3}


def test_spectrum_product_non_coprime():
    got = spectrum_product(spectrum_cyclic(2), spectrum_cyclic(4))
    assert dict(got.items()) == {1: 1, 2: 3, 4: 4}


def test_spectrum_product_matches_lcm_tally():
    got = spectrum_product(spectrum_cyclic(9), spectrum_cyclic(3))
    assert dict(got.items()) == {1: 1, 3: 8, 9: 18}


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60),
       st.integers(min_value=1, max_value=60))
def test_spectrum_product_commutative_associative(a, b, c):
    sa, sb, sc = spectrum_cyclic(a), spectrum_cyclic(b), spectrum_cyclic(c)
    assert spectrum_product(sa, sb) == spectrum_product(sb, sa)
    assert (spectrum_product(spectrum_product(sa, sb), sc)
            == spectrum_product(sa, spectrum_product(sb, sc)))


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=120), st.integers(min_value=1, max_value=120))
def test_phi_sum_multiplicative_on_coprime_cyclic_factors(a, b):
    import math
    if math.gcd(a, b) != 1:
        b = 1
    combined = phi_sum(spectrum_product(spectrum_cyclic(a), spectrum_cyclic(b)))
    assert combined == phi_sum(spectrum_cyclic(a)) * phi_sum(spectrum_cyclic(b))


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

Q8_SPECTRUM = OrderSpectrum({1: 1, 2: 1, 4: 6})
D8_SPECTRUM = OrderSpectrum({1: 1, 2: 5, 4: 2})


def test_order_sum_examples():
    assert order_sum(spectrum_cyclic(1)) == 1
    assert order_sum(Q8_SPECTRUM) == 27
    assert order_sum(D8_SPECTRUM) == 19


def test_phi_sum_examples():
    assert phi_sum(spectrum_cyclic(3)) == 5
    assert phi_sum(spectrum_cyclic(9)) == 41
    assert phi_sum(spectrum_product(spectrum_cyclic(9), spectrum_cyclic(3))) == 125
    assert phi_sum(spectrum_product(spectrum_cyclic(3), spectrum_cyclic(3))) == 17


def test_edge_count_examples():
    assert directed_arcs(spectrum_cyclic(1)) == 0
    assert directed_arcs(spectrum_cyclic(3)) == 4
    assert directed_arcs(Q8_SPECTRUM) == 19
    assert mutual_edges(spectrum_cyclic(1)) == 0
    assert mutual_edges(spectrum_cyclic(6)) == 2
    s93 = spectrum_product(spectrum_cyclic(9), spectrum_cyclic(3))
    assert mutual_edges(s93) == 49
    assert undirected_edges(Q8_SPECTRUM) == 16
    elementary8 = OrderSpectrum({1: 1, 2: 7})
    assert undirected_edges(elementary8) == 7
    c4xc2 = spectrum_product(spectrum_cyclic(4), spectrum_cyclic(2))
    assert undirected_edges(c4xc2) == 13


def test_parity_guards_reject_corrupt_spectrum():
    corrupt = OrderSpectrum({1: 1, 2: 2, 4: 1})   # passes cheap checks, phi-size odd
    with pytest.raises(InvariantError):
        mutual_edges(corrupt)
    with pytest.raises(InvariantError):
        undirected_edges(corrupt)


def test_phi_cyclic_prime_power_closed_form():
    assert phi_cyclic_prime_power(3, 0) == 1
    assert phi_cyclic_prime_power(3, 2) == 41
    assert phi_cyclic_prime_power(5, 2) == 417
    for p in (2, 3, 5, 7, 43):
        for m in range(0, 7):
            if p ** m > 4000:
                break
            assert phi_cyclic_prime_power(p, m) == phi_sum(spectrum_cyclic(p ** m))
    with pytest.raises(InputError):
        phi_cyclic_prime_power(6, 2)
    with pytest.raises(InputError):
        phi_cyclic_prime_power(3, -1)


def test_group_stats_consistency_enforced():
    ok = GroupStats("C6", 6, 21, 10, 15, 2, 13)
    assert ok.to_csv_row() == ["C6", "6", "21", "10", "15", "2", "13"]
    assert ok.to_json_dict()["undirected_edges"] == 13
    with pytest.raises(InvariantError):
        GroupStats("bad", 6, 21, 10, 14, 2, 13)    # arcs != sigma - size
    with pytest.raises(InvariantError):
        GroupStats("bad", 6, 21, 10, 15, 3, 13)    # mutual pairs off by one
    with pytest.raises(InvariantError):
        GroupStats("bad", 6, 21, 10, 15, 2, 12)    # edge identity broken
    with pytest.raises(InvariantError):
        GroupStats("bad", 0, 0, 0, 0, 0, 0)


def test_stats_from_spectrum_anchors():
    c6 = stats_from_spectrum("C6", spectrum_cyclic(6))
    assert (c6.size, c6.sigma, c6.phi_sum, c6.directed_arcs,
            c6.mutual_edges, c6.undirected_edges) == (6, 21, 10, 15, 2, 13)
    q8 = stats_from_spectrum("Q8", Q8_SPECTRUM)
    assert (q8.size, q8.sigma, q8.phi_sum, q8.directed_arcs,
            q8.mutual_edges, q8.undirected_edges) == (8, 27, 14, 19, 3, 16)
    c1 = stats_from_spectrum("C1", spectrum_cyclic(1))
    assert (c1.directed_arcs, c1.mutual_edges, c1.undirected_edges) == (0, 0, 0)


def test_group_stats_from_table():
    st_ = group_stats(cyclic(6))
    assert st_.name == "C6" and st_.undirected_edges == 13


def test_order_spectrum_identity_anchor():
    table = [[0, 1], [1, 0]]
    g = GroupTable(2, 0, table=__import__("numpy").array(table))
    assert dict(order_spectrum(g).items()) == {1: 1, 2: 1}
