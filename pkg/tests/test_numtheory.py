from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from negk.numtheory import (crt_pair, divisors, euler_phi, factorize, galois_t_m, is_prime,
                            multiplicative_order, p_part, prime_divisors, primitive_root)


def test_factorize_known():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(97) == ((97, 1),)


def test_euler_phi_known():
    assert [euler_phi(n) for n in (1, 2, 12, 15, 16, 100)] == [1, 1, 4, 8, 8, 40]


def test_p_part():
    assert p_part(48, 2) == 16 and p_part(48, 3) == 3 and p_part(48, 5) == 1


def test_galois_t_m_unramified_is_cyclic_power_of_p():
    assert tuple(galois_t_m(7, 2)) == (1, 2, 4)
    assert tuple(galois_t_m(15, 2)) == (1, 2, 4, 8)


def test_galois_t_m_ramified():
    # Q_2(zeta_8) is totally ramified: the full unit group
    assert tuple(galois_t_m(8, 2)) == (1, 3, 5, 7)
    # zeta_12 over Q_3: mu = 4, 3 generates {1, 3} mod 4
    assert tuple(galois_t_m(12, 3)) == (1, 5, 7, 11)
    assert tuple(galois_t_m(12, 2)) == (1, 5, 7, 11)
    # zeta_20 over Q_5: t must be 1 mod 4
    assert tuple(galois_t_m(20, 5)) == (1, 9, 13, 17)
    assert tuple(galois_t_m(20, 2)) == (1, 3, 7, 9, 11, 13, 17, 19)


def test_primitive_root():
    assert primitive_root(7) == 3 and primitive_root(23) == 5


@given(st.integers(2, 400), st.sampled_from([2, 3, 5, 7, 11]))
def test_t_m_is_subgroup_with_right_size(m, p):
    T = galois_t_m(m, p)
    T.check()
    q = p_part(m, p)
    mu = m // q
    # |T| = phi(q) * ord_mu(p)
    assert len(T) == euler_phi(q) * (multiplicative_order(p, mu) if mu > 1 else 1)


@given(st.integers(1, 5000))
def test_factorize_roundtrip(n):
    prod = 1
    for p, e in factorize(n):
        assert is_prime(p)
        prod *= p ** e
    assert prod == n
    assert prime_divisors(n) == [p for p, _ in factorize(n)]


@given(st.integers(1, 300))
def test_phi_counts_units(n):
    assert euler_phi(n) == sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)
    assert sum(euler_phi(d) for d in divisors(n)) == n


@given(st.integers(0, 100), st.integers(1, 40), st.integers(0, 100), st.integers(1, 40))
def test_crt(a, m, b, n):
    if gcd(m, n) != 1:
        return
    x = crt_pair(a, m, b, n)
    assert x % m == a % m and x % n == b % n and 0 <= x < m * n
