import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, family, group
from negk.numtheory import euler_phi, prime_divisors
from negk.schur import (BRAUER_WITT, INF, CyclotomicAlgebra, _quaternion_split, _two_part_noncyclic,
                        algebra_local_index, algebra_local_indices, format_k_minus_one, galois_t_m,
                        hilbert_symbol, k_minus_one, local_indices, places_over, quaternion_shortcut,
                        strong_shoda_pairs)


@pytest.mark.parametrize("a,b,p,val", [
    (-1, -1, INF, -1), (-1, -1, 2, -1), (-1, -1, 3, 1),
    (-3, 2, 3, -1), (-3, 2, 2, -1), (-3, 2, INF, 1),
    (2, 5, 5, -1), (3, 7, 7, -1), (5, 7, 2, 1), (-1, 3, 3, -1),
])
def test_hilbert_symbol_values(a, b, p, val):
    assert hilbert_symbol(a, b, p) == val


@settings(max_examples=200, deadline=None)
@given(st.integers(-60, 60).filter(bool), st.integers(-60, 60).filter(bool))
def test_hilbert_product_formula(a, b):
    places = [INF] + sorted(set(prime_divisors(abs(2 * a * b))))
    prod = 1
    for p in places:
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1
    assert hilbert_symbol(a, b, 2) == hilbert_symbol(b, a, 2)


@pytest.mark.parametrize("expr,r,s", [
    ("Cyclic(1)", 0, 0), ("Dicyclic(2)", 0, 0), ("Dicyclic(4)", 0, 1), ("Dicyclic(5)", 1, 1),
    ("Dicyclic(6)", 2, 1), ("SL(2,3)", 1, 0), ("SL(2,5)", 2, 1), ("BinO", 1, 1),
])
def test_k_minus_one_values(expr, r, s):
    res = k_minus_one(family(expr))
    assert (res.r, res.s) == (r, s)


def test_format():
    assert format_k_minus_one(0, 0) == "0"
    assert format_k_minus_one(2, 1) == "Z^2 + Z/2"
    assert format_k_minus_one(1, 3) == "Z + (Z/2)^3"


def test_cyclic_shoda_pairs_cover_dimension():
    for n in (1, 6, 12, 15):
        pairs = strong_shoda_pairs(family(f"Cyclic({n})"))
        assert sum(euler_phi(p.k) for p in pairs) == n


def test_quaternion_component_of_q8():
    res = k_minus_one(family("Dicyclic(2)"))
    quat = [sd for sd in res.schur_data if sd.global_index == 2]
    assert len(quat) == 1
    assert dict(quat[0].local_indices) == {2: 2, INF: 2}


def test_exact_quaternion_split_oracle():
    # the degree-4 component of C3 : Q16 is (-1,-1) x (-3,2) over Q by hand:
    # ramified at 3 and infinity, split at 2
    res = k_minus_one(group((48, 18)))
    alg = next(c.algebra for c in res.components if c.rational_class.degree == 4)
    assert alg.k == 12 and len(alg.gamma) == 4
    got, settled = algebra_local_indices(alg)
    assert got == {2: 1, 3: 2, INF: 2} and settled == ()


def test_exact_split_agrees_with_root_of_unity_split():
    """Both splittings of the 2-part agree wherever the root-of-unity one succeeds."""
    seen = 0
    for e in CATALOG:
        res = k_minus_one(group(e.key))
        for comp in res.components:
            alg = comp.algebra
            if alg.k <= 2 or len(alg.gamma) != euler_phi(alg.k) or not alg.cocycle:
                continue
            if any(pow(t, 2, alg.k) != 1 for t in alg.gamma):
                continue
            for p in prime_divisors(alg.k):
                if not (p == 2 or p % 4 == 3):
                    continue
                T = list(galois_t_m(alg.k, p))
                D = [t for t in alg.gamma if t in set(T)]
                if len(D) != len(alg.gamma):
                    continue
                fast = _two_part_noncyclic(alg, p, T, D)
                if fast is None:
                    continue
                assert _quaternion_split(alg, p, D) == fast, (e.key, alg, p)
                seen += 1
    assert seen > 0


def test_quaternion_shortcut_cross_check():
    checked = 0
    for e in CATALOG:
        G = group(e.key)
        primes = prime_divisors(G.order) if G.order > 1 else []
        res = k_minus_one(G)
        for comp, sd in zip(res.components, res.schur_data):
            alt = quaternion_shortcut(comp, primes)
            if alt is not None and comp.provenance != BRAUER_WITT:
                assert alt.local_indices == sd.local_indices, e.key
                checked += 1
    assert checked > 10


@pytest.mark.parametrize("key", [e.key for e in CATALOG])
def test_hasse_reciprocity_parity(key):
    """Ramified places come in even number (2-parts only, counting conjugate places)."""
    res = k_minus_one(group(key))
    for comp in res.components:
        if comp.provenance == BRAUER_WITT:
            continue
        own, _ = algebra_local_indices(comp.algebra)
        F = comp.algebra.center
        if any(i > 2 for i in own.values()):
            continue
        total = sum(places_over(F, v) for v, i in own.items() if i == 2)
        assert total % 2 == 0, (key, comp.algebra)


@pytest.mark.parametrize("key", [e.key for e in CATALOG])
def test_local_indices_consistent(key):
    G = group(key)
    primes = prime_divisors(G.order) if G.order > 1 else []
    for comp in k_minus_one(G).components:
        sd = local_indices(comp, primes)
        sd.check()
        assert sd.index_at(INF) == (2 if comp.rational_class.fs_indicator == -1 else 1)


def test_infinite_index_of_real_quaternion():
    alg = CyclotomicAlgebra(4, (1, 3), ((1, 0), (3, 2)))
    assert algebra_local_index(alg, INF) == 2
    assert algebra_local_index(alg, 2) == 2
