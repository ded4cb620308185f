import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, family, group
from negk.chartab import _dixon, character_table, fs_indicators, rational_character_classes
from negk.cyclotomic import CyclotomicNumber as Z
from negk.verify import CHARACTER_CHECKS


def test_cyclic4_linear_characters():
    tbl = character_table(family("Cyclic(4)"))
    assert tbl.degrees == [1, 1, 1, 1]
    fourth_roots = {Z.zeta(4, j) for j in range(4)}
    assert all(v in fourth_roots for chi in tbl.characters for v in chi)


def test_q16_degrees_and_indicators():
    tbl = character_table(family("Dicyclic(4)"))
    assert tbl.degrees == [1, 1, 1, 1, 2, 2, 2]
    nus = fs_indicators(tbl)
    assert nus[:4] == [1, 1, 1, 1]
    assert sorted(nus[4:]) == [-1, -1, 1]


def test_q8_indicator():
    tbl = character_table(family("Dicyclic(2)"))
    assert fs_indicators(tbl) == [1, 1, 1, 1, -1]


def test_c3_indicators_and_orbits():
    tbl = character_table(family("Cyclic(3)"))
    assert fs_indicators(tbl) == [1, 0, 0]
    orbits = rational_character_classes(tbl)
    assert sorted(len(o.members) for o in orbits) == [1, 2]


def test_a5_golden_ratio_values():
    tbl = character_table(family("Alt(5)"))
    assert tbl.degrees == [1, 3, 3, 4, 5]
    phi = (1 + (Z.zeta(5) - Z.zeta(5, 2) - Z.zeta(5, 3) + Z.zeta(5, 4))) / 2
    values = {v for chi in tbl.characters for v in chi}
    assert phi in values or (1 - phi) in values


def test_sl25_table_shape():
    tbl = character_table(family("SL(2,5)"))
    assert sorted(tbl.degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert sum(nu == -1 for nu in fs_indicators(tbl)) == 4


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["Sym(4)", "Dicyclic(3)", "SL(2,3)", "Dihedral(10)"]), st.integers(1, 10_000))
def test_dixon_independent_of_seed(expr, seed):
    G = family(expr)
    assert _dixon(G, seed).characters == character_table(G).characters


@pytest.mark.parametrize("key", [e.key for e in CATALOG if e.order <= 32])
def test_character_properties(key):
    G = group(key)
    for name, check in CHARACTER_CHECKS.items():
        assert check(G) == [], name
