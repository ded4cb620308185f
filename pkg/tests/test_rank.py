import pytest

from conftest import CATALOG, family, group
from negk.rank import (cyclic_subgroup_classes, qp_all_classes, qp_conjugate, r_of_group, rational_classes,
                       singular_qp_classes)


def cells(expr):
    G = family(expr)
    return G, rational_classes(G.classes, G)


def test_cyclic4_cells():
    G, cs = cells("Cyclic(4)")
    assert sorted(sum(c.size for c in cell) for cell in cs) == [1, 1, 2]


def test_cyclic6_cells():
    assert len(cells("Cyclic(6)")[1]) == 4


def _cls(G, order, power=1):
    x = next(c.representative for c in G.classes if c.element_order == order)
    return G.classes[int(G.class_of[G.power(x, power)])]


def test_qp_conjugacy_examples():
    C6 = family("Cyclic(6)")
    assert qp_conjugate(2, _cls(C6, 6), _cls(C6, 6, 5), 6, C6)
    C8 = family("Cyclic(8)")
    assert qp_conjugate(2, _cls(C8, 8), _cls(C8, 8, 3), 8, C8)
    C7 = family("Cyclic(7)")
    # 3 is not a power of 2 mod 7
    assert not qp_conjugate(2, _cls(C7, 7), _cls(C7, 7, 3), 7, C7)


def test_singular_cells():
    C6 = family("Cyclic(6)")
    assert len(singular_qp_classes(C6.classes, 2, C6)) == 2
    assert len(singular_qp_classes(C6.classes, 3, C6)) == 2
    Q = family("Dicyclic(4)")
    cs = singular_qp_classes(Q.classes, 2, Q)
    # {a^4}, {a^2}, {a, a^3}, {b}, {ab}: one less than the six cyclic subgroup classes, so r = 0
    assert len(cs) == 5
    assert sum(len(c) for c in cs) == len(Q.classes) - 1
    with pytest.raises(ValueError):
        singular_qp_classes(C6.classes, 5, C6)


@pytest.mark.parametrize("expr,r", [
    ("Cyclic(1)", 0), ("Cyclic(6)", 1), ("Cyclic(12)", 2), ("Cyclic(14)", 2), ("Cyclic(15)", 1),
    ("Dicyclic(4)", 0), ("Sym(4)", 0), ("SL(2,5)", 2), ("Prod(Cyclic(6),Prod(Cyclic(2),Cyclic(2)))", 7),
])
def test_rank_values(expr, r):
    rb = r_of_group(family(expr))
    rb.check()
    assert rb.r == r


def test_rank_c15_by_hand():
    # four cyclic subgroups; orders 3, 15 form one Q_3 cell each, orders 5, 15 one Q_5 cell each
    rb = r_of_group(family("Cyclic(15)"))
    assert rb.r_Q == 4 and dict(rb.singular) == {3: 2, 5: 2}


@pytest.mark.parametrize("key", [e.key for e in CATALOG if e.order <= 32])
def test_rational_cells_are_cyclic_subgroup_classes(key):
    G = group(key)
    assert len(rational_classes(G.classes, G)) == cyclic_subgroup_classes(G)


@pytest.mark.parametrize("key", [e.key for e in CATALOG if e.order <= 28])
def test_qp_cells_bounded(key):
    G = group(key)
    nq = len(rational_classes(G.classes, G))
    for p in {p for p in range(2, G.order + 1) if G.order % p == 0 and all(p % d for d in range(2, p))}:
        assert nq <= qp_all_classes(G, p) <= len(G.classes)
