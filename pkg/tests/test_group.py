import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negk.families import FamilyError, builtin_group, parse_family_expr
from negk.group import (CycleParseError, FiniteGroup, GroupSizeError, check_group_axioms, direct_product,
                        format_cycles, group_from_generators, normal_subgroups, parse_cycles,
                        power_class, quotient_group)
from negk.presentation import group_from_presentation, parse_presentation


def test_cycle_notation_roundtrip():
    p = parse_cycles("(1,3,2)(4,5)")
    assert p == (2, 0, 1, 4, 3)
    assert format_cycles(p) == "(1,3,2)(4,5)"
    assert parse_cycles("()") == ()


def test_cycle_parse_error():
    with pytest.raises(CycleParseError):
        parse_cycles("(1,2")


def test_order_cap():
    with pytest.raises(GroupSizeError):
        group_from_generators(["(1,2)", "(1,2,3,4,5,6,7)"], cap=100)


def test_cyclic_basics():
    C6 = builtin_group("Cyclic(6)")
    assert C6.order == 6 and C6.exponent == 6
    C5 = builtin_group("Cyclic(5)")
    assert [c.size for c in C5.classes] == [1] * 5


def test_q16_invariants():
    Q = builtin_group("Dicyclic(4)")
    assert Q.order == 16 and Q.exponent == 8
    assert int(np.count_nonzero(Q.element_order == 2)) == 1
    assert len(Q.classes) == 7
    assert len(Q.center) == 2
    D = quotient_group(Q, Q.center)
    assert D.order == 8 and len(D.classes) == 5


def test_power_class_cyclic4():
    C4 = builtin_group("Cyclic(4)")
    g = next(c for c in C4.classes if c.element_order == 4)
    g3 = power_class(C4, g, 3)
    assert g3.representative == C4.power(g.representative, 3)
    assert g3 != g


def test_normal_subgroups():
    assert [N.order for N in normal_subgroups(builtin_group("Cyclic(7)"))] == [1, 7]
    assert [N.order for N in normal_subgroups(builtin_group("Sym(4)"))] == [1, 4, 12, 24]
    Q = builtin_group("Dicyclic(4)")
    assert any(N.order == 2 and set(N.members) == set(Q.center) for N in normal_subgroups(Q))


def test_quotient_cyclic6():
    C6 = builtin_group("Cyclic(6)")
    N = next(N for N in normal_subgroups(C6) if N.order == 2)
    assert quotient_group(C6, N).order == 3


def test_families():
    assert builtin_group("SL(2,3)").order == 24
    assert builtin_group("SL(2,5)").order == 120
    assert builtin_group("BinO").order == 48
    assert builtin_group("Alt(5)").order == 60
    assert builtin_group("Dihedral(8)").order == 8
    assert builtin_group("Prod(Cyclic(2),Dicyclic(4))").order == 32
    assert parse_family_expr("Q16") == ("Dicyclic", [4])
    with pytest.raises(FamilyError):
        builtin_group("Dihedral(7)")
    with pytest.raises(FamilyError):
        builtin_group("Foo(2)")


def test_presentation_q8():
    names, rels = parse_presentation("<a,b | a^4, b^2=a^2, b^-1*a*b=a^-1>")
    G = group_from_presentation(names, rels)
    assert G.order == 8 and int(np.count_nonzero(G.element_order == 2)) == 1


def test_corrupted_table_reports_identity_failure():
    good = builtin_group("Cyclic(4)")
    bad = np.array(good.mult)
    bad[0, 1], bad[0, 2] = bad[0, 2], bad[0, 1]
    G = FiniteGroup(bad, good.generators, "broken")
    assert "identity law fails" in check_group_axioms(G)


def test_direct_product_order():
    G = direct_product(builtin_group("Cyclic(2)"), builtin_group("Sym(3)"))
    assert G.order == 12 and check_group_axioms(G) == []


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["Cyclic(12)", "Dihedral(12)", "Dicyclic(3)", "Sym(4)", "Alt(4)", "SL(2,3)"]),
       st.data())
def test_group_laws(expr, data):
    G = builtin_group(expr)
    x, y = data.draw(st.integers(0, G.order - 1)), data.draw(st.integers(0, G.order - 1))
    assert G.mult[x, G.inverse[x]] == 0
    # |class| * |centralizer| = |G|
    c = G.classes[int(G.class_of[x])]
    assert c.size * len(G.centralizer([x])) == G.order
    # conjugation preserves order
    assert G.element_order[G.conj(x, y)] == G.element_order[x]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["Dihedral(12)", "Dicyclic(4)", "Sym(4)", "Prod(Cyclic(2),Sym(3))"]))
def test_quotients_are_groups(expr):
    G = builtin_group(expr)
    for N in normal_subgroups(G):
        Q = quotient_group(G, N)
        assert Q.order * N.order == G.order
        assert check_group_axioms(Q) == []
