import pytest

from conftest import CATALOG, group
from negk.catalog import (CatalogError, abelian_invariants, check_entry, derived_subgroup, group_checks,
                          load_catalog, parse_catalog, read_catalog, write_catalog)
from negk.families import builtin_group
from negk.group import quotient_group

SAMPLE = """# two groups
group 4 2 C2 x C2
# check classes=4 abelianization=2,2
gen (1,2)
gen (3,4)

group 6 1 S3
gen (1,2,3)
gen (1,2)
"""


def test_parse_sample():
    es = parse_catalog(SAMPLE)
    assert [e.key for e in es] == [(4, 2), (6, 1)]
    assert es[0].checks == {"classes": "4", "abelianization": "2,2"}
    assert es[1].build().order == 6


def test_roundtrip(tmp_path):
    es = parse_catalog(SAMPLE)
    path = tmp_path / "x.cat"
    write_catalog(path, es, header="test file")
    again = read_catalog(path)
    assert again == es
    assert [e.checks for e in again] == [e.checks for e in es]


@pytest.mark.parametrize("text", [
    "gen (1,2)\n",
    "group 4 x C4\n",
    "group 2 1 C2\ngen (1,2)\ngroup 2 1 C2\ngen (1,2)\n",
    "group 2 1 C2\nbogus\n",
])
def test_malformed(text):
    with pytest.raises(CatalogError):
        parse_catalog(text)


def test_order_mismatch():
    (e,) = parse_catalog("group 4 1 C4\ngen (1,2,3)\n")
    with pytest.raises(CatalogError):
        e.build()
    assert check_entry(e)


def test_abelian_invariants():
    assert abelian_invariants(builtin_group("Cyclic(12)")) == (3, 4)
    assert abelian_invariants(builtin_group("Prod(Cyclic(4),Cyclic(6))")) == (2, 3, 4)
    Q = builtin_group("Dicyclic(4)")
    assert abelian_invariants(quotient_group(Q, derived_subgroup(Q))) == (2, 2)
    assert group_checks(builtin_group("SL(2,5)"))["abelianization"] == "1"


def test_shipped_catalog_shape():
    keys = [e.key for e in CATALOG]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    counts = {}
    for e in CATALOG:
        counts[e.order] = counts.get(e.order, 0) + 1
    # number of groups of each order up to 28
    expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4]
    assert [counts.get(n, 0) for n in range(1, 29)] == expected


def test_env_override(tmp_path, monkeypatch):
    (tmp_path / "a.cat").write_text(SAMPLE)
    monkeypatch.setenv("NEGK_CATALOG_DIR", str(tmp_path))
    assert [e.key for e in load_catalog()] == [(4, 2), (6, 1)]


@pytest.mark.parametrize("key", [e.key for e in CATALOG])
def test_recorded_checks_hold(key):
    e = next(x for x in CATALOG if x.key == key)
    assert e.checks, "every shipped entry records its invariants"
    assert check_entry(e, group(key)) == []
