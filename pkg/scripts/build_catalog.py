"""Regenerate catalog/leq28.cat and catalog/s-positive-100.cat.

Every entry is built from a family expression or a finite presentation (the
latter through coset enumeration, giving the regular representation). Entries
of the same order must have distinct invariant fingerprints, which rules out
two labels landing on one isomorphism class.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from negk.catalog import CatalogEntry, group_checks, write_catalog
from negk.families import family_perms, parse_family_expr
from negk.group import group_from_generators
from negk.presentation import parse_presentation, presentation_perms

# (order, index, name, construction)
LEQ28 = [
    (1, 1, "1", "Cyclic(1)"),
    (2, 1, "C2", "Cyclic(2)"),
    (3, 1, "C3", "Cyclic(3)"),
    (4, 1, "C4", "Cyclic(4)"),
    (4, 2, "C2 x C2", "Prod(Cyclic(2),Cyclic(2))"),
    (5, 1, "C5", "Cyclic(5)"),
    (6, 1, "S3", "Sym(3)"),
    (6, 2, "C6", "Cyclic(6)"),
    (7, 1, "C7", "Cyclic(7)"),
    (8, 1, "C8", "Cyclic(8)"),
    (8, 2, "C4 x C2", "Prod(Cyclic(4),Cyclic(2))"),
    (8, 3, "D8", "Dihedral(8)"),
    (8, 4, "Q8", "Dicyclic(2)"),
    (8, 5, "C2 x C2 x C2", "Prod(Cyclic(2),Prod(Cyclic(2),Cyclic(2)))"),
    (9, 1, "C9", "Cyclic(9)"),
    (9, 2, "C3 x C3", "Prod(Cyclic(3),Cyclic(3))"),
    (10, 1, "D10", "Dihedral(10)"),
    (10, 2, "C10", "Cyclic(10)"),
    (11, 1, "C11", "Cyclic(11)"),
    (12, 1, "Dic3", "Dicyclic(3)"),
    (12, 2, "C12", "Cyclic(12)"),
    (12, 3, "A4", "Alt(4)"),
    (12, 4, "D12", "Dihedral(12)"),
    (12, 5, "C6 x C2", "Prod(Cyclic(6),Cyclic(2))"),
    (13, 1, "C13", "Cyclic(13)"),
    (14, 1, "D14", "Dihedral(14)"),
    (14, 2, "C14", "Cyclic(14)"),
    (15, 1, "C15", "Cyclic(15)"),
    (16, 1, "C16", "Cyclic(16)"),
    (16, 2, "C4 x C4", "Prod(Cyclic(4),Cyclic(4))"),
    (16, 3, "(C4 x C2) : C2", "<a,b,c | a^4, b^2, c^2, a*b=b*a, b*c=c*b, c*a*c^-1=a*b>"),
    (16, 4, "C4 : C4", "<a,b | a^4, b^4, b^-1*a*b=a^-1>"),
    (16, 5, "C8 x C2", "Prod(Cyclic(8),Cyclic(2))"),
    (16, 6, "C8 : C2", "<a,b | a^8, b^2, b*a*b^-1=a^5>"),
    (16, 7, "D16", "Dihedral(16)"),
    (16, 8, "QD16", "<a,b | a^8, b^2, b*a*b^-1=a^3>"),
    (16, 9, "Q16", "Dicyclic(4)"),
    (16, 10, "C4 x C2 x C2", "Prod(Cyclic(4),Prod(Cyclic(2),Cyclic(2)))"),
    (16, 11, "C2 x D8", "Prod(Cyclic(2),Dihedral(8))"),
    (16, 12, "C2 x Q8", "Prod(Cyclic(2),Dicyclic(2))"),
    (16, 13, "Pauli", "<a,b,c | a^4, b^2, c^2, a*b=b*a, a*c=c*a, c*b*c^-1=a^2*b>"),
    (16, 14, "C2 x C2 x C2 x C2", "Prod(Prod(Cyclic(2),Cyclic(2)),Prod(Cyclic(2),Cyclic(2)))"),
    (17, 1, "C17", "Cyclic(17)"),
    (18, 1, "D18", "Dihedral(18)"),
    (18, 2, "C18", "Cyclic(18)"),
    (18, 3, "C3 x S3", "Prod(Cyclic(3),Sym(3))"),
    (18, 4, "(C3 x C3) : C2", "<a,b,c | a^3, b^3, c^2, a*b=b*a, c*a*c^-1=a^-1, c*b*c^-1=b^-1>"),
    (18, 5, "C6 x C3", "Prod(Cyclic(6),Cyclic(3))"),
    (19, 1, "C19", "Cyclic(19)"),
    (20, 1, "Dic5", "Dicyclic(5)"),
    (20, 2, "C20", "Cyclic(20)"),
    (20, 3, "F5", "<a,b | a^5, b^4, b*a*b^-1=a^2>"),
    (20, 4, "D20", "Dihedral(20)"),
    (20, 5, "C10 x C2", "Prod(Cyclic(10),Cyclic(2))"),
    (21, 1, "C7 : C3", "<a,b | a^7, b^3, b*a*b^-1=a^2>"),
    (21, 2, "C21", "Cyclic(21)"),
    (22, 1, "D22", "Dihedral(22)"),
    (22, 2, "C22", "Cyclic(22)"),
    (23, 1, "C23", "Cyclic(23)"),
    (24, 1, "C3 : C8", "<a,b | a^3, b^8, b*a*b^-1=a^-1>"),
    (24, 2, "C24", "Cyclic(24)"),
    (24, 3, "SL(2,3)", "SL(2,3)"),
    (24, 4, "Dic6", "Dicyclic(6)"),
    (24, 5, "C4 x S3", "Prod(Cyclic(4),Sym(3))"),
    (24, 6, "D24", "Dihedral(24)"),
    (24, 7, "C2 x Dic3", "Prod(Cyclic(2),Dicyclic(3))"),
    (24, 8, "(C6 x C2) : C2",
     "<a,r,s | a^3, r^4, s^2, s*r*s^-1=r^-1, r*a*r^-1=a^-1, s*a=a*s>"),
    (24, 9, "C12 x C2", "Prod(Cyclic(12),Cyclic(2))"),
    (24, 10, "C3 x D8", "Prod(Cyclic(3),Dihedral(8))"),
    (24, 11, "C3 x Q8", "Prod(Cyclic(3),Dicyclic(2))"),
    (24, 12, "S4", "Sym(4)"),
    (24, 13, "C2 x A4", "Prod(Cyclic(2),Alt(4))"),
    (24, 14, "C2 x C2 x S3", "Prod(Prod(Cyclic(2),Cyclic(2)),Sym(3))"),
    (24, 15, "C6 x C2 x C2", "Prod(Cyclic(6),Prod(Cyclic(2),Cyclic(2)))"),
    (25, 1, "C25", "Cyclic(25)"),
    (25, 2, "C5 x C5", "Prod(Cyclic(5),Cyclic(5))"),
    (26, 1, "D26", "Dihedral(26)"),
    (26, 2, "C26", "Cyclic(26)"),
    (27, 1, "C27", "Cyclic(27)"),
    (27, 2, "C9 x C3", "Prod(Cyclic(9),Cyclic(3))"),
    (27, 3, "Heisenberg", "<a,b,c | a^3, b^3, c^3, c=a^-1*b^-1*a*b, a*c=c*a, b*c=c*b>"),
    (27, 4, "C9 : C3", "<a,b | a^9, b^3, b*a*b^-1=a^4>"),
    (27, 5, "C3 x C3 x C3", "Prod(Cyclic(3),Prod(Cyclic(3),Cyclic(3)))"),
    (28, 1, "Dic7", "Dicyclic(7)"),
    (28, 2, "C28", "Cyclic(28)"),
    (28, 3, "D28", "Dihedral(28)"),
    (28, 4, "C14 x C2", "Prod(Cyclic(14),Cyclic(2))"),
]

S_POSITIVE = [
    (16, 9, "Q16", "Dicyclic(4)"),
    (20, 1, "Dic5", "Dicyclic(5)"),
    (24, 4, "Dic6", "Dicyclic(6)"),
    (32, 20, "Q32", "Dicyclic(8)"),
    (32, 41, "C2 x Q16", "Prod(Cyclic(2),Dicyclic(4))"),
    (32, 44, "C8.C2^2",
     "<a,b,c | a^8, b^2, c^2=a^4, b*a*b^-1=a^3, c*a*c^-1=a^-1, c*b*c^-1=a^4*b>"),
    (40, 1, "C5 : C8", "<a,b | a^5, b^8, b*a*b^-1=a^-1>"),
    (40, 4, "Dic10", "Dicyclic(10)"),
    (40, 7, "C2 x Dic5", "Prod(Cyclic(2),Dicyclic(5))"),
    (48, 8, "Dic12", "Dicyclic(12)"),
    (48, 18, "C3 : Q16",
     "<a,x,y | a^3, x^8, y^2=x^4, y^-1*x*y=x^-1, x*a*x^-1=a^-1, y*a=a*y>"),
    (48, 27, "C3 x Q16", "Prod(Cyclic(3),Dicyclic(4))"),
    (48, 28, "BinO", "BinO"),
    (48, 34, "C2 x Dic6", "Prod(Cyclic(2),Dicyclic(6))"),
    (52, 1, "Dic13", "Dicyclic(13)"),
    (56, 3, "Dic14", "Dicyclic(14)"),
    (60, 2, "C3 x Dic5", "Prod(Cyclic(3),Dicyclic(5))"),
    (60, 3, "Dic15", "Dicyclic(15)"),
    (64, 54, "Q64", "Dicyclic(16)"),
    (64, 120, "C4 x Q16", "Prod(Cyclic(4),Dicyclic(4))"),
    (64, 188, "C2 x Q32", "Prod(Cyclic(2),Dicyclic(8))"),
    (64, 252, "C2 x C2 x Q16", "Prod(Prod(Cyclic(2),Cyclic(2)),Dicyclic(4))"),
    (68, 1, "Dic17", "Dicyclic(17)"),
    (72, 4, "Dic18", "Dicyclic(18)"),
    (72, 26, "C3 x Dic6", "Prod(Cyclic(3),Dicyclic(6))"),
    (80, 1, "C5 : C16", "<a,b | a^5, b^16, b*a*b^-1=a^-1>"),
    (80, 8, "Dic20", "Dicyclic(20)"),
    (80, 9, "C2 x (C5 : C8)", "<a,b,c | a^5, b^8, c^2, b*a*b^-1=a^-1, a*c=c*a, b*c=c*b>"),
    (80, 11, "C4 x Dic5", "Prod(Cyclic(4),Dicyclic(5))"),
    (80, 27, "C5 x Q16", "Prod(Cyclic(5),Dicyclic(4))"),
    (80, 35, "C2 x Dic10", "Prod(Cyclic(2),Dicyclic(10))"),
    (80, 43, "C2 x C2 x Dic5", "Prod(Prod(Cyclic(2),Cyclic(2)),Dicyclic(5))"),
    (84, 5, "Dic21", "Dicyclic(21)"),
    (88, 3, "Dic22", "Dicyclic(22)"),
    (96, 8, "Dic24", "Dicyclic(24)"),
    (96, 63, "C3 x Q32", "Prod(Cyclic(3),Dicyclic(8))"),
    (96, 75, "C4 x Dic6", "Prod(Cyclic(4),Dicyclic(6))"),
    (96, 112, "C2 x Dic12", "Prod(Cyclic(2),Dicyclic(12))"),
    (96, 124, "Q16 x S3", "Prod(Dicyclic(4),Sym(3))"),
    (96, 181, "C6 x Q16", "Prod(Cyclic(6),Dicyclic(4))"),
    (96, 188, "C2 x BinO", "Prod(Cyclic(2),BinO)"),
    (96, 205, "C2 x C2 x Dic6", "Prod(Prod(Cyclic(2),Cyclic(2)),Dicyclic(6))"),
    (100, 1, "Dic25", "Dicyclic(25)"),
    (100, 6, "C5 x Dic5", "Prod(Cyclic(5),Dicyclic(5))"),
]

HEADERS = {
    "leq28.cat": """\
Every group of order <= 28, one entry per SmallGroups (order, index) key.
Names follow the structure descriptions of the published tables.
Generators: built-in family models (Cyclic, Dihedral, Dicyclic, Sym, Alt,
SL(2,3), products on disjoint points) or, where marked below, the regular
representation of a finite presentation obtained by coset enumeration:
  16,3  <a,b,c | a^4, b^2, c^2, [a,b], [b,c], a^c = ab>
  16,4  <a,b | a^4, b^4, a^b = a^-1>
  16,6  <a,b | a^8, b^2, a^b = a^5>
  16,8  <a,b | a^8, b^2, a^b = a^3>
  16,13 <a,b,c | a^4, b^2, c^2, [a,b], [a,c], b^c = a^2 b>
  18,4  <a,b,c | a^3, b^3, c^2, [a,b], a^c = a^-1, b^c = b^-1>
  20,3  <a,b | a^5, b^4, a^b = a^2>
  21,1  <a,b | a^7, b^3, a^b = a^2>
  24,1  <a,b | a^3, b^8, a^b = a^-1>
  24,8  C3 : D8 with kernel C2 x C2: <a,r,s | a^3, r^4, s^2, r^s = r^-1, a^r = a^-1, [a,s]>
  27,3  <a,b,c | a^3, b^3, c^3, c = [a,b], c central>
  27,4  <a,b | a^9, b^3, a^b = a^4>
Generated by scripts/build_catalog.py; regenerate rather than edit.""",
    "s-positive-100.cat": """\
Groups of order <= 100 with s > 0 that have a direct construction.
Families and products as in leq28.cat; presentations (regular representation):
  32,44  C8.C2^2 <a,b,c | a^8, b^2, c^2 = a^4, a^b = a^3, a^c = a^-1, b^c = a^4 b>
  40,1   C5 : C8, generator of C8 inverts C5
  48,18  C3 : Q16, kernel of the action is Q8 = <x^2, y>
  80,1   C5 : C16, generator of C16 inverts C5
  80,9   C2 x (C5 : C8)
Generated by scripts/build_catalog.py; regenerate rather than edit.""",
}


def generators(construction: str) -> list[str]:
    if construction.lstrip().startswith("<"):
        names, rels = parse_presentation(construction)
        return presentation_perms(names, rels)
    return family_perms(*parse_family_expr(construction))


def build(rows) -> list[CatalogEntry]:
    entries, fingerprints = [], Counter()
    for order, index, name, construction in rows:
        gens = generators(construction)
        G = group_from_generators(gens, name)
        if G.order != order:
            raise SystemExit(f"{order},{index} {name}: construction has order {G.order}")
        checks = group_checks(G)
        fp = (order, checks["classes"], checks["abelianization"], len(G.center),
              tuple(sorted(Counter(G.element_order.tolist()).items())))
        fingerprints[fp] += 1
        if fingerprints[fp] > 1:
            raise SystemExit(f"{order},{index} {name}: fingerprint collides with another entry")
        entries.append(CatalogEntry(order, index, name, tuple(gens), checks))
    return entries


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "catalog")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for fname, rows in (("leq28.cat", LEQ28), ("s-positive-100.cat", S_POSITIVE)):
        entries = build(rows)
        write_catalog(args.out / fname, entries, HEADERS[fname])
        print(f"{fname}: {len(entries)} groups", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
