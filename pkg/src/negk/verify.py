"""Invariant suite run by ``negk verify`` and by the property tests.

Every check returns a list of failure messages; an empty list is a pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import CatalogEntry, check_entry
from .chartab import character_table, fs_indicators, rational_character_classes
from .group import FiniteGroup, check_group_axioms
from .numtheory import euler_phi, prime_divisors, unit_group
from .rank import cyclic_subgroup_classes, r_of_group, rational_classes
from .schur import BRAUER_WITT, INF, k_minus_one, schur_index


@dataclass
class GroupReport:
    label: str
    checks: dict[str, list[str]] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [f"{self.label}: {name}: {msg}" for name, msgs in self.checks.items() for msg in msgs]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    groups: list[GroupReport] = field(default_factory=list)

    @property
    def n_checks(self) -> int:
        return sum(len(g.checks) for g in self.groups)

    @property
    def failures(self) -> list[str]:
        return [f for g in self.groups for f in g.failures]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        bad = sum(not g.ok for g in self.groups)
        return (f"{len(self.groups)} groups, {self.n_checks} checks, "
                f"{len(self.failures)} failures in {bad} groups")


# -- character theory ------------------------------------------------------------------

def check_orthogonality(G: FiniteGroup) -> list[str]:
    tbl = character_table(G)
    n, r = G.order, len(tbl)
    out = []
    rows = tbl.inner_product_matrix()
    want = np.zeros_like(rows)
    want[np.arange(r), np.arange(r), 0] = n
    if not np.array_equal(rows, want):
        out.append("row orthogonality fails")
    cols = tbl.column_product_matrix()
    want = np.zeros_like(cols)
    want[np.arange(r), np.arange(r), 0] = n // G.class_sizes
    if not np.array_equal(cols, want):
        out.append("column orthogonality fails")
    return out


def check_degrees(G: FiniteGroup) -> list[str]:
    d = character_table(G).degrees
    total = sum(x * x for x in d)
    return [] if total == G.order else [f"sum of squared degrees {total} != {G.order}"]


def check_fs_sum(G: FiniteGroup) -> list[str]:
    tbl = character_table(G)
    lhs = sum(nu * d for nu, d in zip(fs_indicators(tbl), tbl.degrees))
    sq = G.mult[np.arange(G.order), np.arange(G.order)]
    rhs = int(np.count_nonzero(sq == 0))
    return [] if lhs == rhs else [f"sum nu(chi) chi(1) = {lhs}, but {rhs} square roots of 1"]


def check_galois_equivariance(G: FiniteGroup) -> list[str]:
    """chi(g^t) is again irreducible, and t -> permutation is a homomorphism."""
    tbl = character_table(G)
    m = G.exponent
    units = unit_group(m)
    try:
        perms = {t: tbl.galois_permutation(t) for t in units}
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        return [str(exc)]
    out = []
    for a in units:
        for b in units:
            if not np.array_equal(perms[a][perms[b]], perms[a * b % m if m > 1 else a]):
                out.append(f"Galois action not multiplicative at ({a}, {b})")
                return out
    return out


def check_berman(G: FiniteGroup) -> list[str]:
    orbits = len(rational_character_classes(character_table(G), check_berman=False))
    cells = len(rational_classes(G.classes, G))
    out = [] if orbits == cells else [f"{orbits} character orbits but {cells} rational class cells"]
    if G.order <= 64:
        brute = cyclic_subgroup_classes(G)
        if brute != cells:
            out.append(f"{cells} rational cells but {brute} classes of cyclic subgroups")
    return out


# -- Schur machinery -------------------------------------------------------------------

def check_schur(G: FiniteGroup) -> list[str]:
    res = k_minus_one(G)
    primes = prime_divisors(G.order) if G.order > 1 else []
    out = []
    dim = sum(c.rational_class.field_degree * c.rational_class.degree ** 2 for c in res.components)
    if dim != G.order:
        out.append(f"components have total dimension {dim}")
    for comp, sd in zip(res.components, res.schur_data):
        alg_dim = comp.matrix_size ** 2 * len(comp.algebra.gamma) * euler_phi(comp.algebra.k)
        if comp.provenance != BRAUER_WITT and alg_dim != comp.rational_class.field_degree * \
                comp.rational_class.degree ** 2:
            out.append(f"component of degree {comp.rational_class.degree} has dimension {alg_dim}")
        nu = comp.rational_class.fs_indicator
        if (sd.index_at(INF) == 2) != (nu == -1):
            out.append(f"infinite index {sd.index_at(INF)} but indicator {nu}")
        finite_odd = all(sd.index_at(p) % 2 for p in primes)
        by_index = schur_index(sd) % 2 == 0 and finite_odd
        by_fs = nu == -1 and finite_odd
        if by_index != by_fs:
            out.append(f"contribution tests disagree for degree {comp.rational_class.degree}")
    return out


def check_vanishing(G: FiniteGroup) -> list[str]:
    res = k_minus_one(G)
    out = []
    if G.is_abelian() and res.s:
        out.append(f"abelian group with s = {res.s}")
    if G.order % 4 and res.s:
        out.append(f"s = {res.s} although 4 does not divide {G.order}")
    if all(o == 1 or _prime_power(o) for o in G.element_order.tolist()) and res.r:
        out.append(f"r = {res.r} although every element has prime-power order")
    res.rank_breakdown.check()
    if r_of_group(G).r != res.r:
        out.append("rank is not reproducible")
    return out


def _prime_power(n: int) -> bool:
    return len(prime_divisors(n)) == 1


CHARACTER_CHECKS = {
    "orthogonality": check_orthogonality,
    "degrees": check_degrees,
    "fs-sum": check_fs_sum,
    "galois": check_galois_equivariance,
    "berman": check_berman,
}
SCHUR_CHECKS = {"schur": check_schur, "vanishing": check_vanishing}


def verify_group(G: FiniteGroup, entry: CatalogEntry | None = None, schur: bool = True) -> GroupReport:
    rep = GroupReport(G.label or f"order {G.order}")
    rep.checks["axioms"] = check_group_axioms(G)
    if rep.checks["axioms"]:
        return rep
    if entry is not None:
        rep.checks["catalog"] = check_entry(entry, G)
    suites = {**CHARACTER_CHECKS, **(SCHUR_CHECKS if schur else {})}
    for name, fn in suites.items():
        try:
            rep.checks[name] = fn(G)
        except Exception as exc:  # noqa: BLE001 - a crash is a failed check
            rep.checks[name] = [f"{type(exc).__name__}: {exc}"]
    return rep


def verify_entry(entry: CatalogEntry, schur: bool = True) -> GroupReport:
    label = f"{entry.order} {entry.index} {entry.name}"
    try:
        G = entry.build()
    except Exception as exc:  # noqa: BLE001
        return GroupReport(label, {"build": [str(exc)]})
    rep = verify_group(G, entry, schur)
    rep.label = label
    return rep


def verify_catalog(entries, schur: bool = True) -> VerifyReport:
    return VerifyReport([verify_entry(e, schur) for e in entries])
