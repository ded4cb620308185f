"""Free rank r(G) of K_{-1}(Z[G]) from rational and p-adic class counts."""

from __future__ import annotations

from dataclasses import dataclass

from .group import ConjClass, FiniteGroup, power_class
from .numtheory import GaloisSubgroup, galois_t_m, partition_by, prime_divisors, unit_group


@dataclass(frozen=True)
class RankBreakdown:
    r_Q: int
    singular: tuple[tuple[int, int], ...]  # (p, number of p-singular Q_p-classes)
    r: int

    def check(self) -> None:
        assert self.r == 1 - self.r_Q + sum(c for _, c in self.singular)


def _by_order(cc: list[ConjClass]) -> list[list[ConjClass]]:
    orders = sorted({c.element_order for c in cc})
    return [[c for c in cc if c.element_order == o] for o in orders]


def _galois_related(G: FiniteGroup, T) -> callable:
    def rel(c: ConjClass, d: ConjClass) -> bool:
        return any(power_class(G, c, t) == d for t in T)
    return rel


def rational_classes(cc: list[ConjClass], G: FiniteGroup) -> list[list[ConjClass]]:
    """Classes grouped by rational conjugacy (same cyclic subgroup up to conjugation)."""
    rel = _galois_related(G, unit_group(G.exponent))
    cells = []
    for bucket in _by_order(cc):
        cells.extend(partition_by(bucket, rel))
    cells.sort(key=lambda cell: min(cc.index(c) for c in cell))
    return cells


def qp_conjugate(p: int, c: ConjClass, d: ConjClass, m: int, G: FiniteGroup) -> bool:
    T = galois_t_m(m, p)
    return any(power_class(G, c, t) == d for t in T)


def singular_qp_classes(cc: list[ConjClass], p: int, G: FiniteGroup) -> list[list[ConjClass]]:
    """Q_p-conjugacy cells of the p-singular classes."""
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    T: GaloisSubgroup = galois_t_m(G.exponent, p)
    rel = _galois_related(G, T)
    cells = []
    for bucket in _by_order(cc):
        if bucket[0].element_order % p == 0:
            cells.extend(partition_by(bucket, rel))
    cells.sort(key=lambda cell: min(cc.index(c) for c in cell))
    return cells


def r_of_group(G: FiniteGroup) -> RankBreakdown:
    cc = G.classes
    r_Q = len(rational_classes(cc, G))
    singular = tuple((p, len(singular_qp_classes(cc, p, G))) for p in prime_divisors(G.order)) \
        if G.order > 1 else ()
    r = 1 - r_Q + sum(c for _, c in singular)
    if r < 0:
        raise AssertionError(f"negative free rank {r} for {G.label or G}")
    return RankBreakdown(r_Q, singular, r)


def cyclic_subgroup_classes(G: FiniteGroup) -> int:
    """Brute-force count of conjugacy classes of cyclic subgroups (independent oracle)."""
    subs = {G.closure([x]) for x in range(G.order)}
    seen: set[frozenset] = set()
    count = 0
    inv = G.inverse
    for H in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if H in seen:
            continue
        count += 1
        for g in range(G.order):
            seen.add(frozenset(int(G.mult[G.mult[inv[g], h], g]) for h in H))
    return count


def fp_regular_classes(G: FiniteGroup, p: int) -> int:
    """r_{F_p}: number of F_p-conjugacy classes of p-regular elements (Berman), small groups only."""
    m = G.exponent
    # Gal(F_p(zeta_m'):F_p) acts via powers of p on p-regular elements
    T = [pow(p, i, m) for i in range(1, m + 1)] if m > 1 else [1]
    cc = [c for c in G.classes if c.element_order % p]
    rel = _galois_related(G, T)
    return len(partition_by(cc, rel))


def qp_all_classes(G: FiniteGroup, p: int) -> int:
    """r_{Q_p}: Q_p-conjugacy classes of all elements (Berman in characteristic 0)."""
    rel = _galois_related(G, galois_t_m(G.exponent, p))
    return sum(len(partition_by(b, rel)) for b in _by_order(G.classes))
