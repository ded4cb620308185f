"""Subgroups up to conjugacy, found by joining cyclic subgroups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .group import FiniteGroup, normal_subgroups, quotient_map


@dataclass(frozen=True)
class SubgroupClass:
    representative: frozenset[int]
    generators: tuple[int, ...]
    conjugates: int

    @property
    def order(self) -> int:
        return len(self.representative)


def _conj_perms(G: FiniteGroup) -> list[np.ndarray]:
    xs = np.arange(G.order)
    gens = G.generators or tuple(range(G.order))
    return [G.mult[G.mult[G.inverse[g], xs], g] for g in gens]


def _orbit(S: frozenset[int], perms: list[np.ndarray]) -> list[frozenset[int]]:
    seen = {S}
    queue = deque([S])
    while queue:
        T = queue.popleft()
        idx = np.fromiter(T, dtype=np.int64)
        for P in perms:
            U = frozenset(P[idx].tolist())
            if U not in seen:
                seen.add(U)
                queue.append(U)
    return list(seen)


def subgroup_classes(G: FiniteGroup) -> list[SubgroupClass]:
    """One representative per conjugacy class of subgroups, in discovery order.

    Discovery order is by increasing join depth: cyclic subgroups (by generator
    class), then joins of a representative with one cyclic subgroup, and so on.
    """
    cached = getattr(G, "_subgroup_classes", None)
    if cached is not None:
        return cached
    perms = _conj_perms(G)
    cyclic: dict[frozenset[int], int] = {}
    for x in range(G.order):
        C = G.closure([x])
        if C not in cyclic:
            cyclic[C] = x
    known: set[frozenset[int]] = set()
    classes: list[SubgroupClass] = []

    def add(S: frozenset[int], gens: tuple[int, ...]) -> bool:
        if S in known:
            return False
        orb = _orbit(S, perms)
        known.update(orb)
        classes.append(SubgroupClass(S, gens, len(orb)))
        return True

    add(frozenset([0]), ())
    frontier = []
    for c in G.classes:
        C = G.closure([c.representative])
        if add(C, (c.representative,)):
            frontier.append(classes[-1])
    while frontier:
        new = []
        for sc in frontier:
            S = sc.representative
            for C, x in cyclic.items():
                if C <= S:
                    continue
                J = G.closure(sc.generators + (x,), start=S)
                if add(J, sc.generators + (x,)):
                    new.append(classes[-1])
        frontier = new
    G._subgroup_classes = classes
    return classes


def cyclic_quotient_kernels(G: FiniteGroup, H: frozenset[int]) -> list[tuple[frozenset[int], int]]:
    """Normal subgroups K of H with H/K cyclic, each with an element generating H/K."""
    Hs, old = G.subgroup(H)
    out = []
    for N in normal_subgroups(Hs):
        qm = quotient_map(Hs, N.members)
        Q = qm.group
        if not Q.is_abelian() or Q.exponent != Q.order:
            continue
        orders = Q.element_order
        gen = next(x for x in range(Hs.order) if orders[qm.coset_of[x]] == Q.order)
        out.append((frozenset(int(old[i]) for i in N.members), int(old[gen])))
    return out
