"""Finite groups as explicit multiplication tables.

Elements are indexed 0..n-1 with the identity at 0.  ``mult[x, y]`` is the
index of ``x*y``; for permutation groups the product ``x*y`` applies ``x``
first, then ``y`` (points are 1-based in cycle notation, 0-based internally).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .numtheory import lcm

DEFAULT_ORDER_CAP = 2048


class GroupError(Exception):
    pass


class CycleParseError(GroupError, ValueError):
    pass


class GroupSizeError(GroupError):
    pass


class NotNormalError(GroupError, ValueError):
    pass


Perm = tuple[int, ...]


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse disjoint-cycle notation such as ``(1,2,3)(4,5)`` into a 0-based image tuple."""
    s = re.sub(r"\s+", "", text)
    if s in ("", "()"):
        return tuple(range(degree or 0))
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", s):
        raise CycleParseError(f"malformed cycle notation: {text!r}")
    cycles = [[int(p) for p in c.split(",")] for c in re.findall(r"\(([^()]*)\)", s)]
    pts = [p for c in cycles for p in c]
    if min(pts) < 1:
        raise CycleParseError(f"points are 1-based: {text!r}")
    if len(set(pts)) != len(pts):
        raise CycleParseError(f"cycles are not disjoint: {text!r}")
    deg = max(max(pts), degree or 0)
    img = list(range(deg))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def format_cycles(perm: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + ",".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) or "()"


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple[int, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class NormalSubgroupDesc:
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class FiniteGroup:
    """A fully enumerated finite group.

    Derived data (classes, power maps, ...) is computed lazily and cached; the
    multiplication table itself is never mutated after construction.
    """

    mult: np.ndarray
    generators: tuple[int, ...]
    label: str = ""
    perms: tuple[Perm, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.mult = np.ascontiguousarray(self.mult, dtype=np.int32)
        self.mult.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.mult, axis=1).astype(np.int32)
        return inv

    @cached_property
    def element_order(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        todo = np.ones(n, dtype=bool)
        while todo.any():
            hit = todo & (cur == 0)
            orders[hit] = k
            todo &= ~hit
            cur = self.mult[cur, np.arange(n)]
            k += 1
            if k > n + 1:
                raise GroupError("element order exceeds group order; table is not a group")
        return orders

    @cached_property
    def exponent(self) -> int:
        return lcm(*(int(o) for o in set(self.element_order.tolist())))

    def mul(self, x: int, y: int) -> int:
        return int(self.mult[x, y])

    def power(self, x: int, k: int) -> int:
        o = int(self.element_order[x])
        k %= o
        r = 0
        base = x
        while k:
            if k & 1:
                r = int(self.mult[r, base])
            base = int(self.mult[base, base])
            k >>= 1
        return r

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return int(self.mult[self.mult[self.inverse[g], x], g])

    # -- classes ---------------------------------------------------------------
    @cached_property
    def _classes(self) -> tuple[list[ConjClass], np.ndarray]:
        n = self.order
        gens = self.generators or tuple(range(n))
        inv = self.inverse
        class_of = -np.ones(n, dtype=np.int64)
        raw = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            orbit = [x]
            class_of[x] = len(raw)
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for g in gens:
                    z = int(self.mult[self.mult[inv[g], y], g])
                    if class_of[z] < 0:
                        class_of[z] = len(raw)
                        orbit.append(z)
                        queue.append(z)
            raw.append(sorted(orbit))
        eo = self.element_order
        raw.sort(key=lambda m: (int(eo[m[0]]), m[0]))
        classes = [ConjClass(m[0], tuple(m), int(eo[m[0]])) for m in raw]
        class_of = np.empty(n, dtype=np.int64)
        for i, c in enumerate(classes):
            class_of[list(c.members)] = i
        class_of.setflags(write=False)
        return classes, class_of

    @property
    def classes(self) -> list[ConjClass]:
        return self._classes[0]

    @property
    def class_of(self) -> np.ndarray:
        return self._classes[1]

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @cached_property
    def power_map(self) -> np.ndarray:
        """power_map[k, t] = index of the class containing rep_k^t, for t in 0..exponent-1."""
        m = self.exponent
        pm = np.empty((len(self.classes), m), dtype=np.int64)
        for k, c in enumerate(self.classes):
            seq = [0]
            for _ in range(c.element_order - 1):
                seq.append(int(self.mult[seq[-1], c.representative]))
            cls = self.class_of[seq]
            pm[k] = cls[np.arange(m) % c.element_order]
        pm.setflags(write=False)
        return pm

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(c.representative for c in self.classes if c.size == 1)

    def is_abelian(self) -> bool:
        return len(self.classes) == self.order

    # -- subgroups ---------------------------------------------------------------
    def closure(self, gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset[int]:
        """Subgroup generated by ``gens`` (together with the subgroup ``start``)."""
        gens = [g for g in set(gens) if g != 0]
        elems = set(start) | {0}
        queue = deque(elems)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.mult[x, g])
                if y not in elems:
                    elems.add(y)
                    queue.append(y)
        return frozenset(elems)

    def is_subgroup(self, members: Iterable[int]) -> bool:
        s = set(members)
        if 0 not in s:
            return False
        idx = np.fromiter(s, dtype=np.int64)
        prods = self.mult[np.ix_(idx, idx)]
        return set(np.unique(prods).tolist()) <= s

    def is_normal(self, members: Iterable[int]) -> bool:
        s = set(members)
        gens = self.generators or range(self.order)
        return all(self.conj(x, g) in s for x in s for g in gens)

    def normal_closure(self, elems: Iterable[int]) -> frozenset[int]:
        gens = set(elems)
        queue = deque(gens)
        allg = self.generators or tuple(range(self.order))
        while queue:
            x = queue.popleft()
            for g in allg:
                y = self.conj(x, g)
                if y not in gens:
                    gens.add(y)
                    queue.append(y)
        return self.closure(gens)

    def normalizer(self, members: Iterable[int]) -> frozenset[int]:
        s = frozenset(members)
        idx = np.fromiter(s, dtype=np.int64)
        out = []
        inv = self.inverse
        for g in range(self.order):
            conj = self.mult[self.mult[inv[g], idx], g]
            if set(conj.tolist()) <= s:
                out.append(g)
        return frozenset(out)

    def centralizer(self, members: Iterable[int]) -> frozenset[int]:
        idx = np.fromiter(set(members), dtype=np.int64)
        ok = np.all(self.mult[:, idx] == self.mult[idx, :].T, axis=1)
        return frozenset(np.nonzero(ok)[0].tolist())

    def subgroup(self, members: Iterable[int], label: str = "") -> tuple["FiniteGroup", np.ndarray]:
        """The subgroup on ``members`` as a FiniteGroup, plus the map new index -> old index."""
        elems = sorted(set(members))
        if elems[0] != 0:
            raise GroupError("subgroup must contain the identity")
        old = np.array(elems, dtype=np.int64)
        pos = -np.ones(self.order, dtype=np.int64)
        pos[old] = np.arange(len(old))
        table = pos[self.mult[np.ix_(old, old)]]
        if (table < 0).any():
            raise GroupError("members are not closed under multiplication")
        gens = _small_generating_set(table)
        return FiniteGroup(table, gens, label), old


def _small_generating_set(table: np.ndarray) -> tuple[int, ...]:
    n = table.shape[0]
    have = {0}
    gens = []
    # greedily add elements of largest order not yet covered
    orders = _orders_from_table(table)
    for x in sorted(range(n), key=lambda x: (-orders[x], x)):
        if x in have:
            continue
        gens.append(x)
        have = _closure_table(table, gens)
        if len(have) == n:
            break
    return tuple(gens)


def _orders_from_table(table: np.ndarray) -> list[int]:
    n = table.shape[0]
    out = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = int(table[y, x])
            k += 1
        out.append(k)
    return out


def _closure_table(table: np.ndarray, gens: list[int]) -> set[int]:
    elems = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(table[x, g])
            if y not in elems:
                elems.add(y)
                queue.append(y)
    return elems


def _compose(x: Perm, y: Perm) -> Perm:
    """x then y."""
    return tuple(y[i] for i in x)


def group_from_generators(perms: Sequence[str | Perm], label: str = "",
                          cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Close a list of permutations (cycle strings or 0-based image tuples) into a FiniteGroup.

    Elements are numbered breadth-first by word length in the generators; within
    one length, by lexicographic image tuple.
    """
    parsed = [parse_cycles(p) if isinstance(p, str) else tuple(p) for p in perms]
    degree = max([len(p) for p in parsed] + [1])
    parsed = [p + tuple(range(len(p), degree)) for p in parsed]
    ident = tuple(range(degree))
    gens = [p for p in parsed]
    index = {ident: 0}
    elems = [ident]
    parent = [(-1, -1)]
    level = [ident]
    while level:
        found = {}
        for x in level:
            xi = index[x]
            for gi, g in enumerate(gens):
                y = _compose(x, g)
                if y not in index and y not in found:
                    found[y] = (xi, gi)
        nxt = sorted(found)
        for y in nxt:
            index[y] = len(elems)
            elems.append(y)
            parent.append(found[y])
            if len(elems) > cap:
                raise GroupSizeError(f"group order exceeds cap {cap}")
        level = nxt
    n = len(elems)
    arr = np.array(elems, dtype=np.int64)
    lookup = {e: i for i, e in enumerate(elems)}
    # right multiplication by each generator
    right = np.empty((len(gens), n), dtype=np.int64)
    for gi, g in enumerate(gens):
        garr = np.array(g, dtype=np.int64)
        prods = garr[arr]  # rows: x then g
        right[gi] = [lookup[tuple(r)] for r in prods.tolist()]
    mult = np.empty((n, n), dtype=np.int64)
    mult[:, 0] = np.arange(n)
    for y in range(1, n):
        py, gi = parent[y]
        mult[:, y] = right[gi][mult[:, py]]
    gen_idx = tuple(dict.fromkeys(lookup[g] for g in gens if lookup[g] != 0))
    return FiniteGroup(mult, gen_idx, label, tuple(elems))


# -- classes, powers, normal subgroups, quotients -------------------------------

def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    return G.classes


def power_class(G: FiniteGroup, c: ConjClass, t: int) -> ConjClass:
    if t < 0:
        raise ValueError("t must be non-negative")
    k = int(G.class_of[c.representative])
    return G.classes[int(G.power_map[k, t % G.exponent])]


def normal_subgroups(G: FiniteGroup) -> list[NormalSubgroupDesc]:
    """All normal subgroups: joins of normal closures of single classes."""
    base = {G.normal_closure(c.members) for c in G.classes}
    found = set(base) | {frozenset([0])}
    frontier = list(found)
    base = list(base)
    while frontier:
        new = []
        for N in frontier:
            for M in base:
                if M <= N:
                    continue
                J = _product_normal(G, N, M)
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    out = [NormalSubgroupDesc(tuple(sorted(N))) for N in found]
    out.sort(key=lambda d: (d.order, d.members))
    return out


def _product_normal(G: FiniteGroup, N: frozenset, M: frozenset) -> frozenset:
    a = np.fromiter(N, dtype=np.int64)
    b = np.fromiter(M, dtype=np.int64)
    return frozenset(np.unique(G.mult[np.ix_(a, b)]).tolist())


@dataclass(frozen=True)
class QuotientMap:
    group: FiniteGroup
    coset_of: np.ndarray  # element of G -> element of G/N


def quotient_map(G: FiniteGroup, N: NormalSubgroupDesc | Iterable[int]) -> QuotientMap:
    members = N.members if isinstance(N, NormalSubgroupDesc) else tuple(sorted(set(N)))
    if not G.is_subgroup(members) or not G.is_normal(members):
        raise NotNormalError("quotient requires a normal subgroup")
    n = G.order
    coset_of = -np.ones(n, dtype=np.int64)
    midx = np.array(members, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset_of[x] < 0:
            coset_of[G.mult[x, midx]] = len(reps)
            reps.append(x)
    reps_arr = np.array(reps, dtype=np.int64)
    table = coset_of[G.mult[np.ix_(reps_arr, reps_arr)]]
    gens = tuple(dict.fromkeys(int(coset_of[g]) for g in G.generators if coset_of[g] != 0))
    Q = FiniteGroup(table, gens, f"{G.label}/N{len(members)}" if G.label else "")
    return QuotientMap(Q, coset_of)


def quotient_group(G: FiniteGroup, N: NormalSubgroupDesc | Iterable[int]) -> FiniteGroup:
    return quotient_map(G, N).group


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str = "") -> FiniteGroup:
    """Elements (g, h) indexed g*|H| + h."""
    n, m = G.order, H.order
    gi = np.repeat(np.arange(n), m)
    hi = np.tile(np.arange(m), n)
    table = G.mult[np.ix_(gi, gi)].astype(np.int64) * m + H.mult[np.ix_(hi, hi)]
    gens = tuple(g * m for g in G.generators) + tuple(h for h in H.generators)
    return FiniteGroup(table, gens, label)


def check_group_axioms(G: FiniteGroup, samples: int = 1000, seed: int = 0) -> list[str]:
    """Return a list of violated group axioms (empty when the table is a group)."""
    problems = []
    n = G.order
    mult = np.asarray(G.mult)
    ar = np.arange(n)
    if not (np.array_equal(mult[0], ar) and np.array_equal(mult[:, 0], ar)):
        problems.append("identity law fails")
        return problems
    if not all(np.array_equal(np.sort(mult[i]), ar) for i in range(n)):
        problems.append("rows are not permutations (no inverses)")
        return problems
    if n <= 32:
        lhs = mult[mult[:, :, None], ar[None, None, :]]
        rhs = mult[ar[:, None, None], mult[None, :, :]]
        if not np.array_equal(lhs, rhs):
            problems.append("associativity fails")
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, samples))
        if not np.array_equal(mult[mult[x, y], z], mult[x, mult[y, z]]):
            problems.append("associativity fails")
    return problems
