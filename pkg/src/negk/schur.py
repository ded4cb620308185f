"""Simple components of QG, their Schur indices, and the torsion count s(G).

Strongly monomial classes are described by a strong Shoda pair (H, K): the
component is M_[G:N](Q(zeta_k) * N/H) with N = N_G(K), k = [H:K].  The local
index at p of such a cyclotomic algebra is computed one Sylow subgroup of the
local Galois group at a time, through the norm residue symbol of the cyclic
factor.  Remaining classes go through a Brauer-Witt reduction at the prime 2,
which transports the 2-parts of the local indices from a 2-elementary subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .chartab import CharacterTable, RationalCharClass, character_table, rational_character_classes
from fractions import Fraction

from .cyclotomic import (CyclotomicNumber, _embed, _reduce, as_int_vector, conj_matrix,
                         poly_mul_reduce, reduction_matrix)
from .group import FiniteGroup
from .numtheory import (divisors, euler_phi, factorize, galois_t_m, lcm, multiplicative_order,
                        p_part, prime_divisors, unit_group)
from .rank import RankBreakdown, r_of_group
from .subgroups import cyclic_quotient_kernels, subgroup_classes

INF = "inf"

STRONG_SHODA = "strong-shoda"
BRAUER_WITT = "brauer-witt-2"
QUATERNION = "quaternion-shortcut"


class UnsupportedGroupError(RuntimeError):
    """No construction path handles a rational class of the group."""


class SchurConsistencyError(AssertionError):
    pass


# -- records --------------------------------------------------------------------

@dataclass(frozen=True)
class StrongShodaPair:
    H: frozenset[int]
    K: frozenset[int]
    generator: int  # h0 with H/K = <h0 K>; the linear character sends h0 to zeta_k

    @property
    def k(self) -> int:
        return len(self.H) // len(self.K)


@dataclass(frozen=True)
class CenterField:
    """Abelian field fixed by ``fixing`` inside Q(zeta_conductor)."""

    conductor: int
    fixing: tuple[int, ...]

    @property
    def degree(self) -> int:
        return euler_phi(self.conductor) // len(self.fixing)

    def fixing_mod(self, M: int) -> set[int]:
        if M % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {M}")
        fix = set(self.fixing)
        f = self.conductor
        return {t for t in unit_group(M) if f == 1 or t % f in fix}

    def __str__(self) -> str:
        if self.conductor == 1:
            return "Q"
        return f"Q(z{self.conductor})^<{','.join(map(str, self.fixing))}>"


def center_from_fixing(m: int, fixing) -> CenterField:
    """Minimal-conductor description of the fixed field of ``fixing`` <= (Z/m)^x."""
    fix = {t % m for t in fixing} if m > 1 else {0}
    units = unit_group(m)
    for f in divisors(m):
        kernel = [t for t in units if (t - 1) % f == 0]
        if all((t % m if m > 1 else 0) in fix for t in kernel):
            residues = sorted({t % f for t in fix}) if f > 1 else [1]
            return CenterField(f, tuple(residues))
    raise AssertionError("unreachable: f = m always qualifies")


@dataclass(frozen=True)
class CyclotomicAlgebra:
    """Crossed product Q(zeta_k) * Gamma, Gamma <= (Z/k)^x acting by zeta -> zeta^t.

    ``powers`` records, for each t in Gamma with a chosen lift u_t, the exponent j
    with u_t^(ord t) = zeta_k^j.  ``cocycle`` (optional) lists (a, b, c) with
    u_a u_b = zeta_k^c u_ab; it is needed only when Gamma is not cyclic.
    """

    k: int
    gamma: tuple[int, ...]
    powers: tuple[tuple[int, int], ...]
    cocycle: tuple[tuple[int, int, int], ...] = field(default=(), compare=False, repr=False)

    def power(self, t: int) -> int:
        return dict(self.powers)[t]

    def factor_set(self) -> dict[tuple[int, int], int]:
        return {(a, b): c for a, b, c in self.cocycle}

    @property
    def center(self) -> CenterField:
        return center_from_fixing(self.k, self.gamma)


@dataclass(frozen=True)
class SimpleComponentDesc:
    rational_class: RationalCharClass
    center: CenterField
    matrix_size: int
    algebra: CyclotomicAlgebra
    provenance: str
    pair: StrongShodaPair | None = None
    # Brauer-Witt path: order of the 2-elementary subgroup and the character used there
    witness: tuple[int, int] | None = None

    @property
    def algebra_center(self) -> CenterField:
        return self.algebra.center


@dataclass(frozen=True)
class SchurData:
    local_indices: tuple[tuple[int | str, int], ...]
    global_index: int
    parity_only: bool = False
    by_reciprocity: tuple = ()  # places whose index came from Hasse reciprocity

    def index_at(self, place) -> int:
        return dict(self.local_indices).get(place, 1)

    def check(self) -> None:
        assert self.global_index == lcm(*[i for _, i in self.local_indices]) if self.local_indices else 1
        assert self.index_at(INF) in (1, 2)


@dataclass
class KMinusOneResult:
    r: int
    s: int
    rank_breakdown: RankBreakdown
    components: list[SimpleComponentDesc] = field(default_factory=list)
    schur_data: list[SchurData] = field(default_factory=list)
    contributing: list[int] = field(default_factory=list)  # indices into components

    def formatted(self) -> str:
        return format_k_minus_one(self.r, self.s)


def format_k_minus_one(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append("Z" if r == 1 else f"Z^{r}")
    if s:
        parts.append("Z/2" if s == 1 else f"(Z/2)^{s}")
    return " + ".join(parts) if parts else "0"


# -- group algebra helpers ---------------------------------------------------------

def _hat(G: FiniteGroup, S) -> np.ndarray:
    v = np.zeros(G.order)
    v[list(S)] = 1.0 / len(S)
    return v


def _ga_mul(G: FiniteGroup, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ia = np.nonzero(a)[0]
    ib = np.nonzero(b)[0]
    idx = G.mult[np.ix_(ia, ib)].ravel()
    w = np.outer(a[ia], b[ib]).ravel()
    return np.bincount(idx, weights=w, minlength=G.order)


def shoda_idempotent(G: FiniteGroup, H, K, h0: int) -> np.ndarray:
    """epsilon(H, K): product of (K^ - M^) over the minimal subgroups M/K of H/K."""
    eps = _hat(G, K)
    k = len(H) // len(K)
    for p in prime_divisors(k) if k > 1 else []:
        M = G.closure([G.power(h0, k // p)], start=K)
        eps = _ga_mul(G, eps, _hat(G, K) - _hat(G, M))
    return eps


def _transversal(G: FiniteGroup, N) -> list[int]:
    """Right coset representatives of N in G."""
    covered = np.zeros(G.order, dtype=bool)
    Nidx = np.fromiter(N, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if not covered[g]:
            covered[G.mult[Nidx, g]] = True
            reps.append(g)
    return reps


def is_strong_shoda(G: FiniteGroup, H, K, h0: int) -> bool:
    H, K = frozenset(H), frozenset(K)
    N = G.normalizer(K)
    if not H <= N or not N <= G.normalizer(H):
        return False
    # H/K must be self-centralising in N/K
    h0K = {int(G.mult[h0, x]) for x in K}
    cent = [n for n in N if G.conj(h0, n) in h0K]
    if len(cent) != len(H):
        return False
    eps = shoda_idempotent(G, H, K, h0)
    xs = np.arange(G.order)
    scale = np.abs(eps).max()
    for g in _transversal(G, N):
        if g in N:
            continue
        eg = eps[G.mult[G.mult[g, xs], G.inverse[g]]]
        if np.abs(_ga_mul(G, eps, eg)).max() > 1e-9 * scale * scale:
            return False
    return True


def _lambda_exponents(G: FiniteGroup, K, h0: int, k: int) -> np.ndarray:
    """e[x] with x K = h0^e K for x in H, -1 elsewhere."""
    e = -np.ones(G.order, dtype=np.int64)
    Kidx = np.fromiter(K, dtype=np.int64)
    y = 0
    for j in range(k):
        e[G.mult[y, Kidx]] = j
        y = int(G.mult[y, h0])
    return e


def _induced_values(G: FiniteGroup, e: np.ndarray, k: int, hsize: int) -> np.ndarray:
    """Int vectors (classes x phi(m)) of Ind_H^G of the linear character with exponents e."""
    m = G.exponent
    R = np.array(reduction_matrix(m, m), dtype=np.int64)
    xs = np.arange(G.order)
    out = []
    for c in G.classes:
        conj = G.mult[G.mult[G.inverse[xs], c.representative], xs]
        ev = e[conj]
        ev = ev[ev >= 0] * (m // k)
        counts = np.bincount(ev, minlength=m)
        vec = counts @ R
        if (vec % hsize).any():
            raise SchurConsistencyError("induced character is not integral")
        out.append(vec // hsize)
    return np.array(out, dtype=np.int64)


# -- strong Shoda pairs ------------------------------------------------------------

@dataclass
class _Context:
    G: FiniteGroup
    table: CharacterTable
    classes: list[RationalCharClass]
    row_class: dict[int, int]
    row_key: dict[bytes, int]


def _context(G: FiniteGroup) -> _Context:
    ctx = getattr(G, "_schur_context", None)
    if ctx is None:
        table = character_table(G)
        rcs = rational_character_classes(table)
        row_class = {i: ci for ci, rc in enumerate(rcs) for i in rc.members}
        row_key = {table.int_values[i].tobytes(): i for i in range(len(table))}
        ctx = _Context(G, table, rcs, row_class, row_key)
        G._schur_context = ctx
    return ctx


def _pair_search(G: FiniteGroup) -> dict[int, StrongShodaPair]:
    """One strong Shoda pair per strongly monomial rational class (by class index).

    The first pair found wins unless its algebra has a non-cyclic Sylow subgroup
    in some local Galois group; then the search goes on for a pair without one.
    """
    cached = getattr(G, "_shoda_pairs", None)
    if cached is not None:
        return cached
    ctx = _context(G)
    found: dict[int, StrongShodaPair] = {}
    settled: set[int] = set()
    want = len(ctx.classes)
    subs = sorted(subgroup_classes(G), key=lambda sc: -sc.order)
    for sc in subs:
        if len(settled) == want:
            break
        H = sc.representative
        for K, h0 in sorted(cyclic_quotient_kernels(G, H), key=lambda kh: len(kh[0])):
            k = len(H) // len(K)
            e = _lambda_exponents(G, K, h0, k)
            vals = _induced_values(G, e, k, len(H))
            row = ctx.row_key.get(vals.tobytes())
            if row is None:
                continue
            ci = ctx.row_class[row]
            if ci in settled:
                continue
            if is_strong_shoda(G, H, K, h0):
                pair = StrongShodaPair(H, K, h0)
                found.setdefault(ci, pair)
                if locally_cyclic(_algebra_from_pair(G, pair)[0]):
                    found[ci] = pair
                    settled.add(ci)
            if len(settled) == want:
                break
    G._shoda_pairs = found
    return found


def strong_shoda_pairs(G: FiniteGroup) -> list[StrongShodaPair]:
    found = _pair_search(G)
    return [found[i] for i in sorted(found)]


def _algebra_from_pair(G: FiniteGroup, pair: StrongShodaPair) -> tuple[CyclotomicAlgebra, int]:
    H, K, h0, k = pair.H, pair.K, pair.generator, pair.k
    N = G.normalizer(K)
    e = _lambda_exponents(G, K, h0, k)
    gamma, powers, lift = [], [], {}
    reps = _coset_reps(G, N, H)
    for g in reps:
        t = int(e[G.mult[G.mult[g, h0], G.inverse[g]]]) % k if k > 2 else 1
        if k > 2 and gcd(t, k) != 1:
            raise SchurConsistencyError("conjugation does not act by a unit")
        s = multiplicative_order(t, k) if k > 2 else 1
        gs = G.power(g, s)
        if e[gs] < 0:
            raise SchurConsistencyError("lifted power leaves H")
        gamma.append(t)
        powers.append((t, int(e[gs])))
        lift[t] = g
    if len(set(gamma)) != len(gamma):
        raise SchurConsistencyError("N/H does not embed in (Z/k)^x")
    order = sorted(range(len(gamma)), key=lambda i: gamma[i])
    cocycle = []
    if k > 2:
        rep_of = {}
        for t, g in lift.items():
            for h in H:
                rep_of[int(G.mult[h, g])] = t
        for a, ga in lift.items():
            for b, gb in lift.items():
                x = int(G.mult[ga, gb])
                h = int(G.mult[x, G.inverse[lift[rep_of[x]]]])  # x = h * lift
                cocycle.append((a, b, int(e[h])))
    alg = CyclotomicAlgebra(k, tuple(gamma[i] for i in order), tuple(powers[i] for i in order),
                            tuple(sorted(cocycle)))
    return alg, G.order // len(N)


def _coset_reps(G: FiniteGroup, N, H) -> list[int]:
    """Left coset representatives of H in N, the identity first."""
    covered = set()
    reps = []
    Hidx = np.fromiter(H, dtype=np.int64)
    for g in sorted(N):
        if g not in covered:
            covered.update(G.mult[g, Hidx].tolist())
            reps.append(g)
    return reps


def component_from_pair(G: FiniteGroup, rc: RationalCharClass, pair: StrongShodaPair) -> SimpleComponentDesc:
    alg, size = _algebra_from_pair(G, pair)
    comp = SimpleComponentDesc(rc, alg.center, size, alg, STRONG_SHODA, pair=pair)
    _check_dimension(G, comp)
    return comp


def _check_dimension(G: FiniteGroup, comp: SimpleComponentDesc) -> None:
    rc = comp.rational_class
    alg = comp.algebra
    if comp.center.degree != rc.field_degree:
        raise SchurConsistencyError(f"center degree {comp.center.degree} != orbit size {rc.field_degree}")
    dim = comp.matrix_size ** 2 * len(alg.gamma) * euler_phi(alg.k)
    if dim != rc.field_degree * rc.degree ** 2:
        raise SchurConsistencyError(f"component dimension {dim} does not match the character data")


def _shoda_component(G: FiniteGroup, rc: RationalCharClass) -> SimpleComponentDesc | None:
    ctx = _context(G)
    ci = next(i for i, c in enumerate(ctx.classes) if c.members == rc.members)
    pair = _pair_search(G).get(ci)
    return None if pair is None else component_from_pair(G, rc, pair)


def component_for_class(G: FiniteGroup, rc: RationalCharClass) -> SimpleComponentDesc:
    comp = _shoda_component(G, rc)
    if comp is not None:
        try:
            algebra_local_indices(comp.algebra)
            return comp
        except UnsupportedGroupError:
            pass  # the 2-parts may still be visible on a smaller subgroup
    return brauer_witt_2_reduction(G, rc)


# -- Brauer-Witt at q = 2 -------------------------------------------------------------

def _two_elementary(G: FiniteGroup, fixing: set[int]) -> list[frozenset[int]]:
    """Subgroups C x| P (C cyclic of odd order, P a 2-group) acting on C inside Gal(Q(zeta_|C|)/F)."""
    orders = G.element_order
    out = []
    for sc in subgroup_classes(G):
        E = sc.representative
        odd = [x for x in E if orders[x] % 2]
        c_ord = len(odd)
        if c_ord != p_part_complement(len(E), 2):
            continue
        c = next((x for x in odd if orders[x] == c_ord), None)
        if c is None:
            continue
        allowed = {t % c_ord for t in fixing} if c_ord > 1 else {0}
        powers = {G.power(c, t): t for t in range(c_ord)}
        ok = True
        for x in E:
            y = G.conj(c, x)
            if y not in powers or (c_ord > 1 and powers[y] % c_ord not in allowed):
                ok = False
                break
        if ok:
            out.append(E)
    out.sort(key=lambda E: -len(E))
    return out


def p_part_complement(n: int, p: int) -> int:
    return n // p_part(n, p)


def brauer_witt_2_reduction(G: FiniteGroup, rc: RationalCharClass) -> SimpleComponentDesc:
    ctx = _context(G)
    m = G.exponent
    fixing = set(rc.stabilizer)
    chi = ctx.table.int_values[rc.representative]
    blocked = False
    for E in _two_elementary(G, fixing):
        Es, old = G.subgroup(E)
        Te = character_table(Es)
        me = Es.exponent
        # chi restricted to E, per class of E, as vectors in Z[zeta_m]
        reps = [old[c.representative] for c in Es.classes]
        chi_E = chi[G.class_of[reps]]
        psis = np.array([[as_int_vector(v, m) for v in row] for row in Te.characters], dtype=np.int64)
        conj_psis = psis @ conj_matrix(m)
        prods = poly_mul_reduce(chi_E[None, :, :] * Es.class_sizes[None, :, None], conj_psis, m).sum(axis=1)
        for j in range(len(Te)):
            if any(Te.galois_permutation(t % me)[j] != j for t in fixing) if me > 1 else False:
                continue
            ip = prods[j]
            if ip[1:].any() or ip[0] % Es.order:
                raise SchurConsistencyError("non-integral inner product on a 2-elementary subgroup")
            if (ip[0] // Es.order) % 2 == 0:
                continue
            rcs_E = rational_character_classes(Te)
            rc_E = next(r for r in rcs_E if j in r.members)
            comp_E = _shoda_component(Es, rc_E)
            if comp_E is None:
                raise SchurConsistencyError("2-elementary subgroup is not strongly monomial")
            center = center_from_fixing(m, fixing)
            comp = SimpleComponentDesc(rc, center, 0, comp_E.algebra, BRAUER_WITT,
                                       pair=comp_E.pair, witness=(len(E), j))
            try:
                sd = local_indices(comp, prime_divisors(G.order))
            except UnsupportedGroupError:
                blocked = True
                continue
            size = rc.degree // sd.global_index
            return SimpleComponentDesc(rc, center, size, comp_E.algebra, BRAUER_WITT,
                                       pair=comp_E.pair, witness=(len(E), j))
    if blocked:
        raise UnsupportedGroupError(f"class of degree {rc.degree}: every detecting 2-elementary "
                                    "subgroup has a non-cyclic local Galois group")
    raise SchurConsistencyError(f"no 2-elementary subgroup detects class of degree {rc.degree}")


# -- local indices --------------------------------------------------------------------

def _sylow(elements: list[int], modulus: int, ell: int) -> list[int]:
    return [t for t in elements if p_part(multiplicative_order(t, modulus), ell) == multiplicative_order(t, modulus)]


class _NonCyclicSylow(UnsupportedGroupError):
    def __init__(self, p: int, ell: int, k: int, partial: int):
        super().__init__(f"non-cyclic Sylow {ell}-subgroup of the local Galois group at {p} (k={k})")
        self.p, self.ell, self.partial = p, ell, partial


def _local_galois(alg: CyclotomicAlgebra, p: int) -> tuple[list[int], list[int]]:
    T = list(galois_t_m(alg.k, p))
    Tset = set(T)
    return T, [t for t in alg.gamma if t in Tset]


def locally_cyclic(alg: CyclotomicAlgebra) -> bool:
    """Every Sylow subgroup of every local Galois group Gamma cap T_k(p) is cyclic."""
    if alg.k <= 2:
        return True
    for p in prime_divisors(alg.k):
        _, D = _local_galois(alg, p)
        for ell, _ in factorize(len(D)) if len(D) > 1 else []:
            Dl = _sylow(D, alg.k, ell)
            if not any(multiplicative_order(t, alg.k) == len(Dl) for t in Dl):
                return False
    return True


def algebra_local_index(alg: CyclotomicAlgebra, p: int | str, check_uniform: bool = True) -> int:
    """Local Schur index of the cyclotomic algebra over its own center at the place p.

    For each prime l, the l-part comes from the cyclic algebra (L/E, sigma, a) with
    <sigma> the Sylow l-subgroup of the local Galois group and E its fixed field:
    it is the order of the norm residue symbol of N_{E/Q_p}(a) on Q_p(zeta_k).
    """
    k = alg.k
    if p == INF:
        if k <= 2 or (k - 1) not in alg.gamma:
            return 1
        j = alg.power(k - 1) % k
        if (2 * j) % k:
            raise SchurConsistencyError("u^2 for complex conjugation is not real")
        return 2 if j == k // 2 else 1
    q = p_part(k, p)
    if q == 1 or k <= 2:
        return 1
    T, D = _local_galois(alg, p)
    index = 1
    blocked = None
    for ell, _ in factorize(len(D)) if len(D) > 1 else []:
        Dl = _sylow(D, k, ell)
        s = len(Dl)
        gens = [t for t in Dl if multiplicative_order(t, k) == s]
        if not gens:
            two = _two_part_noncyclic(alg, p, T, Dl) if ell == 2 else None
            if two is None:
                blocked = ell
            else:
                index *= two
            continue
        reps = _coset_reps_mod(T, Dl, k)
        orders = set()
        for sigma in (gens if check_uniform else gens[:1]):
            e = alg.power(sigma) * sum(reps) % k
            d = k // gcd(e, k)
            if p == 2:
                if d > 2:
                    raise SchurConsistencyError("norm of a root of unity is not in Q_2")
                orders.add(2 if d == 2 and q >= 4 else 1)
            else:
                if (p - 1) % d:
                    raise SchurConsistencyError(f"norm of a root of unity is not in Q_{p}")
                orders.add(d)
        if len(orders) != 1:
            raise SchurConsistencyError(f"local index at {p} depends on the chosen generator")
        o = orders.pop()
        if p_part(o, ell) != o:
            raise SchurConsistencyError("norm residue symbol order is not a power of the Sylow prime")
        index *= o
    if blocked is not None:
        raise _NonCyclicSylow(p, blocked, k, index)
    return index


def _cyclic_bases(D: list[int], k: int):
    """Tuples (s_1, ..., s_r) with D = <s_1> x ... x <s_r>, largest orders first."""
    n = len(D)
    orders = {t: multiplicative_order(t, k) for t in D}
    elems = sorted(D, key=lambda t: (-orders[t], t))

    def span(gens):
        out = {1 % k}
        for g in gens:
            out = {x * pow(g, i, k) % k for x in out for i in range(orders[g])}
        return out

    def extend(prefix, size):
        if size == n:
            yield tuple(prefix)
            return
        cur = span(prefix)
        for t in elems:
            if orders[t] > 1 and t not in cur and len(span(prefix + [t])) == size * orders[t]:
                yield from extend(prefix + [t], size * orders[t])

    yield from extend([], 1)


def _two_part_noncyclic(alg: CyclotomicAlgebra, p: int, T: list[int], D2: list[int]) -> int | None:
    """2-part of the local index at p when the Sylow 2-subgroup D2 is not cyclic.

    Only for p = 2 or p = 3 mod 4, where every 2-part involved is at most 2.  The
    crossed product over D2 is split into a tensor product of cyclic algebras by
    rescaling each generator's unit with a root of unity so that it commutes with
    the remaining ones; the 2-parts of the cyclic factors then add in Z/2.
    Returns None when no basis of D2 admits such a splitting.
    """
    k = alg.k
    fs = alg.factor_set()
    if not fs or not (p == 2 or p % 4 == 3):
        return None
    q = p_part(k, p)
    # Artin symbol of -1 on Q_p(zeta_k): inverts zeta_q, fixes zeta_(k/q)
    c = next(t for t in range(1, k) if t % q == (q - 1) % q and t % (k // q) == 1 % (k // q))
    reps = _coset_reps_mod(T, D2, k)

    def unit_power(t: int, n: int) -> int:
        """E with u_t^n = zeta^E u_(t^n)."""
        E, cur = 0, t
        for _ in range(n - 1):
            E = (E + fs[(cur, t)]) % k  # (zeta^E u_cur) u_t
            cur = cur * t % k
        return E

    def comm(a: int, b: int) -> int:
        """c with u_b u_a = zeta^c u_a u_b."""
        return (fs[(b, a)] - fs[(a, b)]) % k

    def norm_sign(ex: int) -> int:
        """Sign of N_(E/Q_p)(zeta^ex) after removing its odd-order part; E = fixed field of D2."""
        e = ex * sum(reps) % k
        d = k // gcd(e, k)
        if any((e * t - e) % k for t in T):
            raise SchurConsistencyError("norm of a root of unity is not in Q_p")
        e = e * (d // p_part(d, 2)) % k
        return -1 if k // gcd(e, k) == 2 else 1

    for basis in _cyclic_bases(D2, k):
        done: list[int] = []
        parity = 0
        ok = True
        for i, si in enumerate(basis):
            rest = basis[i + 1:]
            ys = [y for y in range(k)
                  if all((y * (sj - 1) + comm(si, sj)) % k == 0 for sj in rest)
                  and all((y * (sj - 1)) % k == 0 for sj in done)]
            if not ys:
                ok = False
                break
            y = ys[0]
            n = multiplicative_order(si, k)
            a = (unit_power(si, n) + y * sum(pow(si, j, k) for j in range(n))) % k
            if any((a * t - a) % k for t in D2):
                raise SchurConsistencyError("cyclic factor norm is not central")
            others = {1 % k}
            for g in done + list(rest):
                others = {x * pow(g, j, k) % k for x in others for j in range(multiplicative_order(g, k))}
            if q > 1 and norm_sign(a) == -1 and c % k not in others:
                parity ^= 1
            done.append(si)
        if ok:
            return 2 if parity else 1
    if len(D2) == euler_phi(k) and all(multiplicative_order(t, k) <= 2 for t in D2):
        return _quaternion_split(alg, p, D2)
    return None


# -- exact splitting over Q into quaternion algebras -------------------------------------

def _coords(x: CyclotomicNumber, k: int) -> list[Fraction]:
    return [Fraction(c) for c in _reduce(_embed(x.coeffs, x.conductor, k), k)]


def _nullspace(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of {c : sum_j c_j rows[j] = 0}, rows given per unknown."""
    m = len(rows[0]) if rows else 0
    # equations are columns of the rows matrix
    eqs = [[rows[j][i] for j in range(n)] for i in range(m)]
    piv_cols, r = [], 0
    for c in range(n):
        sel = next((i for i in range(r, m) if eqs[i][c] != 0), None)
        if sel is None:
            continue
        eqs[r], eqs[sel] = eqs[sel], eqs[r]
        inv = 1 / eqs[r][c]
        eqs[r] = [v * inv for v in eqs[r]]
        for i in range(m):
            if i != r and eqs[i][c] != 0:
                f = eqs[i][c]
                eqs[i] = [a - f * b for a, b in zip(eqs[i], eqs[r])]
        piv_cols.append(c)
        r += 1
    out = []
    for free in (c for c in range(n) if c not in piv_cols):
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for i, c in enumerate(piv_cols):
            vec[c] = -eqs[i][free]
        out.append(vec)
    return out


def _squarefree_int(r: Fraction) -> int:
    a = r.numerator * r.denominator
    sign = -1 if a < 0 else 1
    a = abs(a)
    out = 1
    for q, e in factorize(a) if a > 1 else []:
        if e % 2:
            out *= q
    return sign * out


def _quaternion_split(alg: CyclotomicAlgebra, p: int, D2: list[int]) -> int | None:
    """2-part at p when Gamma = (Z/k)^* is elementary abelian and the center is Q.

    Peels one generator at a time: x u_s commutes with the remaining units once
    sigma_t(x) = zeta^(-c) x (Hilbert 90, solved exactly over Q), which leaves a
    quaternion factor (d, (x u_s)^2) with Q(sqrt d) the fixed field of the others.
    """
    k = alg.k
    fs = alg.factor_set()
    phi = euler_phi(k)
    basis = [CyclotomicNumber.zeta(k, j) for j in range(phi)]
    zeta = lambda e: CyclotomicNumber.zeta(k, e % k)  # noqa: E731
    gens = next(_cyclic_bases(D2, k), None)
    if gens is None:
        return None
    sign = 1
    done: list[int] = []
    for i, si in enumerate(gens):
        rest = gens[i + 1:]
        conds = [(sj, (fs[(si, sj)] - fs[(sj, si)]) % k) for sj in rest] + [(sd, 0) for sd in done]
        rows = []
        for b in basis:
            row: list[Fraction] = []
            for t, e in conds:
                row += _coords(b.galois_apply(t) - zeta(e) * b, k)
            rows.append(row)
        sols = _nullspace(rows, phi) if conds else [[Fraction(1)] + [Fraction(0)] * (phi - 1)]
        if not sols:
            return None
        x = sum((c * b for c, b in zip(sols[0], basis) if c), CyclotomicNumber.rational(0))
        alpha = x * x.galois_apply(si) * zeta(fs[(si, si)])
        if not alpha.is_rational():
            raise SchurConsistencyError("quaternion factor norm is not rational")
        others = [t for t in gens if t != si]
        theta = next(w for w in (_relative_trace(zeta(j), others, k) for j in range(k))
                     if not (w - w.galois_apply(si)).is_zero())
        w = theta - theta.galois_apply(si)
        d = _squarefree_int((w * w).to_rational())
        sign *= hilbert_symbol(d, _squarefree_int(alpha.to_rational()), p)
        done.append(si)
    return 2 if sign == -1 else 1


def _relative_trace(x: CyclotomicNumber, gens: list[int], k: int) -> CyclotomicNumber:
    for g in gens:
        x = x + x.galois_apply(g)
    return x


def places_over(F: CenterField, p: int | str) -> int:
    """Number of places of F above p (real places only, for p = inf)."""
    f = F.conductor
    if f == 1:
        return 1
    fix = F.fixing_mod(f)
    if p == INF:
        return F.degree if f - 1 in fix else 0
    T = set(galois_t_m(f, p))
    orbit = {t * x % f for t in T for x in fix}
    return euler_phi(f) // len(orbit)


def algebra_local_indices(alg: CyclotomicAlgebra) -> tuple[dict, tuple]:
    """Local indices at INF and every prime dividing k, over the algebra's center.

    A single place left open by a non-cyclic Sylow 2-subgroup is settled by Hasse
    reciprocity when that is unambiguous: all other 2-parts at most 2, an odd
    number of places above it, and a 2-part known to be at most 2 there.
    Returns the indices and the places settled that way.
    """
    known: dict = {}
    open_places = []
    for p in (prime_divisors(alg.k) if alg.k > 1 else []):
        try:
            known[p] = algebra_local_index(alg, p)
        except _NonCyclicSylow as exc:
            open_places.append(exc)
    known[INF] = algebra_local_index(alg, INF)
    if not open_places:
        return known, ()
    exc = open_places[0]
    F = alg.center
    if (len(open_places) > 1 or exc.ell != 2 or not (exc.p == 2 or exc.p % 4 == 3)
            or any(p_part(i, 2) > 2 for i in known.values()) or places_over(F, exc.p) % 2 == 0):
        raise UnsupportedGroupError(str(exc))
    parity = sum(places_over(F, v) for v, i in known.items() if i % 2 == 0)
    known[exc.p] = exc.partial * (2 if parity % 2 else 1)
    return known, (exc.p,)


def _coset_reps_mod(T: list[int], S: list[int], k: int) -> list[int]:
    covered: set[int] = set()
    reps = []
    for t in T:
        if t not in covered:
            covered.update(t * s % k for s in S)
            reps.append(t)
    return reps


def local_degree(small: CenterField, big: CenterField, p: int | str) -> int:
    """[big_w : small_v] for a place p, given small <= big."""
    M = lcm(small.conductor, big.conductor)
    fs, fb = small.fixing_mod(M), big.fixing_mod(M)
    if not fb <= fs:
        raise ValueError("fields are not nested")
    if p == INF:
        T = {1, M - 1} if M > 2 else {1}
    else:
        T = set(galois_t_m(M, p)) if M > 1 else {1}
    return len(T & fs) // len(T & fb)


def local_indices(comp: SimpleComponentDesc, primes) -> SchurData:
    own, settled = algebra_local_indices(comp.algebra)
    out = []
    for p in sorted(set(primes)) + [INF]:
        idx = own.get(p, 1)
        if comp.provenance == BRAUER_WITT:
            idx //= gcd(idx, local_degree(comp.algebra_center, comp.center, p))
            idx = p_part(idx, 2)
        out.append((p, idx))
    return SchurData(tuple(out), lcm(*[i for _, i in out]), comp.provenance == BRAUER_WITT, settled)


def schur_index(sd: SchurData) -> int:
    return lcm(*[i for _, i in sd.local_indices]) if sd.local_indices else 1


def contributes_to_s(sd: SchurData, primes) -> bool:
    if schur_index(sd) % 2:
        return False
    return all(sd.index_at(p) % 2 for p in primes)


# -- quaternion cross-check --------------------------------------------------------------

def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def hilbert_symbol(a: int, b: int, p: int | str) -> int:
    """(a, b)_p over Q for nonzero integers a, b."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p == INF:
        return -1 if a < 0 and b < 0 else 1
    alpha, u = _split_p(a, p)
    beta, v = _split_p(b, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2  # noqa: E731
        omega = lambda x: ((x * x - 1) // 8) % 2  # noqa: E731
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = (-1) ** (alpha * beta * ((p - 1) // 2))
    return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha


def _split_p(a: int, p: int) -> tuple[int, int]:
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e, a


def quaternion_shortcut(comp: SimpleComponentDesc, primes) -> SchurData | None:
    """Local indices of a rational quaternion component via Hilbert symbols, when applicable."""
    alg = comp.algebra
    if comp.center.conductor != 1 or alg.k not in (3, 4, 6) or len(alg.gamma) != 2:
        return None
    d = -1 if alg.k == 4 else -3
    j = alg.power(alg.k - 1) % alg.k
    a = 1 if j == 0 else -1
    out = tuple((p, 2 if hilbert_symbol(d, a, p) == -1 else 1) for p in sorted(set(primes)) + [INF])
    return SchurData(out, lcm(*[i for _, i in out]))


# -- s(G) and K_{-1} ------------------------------------------------------------------

def components(G: FiniteGroup) -> list[SimpleComponentDesc]:
    ctx = _context(G)
    return [component_for_class(G, rc) for rc in ctx.classes]


def s_of_group(G: FiniteGroup) -> tuple[int, list[SimpleComponentDesc]]:
    res = _schur_pipeline(G)
    return len(res[2]), [res[0][i] for i in res[2]]


def _schur_pipeline(G: FiniteGroup):
    cached = getattr(G, "_schur_pipeline", None)
    if cached is not None:
        return cached
    primes = prime_divisors(G.order) if G.order > 1 else []
    comps = components(G)
    sds = [local_indices(c, primes) for c in comps]
    contributing = [i for i, sd in enumerate(sds) if contributes_to_s(sd, primes)]
    G._schur_pipeline = (comps, sds, contributing)
    return G._schur_pipeline


def k_minus_one(G: FiniteGroup) -> KMinusOneResult:
    rb = r_of_group(G)
    comps, sds, contributing = _schur_pipeline(G)
    s = len(contributing)
    if G.order % 4 and s:
        raise SchurConsistencyError(f"s = {s} for a group of order {G.order} not divisible by 4")
    return KMinusOneResult(rb.r, s, rb, comps, sds, contributing)
