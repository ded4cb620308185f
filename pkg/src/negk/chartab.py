"""Exact complex character tables by Dixon's modular method.

The class-sum matrices are diagonalised simultaneously over F_l for a prime
l = 1 (mod exponent) with l > 2*sqrt(|G|); eigenvalues are lifted to
cyclotomic integers through eigenvalue multiplicities against a fixed
primitive m-th root of unity in F_l.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .cyclotomic import CyclotomicNumber, as_int_vector, conj_matrix, poly_mul_reduce
from .group import FiniteGroup
from .numtheory import dixon_prime, primitive_root, unit_group


class CharacterTableError(RuntimeError):
    pass


def class_mult_coefficients(G: FiniteGroup) -> np.ndarray:
    """a[i, j, k] = #{(x, y) in C_i x C_j : x*y = z} for a fixed z in C_k."""
    r = len(G.classes)
    a = np.zeros((r, r, r), dtype=np.int64)
    xs = np.arange(G.order)
    cls = G.class_of
    inv = G.inverse
    for k, c in enumerate(G.classes):
        ys = G.mult[inv[xs], c.representative]
        np.add.at(a[:, :, k], (cls[xs], cls[ys]), 1)
    return a


# -- linear algebra over F_p ---------------------------------------------------

def _rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        others = np.nonzero(A[:, c])[0]
        for i in others:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        piv.append(c)
        r += 1
    return A[:r], piv


def _nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning {x : A x = 0} over F_p."""
    R, piv = _rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(piv):
            basis[pc, j] = (-R[i, f]) % p
    return basis


def _column_echelon(U: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    R, piv = _rref(U.T, p)
    return R.T.copy(), piv


def _charpoly(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial (highest degree first) via Hessenberg reduction mod p."""
    H = A.copy() % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if len(nz) == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), -1, p)
        for i in range(m + 1, n):
            u = int(H[i, m - 1]) * inv % p
            if u:
                H[i, :] = (H[i, :] - u * H[m, :]) % p
                H[:, m] = (H[:, m] + u * H[:, i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (x - h[k-1,k-1]) p_{k-1} - sum_i h[k-1-i, k-1] * prod * p_{k-1-i}
        prev = polys[-1]
        cur = prev + [0]
        hk = int(H[k - 1, k - 1])
        for j in range(len(prev)):
            cur[j + 1] = (cur[j + 1] - hk * prev[j]) % p
        prod = 1
        for i in range(1, k):
            prod = prod * int(H[k - i, k - i - 1]) % p
            coef = int(H[k - i - 1, k - 1]) * prod % p
            if coef:
                q = polys[k - i - 1]
                off = len(cur) - len(q)
                for j in range(len(q)):
                    cur[off + j] = (cur[off + j] - coef * q[j]) % p
        polys.append(cur)
    return polys[-1]


def _roots(poly: list[int], p: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in poly:
        acc = (acc * xs + c) % p
    return np.nonzero(acc == 0)[0].tolist()


def _split(spaces: list[np.ndarray], M: np.ndarray, p: int) -> list[np.ndarray]:
    out = []
    for U in spaces:
        d = U.shape[1]
        if d == 1:
            out.append(U)
            continue
        U, piv = _column_echelon(U, p)
        A = (M @ U % p)[piv, :]
        roots = _roots(_charpoly(A, p), p)
        if len(roots) <= 1:
            out.append(U)
            continue
        total = 0
        for lam in roots:
            Y = _nullspace((A - lam * np.eye(d, dtype=np.int64)) % p, p)
            if Y.shape[1]:
                out.append(U @ Y % p)
                total += Y.shape[1]
        if total != d:
            raise CharacterTableError("class matrices are not simultaneously diagonalisable mod l")
    return out


# -- the table -------------------------------------------------------------------

@dataclass(eq=False)
class CharacterTable:
    group: FiniteGroup
    characters: list[tuple[CyclotomicNumber, ...]]
    prime: int = 0
    _ints: np.ndarray | None = field(default=None, repr=False)

    @property
    def classes(self):
        return self.group.classes

    @property
    def degrees(self) -> list[int]:
        return [int(chi[0].to_rational()) for chi in self.characters]

    def __len__(self) -> int:
        return len(self.characters)

    @cached_property
    def int_values(self) -> np.ndarray:
        """Values as integer vectors in the power basis of Q(zeta_m): shape (chars, classes, phi(m))."""
        if self._ints is not None:
            return self._ints
        m = self.group.exponent
        return np.array([[as_int_vector(v, m) for v in chi] for chi in self.characters], dtype=np.int64)

    def galois_row(self, i: int, t: int) -> int:
        """Index of the character g -> chi_i(g^t)."""
        return int(self.galois_permutation(t)[i])

    def galois_permutation(self, t: int) -> np.ndarray:
        pm = self.group.power_map[:, t % self.group.exponent]
        vals = self.int_values
        keys = {vals[i].tobytes(): i for i in range(len(self))}
        out = np.empty(len(self), dtype=np.int64)
        for i in range(len(self)):
            key = vals[i][pm].tobytes()
            if key not in keys:
                raise CharacterTableError(f"Galois image of character {i} under t={t} is not irreducible")
            out[i] = keys[key]
        return out

    def inner_product_matrix(self) -> np.ndarray:
        """|G| * <chi_i, chi_j> as integer vectors in Z[zeta_m] (shape r x r x phi)."""
        m = self.group.exponent
        X = self.int_values
        Xbar = X @ conj_matrix(m)
        w = self.group.class_sizes[None, :, None]
        # sum over classes of size * chi_i(c) * conj(chi_j(c))
        prod = poly_mul_reduce(X[:, None, :, :] * w[:, None, :, :], Xbar[None, :, :, :], m)
        return prod.sum(axis=2)

    def column_product_matrix(self) -> np.ndarray:
        m = self.group.exponent
        X = self.int_values
        Xbar = X @ conj_matrix(m)
        prod = poly_mul_reduce(X[:, :, None, :], Xbar[:, None, :, :], m)
        return prod.sum(axis=0)


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    cached = getattr(G, "_character_table", None)
    if cached is not None:
        return cached
    tbl = _dixon(G, seed)
    G._character_table = tbl
    return tbl


def _dixon(G: FiniteGroup, seed: int) -> CharacterTable:
    n, m = G.order, G.exponent
    classes = G.classes
    r = len(classes)
    sizes = G.class_sizes
    if n == 1:
        return CharacterTable(G, [(CyclotomicNumber.rational(1),)], 0)
    p = dixon_prime(n, m)
    z = pow(primitive_root(p), (p - 1) // m, p)
    a = class_mult_coefficients(G) % p
    spaces = [np.eye(r, dtype=np.int64)]
    for j in range(1, r):
        if all(U.shape[1] == 1 for U in spaces):
            break
        spaces = _split(spaces, a[j], p)
    rng = random.Random(seed)
    tries = 0
    while not all(U.shape[1] == 1 for U in spaces):
        tries += 1
        if tries > 50:
            raise CharacterTableError(f"eigenspace splitting failed for group of order {n}")
        coeffs = [rng.randrange(p) for _ in range(r)]
        M = sum(c * a[j] for j, c in enumerate(coeffs)) % p
        spaces = _split(spaces, M, p)
    inv_class = G.class_of[G.inverse[[c.representative for c in classes]]]
    size_inv = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    rows_modp = []
    for U in spaces:
        v = U[:, 0] % p
        if v[0] == 0:
            raise CharacterTableError("eigenvector vanishes on the identity class")
        v = v * pow(int(v[0]), -1, p) % p
        S = int(np.sum(v * v[inv_class] % p * size_inv % p) % p)
        dsq = n * pow(S, -1, p) % p
        deg = next((d for d in range(1, int(n ** 0.5) + 1) if d * d % p == dsq), None)
        if deg is None:
            raise CharacterTableError("no integral degree matches the eigenvector")
        rows_modp.append((deg, deg * v % p * size_inv % p))
    V = np.array([vals for _, vals in rows_modp], dtype=np.int64)
    degs = np.array([deg for deg, _ in rows_modp], dtype=np.int64)
    dft: dict[int, np.ndarray] = {}
    cols = []
    for k, c in enumerate(classes):
        o = c.element_order
        if o not in dft:
            zo = pow(z, m // o, p)
            powers = [pow(zo, e, p) for e in range(o)]
            W = np.array([[powers[(-i * j) % o] for j in range(o)] for i in range(o)], dtype=np.int64)
            dft[o] = W * pow(o, -1, p) % p
        mult = V[:, G.power_map[k, :o]] @ dft[o] % p
        if (mult > degs[:, None]).any():
            raise CharacterTableError("eigenvalue multiplicity out of range")
        cols.append([CyclotomicNumber.from_exponents(o, row.tolist()) for row in mult])
    chars = [tuple(col[i] for col in cols) for i in range(len(rows_modp))]
    order = sorted(range(len(chars)), key=lambda i: (rows_modp[i][0], [_value_key(v) for v in chars[i]]))
    chars = [chars[i] for i in order]
    return CharacterTable(G, chars, p)


def _value_key(v: CyclotomicNumber):
    return (v.conductor, tuple(-c for c in v.coeffs))


# -- indicators and rational classes -----------------------------------------------

def fs_indicator(chi_index: int, table: CharacterTable) -> int:
    G = table.group
    m = G.exponent
    sq = G.power_map[:, 2 % m]
    vec = (table.int_values[chi_index][sq] * G.class_sizes[:, None]).sum(axis=0)
    if vec[1:].any() or vec[0] % G.order:
        raise CharacterTableError("Frobenius-Schur indicator is not an integer")
    nu = int(vec[0]) // G.order
    if nu not in (-1, 0, 1):
        raise CharacterTableError(f"Frobenius-Schur indicator {nu} out of range")
    return nu


def fs_indicators(table: CharacterTable) -> list[int]:
    return [fs_indicator(i, table) for i in range(len(table))]


@dataclass(frozen=True)
class RationalCharClass:
    members: tuple[int, ...]  # character indices into the table
    field_degree: int
    fs_indicator: int
    degree: int
    stabilizer: tuple[int, ...]  # t in (Z/m)^x fixing the members, i.e. Gal(Q(zeta_m)/Q(chi))

    @property
    def representative(self) -> int:
        return self.members[0]


def rational_character_classes(table: CharacterTable, check_berman: bool = True) -> list[RationalCharClass]:
    G = table.group
    m = G.exponent
    units = unit_group(m)
    perms = {t: table.galois_permutation(t) for t in units}
    seen = set()
    out = []
    nus = fs_indicators(table)
    for i in range(len(table)):
        if i in seen:
            continue
        orbit = sorted({int(perms[t][i]) for t in units})
        seen.update(orbit)
        stab = tuple(t for t in units if perms[t][i] == i)
        degs = {table.degrees[j] for j in orbit}
        fss = {nus[j] for j in orbit}
        if len(degs) != 1 or len(fss) != 1:
            raise CharacterTableError("Galois orbit members disagree on degree or indicator")
        out.append(RationalCharClass(tuple(orbit), len(orbit), fss.pop(), degs.pop(), stab))
    if check_berman:
        from .rank import rational_classes

        nq = len(rational_classes(G.classes, G))
        if nq != len(out):
            raise CharacterTableError(f"{len(out)} character orbits but {nq} rational class cells")
    return out
