"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored in the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n),
reduced modulo the n-th cyclotomic polynomial, with n the conductor (the
smallest n whose field contains the value; n is never 2 mod 4).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

import numpy as np

from .numtheory import divisors, euler_phi, lcm

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _exact_divide(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dq = len(num) - len(den)
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        quo[i] = c
        for j, b in enumerate(den):
            num[i + j] -= c * b
    assert not any(num), "inexact polynomial division"
    return quo


@lru_cache(maxsize=None)
def reduction_matrix(n: int, length: int) -> np.ndarray:
    """Integer matrix R with (x^0..x^(length-1)) mod Phi_n = coeffs @ R."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = np.zeros((max(length, phi), phi), dtype=object)
    for i in range(min(length, phi)):
        rows[i, i] = 1
    for i in range(phi, length):
        # x^i = x * x^(i-1); x^phi = -sum poly[j] x^j
        prev = rows[i - 1]
        cur = np.zeros(phi, dtype=object)
        cur[1:] = prev[:-1]
        top = prev[-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
        rows[i] = cur
    return rows[:length]


def _reduce(vec: list, n: int) -> list:
    phi = euler_phi(n)
    if len(vec) <= phi:
        return list(vec) + [0] * (phi - len(vec))
    poly = cyclotomic_poly(n)
    vec = list(vec)
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            for j in range(phi):
                vec[i - phi + j] -= c * poly[j]
    return vec[:phi]


def _embed(coeffs: tuple, n: int, big: int) -> list:
    """Coefficients of a Q(zeta_n) element inside Q(zeta_big), unreduced mod big."""
    step = big // n
    out = [0] * big
    for j, c in enumerate(coeffs):
        if c:
            out[(j * step) % big] += c
    return out


def _galois(coeffs: tuple, n: int, t: int) -> list:
    out = [0] * n
    for j, c in enumerate(coeffs):
        if c:
            out[(j * t) % n] += c
    return _reduce(out, n)


@lru_cache(maxsize=None)
def _descent(big: int, small: int):
    """Pivot columns and inverse matrix for rewriting Q(zeta_small) elements given in Q(zeta_big)."""
    phi_s = euler_phi(small)
    basis = [_reduce(_embed(tuple([0] * j + [1]), small, big), big) for j in range(phi_s)]
    # choose pivot columns by Gaussian elimination over Q
    mat = [[Fraction(x) for x in row] for row in basis]
    piv = []
    work = [row[:] for row in mat]
    r = 0
    ncols = len(work[0])
    for c in range(ncols):
        sel = next((i for i in range(r, phi_s) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(phi_s):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        piv.append(c)
        r += 1
        if r == phi_s:
            break
    # square system: coeffs @ basis[:, piv] = x[piv]
    sq = [[mat[i][c] for c in piv] for i in range(phi_s)]
    inv = _invert(sq)
    return tuple(piv), inv


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        sel = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[sel] = aug[sel], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _fixed_by(coeffs: tuple, n: int, d: int) -> bool:
    for t in range(1, n):
        if t % d == 1 % d and gcd(t, n) == 1 and t != 1:
            if tuple(_galois(coeffs, n, t)) != coeffs:
                return False
    return True


def _normalize(n: int, coeffs: list) -> tuple[int, tuple]:
    coeffs = tuple(Fraction(c) for c in _reduce(coeffs, n))
    if n % 4 == 2:
        # Q(zeta_n) = Q(zeta_{n/2}) with zeta_n = -zeta_{n/2}^((n/2+1)/2)
        half = n // 2
        vec = [0] * n
        for j, c in enumerate(coeffs):
            if c:
                # zeta_n^j = (-1)^j * zeta_half^(j*(half+1)/2)
                e = (j * ((half + 1) // 2)) % half if half > 1 else 0
                vec[e] += -c if j % 2 else c
        return _normalize(half, vec[:max(half, 1)])
    if not any(coeffs[1:]):
        return 1, (coeffs[0] if coeffs else Fraction(0),)
    for d in divisors(n):
        if d == n:
            break
        if d % 4 == 2 or d == 1:
            continue
        if _fixed_by(coeffs, n, d):
            piv, inv = _descent(n, d)
            rhs = [coeffs[c] for c in piv]
            new = [sum((rhs[i] * inv[i][j] for i in range(len(rhs))), Fraction(0)) for j in range(len(rhs))]
            return d, tuple(new)
    return n, coeffs


class CyclotomicNumber:
    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Rational]):
        n, c = _normalize(conductor, list(coeffs))
        self.conductor = n
        self.coeffs = c
        self._hash = None

    # constructors
    @classmethod
    def rational(cls, r: Rational) -> "CyclotomicNumber":
        return cls(1, [Fraction(r)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        vec = [0] * n
        vec[k % n] = 1
        return cls(n, vec)

    @classmethod
    def from_exponents(cls, n: int, mult: Mapping[int, Rational] | Iterable[Rational]) -> "CyclotomicNumber":
        """Sum of c * zeta_n^e for e -> c (or a dense list indexed by e)."""
        vec = [0] * n
        items = mult.items() if isinstance(mult, Mapping) else enumerate(mult)
        for e, c in items:
            vec[e % n] += c
        return cls(n, vec)

    # basic protocol
    def _lift(self, big: int) -> list:
        return _embed(self.coeffs, self.conductor, big)

    def _binop_field(self, other: "CyclotomicNumber") -> int:
        return lcm(self.conductor, other.conductor)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        big = self._binop_field(other)
        a, b = self._lift(big), other._lift(big)
        return CyclotomicNumber(big, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        big = self._binop_field(other)
        a = _reduce(self._lift(big), big)
        b = _reduce(other._lift(big), big)
        prod = [Fraction(0)] * (2 * len(a))
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(big, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.conductor, [c / Fraction(other) for c in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def galois_apply(self, t: int) -> "CyclotomicNumber":
        n = self.conductor
        if gcd(t, n) != 1:
            raise ValueError(f"{t} is not coprime to the conductor {n}")
        return CyclotomicNumber(n, _galois(self.coeffs, n, t % n if n > 1 else 0))

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois_apply(-1)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def to_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def sort_key(self):
        return (self.conductor, self.coeffs)

    def __repr__(self):
        return f"CyclotomicNumber({self})"

    def __str__(self):
        return format_cyclotomic(self)


def _coerce(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CyclotomicNumber.rational(x)
    return NotImplemented


def embed(r: Rational) -> CyclotomicNumber:
    return CyclotomicNumber.rational(r)


def add(x, y) -> CyclotomicNumber:
    return _coerce(x) + _coerce(y)


def multiply(x, y) -> CyclotomicNumber:
    return _coerce(x) * _coerce(y)


def galois_apply(x: CyclotomicNumber, t: int) -> CyclotomicNumber:
    return _coerce(x).galois_apply(t)


def is_rational(x: CyclotomicNumber) -> bool:
    return _coerce(x).is_rational()


def to_rational(x: CyclotomicNumber) -> Fraction:
    return _coerce(x).to_rational()


def format_cyclotomic(x: CyclotomicNumber) -> str:
    """Text syntax like ``-1+2*z8^3-1/2*z8``; ``zN`` is a primitive N-th root of unity."""
    n = x.conductor
    if n == 1:
        return str(x.coeffs[0])
    parts = []
    for j, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mono = "" if j == 0 else (f"z{n}" if j == 1 else f"z{n}^{j}")
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{c}*{mono}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(?:z(\d+)(?:\^(\d+))?)?")


def parse_cyclotomic(text: str) -> CyclotomicNumber:
    """Inverse of :func:`format_cyclotomic` (accepts any conductor mix)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    total = CyclotomicNumber.rational(0)
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if mt is None or mt.end() == pos or (mt.group(2) is None and mt.group(3) is None):
            raise ValueError(f"cannot parse cyclotomic literal {text!r}")
        sign, coef, cond, exp = mt.groups()
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        if cond:
            term = CyclotomicNumber.zeta(int(cond), int(exp or 1)) * c
        else:
            term = CyclotomicNumber.rational(c)
        total = total + term
        pos = mt.end()
    return total


# -- vectorised integer arithmetic in Z[zeta_m] for table-wide checks ---------

def as_int_vector(x: CyclotomicNumber, m: int) -> np.ndarray:
    """Coefficients of x in the power basis of Q(zeta_m); x must be integral there."""
    if m % x.conductor:
        raise ValueError(f"conductor {x.conductor} does not divide {m}")
    vec = _reduce(x._lift(m), m)
    if any(Fraction(v).denominator != 1 for v in vec):
        raise ValueError(f"{x} is not an algebraic integer in the power basis")
    return np.array([int(v) for v in vec], dtype=np.int64)


def conj_matrix(m: int) -> np.ndarray:
    """Integer matrix of complex conjugation on the power basis of Q(zeta_m)."""
    phi = euler_phi(m)
    rows = []
    for j in range(phi):
        unit = tuple(Fraction(int(i == j)) for i in range(phi))
        rows.append([int(v) for v in _galois(unit, m, -1 % m if m > 1 else 0)])
    return np.array(rows, dtype=np.int64)


def poly_mul_reduce(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Product of batched Z[zeta_m] vectors (last axis = basis) reduced mod Phi_m."""
    phi = a.shape[-1]
    R = np.array(reduction_matrix(m, 2 * phi - 1), dtype=np.int64)
    out_shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    raw = np.zeros(out_shape + (2 * phi - 1,), dtype=np.int64)
    for i in range(phi):
        raw[..., i:i + phi] += a[..., i:i + 1] * b
    return raw @ R
