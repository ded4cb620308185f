"""Modular arithmetic helpers and the Galois subgroups T_m of (Z/m)^x."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

T = TypeVar("T")


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization as ((p, e), ...) with p increasing."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)^x; ord_1(a) = 1 by convention."""
    if n == 1:
        return 1
    a %= n
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def prime_residues(m: int) -> list[int]:
    """Units of Z/m as integers in [1, m-1]; empty for m = 1.

    Callers that need the group (Z/1)^x = {1} should use :func:`unit_group`.
    """
    return [t for t in range(1, m) if gcd(t, m) == 1]


def unit_group(m: int) -> list[int]:
    """Like prime_residues, but (Z/1)^x is represented by [1]."""
    return [1] if m == 1 else prime_residues(m)


@dataclass(frozen=True)
class GaloisSubgroup:
    """A subgroup T of (Z/m)^x, stored as sorted residues.

    ``q`` and ``mu`` record how T was derived (p-part and prime-to-p part of m)
    when it comes from :func:`galois_t_m`.
    """

    modulus: int
    residues: tuple[int, ...]
    p: int | None = None
    q: int | None = None
    mu: int | None = None
    _set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.residues))

    def __contains__(self, t: int) -> bool:
        return t % self.modulus in self._set if self.modulus > 1 else True

    def __iter__(self):
        return iter(self.residues)

    def __len__(self) -> int:
        return len(self.residues)

    def check(self) -> None:
        m = self.modulus
        assert 1 in self.residues
        for a in self.residues:
            assert gcd(a, m) == 1
            for b in self.residues:
                assert (a * b) % m in self or m == 1


def galois_t_m(m: int, p: int) -> GaloisSubgroup:
    """Gal(Q_p(zeta_m)/Q_p) as the residues t in (Z/m)^x with t mod mu a power of p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("modulus must be positive")
    q = p_part(m, p)
    mu = m // q
    if m == 1:
        return GaloisSubgroup(1, (1,), p, q, mu)
    powers = {pow(p, i, mu) for i in range(1, multiplicative_order(p, mu) + 1)}
    res = tuple(t for t in prime_residues(m) if t % mu in powers)
    return GaloisSubgroup(m, res, p, q, mu)


def cyclic_subgroup(a: int, m: int) -> GaloisSubgroup:
    if m == 1:
        return GaloisSubgroup(1, (1,))
    return GaloisSubgroup(m, tuple(sorted({pow(a, i, m) for i in range(euler_phi(m))})))


def partition_by(items: Sequence[T], rel: Callable[[T, T], bool]) -> list[list[T]]:
    """Split items into rel-classes, keeping first-seen order.

    rel is assumed to be an equivalence relation; this is not checked.
    """
    remaining = list(range(len(items)))
    cells = []
    while remaining:
        s = items[remaining[0]]
        hit = [i for i in remaining if rel(s, items[i])]
        cells.append([items[i] for i in hit])
        hit_set = set(hit)
        remaining = [i for i in remaining if i not in hit_set]
    return cells


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fs):
            return g
    raise ValueError(f"no primitive root mod {p}")


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime l = 1 mod exponent with l > 2*sqrt(order)."""
    l = exponent + 1
    while not (is_prime(l) and (l * l > 4 * order)):
        l += exponent
    return l


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def crt_pair(a: int, m: int, b: int, n: int) -> int:
    """Solve x = a mod m, x = b mod n for coprime m, n."""
    return (a + m * ((b - a) * pow(m, -1, n) % n)) % (m * n) if n > 1 else a % m


def dedupe(items: Iterable[Hashable]) -> list:
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out
