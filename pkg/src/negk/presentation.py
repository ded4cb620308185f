"""Coset enumeration for finite presentations.

Used to turn a presentation such as ``<a, b | a^8, b^2 = a^4, b^-1*a*b = a^-1>``
into the regular permutation representation of the group it defines.
"""

from __future__ import annotations

import re
from typing import Sequence

from .group import FiniteGroup, GroupError, GroupSizeError, format_cycles, group_from_generators

_TOKEN = re.compile(r"\s*([A-Za-z])\s*(?:\^\s*(-?\d+))?\s*")


class PresentationError(GroupError, ValueError):
    pass


def parse_word(text: str, names: Sequence[str]) -> list[int]:
    """Word in the generators as letters 2*i (generator i) and 2*i+1 (its inverse)."""
    text = text.strip()
    if text in ("", "1"):
        return []
    out: list[int] = []
    for part in text.split("*"):
        pos = 0
        part = part.strip()
        if not part:
            raise PresentationError(f"empty factor in {text!r}")
        while pos < len(part):
            m = _TOKEN.match(part, pos)
            if not m or m.end() == pos:
                raise PresentationError(f"cannot parse word {text!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            if name not in names:
                raise PresentationError(f"unknown generator {name!r}")
            i = names.index(name)
            letter = 2 * i if exp > 0 else 2 * i + 1
            out.extend([letter] * abs(exp))
            pos = m.end()
    return out


def invert_word(w: list[int]) -> list[int]:
    return [x ^ 1 for x in reversed(w)]


def parse_relators(relations: Sequence[str], names: Sequence[str]) -> list[list[int]]:
    rels = []
    for r in relations:
        if "=" in r:
            lhs, rhs = r.split("=")
            w = parse_word(lhs, names) + invert_word(parse_word(rhs, names))
        else:
            w = parse_word(r, names)
        if w:
            rels.append(w)
    return rels


def enumerate_cosets(ngens: int, relators: list[list[int]], max_cosets: int = 200_000) -> list[list[int]]:
    """HLT coset enumeration over the trivial subgroup; returns the compact coset table."""
    ncols = 2 * ngens
    table: list[list[int]] = [[-1] * ncols]
    parent = [0]

    def rep(k: int) -> int:
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def merge(k: int, l: int, queue: list[int]) -> None:
        k, l = rep(k), rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        parent[l] = k
        queue.append(l)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(ncols):
                d = table[g][x]
                if d == -1:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] != -1:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] != -1:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def define(c: int, x: int) -> None:
        if len(table) >= max_cosets:
            raise GroupSizeError(f"coset enumeration exceeded {max_cosets} cosets")
        new = len(table)
        table.append([-1] * ncols)
        parent.append(new)
        table[c][x] = new
        table[new][x ^ 1] = c

    def scan_and_fill(alpha: int, w: list[int]) -> None:
        f, b = alpha, alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] != -1:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        if parent[c] == c:
            for w in relators:
                if parent[c] != c:
                    break
                scan_and_fill(c, w)
            if parent[c] == c:
                for x in range(ncols):
                    if table[c][x] == -1:
                        define(c, x)
        c += 1

    live = [k for k in range(len(table)) if parent[k] == k]
    renum = {k: i for i, k in enumerate(live)}
    return [[renum[rep(table[k][x])] for x in range(ncols)] for k in live]


def presentation_perms(names: Sequence[str], relations: Sequence[str], max_cosets: int = 200_000) -> list[str]:
    """Generators of the regular representation as 1-based cycle strings."""
    rels = parse_relators(relations, names)
    table = enumerate_cosets(len(names), rels, max_cosets)
    n = len(table)
    return [format_cycles([table[c][2 * i] for c in range(n)]) if n > 1 else "()"
            for i in range(len(names))]


def group_from_presentation(names: Sequence[str], relations: Sequence[str], label: str = "",
                            max_cosets: int = 200_000) -> FiniteGroup:
    perms = presentation_perms(names, relations, max_cosets)
    return group_from_generators(perms, label)


def parse_presentation(text: str) -> tuple[list[str], list[str]]:
    """Parse ``<a,b | a^4, b^2=a^2, b^-1*a*b=a^-1>``."""
    m = re.fullmatch(r"\s*<([^|>]*)\|([^>]*)>\s*", text)
    if not m:
        raise PresentationError(f"malformed presentation {text!r}")
    names = [s.strip() for s in m.group(1).split(",") if s.strip()]
    rels = [s.strip() for s in m.group(2).split(",") if s.strip()]
    return names, rels
