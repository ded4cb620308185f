"""Catalog files: groups as permutation generators keyed by (order, index).

Format, one entry per block::

    # comment
    group 16 9 Q16
    # check classes=7 abelianization=2,2
    gen (1,2,3,...)
    gen ...

``# check`` lines are optional; they record invariants that ``verify`` re-derives.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .group import FiniteGroup, GroupError, group_from_generators, quotient_group
from .numtheory import factorize

ENV_DIR = "NEGK_CATALOG_DIR"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    index: int
    name: str
    generators: tuple[str, ...]
    checks: dict = field(default_factory=dict, compare=False, hash=False)
    source: str = field(default="", compare=False)

    @property
    def key(self) -> tuple[int, int]:
        return (self.order, self.index)

    def build(self) -> FiniteGroup:
        G = group_from_generators(self.generators or ["()"], self.name)
        if G.order != self.order:
            raise CatalogError(f"{self.source}: {self.name} generates a group of order {G.order}, "
                               f"header says {self.order}")
        return G


_HEADER = re.compile(r"group\s+(\d+)\s+(\d+)\s+(\S.*)")
_CHECK = re.compile(r"#\s*check\s+(.*)")


def parse_catalog(text: str, source: str = "<string>") -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    cur: dict | None = None

    def flush():
        if cur is not None:
            entries.append(CatalogEntry(cur["order"], cur["index"], cur["name"], tuple(cur["gens"]),
                                        cur["checks"], source))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        m = _CHECK.match(line)
        if m and cur is not None:
            for item in m.group(1).split():
                k, _, v = item.partition("=")
                cur["checks"][k] = v
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("group"):
            m = _HEADER.fullmatch(line)
            if not m:
                raise CatalogError(f"{source}:{lineno}: malformed header {raw!r}")
            flush()
            cur = {"order": int(m.group(1)), "index": int(m.group(2)), "name": m.group(3).strip(),
                   "gens": [], "checks": {}}
        elif line.startswith("gen"):
            if cur is None:
                raise CatalogError(f"{source}:{lineno}: generator before any group header")
            cur["gens"].append(line[3:].strip() or "()")
        else:
            raise CatalogError(f"{source}:{lineno}: unrecognised line {raw!r}")
    flush()
    keys = Counter(e.key for e in entries)
    dup = [k for k, c in keys.items() if c > 1]
    if dup:
        raise CatalogError(f"{source}: duplicate keys {dup}")
    return entries


def read_catalog(path: str | os.PathLike) -> list[CatalogEntry]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise CatalogError(f"cannot read catalog {p}: {e.strerror or e}") from e
    return parse_catalog(text, str(p))


def format_entry(e: CatalogEntry) -> str:
    lines = [f"group {e.order} {e.index} {e.name}"]
    if e.checks:
        lines.append("# check " + " ".join(f"{k}={v}" for k, v in e.checks.items()))
    lines += [f"gen {g}" for g in e.generators]
    return "\n".join(lines) + "\n"


def write_catalog(path: str | os.PathLike, entries, header: str = "") -> None:
    parts = ["".join(f"# {ln}\n" if ln else "#\n" for ln in header.splitlines())] if header else []
    parts += [format_entry(e) for e in sorted(entries, key=lambda e: e.key)]
    Path(path).write_text("\n".join(parts), encoding="utf-8")


def default_catalog_dir() -> Path:
    env = os.environ.get(ENV_DIR)
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "catalog"


def load_catalog(path: str | os.PathLike | None = None) -> list[CatalogEntry]:
    """Entries of one file, or of every ``*.cat`` in the default directory.

    Files are read in name order; a key seen twice keeps its first entry.
    """
    if path is not None:
        p = Path(path)
        files = sorted(p.glob("*.cat")) if p.is_dir() else [p]
    else:
        d = default_catalog_dir()
        if not d.is_dir():
            raise CatalogError(f"catalog directory {d} not found (set {ENV_DIR})")
        files = sorted(d.glob("*.cat"))
    seen: dict[tuple[int, int], CatalogEntry] = {}
    for f in files:
        for e in read_catalog(f):
            seen.setdefault(e.key, e)
    return sorted(seen.values(), key=lambda e: e.key)


# -- invariants recorded in ``# check`` lines ------------------------------------

def derived_subgroup(G: FiniteGroup) -> frozenset[int]:
    inv = G.inverse
    comms = {int(G.mult[G.mult[inv[x], inv[y]], G.mult[x, y]])
             for x in G.generators for y in range(G.order)}
    return G.normal_closure(comms | {0})


def abelian_invariants(A: FiniteGroup) -> tuple[int, ...]:
    """Elementary-divisor decomposition of an abelian group, as sorted prime powers."""
    if not A.is_abelian():
        raise GroupError("abelian_invariants needs an abelian group")
    orders = A.element_order
    out = []
    for p, e in factorize(A.order):
        # c[k] = #{x : x^(p^k) = 1}; parts of size >= p^k number log_p(c[k] / c[k-1])
        c = [int(sum(1 for o in orders.tolist() if (p ** k) % o == 0)) for k in range(e + 1)]
        ge = [round(_log(c[k] // c[k - 1], p)) for k in range(1, e + 1)]
        for k in range(1, e + 1):
            nxt = ge[k] if k < e else 0
            out += [p ** k] * (ge[k - 1] - nxt)
    return tuple(sorted(out))


def _log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def group_checks(G: FiniteGroup) -> dict[str, str]:
    ab = abelian_invariants(quotient_group(G, derived_subgroup(G)))
    return {"classes": str(len(G.classes)), "abelianization": ",".join(map(str, ab)) or "1"}


def check_entry(e: CatalogEntry, G: FiniteGroup | None = None) -> list[str]:
    """Problems found when rebuilding an entry; empty means consistent."""
    try:
        G = G or e.build()
    except (GroupError, CatalogError) as exc:
        return [str(exc)]
    got = group_checks(G)
    return [f"{e.order} {e.index} {e.name}: {k} is {got[k]}, recorded {v}"
            for k, v in e.checks.items() if k in got and got[k] != v]
