"""Command-line entry point ``negk``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 a group the Schur machinery cannot handle.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .catalog import CatalogEntry, CatalogError, load_catalog
from .chartab import character_table
from .families import builtin_group
from .group import FiniteGroup, GroupError, group_from_generators, normal_subgroups, quotient_group
from .presentation import group_from_presentation, parse_presentation
from .schur import INF, UnsupportedGroupError, format_k_minus_one, k_minus_one
from .verify import verify_catalog

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ScanRow:
    order: int
    index: int
    name: str
    r: int
    s: int
    elapsed_ms: int = 0

    @property
    def key(self) -> tuple[int, int]:
        return (self.order, self.index)


# -- group specs -------------------------------------------------------------------

_KEY = re.compile(r"\(?\s*(\d+)\s*,\s*(\d+)\s*\)?")


def resolve_group(spec: str, catalog: str | None = None) -> FiniteGroup:
    """A family expression, a catalog key ``order,index``, ``gens:<perm>;<perm>`` or ``<a,b | ...>``."""
    text = spec.strip()
    try:
        if text.startswith("gens:"):
            gens = [g.strip() for g in text[5:].split(";") if g.strip()]
            return group_from_generators(gens or ["()"], text)
        if text.startswith("<"):
            names, rels = parse_presentation(text)
            return group_from_presentation(names, rels, text)
        m = _KEY.fullmatch(text)
        if m:
            key = (int(m.group(1)), int(m.group(2)))
            entry = next((e for e in load_catalog(catalog) if e.key == key), None)
            if entry is None:
                raise UsageError(f"no catalog entry {key[0]},{key[1]}")
            return entry.build()
        return builtin_group(text)
    except (GroupError, CatalogError, ValueError) as exc:
        raise UsageError(f"cannot resolve group {spec!r}: {exc}") from exc


# -- row computation (runs in worker processes) -------------------------------------

def _scan_one(entry: CatalogEntry) -> tuple[tuple[int, int], ScanRow | str]:
    t0 = time.perf_counter()
    try:
        res = k_minus_one(entry.build())
    except UnsupportedGroupError as exc:
        return entry.key, f"unsupported: {exc}"
    ms = int((time.perf_counter() - t0) * 1000)
    return entry.key, ScanRow(entry.order, entry.index, entry.name, res.r, res.s, ms)


def _minimal_one(entry: CatalogEntry) -> tuple[tuple[int, int], ScanRow | str | None]:
    key, row = _scan_one(entry)
    if isinstance(row, str) or row.s == 0:
        return key, row if isinstance(row, str) else None
    G = entry.build()
    try:
        for N in normal_subgroups(G):
            if 1 < N.order < G.order and k_minus_one(quotient_group(G, N)).s:
                return key, None
    except UnsupportedGroupError as exc:
        return key, f"unsupported quotient: {exc}"
    return key, row


def _run(fn, entries: list[CatalogEntry], jobs: int) -> dict:
    if jobs <= 1 or len(entries) <= 1:
        return dict(map(fn, entries))
    # hardest groups first so the pool stays busy
    work = sorted(entries, key=lambda e: -e.order)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return dict(pool.map(fn, work, chunksize=1))


# -- output ------------------------------------------------------------------------

def latex_name(name: str) -> str:
    out = re.sub(r"\bDic(\d+)", lambda m: r"\text{Dic}_{" + m.group(1) + "}", name)
    out = re.sub(r"\b([CDQSA])(\d+)", lambda m: f"{m.group(1)}_{{{m.group(2)}}}"
                 if len(m.group(2)) > 1 else f"{m.group(1)}_{m.group(2)}", out)
    out = out.replace("BinO", r"\tilde{O}").replace(" x ", r" \times ").replace(" : ", r" \rtimes ")
    return f"${out}$"


def latex_k(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append(r"\mathbb{Z}" + ("" if r == 1 else f"^{{{r}}}"))
    if s:
        parts.append(r"\mathbb{Z}/2" if s == 1 else rf"(\mathbb{{Z}}/2)^{{{s}}}")
    return "$" + (r" \oplus ".join(parts) if parts else "0") + "$"


def format_rows(rows: list[ScanRow], fmt: str, timing: bool = False) -> str:
    lines = []
    if fmt == "latex":
        header = r"& Index  &  Structure  & $r(G)$ & $s(G)$ & $K_{-1}\mathbb{Z}[G]$  \\"
        last = None
        for row in rows:
            if row.order != last:
                lines.append(f"$n = {row.order}$ {header}")
                last = row.order
            tail = f" % {row.elapsed_ms} ms" if timing else ""
            lines.append(f" & ${row.index}$ & {latex_name(row.name)} & {row.r} & {row.s} & "
                         f"{latex_k(row.r, row.s)} \\\\{tail}")
    else:
        cols = ["order", "index", "name", "r", "s", "K-1"] + (["elapsed_ms"] if timing else [])
        lines.append("\t".join(cols))
        for row in rows:
            vals = [row.order, row.index, row.name, row.r, row.s, format_k_minus_one(row.r, row.s)]
            lines.append("\t".join(map(str, vals + ([row.elapsed_ms] if timing else []))))
    return "\n".join(lines) + "\n"


def _select(catalog: str | None, lo: int, hi: int, match: str | None = None) -> list[CatalogEntry]:
    entries = [e for e in load_catalog(catalog) if lo <= e.order <= hi]
    if match:
        rx = re.compile(match)
        entries = [e for e in entries if rx.search(e.name)]
    return entries


def _report_missing(entries: list[CatalogEntry], lo: int, hi: int) -> None:
    have = {e.order for e in entries}
    missing = [n for n in range(max(lo, 1), hi + 1) if n not in have]
    if missing and hi - lo < 10_000:
        print(f"note: no catalog entries for {len(missing)} orders in [{lo}, {hi}]", file=sys.stderr)


def _emit_failures(failed: dict) -> int:
    for key, msg in sorted(failed.items()):
        print(f"{key[0]} {key[1]}: {msg}", file=sys.stderr)
    return EXIT_UNSUPPORTED if failed else EXIT_OK


# -- commands ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    G = resolve_group(args.group, args.catalog)
    t0 = time.perf_counter()
    res = k_minus_one(G)
    out = sys.stdout
    out.write(f"r={res.r} s={res.s} K-1 = {format_k_minus_one(res.r, res.s)}\n")
    if args.timing:
        out.write(f"elapsed_ms={int((time.perf_counter() - t0) * 1000)}\n")
    if args.emit_components:
        primes = sorted({p for sd in res.schur_data for p, _ in sd.local_indices if p != INF})
        out.write("\t".join(["degree", "orbit", "indicator", "provenance", "k", "gamma", "matrix"]
                            + [f"m_{p}" for p in primes] + ["m_inf", "contributes"]) + "\n")
        for i, (comp, sd) in enumerate(zip(res.components, res.schur_data)):
            rc, alg = comp.rational_class, comp.algebra
            vals = [rc.degree, rc.field_degree, rc.fs_indicator, comp.provenance, alg.k,
                    ",".join(map(str, alg.gamma)), comp.matrix_size]
            vals += [sd.index_at(p) for p in primes] + [sd.index_at(INF), int(i in res.contributing)]
            out.write("\t".join(map(str, vals)) + "\n")
    if args.emit_chartab:
        tbl = character_table(G)
        out.write("\t".join(["chi"] + [f"{c.element_order}:{c.size}" for c in G.classes]) + "\n")
        for i, chi in enumerate(tbl.characters):
            out.write("\t".join([str(i)] + [str(v) for v in chi]) + "\n")
    return EXIT_OK


def cmd_scan(args) -> int:
    entries = _select(args.catalog, args.min, args.max, args.match)
    _report_missing(entries, args.min, args.max)
    results = _run(_scan_one, entries, args.jobs)
    rows = sorted((r for r in results.values() if isinstance(r, ScanRow)), key=lambda r: r.key)
    if args.s_positive:
        rows = [r for r in rows if r.s > 0]
    sys.stdout.write(format_rows(rows, args.format, args.timing))
    return _emit_failures({k: v for k, v in results.items() if isinstance(v, str)})


def cmd_minimal_s(args) -> int:
    entries = _select(args.catalog, 1, args.max)
    results = _run(_minimal_one, entries, args.jobs)
    rows = sorted((r for r in results.values() if isinstance(r, ScanRow)), key=lambda r: r.key)
    lines = ["order\tindex\tname\ts"] + [f"{r.order}\t{r.index}\t{r.name}\t{r.s}" for r in rows]
    sys.stdout.write("\n".join(lines) + "\n")
    return _emit_failures({k: v for k, v in results.items() if isinstance(v, str)})


def cmd_verify(args) -> int:
    entries = load_catalog(args.catalog)
    if args.max is not None:
        entries = [e for e in entries if e.order <= args.max]
    report = verify_catalog(entries, schur=not args.no_schur)
    for line in report.failures:
        print(f"FAIL {line}")
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="negk", description="K_{-1}(Z[G]) = Z^r + (Z/2)^s for finite groups")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="r and s of one group")
    c.add_argument("group", help="Cyclic(n), Dihedral(n), Dicyclic(n), Sym(n), Alt(n), SL(2,3), SL(2,5), BinO, "
                                 "Prod(a,b); a catalog key 'order,index'; 'gens:<perm>;<perm>'; or '<a,b | rels>'")
    c.add_argument("--emit-components", action="store_true", help="TSV of simple components and local indices")
    c.add_argument("--emit-chartab", action="store_true", help="TSV character table")
    c.add_argument("--catalog", help="catalog file or directory for 'order,index' keys")
    c.add_argument("--timing", action="store_true", help="also print elapsed milliseconds")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("scan", help="r and s for every catalog group in an order range")
    s.add_argument("--min", type=int, default=1)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--s-positive", action="store_true", help="only rows with s > 0")
    s.add_argument("--match", help="regular expression on the group name")
    s.add_argument("--catalog")
    s.add_argument("--format", choices=("tsv", "latex"), default="tsv")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="add an elapsed_ms column (not deterministic)")
    s.set_defaults(func=cmd_scan)

    m = sub.add_parser("minimal-s", help="groups with s > 0 and s = 0 on every proper quotient")
    m.add_argument("--max", type=int, required=True)
    m.add_argument("--catalog")
    m.add_argument("--jobs", type=int, default=1)
    m.set_defaults(func=cmd_minimal_s)

    v = sub.add_parser("verify", help="run the invariant suite over a catalog")
    v.add_argument("--catalog")
    v.add_argument("--max", type=int, help="only groups up to this order")
    v.add_argument("--no-schur", action="store_true", help="skip the Schur-index checks")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("negk: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"negk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CatalogError as exc:
        print(f"negk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedGroupError as exc:
        print(f"negk: unsupported group: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
