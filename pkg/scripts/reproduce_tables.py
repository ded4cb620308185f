"""Regenerate the K_{-1} tables from the shipped catalog.

Writes into --out (default ./tables):
  leq28.tsv / leq28.tex              every group of order <= 28
  s-positive.tsv / s-positive.tex    catalog groups with s > 0
  minimal-s.tsv                      s > 0 with no quotient of positive s

Usage: python3 scripts/reproduce_tables.py [--out DIR] [--jobs N] [--max-minimal 100]
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from negk.cli import main as negk


def run(argv: list[str]) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = negk(argv)
    if code:
        raise SystemExit(f"negk {' '.join(argv)} exited with {code}")
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("tables"))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--max-minimal", type=int, default=100)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    jobs = ["--jobs", str(args.jobs)]
    outputs = {
        "leq28.tsv": ["scan", "--min", "1", "--max", "28", *jobs],
        "leq28.tex": ["scan", "--min", "1", "--max", "28", "--format", "latex", *jobs],
        "s-positive.tsv": ["scan", "--min", "1", "--max", "100", "--s-positive", *jobs],
        "s-positive.tex": ["scan", "--min", "1", "--max", "100", "--s-positive", "--format", "latex", *jobs],
        "minimal-s.tsv": ["minimal-s", "--max", str(args.max_minimal), *jobs],
    }
    for name, cmd in outputs.items():
        text = run(cmd)
        (args.out / name).write_text(text, encoding="utf-8")
        print(f"wrote {args.out / name} ({len(text.splitlines())} lines)", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
