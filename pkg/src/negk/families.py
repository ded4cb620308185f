"""Built-in group families and the family-expression grammar.

Permutation models used for each family:

* ``Cyclic(n)``: the n-cycle (1,...,n).
* ``Dihedral(n)``, n = 2k even: symmetries of a k-gon, rotation (1,...,k) and
  reflection i -> k+1-i; Dihedral(2) = C2 and Dihedral(4) = C2 x C2 act on 2 and 4 points.
* ``Dicyclic(k)``, order 4k: regular representation of <a, b | a^2k, b^2 = a^k, b^-1 a b = a^-1>.
* ``Sym(k)``, ``Alt(k)`` for k <= 5: natural action on k points.
* ``SL(2,3)``, ``SL(2,5)``: action on the non-zero vectors of F_p^2.
* ``BinO``: regular representation of <r, s, t | r^2 = s^3 = t^4 = rst>.
* ``Prod(A, B)``: A and B acting on disjoint point sets.
"""

from __future__ import annotations

import itertools
import re

from .group import FiniteGroup, GroupError, format_cycles, group_from_generators, parse_cycles
from .presentation import presentation_perms


class FamilyError(GroupError, ValueError):
    pass


def _cycle(n: int, start: int = 1) -> str:
    return "(" + ",".join(str(i) for i in range(start, start + n)) + ")" if n > 1 else "()"


def _sl2_perms(p: int) -> list[str]:
    vecs = [v for v in itertools.product(range(p), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        (a, b), (c, d) = mat
        # row vector times matrix
        return [index[((x * a + y * c) % p, (x * b + y * d) % p)] for x, y in vecs]

    gens = [((1, 1), (0, 1)), ((0, 1), (p - 1, 0))]
    return [format_cycles(act(m)) for m in gens]


def family_perms(name: str, args: list) -> list[str]:
    """Generating permutations (1-based cycle strings) for a family member."""
    key = _canonical_family(name)
    if key in ("SL23", "SL25", "BinO") and args:
        raise FamilyError(f"{name} takes no parameters")
    if key == "Cyclic":
        (n,) = _ints(name, args, 1)
        _check(n >= 1, f"Cyclic({n}): need n >= 1")
        return [_cycle(n)]
    if key == "Dihedral":
        (n,) = _ints(name, args, 1)
        _check(n >= 2 and n % 2 == 0, f"Dihedral({n}): the order must be even and >= 2")
        k = n // 2
        if k == 1:
            return ["(1,2)"]
        if k == 2:
            return ["(1,2)", "(3,4)"]
        refl = format_cycles([k - 1 - i for i in range(k)])
        return [_cycle(k), refl]
    if key == "Dicyclic":
        (k,) = _ints(name, args, 1)
        _check(k >= 1, f"Dicyclic({k}): need k >= 1")
        return presentation_perms("ab", [f"a^{2 * k}", f"b^2=a^{k}", "b^-1*a*b=a^-1"])
    if key == "Sym":
        (k,) = _ints(name, args, 1)
        _check(1 <= k <= 5, f"Sym({k}): supported for 1 <= k <= 5")
        return ["()"] if k == 1 else ["(1,2)", _cycle(k)]
    if key == "Alt":
        (k,) = _ints(name, args, 1)
        _check(1 <= k <= 5, f"Alt({k}): supported for 1 <= k <= 5")
        return ["()"] if k < 3 else [f"({i},{i + 1},{i + 2})" for i in range(1, k - 1)]
    if key == "SL23":
        return _sl2_perms(3)
    if key == "SL25":
        return _sl2_perms(5)
    if key == "BinO":
        return presentation_perms("rst", ["r^2=s^3", "s^3=t^4", "t^4=r*s*t"])
    if key == "Prod":
        if len(args) != 2:
            raise FamilyError("Prod takes two group expressions")
        left = family_perms(*args[0])
        right = family_perms(*args[1])
        shift = max(_degree(p) for p in left)
        return left + [_shift(p, shift) for p in right]
    raise FamilyError(f"unknown group family {name!r}")


_ALIASES = {
    "cyclic": "Cyclic", "c": "Cyclic",
    "dihedral": "Dihedral", "d": "Dihedral",
    "dicyclic": "Dicyclic", "dic": "Dicyclic",
    "sym": "Sym", "symmetricgroup": "Sym", "s": "Sym",
    "alt": "Alt", "alternatinggroup": "Alt", "a": "Alt",
    "sl(2,3)": "SL23", "sl23": "SL23",
    "sl(2,5)": "SL25", "sl25": "SL25", "bini": "SL25", "binaryicosahedral": "SL25",
    "bino": "BinO", "binaryoctahedral": "BinO",
    "prod": "Prod", "directproduct": "Prod",
}


def _canonical_family(name: str) -> str:
    key = _ALIASES.get(name.replace(" ", "").lower())
    if key is None:
        raise FamilyError(f"unknown group family {name!r}")
    return key


def _ints(name: str, args: list, count: int) -> list[int]:
    if len(args) != count or not all(isinstance(a, int) for a in args):
        raise FamilyError(f"{name} expects {count} integer parameter(s), got {args!r}")
    return args


def _check(ok: bool, msg: str) -> None:
    if not ok:
        raise FamilyError(msg)


def _degree(cyc: str) -> int:
    nums = [int(x) for x in re.findall(r"\d+", cyc)]
    return max(nums, default=0)


def _shift(cyc: str, k: int) -> str:
    return re.sub(r"\d+", lambda m: str(int(m.group()) + k), cyc)


# -- expression grammar --------------------------------------------------------

_TOKEN = re.compile(r"\s*(SL\s*\(\s*2\s*,\s*[35]\s*\)|[A-Za-z_][A-Za-z_0-9]*|\d+|[(),])")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FamilyError(f"cannot parse group expression {text!r} at position {pos}")
        out.append(m.group(1).replace(" ", ""))
        pos = m.end()
    return out


def parse_family_expr(text: str):
    """Parse e.g. ``Prod(Cyclic(2),Dicyclic(4))`` into a (name, args) tree."""
    toks = _tokenize(text)
    pos = 0

    def expr():
        nonlocal pos
        if pos >= len(toks):
            raise FamilyError(f"unexpected end of expression {text!r}")
        name = toks[pos]
        pos += 1
        if name.upper().startswith("SL("):
            return (name, [])
        if not re.match(r"[A-Za-z_]", name):
            raise FamilyError(f"expected a family name in {text!r}, got {name!r}")
        args = []
        if pos < len(toks) and toks[pos] == "(":
            pos += 1
            while True:
                if toks[pos].isdigit():
                    args.append(int(toks[pos]))
                    pos += 1
                else:
                    args.append(expr())
                if toks[pos] == ",":
                    pos += 1
                    continue
                if toks[pos] == ")":
                    pos += 1
                    break
                raise FamilyError(f"unexpected token {toks[pos]!r} in {text!r}")
        # shorthand like C6, Q16, D8, S4, A5, Dic5
        m = re.fullmatch(r"(C|D|Q|S|A|Dic)(\d+)", name)
        if m and not args:
            fam, k = m.group(1), int(m.group(2))
            if fam == "Q":
                if k % 4 or k < 8:
                    raise FamilyError(f"Q{k}: generalized quaternion needs order divisible by 8")
                return ("Dicyclic", [k // 4])
            return ({"C": "Cyclic", "D": "Dihedral", "S": "Sym", "A": "Alt", "Dic": "Dicyclic"}[fam], [k])
        return (name, args)

    try:
        tree = expr()
    except IndexError:
        raise FamilyError(f"unexpected end of expression {text!r}") from None
    if pos != len(toks):
        raise FamilyError(f"trailing input in group expression {text!r}")
    return tree


def builtin_group(spec, label: str | None = None) -> FiniteGroup:
    """Build a family member from an expression string or a (name, args) tree."""
    tree = parse_family_expr(spec) if isinstance(spec, str) else spec
    perms = family_perms(*tree)
    return group_from_generators(perms, label if label is not None else format_expr(tree))


def format_expr(tree) -> str:
    name, args = tree
    key = _canonical_family(name)
    if key == "SL23":
        return "SL(2,3)"
    if key == "SL25":
        return "SL(2,5)"
    if key == "BinO":
        return "BinO"
    inner = ",".join(format_expr(a) if isinstance(a, tuple) else str(a) for a in args)
    return f"{key}({inner})"


__all__ = ["FamilyError", "builtin_group", "family_perms", "parse_family_expr", "format_expr",
           "parse_cycles"]
