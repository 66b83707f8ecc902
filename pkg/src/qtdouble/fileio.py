"""
JSON file format for Lie bialgebras and their doubles.

    {"name": "sl2", "dim": 3, "basis": ["e", "f", "h"],
     "brackets": {"0,1": [[2, "1"]], "0,2": [[0, "-2"]], "1,2": [[1, "2"]]},
     "r": [[0, 1, "1"], [2, 2, "1/4"]]}

Indices are 0-based.  A bracket given only for (i, j) is mirrored to (j, i)
with the opposite sign; when both orders are given both are taken literally,
so broken antisymmetry survives parsing and is reported by ``verify``.
Coefficients are strings "p/q" or "p" (plain JSON integers are accepted too,
floats never).  Optional keys: "form" (a bilinear form on g, same layout as
"r") and "chart" (metadata written alongside a double).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .lie import LieAlgebra
from .linalg import ZERO, Tensor2

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_PAIR = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
_KEYS = {"name", "dim", "basis", "brackets", "r", "form", "chart"}


def parse_rational(s, where: str = "") -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string 'p/q', got {s!r}", where)
    if isinstance(s, int):
        return Fraction(s)
    m = _RATIONAL.match(s)
    if not m:
        raise ParseError(f"malformed rational {s!r}", where)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"zero denominator in {s!r}", where)
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class BialgebraFile:
    name: str
    basis: tuple
    c: tuple
    r: tuple
    form: tuple | None = None
    chart: dict | None = field(default=None, compare=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def lie(self, space: str = "g") -> LieAlgebra:
        return LieAlgebra(self.name, self.basis, self.c, space)

    def r_tensor(self, space: str = "g") -> Tensor2:
        return Tensor2((space, space), self.r)

    def form_tensor(self, space: str = "g") -> Tensor2 | None:
        return None if self.form is None else Tensor2((space, space), self.form)


def _index(x, n, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer index, got {x!r}", where)
    if not 0 <= x < n:
        raise ParseError(f"index {x} out of range 0..{n - 1}", where)
    return x


def _matrix_entries(raw, n, where) -> tuple:
    if not isinstance(raw, list):
        raise ParseError("expected a list of [i, j, coefficient] triples", where)
    m = [[ZERO] * n for _ in range(n)]
    seen = set()
    for t, entry in enumerate(raw):
        loc = f"{where}[{t}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError("expected [i, j, coefficient]", loc)
        i, j = _index(entry[0], n, loc), _index(entry[1], n, loc)
        if (i, j) in seen:
            raise ParseError(f"duplicate entry ({i}, {j})", loc)
        seen.add((i, j))
        m[i][j] = parse_rational(entry[2], loc)
    return tuple(tuple(row) for row in m)


def from_dict(data, source: str = "<input>") -> BialgebraFile:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", source)
    extra = set(data) - _KEYS
    if extra:
        raise ParseError(f"unknown keys {sorted(extra)}", source)
    for key in ("name", "dim", "basis", "brackets", "r"):
        if key not in data:
            raise ParseError(f"missing key {key!r}", source)
    name, dim, basis = data["name"], data["dim"], data["basis"]
    if not isinstance(name, str):
        raise ParseError("name must be a string", f"{source}: name")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError("dim must be a non-negative integer", f"{source}: dim")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("basis must be a list of strings", f"{source}: basis")
    if len(basis) != dim:
        raise ParseError(f"basis has {len(basis)} names but dim is {dim}", f"{source}: basis")
    n = dim
    brackets = data["brackets"]
    if not isinstance(brackets, dict):
        raise ParseError("brackets must be an object", f"{source}: brackets")
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    given = set()
    for key, terms in brackets.items():
        loc = f"{source}: brackets[{key!r}]"
        m = _PAIR.match(key)
        if not m:
            raise ParseError("bracket key must look like 'i,j'", loc)
        i, j = _index(int(m.group(1)), n, loc), _index(int(m.group(2)), n, loc)
        if (i, j) in given:
            raise ParseError(f"duplicate bracket ({i}, {j})", loc)
        given.add((i, j))
        if not isinstance(terms, list):
            raise ParseError("expected a list of [k, coefficient] pairs", loc)
        ks = set()
        for t, term in enumerate(terms):
            tl = f"{loc}[{t}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError("expected [k, coefficient]", tl)
            k = _index(term[0], n, tl)
            if k in ks:
                raise ParseError(f"duplicate output index {k}", tl)
            ks.add(k)
            c[i][j][k] = parse_rational(term[1], tl)
    for i, j in given:
        if i != j and (j, i) not in given:
            c[j][i] = [-x for x in c[i][j]]
    r = _matrix_entries(data["r"], n, f"{source}: r")
    form = None
    if "form" in data:
        form = _matrix_entries(data["form"], n, f"{source}: form")
    chart = data.get("chart")
    if chart is not None and not isinstance(chart, dict):
        raise ParseError("chart must be an object", f"{source}: chart")
    return BialgebraFile(name, tuple(basis), tuple(tuple(tuple(v) for v in row) for row in c),
                         r, form, chart)


def loads(text: str, source: str = "<input>") -> BialgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"{source}:{e.lineno}:{e.colno}") from None
    return from_dict(data, source)


def load(path) -> BialgebraFile:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"not UTF-8: {e.reason}", str(p)) from None
    return loads(text, str(p))


def _sparse_matrix(m) -> list:
    return [[i, j, format_rational(v)] for i, row in enumerate(m) for j, v in enumerate(row) if v]


def _brackets(c) -> dict:
    n = len(c)
    out = {}

    def terms(i, j):
        return [[k, format_rational(v)] for k, v in enumerate(c[i][j]) if v]

    for i in range(n):
        if any(c[i][i]):
            out[f"{i},{i}"] = terms(i, i)
        for j in range(i + 1, n):
            # write both orders whenever the mirror rule would not reproduce c[j][i]
            both = tuple(c[j][i]) != tuple(-x for x in c[i][j])
            if any(c[i][j]) or both:
                out[f"{i},{j}"] = terms(i, j)
            if both:
                out[f"{j},{i}"] = terms(j, i)
    return out


def to_dict(f: BialgebraFile) -> dict:
    out = {"name": f.name, "dim": f.dim, "basis": list(f.basis),
           "brackets": _brackets(f.c), "r": _sparse_matrix(f.r)}
    if f.form is not None:
        out["form"] = _sparse_matrix(f.form)
    if f.chart is not None:
        out["chart"] = f.chart
    return out


def _format(x, depth: int = 0) -> str:
    # objects one key per line, lists on a single line
    if isinstance(x, dict):
        if not x:
            return "{}"
        pad = "  " * (depth + 1)
        items = [f"{pad}{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def dumps(f: BialgebraFile) -> str:
    return _format(to_dict(f)) + "\n"


def dump(f: BialgebraFile, path) -> None:
    Path(path).write_text(dumps(f), encoding="utf-8")


def from_bialgebra(B, name: str | None = None, form=None) -> BialgebraFile:
    g = B.g
    K = None if form is None else (form.entries if isinstance(form, Tensor2) else tuple(
        tuple(Fraction(x) for x in row) for row in form))
    return BialgebraFile(name or g.name, g.basis_names, g.c, B.r.entries, K)


def vectors_json(rows) -> list:
    return [[format_rational(x) for x in r] for r in rows]


def vectors_from_json(raw, where: str = "chart") -> tuple:
    if not isinstance(raw, list):
        raise ParseError("expected a list of vectors", where)
    return tuple(tuple(parse_rational(x, f"{where}[{i}]") for x in row) if isinstance(row, list)
                 else _bad_vector(f"{where}[{i}]") for i, row in enumerate(raw))


def _bad_vector(where):
    raise ParseError("expected a vector (list of rationals)", where)
