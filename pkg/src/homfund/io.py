"""JSON input files describing a homogeneous space.

Layout::

    {
      "g_hat":  {"gens": 2, "rels": [[...], [...]]},   # rows = gens
      "h_hat":  {"gens": 2, "rels": [[0], [2]]},
      "i_star": [[2, 4], [1, 0]],                       # h_hat.gens x g_hat.gens
      "flags":  {"pic_g_zero": true, "h_kerchar_connected": true,
                 "h_connected": false, "h_smooth": true},
      "cochar": {"a": 0, "b": 1, "c": 0, "f": [[]], "g": []},   # optional
      "char_p": 0                                                  # optional
    }

Integers may be JSON numbers or decimal strings; both are read exactly.
An empty list stands for a matrix with no columns (or no rows).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .abgroup import AbMap, FgAbGroup, IllDefinedMapError
from .complexes import ComplexError, ThreeTermCocharComplex
from .homspace import HomSpaceInput, HypothesisFlags
from .intlin import IntMatrix

FLAG_NAMES = ("pic_g_zero", "h_kerchar_connected", "h_connected", "h_smooth")


class ParseError(ValueError):
    """Malformed input; ``position`` is ``line:column`` or a JSON path."""

    def __init__(self, message: str, position: str = ""):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool):
        raise ParseError(f"expected an integer, got {x!r}", where)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            pass
    raise ParseError(f"expected an integer, got {x!r}", where)


def _count(x: Any, where: str) -> int:
    n = _int(x, where)
    if n < 0:
        raise ParseError(f"expected a non-negative count, got {n}", where)
    return n


def _matrix(x: Any, rows: int, cols: int | None, where: str) -> IntMatrix:
    if not isinstance(x, list):
        raise ParseError("expected an array of rows", where)
    if not x:
        if rows and cols:
            raise ParseError(f"expected {rows} rows of {cols} entries, got an empty array", where)
        return IntMatrix.zeros(rows, 0 if cols is None else cols)
    if len(x) != rows:
        raise ParseError(f"expected {rows} rows, got {len(x)}", where)
    data = []
    for i, r in enumerate(x):
        if not isinstance(r, list):
            raise ParseError("expected a row array", f"{where}[{i}]")
        if cols is None:
            cols = len(r)
        if len(r) != cols:
            raise ParseError(f"row has {len(r)} entries, expected {cols}", f"{where}[{i}]")
        data.append([_int(v, f"{where}[{i}][{j}]") for j, v in enumerate(r)])
    return IntMatrix.from_rows(data, cols)


def _group(x: Any, where: str) -> FgAbGroup:
    if not isinstance(x, dict) or "gens" not in x:
        raise ParseError("expected an object with 'gens' and optional 'rels'", where)
    n = _count(x["gens"], f"{where}.gens")
    rels = _matrix(x.get("rels", []), n, None, f"{where}.rels")
    return FgAbGroup(n, rels)


def input_from_dict(data: Any, name: str = "") -> HomSpaceInput:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    for key in ("g_hat", "h_hat", "i_star"):
        if key not in data:
            raise ParseError(f"missing key '{key}'", "$")
    G = _group(data["g_hat"], "$.g_hat")
    H = _group(data["h_hat"], "$.h_hat")
    m = _matrix(data["i_star"], H.gens, G.gens, "$.i_star")
    try:
        i_star = AbMap(G, H, m)
    except IllDefinedMapError as e:
        raise ParseError(str(e), "$.i_star") from None

    raw_flags = data.get("flags", {})
    if not isinstance(raw_flags, dict):
        raise ParseError("expected an object", "$.flags")
    for k, v in raw_flags.items():
        if k not in FLAG_NAMES:
            raise ParseError(f"unknown flag '{k}'", "$.flags")
        if not isinstance(v, bool):
            raise ParseError(f"flag must be true or false, got {v!r}", f"$.flags.{k}")
    flags = HypothesisFlags(**raw_flags)

    cochar = None
    if data.get("cochar") is not None:
        cochar = _cochar(data["cochar"])
    char_p = _count(data.get("char_p", 0), "$.char_p")
    try:
        return HomSpaceInput(G, H, i_star, flags, cochar, char_p, name=data.get("name", name))
    except ValueError as e:
        raise ParseError(str(e), "$") from None


def _cochar(x: Any) -> ThreeTermCocharComplex:
    where = "$.cochar"
    if not isinstance(x, dict):
        raise ParseError("expected an object", where)
    try:
        a, b, c = (_count(x[k], f"{where}.{k}") for k in "abc")
    except KeyError as e:
        raise ParseError(f"missing key {e}", where) from None
    f = _matrix(x.get("f", []), b, a, f"{where}.f")
    g = _matrix(x.get("g", []), c, b, f"{where}.g")
    try:
        return ThreeTermCocharComplex.from_matrices(a, b, c, f, g)
    except ComplexError as e:
        raise ParseError(str(e), where) from None


def parse_input(text: str, name: str = "") -> HomSpaceInput:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    return input_from_dict(data, name)


def load_input(path: str | Path) -> HomSpaceInput:
    path = Path(path)
    return parse_input(path.read_text(encoding="utf-8"), name=path.stem)


def input_to_dict(inp: HomSpaceInput) -> dict:
    out = {
        "name": inp.name,
        "g_hat": {"gens": inp.g_hat.gens, "rels": inp.g_hat.rels.to_rows()},
        "h_hat": {"gens": inp.h_hat.gens, "rels": inp.h_hat.rels.to_rows()},
        "i_star": inp.i_star.matrix.to_rows(),
        "flags": {k: getattr(inp.flags, k) for k in FLAG_NAMES},
        "char_p": inp.char_p,
    }
    if inp.cochar is not None:
        C = inp.cochar
        out["cochar"] = {"a": C.a.gens, "b": C.b.gens, "c": C.c.gens,
                         "f": C.f.matrix.to_rows(), "g": C.g.matrix.to_rows()}
    return out


def dumps_input(inp: HomSpaceInput) -> str:
    return json.dumps(input_to_dict(inp), indent=2) + "\n"
