"""JSON forms of the library's values."""

from __future__ import annotations

import json
from typing import Any

from .algebra import BoxedPartition, QPoly, SymPoly
from .fillings import Filling
from .patterns import POP, GTPattern


class SchemaError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def qpoly_to_json(p: QPoly) -> list[int]:
    return list(p.coeffs)


def qpoly_from_json(data) -> QPoly:
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise SchemaError("a q-polynomial is a list of integers")
    return QPoly(data)


def sympoly_to_json(P: SymPoly) -> list[dict]:
    return [{"x": list(e), "q": qpoly_to_json(c)} for e, c in P.items()]


def sympoly_from_json(data, n: int) -> SymPoly:
    try:
        return SymPoly(n, [(tuple(t["x"]), qpoly_from_json(t["q"])) for t in data])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad polynomial term: {exc}") from exc


def gt_to_json(T: GTPattern) -> dict:
    return {"n": T.n, "rows": [list(r) for r in T.rows]}


def gt_from_json(data) -> GTPattern:
    try:
        rows = data["rows"]
        T = GTPattern(tuple(tuple(r) for r in rows))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"not a GT pattern: {exc}") from exc
    if data.get("n", T.n) != T.n:
        raise SchemaError(f"n={data['n']} disagrees with {T.n} rows")
    return T


def pop_to_json(p: POP) -> dict:
    out = gt_to_json(p.pattern)
    out["overlays"] = [
        {"i": i, "j": j, "parts": list(lam.parts)}
        for (i, j), lam in sorted(p.overlay.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    ]
    return out


def pop_from_json(data) -> POP:
    T = gt_from_json(data)
    if "overlays" not in data:
        raise SchemaError("a POP needs an 'overlays' list")
    overlay = {}
    try:
        for item in data["overlays"]:
            i, j = item["i"], item["j"]
            if (i, j) in overlay:
                raise SchemaError(f"duplicate overlay ({i}, {j})")
            if not (1 <= i <= j < T.n):
                raise SchemaError(f"overlay index ({i}, {j}) out of range")
            overlay[i, j] = BoxedPartition(tuple(item["parts"]), T.ne(i, j), T.se(i, j))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad overlay entry: {exc}") from exc
    return POP(T, overlay)


def filling_to_json(F: Filling) -> dict:
    return {"n": F.n, "rows": [list(r) for r in F.rows]}


def filling_from_json(data) -> Filling:
    try:
        return Filling(int(data["n"]), tuple(tuple(r) for r in data["rows"]))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"not a filling: {exc}") from exc
