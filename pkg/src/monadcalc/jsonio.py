"""The JSON instance document format (schema_version "1").

A document is

    {
      "schema_version": "1",
      "kind": "p2" | "blowup",
      "k": <int>, "r": <int>,
      "matrices": {
        "a1": [[{"re": "p/q", "im": "p/q"}, ...], ...],
        "a2": ..., "b": ..., "c": ...,        # and "d" for blowup
      }
    }

Rationals are always the canonical "p/q" strings (never floats), so
serialization round-trips bit-exactly.  Approximate values (the --float
eigenvalue fallback) only ever appear in CLI *reports*, never in
instance documents.
"""

from __future__ import annotations

import json
from typing import Union

from .blowup import MonadDataBlowup
from .errors import DocumentError
from .field import QI
from .matrix import Matrix
from .p2 import MonadDataP2

SCHEMA_VERSION = "1"

Instance = Union[MonadDataP2, MonadDataBlowup]


def _qi_to_obj(v: QI) -> dict:
    return {"re": v.re_str(), "im": v.im_str()}


def _qi_from_obj(obj) -> QI:
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        raise DocumentError(f"bad scalar entry {obj!r}")
    try:
        return QI.parse(obj["re"], obj["im"])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad rational string in {obj!r}: {exc}") from exc


def _matrix_to_obj(M: Matrix) -> list:
    return [[_qi_to_obj(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def _matrix_from_obj(obj, rows: int, cols: int, name: str) -> Matrix:
    if not isinstance(obj, list) or len(obj) != rows:
        raise DocumentError(f"matrix {name!r} must have {rows} rows")
    flat = []
    for row in obj:
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"matrix {name!r} must have {cols} columns per row")
        flat.extend(_qi_from_obj(e) for e in row)
    return Matrix(rows, cols, flat)


def to_document(inst: Instance) -> dict:
    kind = "blowup" if isinstance(inst, MonadDataBlowup) else "p2"
    matrices = {
        "a1": _matrix_to_obj(inst.a1),
        "a2": _matrix_to_obj(inst.a2),
        "b": _matrix_to_obj(inst.b),
        "c": _matrix_to_obj(inst.c),
    }
    if kind == "blowup":
        matrices["d"] = _matrix_to_obj(inst.d)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "k": inst.k,
        "r": inst.r,
        "matrices": matrices,
    }


def from_document(doc) -> Instance:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc.get("kind")
    if kind not in ("p2", "blowup"):
        raise DocumentError(f"kind must be 'p2' or 'blowup', got {kind!r}")
    k, r = doc.get("k"), doc.get("r")
    if not (isinstance(k, int) and isinstance(r, int) and k >= 0 and r >= 0):
        raise DocumentError("k and r must be nonnegative integers")
    mats = doc.get("matrices")
    if not isinstance(mats, dict):
        raise DocumentError("missing 'matrices' object")
    expected = {"a1", "a2", "b", "c"} | ({"d"} if kind == "blowup" else set())
    if set(mats) != expected:
        raise DocumentError(f"matrices must be exactly {sorted(expected)}")
    a1 = _matrix_from_obj(mats["a1"], k, k, "a1")
    a2 = _matrix_from_obj(mats["a2"], k, k, "a2")
    b = _matrix_from_obj(mats["b"], k, r, "b")
    c = _matrix_from_obj(mats["c"], r, k, "c")
    if kind == "p2":
        return MonadDataP2(a1, a2, b, c)
    d = _matrix_from_obj(mats["d"], k, k, "d")
    return MonadDataBlowup(a1, a2, d, b, c)


def dumps(inst: Instance) -> str:
    """Canonical serialization: sorted keys, fixed separators, newline."""
    return json.dumps(to_document(inst), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def write_file(path, inst: Instance):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(inst))


def read_file(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return loads(text)
