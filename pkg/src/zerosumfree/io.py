"""Canonical JSON persistence of vector sets.

Layout (keys in this order, vectors ascending by packed code, one per line)::

    {
      "format_version": 1,
      "modulus": 4,
      "dimension": 2,
      "size": 8,
      "vectors": [
        [1,0],
        ...
      ],
      "metadata": {...}        # optional
    }
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

import numpy as np

from .group import GroupParams, InvalidInput, decode
from .sets import VectorSet

FORMAT_VERSION = 1


class SetFileError(ValueError):
    pass


class MalformedSetFile(SetFileError):
    pass


class SizeMismatch(SetFileError):
    pass


class CoordinateOutOfRange(SetFileError):
    pass


class DuplicateVector(SetFileError):
    pass


def dumps_set(H: VectorSet, metadata: Optional[dict[str, Any]] = None) -> str:
    p = H.params
    lines = [
        "{",
        f'  "format_version": {FORMAT_VERSION},',
        f'  "modulus": {p.m},',
        f'  "dimension": {p.n},',
        f'  "size": {len(H)},',
    ]
    codes = np.sort(H.codes)
    if len(codes):
        lines.append('  "vectors": [')
        vecs = [json.dumps(decode(int(c), p), separators=(",", ":")) for c in codes]
        lines.append(",\n".join("    " + v for v in vecs))
        lines.append("  ]" + ("," if metadata else ""))
    else:
        lines.append('  "vectors": []' + ("," if metadata else ""))
    if metadata:
        lines.append('  "metadata": ' + json.dumps(metadata, sort_keys=True))
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_set(H: VectorSet, path, metadata: Optional[dict[str, Any]] = None) -> None:
    Path(path).write_text(dumps_set(H, metadata))


def _require_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedSetFile(f"{what} must be an integer, got {value!r}")
    return value


def parse_set(doc: Any, modulus: int = 4) -> tuple[VectorSet, dict]:
    """Validate a decoded JSON document. A bare list of vectors is accepted with ``modulus``."""
    if isinstance(doc, list):
        if not doc:
            raise MalformedSetFile("a bare vector list must be non-empty to infer the dimension")
        if not isinstance(doc[0], list):
            raise MalformedSetFile("vector 0 is not a list")
        doc = {"modulus": modulus, "dimension": len(doc[0]), "size": len(doc), "vectors": doc}
    if not isinstance(doc, dict):
        raise MalformedSetFile("top level must be an object or a list of vectors")
    for key in ("modulus", "dimension", "size", "vectors"):
        if key not in doc:
            raise MalformedSetFile(f"missing key {key!r}")
    if doc.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
        raise MalformedSetFile(f"unsupported format_version {doc['format_version']!r}")
    m = _require_int(doc["modulus"], "modulus")
    n = _require_int(doc["dimension"], "dimension")
    size = _require_int(doc["size"], "size")
    try:
        params = GroupParams(m, n)
    except InvalidInput as e:
        raise MalformedSetFile(str(e)) from None
    vectors = doc["vectors"]
    if not isinstance(vectors, list):
        raise MalformedSetFile("vectors must be a list")

    codes = np.empty(len(vectors), dtype=np.int64)
    seen: dict[int, int] = {}
    for i, v in enumerate(vectors):
        if not isinstance(v, list) or len(v) != n:
            raise MalformedSetFile(f"vector {i}: expected a list of {n} coordinates, got {v!r}")
        code = 0
        for c in reversed(v):
            if not isinstance(c, int) or isinstance(c, bool):
                raise MalformedSetFile(f"vector {i}: non-integer coordinate {c!r}")
            if not 0 <= c < m:
                raise CoordinateOutOfRange(f"vector {i}: coordinate {c} outside [0, {m})")
            code = code * m + c
        if code in seen:
            raise DuplicateVector(f"vector {i}: duplicate of vector {seen[code]} {v}")
        seen[code] = i
        codes[i] = code
    if size != len(vectors):
        raise SizeMismatch(f"size field says {size} but {len(vectors)} vectors are present")
    meta = doc.get("metadata") or {}
    if not isinstance(meta, dict):
        raise MalformedSetFile("metadata must be an object")
    return VectorSet(params, codes), meta


def load_set_with_metadata(path, modulus: int = 4) -> tuple[VectorSet, dict]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise MalformedSetFile(f"{path}: invalid JSON ({e})") from None
    return parse_set(doc, modulus)


def load_set(path, modulus: int = 4) -> VectorSet:
    return load_set_with_metadata(path, modulus)[0]
