"""Algebra and subspace files: a sparse JSON format with exact "p/q"
scalars, plus the canonical digest used by reports and certificates.

Zero products are omitted from the table.  Scalar strings must be in
lowest terms with a positive denominator so that serialization
round-trips byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .algebra import LeibnizAlgebra, StructureTable
from .exactlin import Subspace

FORMAT_VERSION = "1"


class AlgebraFileError(ValueError):
    """Malformed algebra or subspace file."""


def scalar_to_str(x: Fraction) -> str:
    return str(x)


def str_to_scalar(s: str) -> Fraction:
    if not isinstance(s, str):
        raise AlgebraFileError(f"scalar must be a string, got {s!r}")
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraFileError(f"bad scalar {s!r}: {exc}") from None
    if str(value) != s:
        raise AlgebraFileError(f"scalar {s!r} is not in canonical lowest terms")
    return value


def serialize_algebra(alg: LeibnizAlgebra) -> dict:
    table = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            row = alg.table.row(i, j)
            targets = [[k, scalar_to_str(e)] for k, e in enumerate(row) if e != 0]
            if targets:
                table.append([i, j, targets])
    return {
        "format_version": FORMAT_VERSION,
        "dim": alg.dim,
        "basis": list(alg.labels),
        "table": table,
    }


def parse_algebra(data: object, validate: bool = True) -> LeibnizAlgebra:
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be a JSON object")
    if data.get("format_version") != FORMAT_VERSION:
        raise AlgebraFileError(f"unsupported format_version {data.get('format_version')!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFileError("dim must be a nonnegative integer")
    basis = data.get("basis")
    if (not isinstance(basis, list) or len(basis) != dim
            or not all(isinstance(b, str) for b in basis)):
        raise AlgebraFileError("basis must list one label per dimension")
    raw_table = data.get("table", [])
    if not isinstance(raw_table, list):
        raise AlgebraFileError("table must be a list of [i, j, targets] entries")
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in raw_table:
        if (not isinstance(entry, list) or len(entry) != 3
                or not isinstance(entry[0], int) or not isinstance(entry[1], int)
                or not isinstance(entry[2], list)):
            raise AlgebraFileError(f"bad table entry {entry!r}")
        i, j, targets = entry
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraFileError(f"table indices ({i},{j}) out of range")
        if (i, j) in products:
            raise AlgebraFileError(f"duplicate table entry for ({i},{j})")
        row: dict[int, Fraction] = {}
        for target in targets:
            if not isinstance(target, list) or len(target) != 2 or not isinstance(target[0], int):
                raise AlgebraFileError(f"bad target {target!r} in entry ({i},{j})")
            k, coeff = target
            if not 0 <= k < dim:
                raise AlgebraFileError(f"target index {k} out of range in entry ({i},{j})")
            if k in row:
                raise AlgebraFileError(f"duplicate target {k} in entry ({i},{j})")
            row[k] = str_to_scalar(coeff)
        products[(i, j)] = row
    table = StructureTable.from_map(dim, products)
    return LeibnizAlgebra(table, labels=basis, validate=validate)


def canonical_bytes(alg: LeibnizAlgebra) -> bytes:
    """Compact, key-sorted serialization; the digest input."""
    return json.dumps(serialize_algebra(alg), sort_keys=True,
                      separators=(",", ":")).encode("utf-8")


def algebra_digest(alg: LeibnizAlgebra) -> str:
    return "sha256:" + hashlib.sha256(canonical_bytes(alg)).hexdigest()


def serialize_subspace(sub: Subspace) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "dim": sub.ambient_dim,
        "rows": [[scalar_to_str(e) for e in row] for row in sub.rows()],
    }


def parse_subspace(data: object) -> Subspace:
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be a JSON object")
    if data.get("format_version") != FORMAT_VERSION:
        raise AlgebraFileError(f"unsupported format_version {data.get('format_version')!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFileError("dim must be a nonnegative integer")
    rows = data.get("rows")
    if not isinstance(rows, list):
        raise AlgebraFileError("rows must be a list of scalar-string rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != dim:
            raise AlgebraFileError(f"row {row!r} has wrong length")
        parsed.append([str_to_scalar(e) for e in row])
    return Subspace(dim, parsed)


def load_algebra(path: str | Path, validate: bool = True) -> LeibnizAlgebra:
    data = _load_json(path)
    return parse_algebra(data, validate=validate)


def load_subspace(path: str | Path) -> Subspace:
    return parse_subspace(_load_json(path))


def dump_algebra(alg: LeibnizAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(serialize_algebra(alg), indent=2) + "\n",
                          encoding="utf-8")


def dump_subspace(sub: Subspace, path: str | Path) -> None:
    Path(path).write_text(json.dumps(serialize_subspace(sub), indent=2) + "\n",
                          encoding="utf-8")


def _load_json(path: str | Path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path} is not valid JSON: {exc}") from None
