"""Canonical text formats for algebras and certificates.

Both are JSON objects written with a fixed layout (one table cell or matrix
row per line) so output is diffable and byte-identical for identical input.

Algebra file keys: ``field``, ``dim``, ``unity``, ``table`` with
``table[i][j][k] = c_ijk`` meaning x_i x_j = sum_k c_ijk x_k.
"""
from __future__ import annotations

import json

from .algebra import Algebra, validate
from .certify import Report
from .decompose import Certificate, CornerAlgebra, Isomorphism, MatrixUnits
from .errors import DimensionMismatch, FormatError
from .fields import Field, field_from_spec


def _compact(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _block(values, depth: int, indent: str) -> str:
    """JSON list with line breaks for the first ``depth`` nesting levels."""
    if depth == 0 or not values:
        return _compact(values)
    inner = indent + " "
    parts = [_block(v, depth - 1, inner) for v in values]
    return "[" + (",\n" + inner).join(parts) + "]"


def _object(items: list[tuple[str, str]]) -> str:
    body = ",\n".join(f"  {json.dumps(k)}: {v}" for k, v in items)
    return "{\n" + body + "\n}\n"


def _vec(F: Field, v) -> list:
    return [F.to_json(x) for x in v]


def dumps_algebra(A: Algebra) -> str:
    F = A.field
    table = [[_vec(F, cell) for cell in row] for row in A.table]
    return _object([
        ("field", _compact(F.spec())),
        ("dim", str(A.dim)),
        ("unity", _compact(_vec(F, A.unity))),
        ("table", _block(table, 2, "  ")),
    ])


def _parse_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _read_vec(F: Field, v, n: int, where: str) -> tuple:
    if not isinstance(v, list) or len(v) != n:
        got = len(v) if isinstance(v, list) else type(v).__name__
        raise FormatError(f"{where}: expected a list of {n} scalars, got {got}")
    out = []
    for i, x in enumerate(v):
        try:
            out.append(F.from_json(x))
        except FormatError as exc:
            raise FormatError(f"{where}[{i}]: {exc}") from exc
    return tuple(out)


def _read_rows(F: Field, rows, nrows: int, ncols: int, where: str) -> list[tuple]:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise FormatError(f"{where}: expected {nrows} rows")
    return [_read_vec(F, r, ncols, f"{where}[{i}]") for i, r in enumerate(rows)]


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise FormatError(f"{where}: missing key {key!r}")
    return obj[key]


def loads_algebra(text: str, source: str = "<algebra>", check: bool = True) -> Algebra:
    """Parse an algebra file.  With ``check`` the stored unity and associativity
    are cross-checked by :func:`validate` (FormatError on failure)."""
    obj = _parse_json(text, source)
    if not isinstance(obj, dict):
        raise FormatError(f"{source}: top level must be an object")
    F = field_from_spec(_require(obj, "field", source))
    d = _require(obj, "dim", source)
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise FormatError(f"{source}: dim must be a positive integer")
    table = _require(obj, "table", source)
    if not isinstance(table, list) or len(table) != d:
        raise FormatError(f"{source}: table must have {d} rows")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != d:
            raise FormatError(f"{source}: table[{i}] must have {d} entries")
        rows.append([_read_vec(F, cell, d, f"{source}: table[{i}][{j}]")
                     for j, cell in enumerate(row)])
    unity = _read_vec(F, _require(obj, "unity", source), d, f"{source}: unity")
    try:
        A = Algebra(F, rows, unity)
    except DimensionMismatch as exc:
        raise FormatError(f"{source}: {exc}") from exc
    if check:
        report = validate(A)
        if not report.ok:
            raise FormatError(f"{source}: {report}")
    return A


def read_algebra(path, check: bool = True) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return loads_algebra(fh.read(), str(path), check)


def write_algebra(A: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_algebra(A))


def dumps_matrix(F: Field, M) -> str:
    return _object([
        ("field", _compact(F.spec())),
        ("rows", str(len(M))),
        ("matrix", _block([_vec(F, r) for r in M], 1, "  ")),
    ])


def loads_matrix(text: str, source: str = "<matrix>"):
    obj = _parse_json(text, source)
    F = field_from_spec(_require(obj, "field", source))
    M = _require(obj, "matrix", source)
    if not isinstance(M, list) or not M:
        raise FormatError(f"{source}: matrix must be a nonempty list")
    return F, _read_rows(F, M, len(M), len(M), f"{source}: matrix")


def dumps_certificate(cert: Certificate) -> str:
    A = cert.algebra
    F = A.field
    items = [
        ("outcome", json.dumps(cert.outcome)),
        ("field", _compact(F.spec())),
        ("dim", str(A.dim)),
        ("retries", str(cert.retries)),
    ]
    if cert.trace is not None:
        items.append(("peel_trace", _compact(cert.trace)))
    if cert.outcome == "not_prime":
        items.append(("witness", _block([_vec(F, w) for w in cert.witness], 1, "  ")))
    elif cert.outcome == "decomposed":
        iso = cert.isomorphism
        C = iso.corner
        D = C.local
        corner = _object([
            ("dim", str(D.dim)),
            ("commutative", json.dumps(D.is_commutative())),
            ("basis", _block([_vec(F, v) for v in C.basis_lift], 1, "  ")),
            ("unity", _compact(_vec(F, D.unity))),
            ("table", _block([[_vec(F, c) for c in row] for row in D.table], 2, "  ")),
        ]).rstrip("\n").replace("\n", "\n  ")
        div = cert.division_ring
        items += [
            ("n", str(cert.units.n)),
            ("idempotents", _block([_vec(F, e) for e in cert.idempotents], 1, "  ")),
            ("units", _block([[_vec(F, u) for u in row] for row in cert.units.units], 2, "  ")),
            ("corner", corner),
            ("division_ring", _compact({"mode": div.info["mode"], "passed": div.ok,
                                        "commutative": div.info["commutative"]})),
            ("forward", _block([_vec(F, r) for r in iso.forward_matrix], 1, "  ")),
            ("backward", _block([_vec(F, r) for r in iso.backward_matrix], 1, "  ")),
        ]
    return _object(items)


def loads_certificate(text: str, A: Algebra, source: str = "<certificate>") -> Certificate:
    """Parse a certificate against its algebra; shapes are checked, content is not."""
    obj = _parse_json(text, source)
    if not isinstance(obj, dict):
        raise FormatError(f"{source}: top level must be an object")
    F = field_from_spec(_require(obj, "field", source))
    if F != A.field:
        raise FormatError(f"{source}: field {F!r} does not match algebra field {A.field!r}")
    d = _require(obj, "dim", source)
    if d != A.dim:
        raise FormatError(f"{source}: dim {d} does not match algebra dim {A.dim}")
    outcome = _require(obj, "outcome", source)
    retries = obj.get("retries", 0)
    trace = obj.get("peel_trace")
    if outcome == "not_prime":
        w = _read_rows(F, _require(obj, "witness", source), 2, d, f"{source}: witness")
        return Certificate(outcome, A, witness=tuple(w), trace=trace, retries=retries)
    if outcome == "inconclusive":
        return Certificate(outcome, A, trace=trace, retries=retries)
    if outcome != "decomposed":
        raise FormatError(f"{source}: unknown outcome {outcome!r}")
    n = _require(obj, "n", source)
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"{source}: n must be a positive integer")
    idem = _read_rows(F, _require(obj, "idempotents", source), n, d, f"{source}: idempotents")
    units_raw = _require(obj, "units", source)
    if not isinstance(units_raw, list) or len(units_raw) != n:
        raise FormatError(f"{source}: units must be an {n}x{n} grid")
    units = [_read_rows(F, row, n, d, f"{source}: units[{i}]") for i, row in enumerate(units_raw)]
    corner = _require(obj, "corner", source)
    k = _require(corner, "dim", f"{source}: corner")
    if not isinstance(k, int) or k < 1:
        raise FormatError(f"{source}: corner.dim must be a positive integer")
    basis = _read_rows(F, _require(corner, "basis", f"{source}: corner"), k, d,
                       f"{source}: corner.basis")
    ctab_raw = _require(corner, "table", f"{source}: corner")
    if not isinstance(ctab_raw, list) or len(ctab_raw) != k:
        raise FormatError(f"{source}: corner.table must have {k} rows")
    ctab = [_read_rows(F, row, k, k, f"{source}: corner.table[{i}]")
            for i, row in enumerate(ctab_raw)]
    cunity = _read_vec(F, _require(corner, "unity", f"{source}: corner"), k,
                       f"{source}: corner.unity")
    m = n * n * k
    forward = _read_rows(F, _require(obj, "forward", source), m, d, f"{source}: forward")
    backward = _read_rows(F, _require(obj, "backward", source), m, d, f"{source}: backward")
    local = Algebra(F, ctab, cunity)
    C = CornerAlgebra(A, units[0][0], tuple(basis), local)
    iso = Isomorphism(n, C, forward, backward)
    # the stored verdict is kept as-is; verify_certificate recomputes it
    stored = dict(obj.get("division_ring", {}))
    div = Report("division_ring", info={k: v for k, v in stored.items() if k != "passed"})
    div.add("recorded", stored.get("passed") is True, detail="as stored in the file")
    return Certificate(outcome, A, idempotents=idem, units=MatrixUnits(n, units),
                       isomorphism=iso, division_ring=div, trace=trace, retries=retries)


def read_certificate(path, A: Algebra) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return loads_certificate(fh.read(), A, str(path))


def write_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_certificate(cert))
