"""Matrix and report serialization.

alist layout (column section first)::

    cols rows
    max_col_weight max_row_weight
    <column weights>
    <row weights>
    <one line per column: 1-based row indices, zero padded>
    <one line per row: 1-based column indices, zero padded>
"""

from __future__ import annotations

import json
import math
from typing import Any

from .analysis import REFUTED, ClaimReport, DistanceResult
from .builder import CssCode
from .errors import MalformedAlist, MalformedMatrixMarket
from .geometry import ORDERING_VERSION
from .gf2 import BinMatrix

REPORT_SCHEMA = "report-v1"
BUNDLE_SCHEMA = "bundle-v1"
MAX_LISTED_VIOLATIONS = 20


def _padded(indices: list[int], width: int) -> str:
    return " ".join(str(i) for i in indices + [0] * (width - len(indices)))


def write_alist(a: BinMatrix) -> str:
    t = a.T
    col_sup = [[i + 1 for i in t.row_support(j)] for j in range(a.ncols)]
    row_sup = [[j + 1 for j in a.row_support(i)] for i in range(a.nrows)]
    cw = [len(s) for s in col_sup]
    rw = [len(s) for s in row_sup]
    max_c, max_r = max(cw), max(rw)
    lines = [
        f"{a.ncols} {a.nrows}",
        f"{max_c} {max_r}",
        " ".join(map(str, cw)),
        " ".join(map(str, rw)),
    ]
    lines += [_padded(s, max_c) for s in col_sup]
    lines += [_padded(s, max_r) for s in row_sup]
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise MalformedAlist(lineno, f"non-integer token in {line!r}") from None


def _index_line(vals: list[int], width: int, bound: int, weight: int, lineno: int) -> list[int]:
    if len(vals) != width:
        raise MalformedAlist(lineno, f"expected {width} entries, got {len(vals)}")
    nz = [v for v in vals if v != 0]
    if vals[len(nz):] != [0] * (width - len(nz)):
        raise MalformedAlist(lineno, "zero padding must come last")
    if len(nz) != weight:
        raise MalformedAlist(lineno, f"lists {len(nz)} indices but weight is {weight}")
    if any(not 1 <= v <= bound for v in nz):
        raise MalformedAlist(lineno, f"index out of range 1..{bound}")
    if len(set(nz)) != len(nz):
        raise MalformedAlist(lineno, "duplicate index")
    return [v - 1 for v in nz]


def parse_alist(text: str) -> BinMatrix:
    lines = text.splitlines()
    if len(lines) < 4:
        raise MalformedAlist(len(lines) + 1, "truncated header")
    header = _ints(lines[0], 1)
    if len(header) != 2:
        raise MalformedAlist(1, "expected 'cols rows'")
    ncols, nrows = header
    if ncols < 1 or nrows < 1:
        raise MalformedAlist(1, "dimensions must be positive")
    maxes = _ints(lines[1], 2)
    if len(maxes) != 2:
        raise MalformedAlist(2, "expected 'max_col_weight max_row_weight'")
    max_c, max_r = maxes
    cw = _ints(lines[2], 3)
    rw = _ints(lines[3], 4)
    if len(cw) != ncols:
        raise MalformedAlist(3, f"expected {ncols} column weights")
    if len(rw) != nrows:
        raise MalformedAlist(4, f"expected {nrows} row weights")
    if max(cw) != max_c or max(rw) != max_r:
        raise MalformedAlist(2, "maximum weights disagree with weight lists")
    if sum(cw) != sum(rw):
        raise MalformedAlist(3, "column and row weights have different totals")
    body = lines[4:]
    if len(body) != ncols + nrows:
        raise MalformedAlist(min(len(lines), 5 + ncols + nrows), f"expected {ncols + nrows} index lines")
    col_sets = []
    for j in range(ncols):
        ln = 5 + j
        col_sets.append(_index_line(_ints(body[j], ln), max_c, nrows, cw[j], ln))
    rows = [0] * nrows
    for i in range(nrows):
        ln = 5 + ncols + i
        for j in _index_line(_ints(body[ncols + i], ln), max_r, ncols, rw[i], ln):
            rows[i] |= 1 << j
    a = BinMatrix(rows, ncols)
    t = a.T
    for j, rows_j in enumerate(col_sets):
        if sorted(rows_j) != t.row_support(j):
            raise MalformedAlist(5 + j, "column listing disagrees with row listing")
    return a


def write_mtx(a: BinMatrix) -> str:
    """Matrix Market coordinate pattern format, entries in row-major order."""
    entries = [(i + 1, j + 1) for i in range(a.nrows) for j in a.row_support(i)]
    out = ["%%MatrixMarket matrix coordinate pattern general", f"{a.nrows} {a.ncols} {len(entries)}"]
    out += [f"{i} {j}" for i, j in entries]
    return "\n".join(out) + "\n"


def parse_mtx(text: str) -> BinMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("%%MatrixMarket matrix coordinate pattern"):
        raise MalformedMatrixMarket("missing coordinate pattern banner")
    body = [ln for ln in lines[1:] if not ln.startswith("%")]
    try:
        nrows, ncols, nnz = (int(t) for t in body[0].split())
        pairs = [tuple(int(t) for t in ln.split()) for ln in body[1:]]
    except (ValueError, IndexError):
        raise MalformedMatrixMarket("bad size line or entry") from None
    if len(pairs) != nnz:
        raise MalformedMatrixMarket(f"expected {nnz} entries, got {len(pairs)}")
    rows = [0] * nrows
    for i, j in pairs:
        if not (1 <= i <= nrows and 1 <= j <= ncols):
            raise MalformedMatrixMarket(f"entry ({i}, {j}) out of range")
        rows[i - 1] |= 1 << (j - 1)
    return BinMatrix(rows, ncols)


def _fmt_value(v: float) -> str:
    return "inf" if v == math.inf else str(int(v))


def _fmt_support(s) -> str:
    return ",".join(str(j) for j in s)


def report_fields(r: ClaimReport) -> dict[str, Any]:
    """Flat metadata for a claim report (also the bundle metadata)."""
    out: dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "family": r.family.value,
        "m": r.m,
        "q": r.q,
        "case_label": r.case_label,
        "recipe": r.recipe,
        "n": r.n,
        "gen_rows": r.gen_rows,
        "rank": r.rank,
        "k_paper": r.claimed.k,
        "k_computed": r.k_computed,
        "n_paper": r.claimed.n,
        "d_paper": r.claimed.d_bound,
        "d_paper_kind": r.claimed.d_kind,
        "d_computed": _fmt_value(r.distance.value),
        "d_computed_kind": r.distance.kind,
        "d_work": r.distance.work,
        "self_orthogonal": r.self_orth.ok,
        "violation_count": r.self_orth.violation_count,
        "ordering_version": ORDERING_VERSION,
    }
    if r.class_index is not None:
        out["class_index"] = r.class_index
    for claim, verdict in r.verdicts.items():
        out[f"verdict.{claim}"] = verdict
    for claim, why in r.reasons.items():
        out[f"reason.{claim}"] = why
    if r.distance.witness is not None:
        out["d_witness"] = _fmt_support(r.distance.witness)
    if r.verdicts.get("self_orthogonality") == REFUTED:
        pairs = r.self_orth.violating_pairs[:MAX_LISTED_VIOLATIONS]
        out["violating_pairs"] = " ".join(f"{i}-{j}" for i, j in pairs)
        if r.self_orth.odd_weight_rows:
            rows = r.self_orth.odd_weight_rows[:MAX_LISTED_VIOLATIONS]
            out["odd_weight_rows"] = _fmt_support(rows)
    return out


def _text(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def write_report(r: ClaimReport) -> str:
    fields = report_fields(r)
    return "".join(f"{k}={_text(fields[k])}\n" for k in sorted(fields))


def write_distance(d: DistanceResult) -> str:
    fields = {"kind": d.kind, "value": _fmt_value(d.value), "work": d.work}
    if d.witness is not None:
        fields["witness"] = _fmt_support(d.witness)
    return "".join(f"{k}={fields[k]}\n" for k in sorted(fields))


def bundle_metadata(code: CssCode, report: ClaimReport) -> dict[str, Any]:
    meta = report_fields(report)
    meta["schema"] = BUNDLE_SCHEMA
    meta["shapes"] = {
        "core": list(code.core.shape),
        "h_orth": list(code.h_orth.shape),
        "stabilizer": [2 * code.gen_rows, 2 * code.n],
    }
    return meta


def matrix_json(a: BinMatrix) -> dict[str, Any]:
    return {"rows": a.nrows, "cols": a.ncols, "supports": [a.row_support(i) for i in range(a.nrows)]}


def matrix_from_json(obj: dict[str, Any]) -> BinMatrix:
    return BinMatrix.from_supports(obj["supports"], obj["cols"])


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
