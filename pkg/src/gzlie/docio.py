"""External document formats: matrix documents, invariant vectors and
analysis reports.  All scalars travel as exact strings 'a/b+c/d*i'."""

from __future__ import annotations

from .scalars import parse_scalar, format_scalar
from .matrices import Mat
from .liealg import make_algebra
from .invariants import (InvariantVector, partial_kw, coincidence_count)
from .regularity import (is_regular, is_nsreg, is_sreg,
                         kostant_jacobian_rank, centralizer)


class DocumentError(ValueError):
    pass


def parse_matrix_doc(doc):
    """{'algebra': 'so'|'gl', 'n': int, 'entries': [[scalar-str,..],..]}
    -> (context, matrix).  Raises DocumentError with the offending location."""
    if not isinstance(doc, dict):
        raise DocumentError("matrix document must be a JSON object")
    kind = doc.get("algebra")
    if kind not in ("so", "gl"):
        raise DocumentError("field 'algebra' must be 'so' or 'gl'")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("field 'n' must be a positive integer")
    entries = doc.get("entries")
    if (not isinstance(entries, list) or len(entries) != n
            or any(not isinstance(r, list) or len(r) != n for r in entries)):
        raise DocumentError("field 'entries' must be an %dx%d array" % (n, n))
    rows = []
    for i, row in enumerate(entries):
        out = []
        for j, cell in enumerate(row):
            try:
                out.append(parse_scalar(cell))
            except (ValueError, TypeError) as exc:
                raise DocumentError("entry (%d,%d): %s" % (i + 1, j + 1, exc))
        rows.append(out)
    ctx = make_algebra(kind, n)
    mat = Mat(rows)
    bad = ctx.membership_violations(mat)
    if bad:
        raise DocumentError("not an element of %s: %s"
                            % (ctx.describe(), "; ".join(bad[:3])))
    return ctx, mat


def emit_matrix_doc(ctx, mat):
    return {"algebra": ctx.kind, "n": ctx.n,
            "entries": [[format_scalar(v) for v in row] for row in mat.a]}


def emit_invariant_doc(vec):
    return {"algebra": vec.algebra, "n": vec.n, "kind": vec.kind,
            "values": [format_scalar(v) for v in vec.values]}


def parse_invariant_doc(doc):
    if doc.get("kind") not in ("partial", "full"):
        raise DocumentError("field 'kind' must be 'partial' or 'full'")
    try:
        values = [parse_scalar(v) for v in doc["values"]]
    except (KeyError, ValueError, TypeError) as exc:
        raise DocumentError("bad 'values': %s" % exc)
    return InvariantVector(doc.get("algebra"), doc.get("n"),
                           doc["kind"], values)


def analysis_report(ctx, mat):
    """Full regularity analysis of one element."""
    dims = []
    for m in range(ctx.chain_floor(), ctx.n + 1):
        dims.append(len(centralizer(ctx, mat, m)))
    jrank = kostant_jacobian_rank(ctx, mat)
    return {
        "algebra": ctx.kind,
        "n": ctx.n,
        "coincidence": coincidence_count(ctx, mat),
        "regular": is_regular(ctx, mat),
        "nsreg": is_nsreg(ctx, mat),
        "sreg": is_sreg(ctx, mat),
        "jacobian_rank": jrank,
        "jacobian_full_rank": (jrank == ctx.invariant_rank(ctx.n)
                               + ctx.invariant_rank(ctx.n - 1)),
        "centralizer_dims": dims,
        "partial_values": emit_invariant_doc(partial_kw(ctx, mat))["values"],
    }


def analysis_text(report):
    lines = ["%s(%d) element analysis" % (report["algebra"], report["n"]),
             "coincidence count : %d" % report["coincidence"],
             "regular           : %s" % report["regular"],
             "n-strongly regular (nsreg) : %s" % report["nsreg"],
             "strongly regular (sreg)    : %s" % report["sreg"],
             "partial-map jacobian rank : %d%s"
             % (report["jacobian_rank"],
                " (full)" if report["jacobian_full_rank"] else ""),
             "centralizer dims by level : %s"
             % report["centralizer_dims"],
             "partial-map values : %s" % report["partial_values"]]
    return "\n".join(lines)
