"""Centralizers, regularity, strong regularity and the differential
criterion for the partial chain-restriction map.

Differentials of characteristic coefficients are read off the auxiliary
matrices of the Faddeev-LeVerrier recurrence (the adjugate expansion), which
gives every gradient row from a single recurrence per chain level; the
Pfaffian row and the reference implementation use first-order jets.
"""

from __future__ import annotations

from .scalars import QI, ZERO, ONE, Jet
from .matrices import (Mat, bracket, nullspace, rank_rows, char_poly_fl,
                       pfaffian, jet_mat)
from .liealg import project_to_subalgebra, embed_from_subalgebra
from .invariants import _level_values


def _ambient_basis(ctx, ambient):
    if ambient == "g":
        return ctx.basis, ctx.n
    if ambient == "k":
        return ctx.k_basis, ctx.n
    if isinstance(ambient, int):
        lvl = ctx.level(ambient)
        return lvl.basis, lvl.n
    raise ValueError("ambient must be 'g', 'k' or a chain level")


def joint_centralizer(ctx, mats, ambient="g"):
    """Basis of {y in ambient : [y, x] = 0 for all x in mats}."""
    basis, size = _ambient_basis(ctx, ambient)
    rows = []
    for x in mats:
        cols = [bracket(b, x).flatten() for b in basis]
        for r in range(size * size):
            rows.append([c[r] for c in cols])
    ns = nullspace(Mat(rows)) if rows else []
    out = []
    for coeffs in ns:
        acc = Mat.zeros(size)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + c * b
        out.append(acc)
    return out


def centralizer(ctx, mat, ambient="g"):
    """Centralizer of x (projected into the ambient if a chain level is
    given) inside the ambient algebra."""
    if isinstance(ambient, int):
        x = project_to_subalgebra(ctx, mat, ambient)
    elif ambient == "k":
        x, _ = ctx.theta_decompose(mat)
    else:
        x = mat
    return joint_centralizer(ctx, [x], ambient)


def is_regular(ctx, mat, m=None):
    """dim of the centralizer at level m equals the invariant rank there."""
    m = ctx.n if m is None else m
    return len(centralizer(ctx, mat, m)) == ctx.invariant_rank(m)


def nsreg_intersection(ctx, mat):
    """Basis of z_k(x_k) intersect z_g(x) inside k."""
    fixed, _ = ctx.theta_decompose(mat)
    return joint_centralizer(ctx, [mat, fixed], "k")


def is_nsreg(ctx, mat):
    return not nsreg_intersection(ctx, mat)


def _trace_against(m_aux, v):
    """trace(M * V) exploiting sparsity of V."""
    s = ZERO
    for q, row in enumerate(v.a):
        for p, x in enumerate(row):
            if x:
                s = s + m_aux.a[p][q] * x
    return s


def _level_gradient_rows(ctx, x, m, directions_at_m):
    """Gradient rows (one per generator of level m) against the given
    projected directions."""
    lvl = ctx.level(m)
    xm = project_to_subalgebra(ctx, x, m)
    _, aux = char_poly_fl(xm)          # aux[j-1] = M_j, d b_j = -tr(M_j V)
    rows = []
    if lvl.kind == "gl":
        for j in range(1, m + 1):
            sign = ONE if j % 2 == 0 else -ONE
            mj = aux[j - 1]
            rows.append([-sign * _trace_against(mj, v)
                         for v in directions_at_m])
    else:
        k = lvl.invariant_rank()
        ncoeff = k if m % 2 == 1 else k - 1
        for j in range(1, ncoeff + 1):
            mj = aux[2 * j - 1]
            rows.append([-_trace_against(mj, v) for v in directions_at_m])
        if m % 2 == 0:
            sform = lvl.form
            sx = sform * xm
            row = []
            for v in directions_at_m:
                jm = jet_mat(sx, sform * v)
                row.append(pfaffian(jm).eps)
            rows.append(row)
    return rows


def partial_map_jacobian(ctx, mat, directions=None):
    """Jacobian of the two-level restriction map in algebra coordinates:
    rows are generator gradients of levels n-1 and n, columns the given
    directions (default: the basis of g)."""
    dirs = ctx.basis if directions is None else directions
    rows = []
    for m in (ctx.n - 1, ctx.n):
        proj = [project_to_subalgebra(ctx, d, m) for d in dirs]
        rows.extend(_level_gradient_rows(ctx, mat, m, proj))
    return rows


def kostant_jacobian_rank(ctx, mat):
    return rank_rows(partial_map_jacobian(ctx, mat), ctx.dim)


def full_map_jacobian_rank(ctx, mat):
    rows = []
    for m in range(ctx.chain_floor(), ctx.n + 1):
        proj = [project_to_subalgebra(ctx, d, m) for d in ctx.basis]
        rows.extend(_level_gradient_rows(ctx, mat, m, proj))
    return rank_rows(rows, ctx.dim)


def partial_map_jacobian_jet(ctx, mat, directions=None):
    """Reference Jacobian computed one jet pass per direction (slow path,
    used to cross-check the adjugate-based gradients)."""
    dirs = ctx.basis if directions is None else directions
    cols = []
    for d in dirs:
        col = []
        for m in (ctx.n - 1, ctx.n):
            lvl = ctx.level(m)
            xm = project_to_subalgebra(ctx, mat, m)
            vm = project_to_subalgebra(ctx, d, m)
            vals = _level_values(lvl, jet_mat(xm, vm))
            col.extend(v.eps for v in vals)
        cols.append(col)
    return [[cols[j][i] for j in range(len(cols))]
            for i in range(len(cols[0]))] if cols else []


def chain_centralizers(ctx, mat):
    """For every chain level, the centralizer of the projection, embedded
    back into the top algebra; returned as {level: list of flattened rows}."""
    out = {}
    for m in range(ctx.chain_floor(), ctx.n + 1):
        zs = centralizer(ctx, mat, m)
        rows = [embed_from_subalgebra(ctx, z, m).flatten() for z in zs]
        out[m] = rows
    return out


def is_sreg(ctx, mat, _cache=None):
    """Strong regularity: consecutive chain centralizers intersect trivially.
    (This condition also forces every projection to be regular.)"""
    zs = _cache if _cache is not None else chain_centralizers(ctx, mat)
    ncols = ctx.n * ctx.n
    for m in range(ctx.chain_floor(), ctx.n):
        a, b = zs[m], zs[m + 1]
        # nullspace bases are independent and the chain embeddings are
        # injective, so trivial intersection means the ranks add
        if rank_rows(a + b, ncols) != len(a) + len(b):
            return False
    return True
