"""Adjoint-invariant generators, partial and full chain-restriction maps,
and coincidence counting between the spectrum of an element and of its
projection one level down.

Conventions (fixed once for the whole artifact):
  * characteristic polynomial is det(t*I - x), monic;
  * gl(m) generators are the elementary symmetric functions of the
    eigenvalues, i.e. f_j = (-1)^j b_j for det(t*I-x) = t^m + sum b_j t^(m-j);
  * so(2k+1): det(t*I - x) = t * q(t^2); generators are the k proper
    coefficients of the monic q(u) = u^k + c_1 u^(k-1) + ... + c_k,
    reported as (c_1, ..., c_k);
  * so(2k): det(t*I - x) = q(t^2); generators are (c_1, ..., c_(k-1), pf)
    where pf is the Pfaffian of S*x; the omitted constant coefficient
    satisfies c_k = (-1)^k pf^2 and is therefore redundant.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polys
from .matrices import Mat, char_poly, pfaffian
from .liealg import AlgebraContext, project_to_subalgebra
from .scalars import QI, ZERO, ONE


@dataclass
class InvariantVector:
    algebra: str
    n: int
    kind: str          # "partial" or "full"
    values: list       # list of QI


def reduced_char(ctx, mat):
    """For so: the monic q with char(t) = t^(n mod 2) * q(t^2).
    For gl: the characteristic polynomial itself."""
    p = char_poly(mat)
    if ctx.kind == "gl":
        return p
    return polys.even_part(p, ctx.n % 2)


def pfaffian_generator(ctx, mat):
    if ctx.kind != "so" or ctx.n % 2 != 0:
        raise ValueError("pfaffian generator needs so(even)")
    return pfaffian(ctx.form * mat)


def _level_values(ctx_m, mat_m):
    """Generator values of one chain level; mat_m is realized at that level."""
    if ctx_m.kind == "gl":
        p = char_poly(mat_m)           # t^m + b1 t^(m-1) + ...
        m = ctx_m.n
        out = []
        for j in range(1, m + 1):
            b = p[m - j]
            out.append(b if j % 2 == 0 else -b)
        return out
    q = reduced_char(ctx_m, mat_m)     # monic in u, degree k
    k = len(q) - 1
    coeffs = [q[k - j] for j in range(1, k + 1)]   # c_1 .. c_k
    if ctx_m.n % 2 == 1:
        return coeffs
    pf = pfaffian_generator(ctx_m, mat_m)
    expected = pf * pf if k % 2 == 0 else -(pf * pf)
    if coeffs and coeffs[-1] != expected:
        raise AssertionError("Pfaffian square does not match determinant")
    return coeffs[:-1] + [pf] if coeffs else [pf]


def evaluate_generators(ctx, mat, m=None):
    """Generator values of the projection of mat to chain level m."""
    m = ctx.n if m is None else m
    return _level_values(ctx.level(m), project_to_subalgebra(ctx, mat, m))


def partial_kw(ctx, mat):
    values = (evaluate_generators(ctx, mat, ctx.n - 1)
              + evaluate_generators(ctx, mat, ctx.n))
    return InvariantVector(ctx.kind, ctx.n, "partial", values)


def full_kw(ctx, mat):
    values = []
    for m in range(ctx.chain_floor(), ctx.n + 1):
        values.extend(evaluate_generators(ctx, mat, m))
    return InvariantVector(ctx.kind, ctx.n, "full", values)


def coincidence_count(ctx, mat):
    """Number of matched eigenvalue pairs between x and its projection one
    level down: the degree of the gcd of the two reduced characteristic
    polynomials (in u = t^2 for so, in t for gl)."""
    top = ctx.level(ctx.n)
    sub = ctx.level(ctx.n - 1)
    q_top = reduced_char(top, mat)
    q_sub = reduced_char(sub, project_to_subalgebra(ctx, mat, ctx.n - 1))
    return polys.degree(polys.gcd(q_top, q_sub))


def _poly_from_values(ctx_m, values):
    """Reconstruct the reduced characteristic polynomial from generator
    values of one level (inverse of _level_values up to the redundant
    coefficient)."""
    if ctx_m.kind == "gl":
        m = ctx_m.n
        p = [ZERO] * (m + 1)
        p[m] = ONE
        for j, f in enumerate(values, start=1):
            p[m - j] = f if j % 2 == 0 else -f
        return p
    k = ctx_m.invariant_rank()
    q = [ZERO] * (k + 1)
    q[k] = ONE
    if ctx_m.n % 2 == 1:
        coeffs = values
    else:
        pf = values[-1]
        const = pf * pf if k % 2 == 0 else -(pf * pf)
        coeffs = list(values[:-1]) + [const]
    for j, c in enumerate(coeffs, start=1):
        q[k - j] = c
    return q


def stratum_of_value(ctx, vector):
    """Coincidence count shared by the whole fibre over a partial-map value."""
    if vector.kind != "partial":
        raise ValueError("stratum_of_value expects a partial invariant vector")
    sub = ctx.level(ctx.n - 1)
    top = ctx.level(ctx.n)
    r_sub = ctx.invariant_rank(ctx.n - 1)
    vs, vt = vector.values[:r_sub], vector.values[r_sub:]
    q_sub = _poly_from_values(sub, vs)
    q_top = _poly_from_values(top, vt)
    return polys.degree(polys.gcd(q_sub, q_top))


def spectrum_pairs(ctx, mat, m=None):
    """Rational pair representatives of the spectrum at a chain level, when
    the reduced polynomial splits over Q (testing helper: raises otherwise).
    so: roots u of q give eigenvalue pairs +-sqrt(u) -- returned as the u's.
    gl: plain eigenvalue list."""
    m = ctx.n if m is None else m
    q = reduced_char(ctx.level(m), project_to_subalgebra(ctx, mat, m))
    return _rational_roots(q)


def _rational_roots(q):
    from fractions import Fraction
    from math import lcm
    roots = []
    rem = list(q)
    while polys.degree(rem) > 0:
        found = None
        if not rem[0]:
            found = ZERO
        else:
            # rational root theorem on the integer-cleared polynomial
            fracs = [c.as_fraction() for c in rem]
            mult = lcm(*[f.denominator for f in fracs])
            ints = [f * mult for f in fracs]
            a0, ak = abs(ints[0].numerator), abs(ints[-1].numerator)
            for p in _divisors(a0):
                for d in _divisors(ak):
                    for s in (1, -1):
                        z = QI(Fraction(s * p, d))
                        if not polys.evaluate(rem, z):
                            found = z
                            break
                    if found:
                        break
                if found:
                    break
        if found is None:
            raise ValueError("polynomial has an irrational root")
        roots.append(found)
        rem, r = polys.divmod_exact(rem, [-found, ONE])
        assert not r
    return roots


def _divisors(v):
    v = abs(int(v))
    if v == 0:
        return [0]
    out = []
    d = 1
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            out.append(v // d)
        d += 1
    return sorted(set(out))
