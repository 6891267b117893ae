"""Matrix realizations of gl(n) and so(n) with their subalgebra chains.

so(n) is taken with respect to the bilinear form S_n with ones on the
antidiagonal, so membership reads Z^T S + S Z = 0 and the diagonal Cartan
is diag[a_1..a_l, (0,) -a_l..-a_1].  The involution at each level is
conjugation by a diagonal sign matrix (odd n) or by the permutation swapping
the two middle basis vectors (even n); its fixed subalgebra is identified
with the standard realization one size down by an exact rational change of
basis, so the whole chain g_2 < g_3 < ... < g_n lives over Q(i).

Roots are recorded in epsilon-coordinates (integer tuples of length l).
"""

from __future__ import annotations

from .scalars import QI, ZERO, ONE, rat
from .matrices import Mat, bracket, nullspace

HALF = rat(1, 2)
TWO = rat(2)


class Root:
    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords))

    def __eq__(self, other):
        return isinstance(other, Root) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_positive(self):
        for c in self.coords:
            if c:
                return c > 0
        return False

    def __repr__(self):
        return "Root%r" % (self.coords,)

    def name(self):
        terms = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append("%s%se%d" % (sign, mag, k + 1))
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


class AlgebraContext:
    """One algebra in the chain, plus the link to the next one down."""

    def __init__(self, kind, n):
        if kind not in ("gl", "so"):
            raise ValueError("kind must be 'gl' or 'so'")
        if kind == "so" and n < 2:
            raise ValueError("so(n) needs n >= 2")
        if kind == "gl" and n < 1:
            raise ValueError("gl(n) needs n >= 1")
        self.kind = kind
        self.n = n
        self.l = n // 2 if kind == "so" else n
        self._build_basis()
        self._build_theta()
        self._build_chain_maps()
        floor = 2 if kind == "so" else 1
        self.child = AlgebraContext(kind, n - 1) if n > floor else None

    # --- basis and roots ---------------------------------------------------

    def _bar(self, j):
        return self.n - 1 - j

    def _build_basis(self):
        n, kind = self.n, self.kind
        self.basis = []
        self.basis_positions = []
        if kind == "gl":
            self.form = None
            for i in range(n):
                for j in range(n):
                    m = Mat.zeros(n)
                    m.a[i][j] = ONE
                    self.basis.append(m)
                    self.basis_positions.append((i, j))
        else:
            self.form = Mat.zeros(n)
            for j in range(n):
                self.form.a[j][self._bar(j)] = ONE
            for i in range(n):
                for j in range(n):
                    if j == self._bar(i):
                        continue
                    mirror = (self._bar(j), self._bar(i))
                    if (i, j) < mirror:
                        m = Mat.zeros(n)
                        m.a[i][j] = ONE
                        m.a[mirror[0]][mirror[1]] = -ONE
                        self.basis.append(m)
                        self.basis_positions.append((i, j))
        self.dim = len(self.basis)
        self._pos_index = {p: k for k, p in enumerate(self.basis_positions)}

        # Cartan subalgebra
        self.cartan_basis = []
        if kind == "gl":
            for a in range(n):
                self.cartan_basis.append(self.basis[self._pos_index[(a, a)]])
        else:
            for a in range(self.l):
                self.cartan_basis.append(self.basis[self._pos_index[(a, a)]])

        # epsilon-weight of each matrix position
        def eps_of(p):
            w = [0] * self.l
            if kind == "gl":
                w[p] = 1
            elif p < self.l:
                w[p] = 1
            elif p >= self.n - self.l:
                w[self._bar(p)] = -1
            return w

        self.roots = []
        self.root_index = {}
        for k, (i, j) in enumerate(self.basis_positions):
            if i == j:
                continue
            wi, wj = eps_of(i), eps_of(j)
            coords = tuple(a - b for a, b in zip(wi, wj))
            if all(c == 0 for c in coords):
                continue
            r = Root(coords)
            self.roots.append(r)
            self.root_index[r.coords] = k
        self.positive_roots = [r for r in self.roots if r.is_positive()]

        # simple roots
        self.simple_roots = []
        if kind == "gl":
            for a in range(n - 1):
                c = [0] * n
                c[a], c[a + 1] = 1, -1
                self.simple_roots.append(Root(c))
        else:
            l = self.l
            for a in range(l - 1):
                c = [0] * l
                c[a], c[a + 1] = 1, -1
                self.simple_roots.append(Root(c))
            c = [0] * l
            if n % 2 == 1:
                c[l - 1] = 1                      # short root e_l
            else:
                if l >= 2:
                    c[l - 2] = 1
                c[l - 1] = 1                      # e_{l-1} + e_l
            if l >= 1 and (n % 2 == 1 or l >= 2):
                self.simple_roots.append(Root(c))

    def _build_theta(self):
        n, kind = self.n, self.kind
        t = Mat.identity(n)
        if kind == "gl":
            t.a[n - 1][n - 1] = -ONE
        elif n % 2 == 1:
            for j in range(n):
                t.a[j][j] = ONE if j == n // 2 else -ONE
        else:
            l = n // 2
            t.a[l - 1][l - 1] = ZERO
            t.a[l][l] = ZERO
            t.a[l - 1][l] = ONE
            t.a[l][l - 1] = ONE
        self.theta_mat = t  # involutive: t == t^{-1}

        # fixed-subalgebra basis, deterministic: kernel of (Theta - id) in
        # basis coordinates
        cols = []
        for b in self.basis:
            cols.append(self.coordinates(t * b * t))
        dim = self.dim
        m = Mat.zeros(dim)
        for j, c in enumerate(cols):
            for i in range(dim):
                m.a[i][j] = c[i]
        for k in range(dim):
            m.a[k][k] = m.a[k][k] - ONE
        self.k_basis = [self.from_coordinates(v) for v in nullspace(m)]
        if kind == "gl":
            # k is the gl(n-1) block; drop the corner coordinate
            self.k_basis = [b for b in self.k_basis
                            if not b.a[n - 1][n - 1]]

    def _build_chain_maps(self):
        """T (n x n-1), P (n-1 x n) with P T = I, and the diagonal gamma
        aligning the fixed subalgebra with the standard form one size down."""
        n, kind = self.n, self.kind
        if (kind == "so" and n == 2) or (kind == "gl" and n == 1):
            self.chain_T = self.chain_P = None
            return
        if kind == "gl":
            t = Mat.zeros(n, n - 1)
            for a in range(n - 1):
                t.a[a][a] = ONE
            self.chain_T = t
            self.chain_P = t.transpose()
            self._gamma = None
            self.chain_TD = self.chain_T
            self.chain_PD = self.chain_P
            return
        l = n // 2
        if n % 2 == 1:
            # drop the middle basis vector
            t = Mat.zeros(n, n - 1)
            for a in range(n - 1):
                t.a[a if a < l else a + 1][a] = ONE
            self.chain_T = t
            self.chain_P = t.transpose()
            self.chain_TD = self.chain_T
            self.chain_PD = self.chain_P
        else:
            # keep e_{l-1}+e_l, drop e_{l-1}-e_l; gamma rescales so that the
            # induced form is exactly the standard one in size n-1
            t = Mat.zeros(n, n - 1)
            p = Mat.zeros(n - 1, n)
            for a in range(n - 1):
                if a < l - 1:
                    t.a[a][a] = ONE
                    p.a[a][a] = ONE
                elif a == l - 1:
                    t.a[l - 1][a] = ONE
                    t.a[l][a] = ONE
                    p.a[a][l - 1] = HALF
                    p.a[a][l] = HALF
                else:
                    t.a[a + 1][a] = ONE
                    p.a[a][a + 1] = ONE
            self.chain_T = t
            self.chain_P = p
            gamma = Mat.identity(n - 1)
            gamma_inv = Mat.identity(n - 1)
            for a in range(l - 1):
                gamma.a[a][a] = HALF
                gamma_inv.a[a][a] = TWO
            self._gamma = gamma
            self.chain_TD = t * gamma_inv     # used on the right: T g^{-1}
            self.chain_PD = gamma * p         # used on the left: g P

    # --- element services --------------------------------------------------

    def coordinates(self, mat):
        return [mat.a[i][j] for (i, j) in self.basis_positions]

    def from_coordinates(self, coords):
        m = Mat.zeros(self.n)
        for c, b in zip(coords, self.basis):
            if c:
                for (i, j) in _support(b):
                    m.a[i][j] = m.a[i][j] + c * b.a[i][j]
        return m

    def membership_violations(self, mat):
        if mat.m != self.n or mat.n != self.n:
            return ["shape %dx%d, expected %dx%d"
                    % (mat.m, mat.n, self.n, self.n)]
        if self.kind == "gl":
            return []
        out = []
        for i in range(self.n):
            for j in range(self.n):
                lhs = mat.a[i][j]
                rhs = -mat.a[self._bar(j)][self._bar(i)]
                if lhs != rhs:
                    out.append("entry (%d,%d)=%s violates Z^T S + S Z = 0 "
                               "against (%d,%d)=%s"
                               % (i + 1, j + 1, lhs,
                                  self._bar(j) + 1, self._bar(i) + 1,
                                  mat.a[self._bar(j)][self._bar(i)]))
        return out

    def contains(self, mat):
        return not self.membership_violations(mat)

    def theta(self, mat):
        t = self.theta_mat
        return t * mat * t

    def theta_decompose(self, mat):
        fixed = (mat + self.theta(mat)) * HALF
        return fixed, mat - fixed

    def down(self, mat):
        """Project to the next algebra in the chain, realized one size down."""
        if self.chain_T is None:
            raise ValueError("chain stops at %s(%d)" % (self.kind, self.n))
        fixed, _ = self.theta_decompose(mat)
        return self.chain_PD * fixed * self.chain_TD

    def up(self, small):
        """Embed an element of the next algebra down back into this one."""
        return self.chain_TD * small * self.chain_PD

    def group_up(self, g_small):
        """Embed a group element one size down (acting trivially on the
        complementary line)."""
        lifted = self.chain_TD * g_small * self.chain_PD
        proj = self.chain_T * self.chain_P
        return lifted + Mat.identity(self.n) - proj

    def level(self, m):
        ctx = self
        while ctx.n > m:
            if ctx.child is None:
                raise ValueError("no level %d below %s(%d)"
                                 % (m, self.kind, self.n))
            ctx = ctx.child
        if ctx.n != m:
            raise ValueError("level %d not in the chain of %s(%d)"
                             % (m, self.kind, self.n))
        return ctx

    def invariant_rank(self, m=None):
        m = self.n if m is None else m
        return m // 2 if self.kind == "so" else m

    def flag_dim(self):
        return len(self.positive_roots)

    def k_dim(self):
        return len(self.k_basis)

    def chain_floor(self):
        return 2 if self.kind == "so" else 1

    def describe(self):
        return "%s(%d)" % (self.kind, self.n)


def _support(mat):
    out = []
    for i, row in enumerate(mat.a):
        for j, v in enumerate(row):
            if v:
                out.append((i, j))
    return out


def make_algebra(kind, n):
    return AlgebraContext(kind, n)


def membership_check(ctx, mat):
    return ctx.contains(mat)


def theta_apply(ctx, mat):
    return ctx.theta(mat)


def theta_decompose(ctx, mat):
    return ctx.theta_decompose(mat)


def project_to_subalgebra(ctx, mat, m):
    cur = ctx
    while cur.n > m:
        mat = cur.down(mat)
        cur = cur.child
    if cur.n != m:
        raise ValueError("cannot project %s to level %d" % (ctx.describe(), m))
    return mat


def embed_from_subalgebra(ctx, mat, m):
    """Inverse of projection on the subalgebra: embed a level-m element into
    the top algebra."""
    chain = []
    cur = ctx
    while cur.n > m:
        chain.append(cur)
        cur = cur.child
    if cur.n != m:
        raise ValueError("level %d not below %s" % (m, ctx.describe()))
    for step in reversed(chain):
        mat = step.up(mat)
    return mat


def root_vector(ctx, root):
    """Canonical basis vector of the root space (first nonzero entry +1 in
    row-major order)."""
    k = ctx.root_index.get(tuple(root.coords))
    if k is None:
        raise ValueError("%r is not a root of %s" % (root, ctx.describe()))
    return ctx.basis[k]


def cartan_coordinates(ctx, h_mat):
    coords = [h_mat.a[a][a] for a in range(ctx.l)]
    # verify the element is actually in the Cartan
    rebuilt = Mat.zeros(ctx.n)
    for c, hb in zip(coords, ctx.cartan_basis):
        rebuilt = rebuilt + c * hb
    if rebuilt != h_mat:
        raise ValueError("element is not in the diagonal Cartan")
    return coords


def root_value(root, cartan_coords):
    s = ZERO
    for c, a in zip(root.coords, cartan_coords):
        if c:
            s = s + QI(c) * a
    return s


def sl2_triple(ctx, root):
    """(e, f, h) with [h,e]=2e, [h,f]=-2f, [e,f]=h; e is the canonical root
    vector."""
    e = root_vector(ctx, root)
    f0 = root_vector(ctx, -root)
    h0 = bracket(e, f0)
    c = root_value(root, [h0.a[a][a] for a in range(ctx.l)])
    if not c:
        raise ValueError("degenerate pairing for %r" % root)
    f = (TWO / c) * f0
    return e, f, bracket(e, f)


def _exp_nilpotent(mat):
    n = mat.n
    out = Mat.identity(n)
    term = Mat.identity(n)
    k = 1
    while True:
        term = term * mat
        if term.is_zero():
            return out
        fact = rat(1)
        for j in range(2, k + 1):
            fact = fact * rat(j)
        out = out + (ONE / fact) * term
        k += 1
        if k > n:
            raise ValueError("matrix is not nilpotent")


def weyl_representative(ctx, root):
    """exp(e) exp(-f) exp(e) for the sl2 triple of the root; normalizes the
    diagonal Cartan and induces the reflection s_root on it."""
    e, f, _ = sl2_triple(ctx, root)
    return _exp_nilpotent(e) * _exp_nilpotent(-f) * _exp_nilpotent(e)


def cayley_element(ctx, root):
    """Exact Q(i) representative of the Cayley transform attached to a short
    noncompact root of so(2l+1).  Image of (1/sqrt2)[[1,i],[i,1]] under the
    rank-one subgroup map; the square roots cancel in this representation."""
    if ctx.kind != "so" or sum(abs(c) for c in root.coords) != 1:
        raise ValueError("Cayley element only for short so roots")
    e, f, h = sl2_triple(ctx, root)
    i_unit = QI(0, 1)
    expf = _exp_nilpotent(i_unit * f)
    expe = _exp_nilpotent(i_unit * e)
    mid = Mat.identity(ctx.n)
    for p in range(ctx.n):
        hp = h.a[p][p]
        if hp == TWO:
            mid.a[p][p] = HALF
        elif hp == -TWO:
            mid.a[p][p] = TWO
        elif hp != ZERO:
            raise ValueError("unexpected coroot entry %s" % hp)
    return expf * mid * expe


def preserves_form(ctx, g):
    """g^T S g = S and det g = 1 (exact)."""
    if ctx.kind == "gl":
        from .matrices import det
        return bool(det(g))
    from .matrices import det
    return (g.transpose() * ctx.form * g == ctx.form
            and det(g) == ONE)


def adjoint(g, mat):
    from .matrices import inverse
    return g * mat * inverse(g)
