"""Orbits of the symmetry subgroup K on the flag variety of so(n), the
associated theta-stable parabolics, and samplers for the distinguished
families of elements (orbit sections, patterned middle-row families, the
fibre over zero, and chain-disjoint elements).

Orbits are represented by a conjugator v with Borel Ad(v)b_+; the pulled
back involution theta_Q = Ad(v^-1) theta Ad(v) is maintained both as a
matrix and combinatorially (signed action on epsilon-coordinates plus
compactness signs of imaginary roots), and the two descriptions are
cross-checked at every step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import QI, ZERO, ONE, rat
from .matrices import (Mat, bracket, inverse, rank_rows, intersection_dim,
                       row_space_contains)
from .liealg import (Root, root_vector, weyl_representative, cayley_element,
                     sl2_triple, project_to_subalgebra)
from .invariants import coincidence_count, reduced_char
from . import polys

REAL = "real"
COMPACT = "compact-imaginary"
NONCOMPACT = "noncompact-imaginary"
COMPLEX_STABLE = "complex-stable"
COMPLEX_UNSTABLE = "complex-unstable"


@dataclass
class Orbit:
    name: str
    base: str                 # which closed orbit the word starts from
    word: tuple               # simple-root indices applied so far
    conjugator: Mat
    conjugator_inv: Mat
    codim: int
    closed: bool
    action: tuple             # theta_Q on epsilon-coords, columns = images
    compact_signs: tuple      # ((root coords, +1/-1), ...) imaginary positive
    borel_basis: list = field(default_factory=list)

    def key(self):
        return (self.codim, self.action, self.compact_signs)


def _theta_q_data(ctx, v, v_inv):
    """Signed coordinate action and compactness signs of
    theta_Q = Ad(v^-1) theta Ad(v); asserts that theta_Q normalizes the
    diagonal Cartan."""
    tq = v_inv * ctx.theta_mat * v
    tq_inv = tq  # theta_Q is involutive
    cols = []
    for a in range(ctx.l):
        img = tq * ctx.cartan_basis[a] * tq_inv
        col = []
        for p in range(ctx.l):
            e = img.a[p][p]
            if e.im != 0 or e.re.denominator != 1:
                raise AssertionError("theta_Q does not act integrally on h")
            col.append(int(e.re))
        # verify img really is the diagonal Cartan element with these coords
        rebuilt = Mat.zeros(ctx.n)
        for c, hb in zip(col, ctx.cartan_basis):
            if c:
                rebuilt = rebuilt + rat(c) * hb
        if rebuilt != img:
            raise AssertionError("theta_Q does not normalize the Cartan")
        cols.append(tuple(col))
    action = tuple(cols)
    signs = []
    for r in ctx.positive_roots:
        if _act(action, r) == r.coords:
            e = root_vector(ctx, r)
            img = tq * e * tq_inv
            if img == e:
                signs.append((r.coords, 1))
            elif img == -e:
                signs.append((r.coords, -1))
            else:
                raise AssertionError("imaginary root space not preserved")
    return action, tuple(sorted(signs))


def _act(action, root):
    l = len(action)
    out = [0] * l
    for a, c in enumerate(root.coords):
        if c:
            for p in range(l):
                out[p] += c * action[a][p]
    return tuple(out)


def classify_root_type(orbit, root):
    img = _act(orbit.action, root)
    if img == tuple(-c for c in root.coords):
        return REAL
    if img == root.coords:
        for coords, s in orbit.compact_signs:
            if coords == root.coords:
                return COMPACT if s == 1 else NONCOMPACT
        raise AssertionError("missing compactness sign for %r" % root)
    return COMPLEX_STABLE if Root(img).is_positive() else COMPLEX_UNSTABLE


def _borel_basis(ctx, v, v_inv):
    out = [v * h * v_inv for h in ctx.cartan_basis]
    for r in ctx.positive_roots:
        out.append(v * root_vector(ctx, r) * v_inv)
    return out


def _orbit_codim(ctx, borel):
    krows = [b.flatten() for b in ctx.k_basis]
    brows = [b.flatten() for b in borel]
    meet = intersection_dim(krows, brows, ctx.n * ctx.n)
    orbit_dim = ctx.k_dim() - meet
    return ctx.flag_dim() - orbit_dim


def _make_orbit(ctx, base, word, v, closed=False, name=None):
    v_inv = inverse(v)
    action, signs = _theta_q_data(ctx, v, v_inv)
    borel = _borel_basis(ctx, v, v_inv)
    codim = _orbit_codim(ctx, borel)
    return Orbit(name or "", base, tuple(word), v, v_inv, codim, closed,
                 action, signs, borel)


def monoid_action(ctx, orbit, root_idx):
    """Image of the orbit under the monoid generator of the given simple
    root; returns the same orbit object when the generator fixes it."""
    alpha = ctx.simple_roots[root_idx]
    t = classify_root_type(orbit, alpha)
    if t in (REAL, COMPACT, COMPLEX_UNSTABLE):
        return orbit
    if t == NONCOMPACT:
        step = cayley_element(ctx, alpha)
    else:
        step = weyl_representative(ctx, alpha)
    new = _make_orbit(ctx, orbit.base, orbit.word + (root_idx,),
                      orbit.conjugator * step)
    if new.codim != orbit.codim - 1:
        raise AssertionError("monoid step did not raise dimension by one")
    # combinatorial update of the coordinate action, cross-checked against
    # the matrix computation
    expected = _compose_reflection(ctx, orbit.action, alpha, t)
    if expected is not None and expected != new.action:
        raise AssertionError("combinatorial and matrix theta_Q disagree")
    return new


def _reflect(alpha, coords):
    """s_alpha in epsilon-coordinates for so roots."""
    nz = [(a, c) for a, c in enumerate(alpha.coords) if c]
    out = list(coords)
    if len(nz) == 1:
        a, _ = nz[0]
        out[a] = -out[a]
    else:
        (a, ca), (b, cb) = nz
        if ca * cb < 0:
            out[a], out[b] = out[b], out[a]
        else:
            out[a], out[b] = -out[b], -out[a]
    return tuple(out)


def _compose_reflection(ctx, action, alpha, rtype):
    l = ctx.l
    if rtype == NONCOMPACT:
        # Cayley through an imaginary root: new action = s_alpha o old
        return tuple(_reflect(alpha, action[a]) for a in range(l))
    cols = []
    for a in range(l):
        unit = Root(tuple(1 if p == a else 0 for p in range(l)))
        pre = _reflect(alpha, unit.coords)
        img = [0] * l
        for p, c in enumerate(pre):
            if c:
                col = action[p]
                for q in range(l):
                    img[q] += c * col[q]
        cols.append(tuple(_reflect(alpha, img)))
    return tuple(cols)


def closed_orbits(ctx):
    if ctx.kind != "so" or ctx.n < 3:
        raise ValueError("orbit tables only for so(n), n >= 3")
    ident = Mat.identity(ctx.n)
    if ctx.n % 2 == 1:
        w = weyl_representative(ctx, ctx.simple_roots[-1])
        return [_make_orbit(ctx, "Q+", (), ident, closed=True, name="Q+"),
                _make_orbit(ctx, "Q-", (), w, closed=True, name="Q-")]
    return [_make_orbit(ctx, "Q+", (), ident, closed=True, name="Q+")]


def enumerate_orbits(ctx):
    """All K-orbits on the flag variety, found by saturating the closed
    orbits under the monoid action.  Returns (orbits, edges) with edges
    (source name, simple root index, target name)."""
    seeds = closed_orbits(ctx)
    orbits = list(seeds)
    seen = {}
    for o in seeds:
        # closed orbits are distinct seeds even when their records agree
        seen[("seed", o.name)] = o
    edges = []
    frontier = list(seeds)
    while frontier:
        nxt = []
        for o in frontier:
            for idx in range(len(ctx.simple_roots)):
                img = monoid_action(ctx, o, idx)
                if img is o:
                    continue
                existing = seen.get(img.key())
                if existing is None:
                    img.name = "Q%d" % img.codim
                    seen[img.key()] = img
                    orbits.append(img)
                    nxt.append(img)
                    target = img
                else:
                    target = existing
                edges.append((o.name, idx, target.name))
        frontier = nxt
    orbits.sort(key=lambda o: (-o.codim, o.name))
    return orbits, edges


def closed_orbit_count(ctx):
    return sum(1 for o in enumerate_orbits(ctx)[0] if o.closed)


def orbit_by_name(ctx, name):
    for o in enumerate_orbits(ctx)[0]:
        if o.name == name:
            return o
    raise KeyError("no orbit named %r" % name)


def orbit_graph(ctx):
    orbits, edges = enumerate_orbits(ctx)
    nodes = [{"name": o.name, "codim": o.codim, "closed": o.closed,
              "dim": ctx.flag_dim() - o.codim, "base": o.base,
              "word": list(o.word)} for o in orbits]
    uniq = sorted(set(edges), key=lambda e: (e[0], e[1]))
    return {"algebra": "so", "n": ctx.n,
            "flag_dim": ctx.flag_dim(), "nodes": nodes,
            "edges": [{"from": s, "root": i + 1, "to": t}
                      for (s, i, t) in uniq]}


def orbit_graph_text(graph):
    lines = ["K-orbits on the flag variety of so(%d)" % graph["n"],
             "flag dimension %d" % graph["flag_dim"], ""]
    for node in graph["nodes"]:
        tag = "closed" if node["closed"] else "      "
        lines.append("%-4s %s codim %2d  dim %2d" %
                     (node["name"], tag, node["codim"], node["dim"]))
    lines.append("")
    for e in graph["edges"]:
        lines.append("%-4s --[alpha_%d]--> %s" %
                     (e["from"], e["root"], e["to"]))
    return "\n".join(lines)


# --- theta-stable parabolics ----------------------------------------------

@dataclass
class Parabolic:
    i: int                     # codimension index of the matching orbit
    r_basis: list
    z_basis: list
    lss_basis: list
    nilradical_basis: list
    levi_tag: tuple            # ("so", m)


def stable_parabolic(ctx, i):
    """theta-stable parabolic whose closed set of partial-map fibres matches
    coincidence index i; generated by the standard Borel and the negative
    simple root spaces alpha_{i+1}..alpha_l."""
    l = ctx.l
    limit = l - 1 if ctx.n % 2 == 1 else l - 2
    if ctx.kind != "so" or not (0 <= i <= limit):
        raise ValueError("no theta-stable parabolic for index %r" % i)
    z_basis = [ctx.cartan_basis[a] for a in range(i)]
    lss_basis = [ctx.cartan_basis[a] for a in range(i, l)]
    levi_roots = [r for r in ctx.roots
                  if all(c == 0 for c in r.coords[:i])]
    for r in levi_roots:
        lss_basis.append(root_vector(ctx, r))
    nil_basis = []
    levi_set = {r.coords for r in levi_roots}
    for r in ctx.positive_roots:
        if r.coords not in levi_set:
            nil_basis.append(root_vector(ctx, r))
    r_basis = z_basis + lss_basis + nil_basis
    m = 2 * (l - i) + 1 if ctx.n % 2 == 1 else 2 * (l - i)
    return Parabolic(i, r_basis, z_basis, lss_basis, nil_basis, ("so", m))


def degenerate_to_levi(ctx, mat, i):
    """Linear projection r -> levi killing the nilradical: the limit of the
    one-parameter contraction by the center of the Levi.  Requires x in r."""
    par = stable_parabolic(ctx, i)
    coords = ctx.coordinates(mat)
    out = Mat.zeros(ctx.n)
    levi_set = {r.coords for r in ctx.roots
                if all(c == 0 for c in r.coords[:i])}
    for k, (pos, b) in enumerate(zip(ctx.basis_positions, ctx.basis)):
        c = coords[k]
        if not c:
            continue
        if pos[0] == pos[1]:
            out = out + c * b
            continue
        root = None
        for r, bi in ctx.root_index.items():
            if bi == k:
                root = r
                break
        if root is None:
            raise AssertionError("basis element without a root")
        if root in levi_set:
            out = out + c * b
        elif not Root(root).is_positive():
            raise ValueError("element is not in the parabolic")
    return out


def levi_split(ctx, mat, i):
    """(z-part coordinates, semisimple part) of a Levi element."""
    par = stable_parabolic(ctx, i)
    zcoords = [mat.a[a][a] for a in range(i)]
    zmat = Mat.zeros(ctx.n)
    for c, h in zip(zcoords, par.z_basis):
        zmat = zmat + c * h
    return zcoords, mat - zmat


# --- distinguished element families ---------------------------------------

def nilfibre_components(ctx):
    """Bases of the nilradicals n_+ (and n_- in the odd case) whose K-orbits
    cover the fibre of the partial map over zero."""
    plus = [root_vector(ctx, r) for r in ctx.positive_roots]
    if ctx.n % 2 == 0:
        return [plus]
    w = weyl_representative(ctx, ctx.simple_roots[-1])
    w_inv = inverse(w)
    minus = [w * b * w_inv for b in plus]
    return [plus, minus]


def nilfibre_overlap_vector(ctx, component=0):
    """Canonical vector of the line that the joint centralizer of any
    element of the given nilfibre component must contain: the highest-root
    space of that component's Borel (its theta-symmetrization when the
    highest root is not compact, which happens only for so(4))."""
    l = ctx.l
    if l < 2:
        raise ValueError("needs rank at least 2")
    phi = Root(tuple([1, 1] + [0] * (l - 2)))
    e = root_vector(ctx, phi)
    if ctx.n == 4:
        return e + ctx.theta(e)
    if ctx.n % 2 == 1 and component == 1:
        w = weyl_representative(ctx, ctx.simple_roots[-1])
        return w * e * inverse(w)
    return e


def sample_nilfibre(ctx, sampler, component=0):
    comp = nilfibre_components(ctx)[component]
    y = sampler.span_element(comp, nonzero=True)
    k = sampler.subgroup_element(ctx)
    return k * y * inverse(k)


def sample_yq(ctx, orbit, sampler):
    """Random K-translate of a random element of the orbit's Borel."""
    y = sampler.span_element(orbit.borel_basis)
    k = sampler.subgroup_element(ctx)
    return k * y * inverse(k)


def sample_g0(ctx, sampler, max_tries=200):
    """Random element with no eigenvalue coincidence between consecutive
    top levels."""
    for _ in range(max_tries):
        x = sampler.algebra_element(ctx)
        if coincidence_count(ctx, x) == 0:
            return x
    raise RuntimeError("could not sample a coincidence-free element")


def sample_chain_disjoint(ctx, sampler, max_tries=200):
    """Random element whose chain projections have pairwise disjoint spectra
    at every consecutive pair of levels."""
    for _ in range(max_tries):
        x = sampler.algebra_element(ctx)
        ok = True
        qs = {}
        for m in range(ctx.chain_floor(), ctx.n + 1):
            qs[m] = reduced_char(ctx.level(m),
                                 project_to_subalgebra(ctx, x, m))
        for m in range(ctx.chain_floor(), ctx.n):
            if polys.degree(polys.gcd(qs[m], qs[m + 1])) != 0:
                ok = False
                break
        if ok:
            return x
    raise RuntimeError("could not sample a chain-disjoint element")


def _xi_slots(ctx):
    """(H-basis, raising vectors e_1..e_s, lowering vectors e_-1..e_-s):
    the middle-row degrees of freedom transverse to the subalgebra."""
    l = ctx.l
    if ctx.n % 2 == 1:
        ups, downs = [], []
        for j in range(l):
            c = [0] * l
            c[j] = 1
            ups.append(root_vector(ctx, Root(c)))
            downs.append(root_vector(ctx, Root([-v for v in c])))
        return ups, downs
    ups, downs = [], []
    for j in range(l - 1):
        c = [0] * l
        c[j], c[l - 1] = 1, -1
        e = root_vector(ctx, Root(c))
        ups.append(e - ctx.theta(e))
        f = root_vector(ctx, Root([-v for v in c]))
        downs.append(f - ctx.theta(f))
    return ups, downs


def xi_slot_count(ctx):
    return ctx.l if ctx.n % 2 == 1 else ctx.l - 1


def sample_xi(ctx, i, pattern, sampler):
    """Element of the patterned family: regular semisimple diagonal part,
    patterned middle-row coordinates with slots 1..i constrained (pattern
    letter 'U': lowering coordinate zero; 'L': raising coordinate zero) and
    slots above i generic."""
    slots = xi_slot_count(ctx)
    if not (0 <= i <= slots) or len(pattern) != i or set(pattern) - set("UL"):
        raise ValueError("bad pattern %r for i=%d" % (pattern, i))
    l = ctx.l
    avals = sampler.distinct_square_free(l)
    x = Mat.zeros(ctx.n)
    for a, v in zip(range(l), avals):
        x = x + v * ctx.cartan_basis[a]
    ups, downs = _xi_slots(ctx)
    for j in range(slots):
        if j < i:
            if pattern[j] == "U":
                x = x + sampler.nonzero_rational() * ups[j]
            else:
                x = x + sampler.nonzero_rational() * downs[j]
        else:
            x = x + sampler.nonzero_rational() * ups[j]
            x = x + sampler.nonzero_rational() * downs[j]
    return x


def xi_shape(ctx, mat, i):
    """If mat lies in the patterned family with i constrained slots, return
    its pattern string, else None."""
    slots = xi_slot_count(ctx)
    ups, downs = _xi_slots(ctx)
    span = list(ctx.cartan_basis) + ups + downs
    rows = [b.flatten() for b in span]
    if not row_space_contains(rows, mat.flatten(), ctx.n * ctx.n):
        return None
    # read slot coordinates by pairing against the defining root vectors
    ucoef, dcoef = [], []
    for j in range(slots):
        ucoef.append(_component(mat, ups[j]))
        dcoef.append(_component(mat, downs[j]))
    out = []
    for j in range(i):
        u, d = ucoef[j], dcoef[j]
        if bool(u) == bool(d):
            return None
        out.append("U" if not d else "L")
    return "".join(out)


def _component(mat, basis_vec):
    """Coefficient of a +-1-pattern basis vector in mat (first nonzero
    entry of the vector indexes the coefficient)."""
    for p, row in enumerate(basis_vec.a):
        for q, v in enumerate(row):
            if v:
                return mat.a[p][q] / v
    raise ValueError("zero basis vector")


def xi_flip_element(ctx, j):
    """Group element turning an 'L' in slot j (0-based) into a 'U'."""
    l = ctx.l
    if ctx.n % 2 == 1:
        c = [0] * l
        c[j] = 1
        return weyl_representative(ctx, Root(c))
    w = weyl_representative(ctx, ctx.simple_roots[l - 2])
    w = w * weyl_representative(ctx, ctx.simple_roots[l - 1])
    if j == l - 2:
        return w
    c = [0] * l
    c[j], c[l - 2] = 1, -1
    conj = weyl_representative(ctx, Root(c))
    return conj * w * inverse(conj)
