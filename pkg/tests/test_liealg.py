import pytest

from gzlie.scalars import qi, rat, ZERO, ONE
from gzlie.matrices import Mat, bracket, det, rank_rows
from gzlie.liealg import (make_algebra, Root, root_vector, root_value,
                          cartan_coordinates, sl2_triple,
                          weyl_representative, cayley_element,
                          preserves_form, adjoint, project_to_subalgebra,
                          embed_from_subalgebra)
from gzlie.rand import Sampler


def diag_cartan(ctx, vals):
    m = Mat.zeros(ctx.n)
    for c, h in zip(vals, ctx.cartan_basis):
        m = m + rat(c) * h
    return m


@pytest.mark.parametrize("kind,n,dim", [
    ("gl", 1, 1), ("gl", 3, 9), ("gl", 4, 16),
    ("so", 2, 1), ("so", 3, 3), ("so", 4, 6), ("so", 5, 10),
    ("so", 6, 15), ("so", 7, 21),
])
def test_dimensions(kind, n, dim):
    ctx = make_algebra(kind, n)
    assert ctx.dim == dim
    assert len(ctx.cartan_basis) == ctx.l
    assert ctx.dim == len(ctx.roots) + ctx.l


def test_root_counts_and_simples():
    so5 = make_algebra("so", 5)
    assert len(so5.positive_roots) == 4
    assert {r.coords for r in so5.simple_roots} == {(1, -1), (0, 1)}
    so6 = make_algebra("so", 6)
    assert len(so6.positive_roots) == 6
    assert {r.coords for r in so6.simple_roots} == {
        (1, -1, 0), (0, 1, -1), (0, 1, 1)}
    gl3 = make_algebra("gl", 3)
    assert len(gl3.positive_roots) == 3


def test_membership_and_coordinates():
    ctx = make_algebra("so", 5)
    s = Sampler(3)
    x = s.algebra_element(ctx)
    assert ctx.contains(x)
    assert ctx.from_coordinates(ctx.coordinates(x)) == x
    # corrupt one entry and check the diagnostic carries a location
    bad = x.copy()
    bad.a[0][1] = bad.a[0][1] + ONE
    msgs = ctx.membership_violations(bad)
    assert msgs and "(1,2)" in msgs[0]
    # every basis matrix satisfies Z^T S + S Z = 0
    for b in ctx.basis:
        assert (b.transpose() * ctx.form + ctx.form * b).is_zero()


def test_theta_is_involutive_automorphism():
    for kind, n in [("so", 5), ("so", 6), ("gl", 3)]:
        ctx = make_algebra(kind, n)
        s = Sampler(n)
        x, y = s.algebra_element(ctx), s.algebra_element(ctx)
        assert ctx.theta(ctx.theta(x)) == x
        assert ctx.theta(bracket(x, y)) == bracket(ctx.theta(x), ctx.theta(y))
        fixed, anti = ctx.theta_decompose(x)
        assert fixed + anti == x
        assert ctx.theta(fixed) == fixed and ctx.theta(anti) == -anti


@pytest.mark.parametrize("kind,n", [("so", 5), ("so", 6), ("gl", 4)])
def test_fixed_subalgebra_dimension(kind, n):
    ctx = make_algebra(kind, n)
    child = make_algebra(kind, n - 1)
    assert ctx.k_dim() == child.dim


@pytest.mark.parametrize("kind,n", [("so", 5), ("so", 6), ("so", 7),
                                    ("gl", 3)])
def test_chain_projection_is_homomorphism(kind, n):
    ctx = make_algebra(kind, n)
    child = ctx.child
    s = Sampler(7)
    for _ in range(5):
        x = s.span_element(ctx.k_basis)
        y = s.span_element(ctx.k_basis)
        dx, dy = ctx.down(x), ctx.down(y)
        assert child.contains(dx)
        assert ctx.down(bracket(x, y)) == bracket(dx, dy)
        # up is a section of down on the fixed part
        assert ctx.down(ctx.up(dx)) == dx
        assert ctx.up(dx) == x


def test_projection_embedding_round_trip():
    ctx = make_algebra("so", 7)
    s = Sampler(11)
    y = s.algebra_element(ctx.level(4))
    top = embed_from_subalgebra(ctx, y, 4)
    assert ctx.contains(top)
    assert project_to_subalgebra(ctx, top, 4) == y
    # iterated single steps agree with the convenience wrapper
    x = s.algebra_element(ctx)
    step = ctx.child.child.down(ctx.child.down(ctx.down(x)))
    assert step == project_to_subalgebra(ctx, x, 4)


def test_root_vectors_are_ad_eigenvectors():
    for kind, n in [("so", 5), ("so", 6), ("gl", 3)]:
        ctx = make_algebra(kind, n)
        h = diag_cartan(ctx, range(1, ctx.l + 1))
        coords = cartan_coordinates(ctx, h)
        for r in ctx.roots:
            e = root_vector(ctx, r)
            assert bracket(h, e) == root_value(r, coords) * e
    with pytest.raises(ValueError):
        root_vector(make_algebra("so", 5), Root((3, 3)))
    with pytest.raises(ValueError):
        cartan_coordinates(make_algebra("so", 5),
                           root_vector(make_algebra("so", 5), Root((1, -1))))


def test_sl2_triples():
    ctx = make_algebra("so", 6)
    for r in ctx.simple_roots:
        e, f, h = sl2_triple(ctx, r)
        assert bracket(e, f) == h
        assert bracket(h, e) == rat(2) * e
        assert bracket(h, f) == rat(-2) * f


def test_weyl_representative_reflects_cartan():
    ctx = make_algebra("so", 5)
    h = diag_cartan(ctx, [3, 7])
    # s_{e1-e2} swaps the first two Cartan coordinates
    v = weyl_representative(ctx, Root((1, -1)))
    assert preserves_form(ctx, v)
    assert cartan_coordinates(ctx, adjoint(v, h)) == [qi(7), qi(3)]
    # s_{e2} flips the second coordinate
    w = weyl_representative(ctx, Root((0, 1)))
    assert cartan_coordinates(ctx, adjoint(w, h)) == [qi(3), qi(-7)]


def test_cayley_element_lies_in_the_group():
    ctx = make_algebra("so", 5)
    u = cayley_element(ctx, Root((0, 1)))
    assert preserves_form(ctx, u)
    # genuinely complex: not defined over the rationals
    assert any(v.im for row in u.a for v in row)
    with pytest.raises(ValueError):
        cayley_element(ctx, Root((1, -1)))  # long root
    with pytest.raises(ValueError):
        cayley_element(make_algebra("gl", 3), Root((1, -1, 0)))


def test_group_up_lands_in_the_group():
    for kind, n in [("so", 5), ("so", 6)]:
        ctx = make_algebra(kind, n)
        s = Sampler(5)
        g = s.subgroup_element(ctx)
        assert preserves_form(ctx, g)
        # Ad(g) preserves the algebra and commutes with projection
        x = s.algebra_element(ctx)
        assert ctx.contains(adjoint(g, x))


def test_adjoint_action_is_automorphism():
    ctx = make_algebra("so", 6)
    s = Sampler(9)
    g = s.group_element(ctx)
    x, y = s.algebra_element(ctx), s.algebra_element(ctx)
    assert adjoint(g, bracket(x, y)) == bracket(adjoint(g, x), adjoint(g, y))


def test_make_algebra_rejects_bad_args():
    with pytest.raises(ValueError):
        make_algebra("sp", 4)
    with pytest.raises(ValueError):
        make_algebra("so", 1)
    with pytest.raises(ValueError):
        make_algebra("gl", 0)
