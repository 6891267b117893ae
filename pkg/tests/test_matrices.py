import pytest
from hypothesis import given, settings, strategies as st

from gzlie.scalars import qi, rat, ZERO, ONE, I, Jet
from gzlie.matrices import (Mat, bracket, rank, rank_rows, nullspace, det,
                            solve, inverse, char_poly, char_poly_fl,
                            pfaffian, row_space_contains, intersection_dim,
                            jet_mat)

ints = st.integers(-6, 6)


def _mat3(vals):
    return Mat.from_ints([vals[0:3], vals[3:6], vals[6:9]])


def test_basic_algebra():
    a = Mat.from_ints([[1, 2], [3, 4]])
    b = Mat.from_ints([[0, 1], [1, 0]])
    assert (a * b).a[0][1] == qi(1)
    assert (a + b - a) == b
    assert (rat(2) * a).trace() == qi(10)
    assert bracket(a, b) == a * b - b * a
    assert a.transpose().a[0][1] == qi(3)


def test_rank_complex_oracle():
    # [[1, i], [i, -1]]: second row = i * first row, so rank 1
    m = Mat([[ONE, I], [I, -ONE]])
    assert rank(m) == 1
    assert rank(Mat.identity(4)) == 4
    assert rank(Mat.zeros(3)) == 0


def test_nullspace_is_deterministic_kernel_basis():
    m = Mat.from_ints([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(m)
    assert len(ns) == 2
    for v in ns:
        col = Mat([[x] for x in v])
        assert (m * col).is_zero()
    # free coordinates are set to one, in column order
    assert ns[0][1] == ONE and ns[1][2] == ONE
    assert ns == nullspace(m)


def test_det_solve_inverse():
    a = Mat.from_ints([[2, 1], [1, 1]])
    assert det(a) == ONE
    assert inverse(a) * a == Mat.identity(2)
    x = solve(a, [qi(3), qi(2)])
    assert x == [ONE, ONE]
    assert solve(Mat.from_ints([[1, 1], [1, 1]]), [ZERO, ONE]) is None
    with pytest.raises(ValueError):
        inverse(Mat.from_ints([[1, 1], [1, 1]]))


def test_char_poly_oracle():
    # [[1,2],[3,4]]: t^2 - 5t - 2, checked by hand
    p = char_poly(Mat.from_ints([[1, 2], [3, 4]]))
    assert p == [qi(-2), qi(-5), qi(1)]
    # diag(1, 2, 3): (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    d = Mat.from_ints([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert char_poly(d) == [qi(-6), qi(11), qi(-6), qi(1)]


@given(st.lists(ints, min_size=9, max_size=9))
@settings(max_examples=25, deadline=None)
def test_char_poly_satisfied_by_matrix(vals):
    # Cayley-Hamilton as an independent check of the coefficients
    a = _mat3(vals)
    p = char_poly(a)
    acc = Mat.zeros(3)
    power = Mat.identity(3)
    for c in p:
        acc = acc + c * power
        power = power * a
    assert acc.is_zero()


def test_fl_gradient_matches_jets():
    # d b_k(A; V) = -tr(M_k V) must agree with a jet pass through FL
    a = _mat3([1, 2, 0, -1, 3, 1, 0, 2, -2])
    v = _mat3([0, 1, 1, 2, 0, -1, 1, 1, 0])
    coeffs, aux = char_poly_fl(a)
    jcoeffs, _ = char_poly_fl(jet_mat(a, v))
    for k in range(3):
        grad = -(aux[k] * v).trace()
        assert jcoeffs[k].val == coeffs[k]
        assert jcoeffs[k].eps == grad


def test_pfaffian_oracles():
    two = Mat([[ZERO, qi(5)], [qi(-5), ZERO]])
    assert pfaffian(two) == qi(5)
    # 4x4: pf = a12*a34 - a13*a24 + a14*a23 by the textbook formula
    a12, a13, a14 = qi(1), qi(2), rat(1, 2)
    a23, a24, a34 = qi(-3), qi(4), qi(7)
    rows = [[ZERO, a12, a13, a14],
            [-a12, ZERO, a23, a24],
            [-a13, -a23, ZERO, a34],
            [-a14, -a24, -a34, ZERO]]
    m = Mat(rows)
    expect = a12 * a34 - a13 * a24 + a14 * a23
    assert pfaffian(m) == expect
    assert pfaffian(m) ** 2 == det(m)
    with pytest.raises(ValueError):
        pfaffian(Mat.from_ints([[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        pfaffian(Mat.zeros(3))


def test_pfaffian_over_jets():
    m = Mat([[ZERO, qi(2)], [qi(-2), ZERO]])
    v = Mat([[ZERO, qi(3)], [qi(-3), ZERO]])
    pj = pfaffian(jet_mat(m, v))
    assert pj.val == qi(2) and pj.eps == qi(3)


def test_row_space_and_intersection():
    e1 = [ONE, ZERO, ZERO]
    e2 = [ZERO, ONE, ZERO]
    e3 = [ZERO, ZERO, ONE]
    assert row_space_contains([e1, e2], [qi(2), qi(-1), ZERO], 3)
    assert not row_space_contains([e1], e2, 3)
    assert intersection_dim([e1, e2], [e2, e3], 3) == 1
    assert intersection_dim([e1], [e2], 3) == 0
    assert rank_rows([e1, e1], 3) == 1
