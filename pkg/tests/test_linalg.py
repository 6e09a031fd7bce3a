from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gvbimod.fields import GF, QQ
from gvbimod.linalg import Matrix, Subspace, image, kernel, quotient, rref, solve


def mat(rows, field=QQ):
    return Matrix.from_rows(field, [[field.from_int(x) for x in r] for r in rows])


def test_rref_identity():
    m = Matrix.identity(QQ, 3)
    r = rref(m)
    assert r.matrix == m
    assert r.pivots == (0, 1, 2)
    assert r.rank == 3


def test_rref_zero():
    m = Matrix.zeros(QQ, 2, 4)
    r = rref(m)
    assert r.matrix == m
    assert r.pivots == ()
    assert r.rank == 0


def test_rref_rank_one():
    # hand row-reduction: [[1,2],[2,4]] -> [[1,2],[0,0]]
    r = rref(mat([[1, 2], [2, 4]]))
    assert r.matrix == mat([[1, 2], [0, 0]])
    assert r.rank == 1


def test_kernel_identity_and_zero():
    assert kernel(Matrix.identity(QQ, 4)).dim == 0
    assert kernel(Matrix.zeros(QQ, 3, 5)) == Subspace.full(QQ, 5)


def test_image():
    assert image(Matrix.identity(QQ, 3)) == Subspace.full(QQ, 3)
    assert image(mat([[1, 2], [2, 4]])).dim == 1


def test_solve_identity_and_inconsistent():
    b = mat([[1], [2], [3]])
    assert solve(Matrix.identity(QQ, 3), b) == b
    assert solve(mat([[1, 1], [1, 1]]), mat([[1], [2]])) is None


def test_solve_recovers_known_solution():
    m = mat([[2, 1, 0, 0], [1, 3, 1, 0], [0, 1, 4, 1], [0, 0, 1, 5]])
    x = mat([[1], [-2], [3], [4]])
    sol = solve(m, m * x)
    assert m * sol == m * x
    assert sol == x  # invertible system: unique solution


def test_quotient_edges():
    proj, sec = quotient(3, Subspace.zero(QQ, 3))
    assert proj == Matrix.identity(QQ, 3)
    proj, sec = quotient(3, Subspace.full(QQ, 3))
    assert proj.rows == 0

    sub = Subspace.from_spanning_rows(QQ, 3, [[Fraction(1), Fraction(0), Fraction(0)]])
    proj, sec = quotient(3, sub)
    assert proj.rows == 2
    # section hits coordinates 1 and 2 (the non-pivots)
    assert sec.col(0) == [Fraction(0), Fraction(1), Fraction(0)]
    assert sec.col(1) == [Fraction(0), Fraction(0), Fraction(1)]
    assert (proj * sec).is_identity()


small = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_dim=5, field=QQ):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    ents = draw(st.lists(small, min_size=r * c, max_size=r * c))
    return Matrix(field, r, c, [field.from_int(x) for x in ents])


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert kernel(m).dim + rref(m).rank == m.cols


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r = rref(m).matrix
    assert rref(r).matrix == r


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_agrees_with_column_reduction(m):
    assert rref(m).rank == rref(m.transpose()).rank


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_image_dim_is_rank(m):
    assert image(m).dim == rref(m).rank


@settings(max_examples=30, deadline=None)
@given(matrices(max_dim=4))
def test_quotient_splits(m):
    sub = image(m.transpose())  # row space of m as a subspace
    proj, sec = quotient(m.cols, sub)
    assert (proj * sec).is_identity()
    assert kernel(proj) == sub


@settings(max_examples=30, deadline=None)
@given(matrices(max_dim=4, field=GF(7)))
def test_prime_field_rank_nullity(m):
    assert kernel(m).dim + rref(m).rank == m.cols


def test_kernel_canonical_form_is_rref():
    m = mat([[1, 2, 3], [0, 0, 0]])
    k = kernel(m)
    r = rref(k.basis)
    assert r.matrix == k.basis


def test_gf_inverse():
    f = GF(5)
    m = Matrix.from_rows(f, [[1, 2], [3, 4]])
    inv = m.inverse()
    assert (m * inv).is_identity()


def test_subspace_membership_and_coordinates():
    s = Subspace.from_spanning_rows(QQ, 4, [
        [Fraction(1), Fraction(0), Fraction(2), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
    ])
    v = [Fraction(2), Fraction(3), Fraction(1), Fraction(0)]
    coords = s.coordinates_of(v)
    assert coords == [Fraction(2), Fraction(3)]
    assert s.contains_vector(v)
    assert not s.contains_vector([Fraction(0)] * 3 + [Fraction(1)])


def test_kron_matches_flat_index_convention():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    k = a.kron(b)
    # (i1,i2),(j1,j2) entry = a[i1,j1] b[i2,j2] with flat index i1*2+i2
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    assert k[i1 * 2 + i2, j1 * 2 + j2] == a[i1, j1] * b[i2, j2]


def test_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Matrix(QQ, 2, 2, [QQ.one] * 3)
    with pytest.raises(ValueError):
        mat([[1, 2]]) * mat([[1, 2]])
