from fractions import Fraction

import pytest

from gvbimod.algebras import (
    Algebra,
    AlgebraMorphism,
    dual_numbers,
    ground_field_algebra,
    identity_morphism,
    matrix_algebra,
    product,
    radical,
    square_zero_pair,
    truncated_polynomial,
    upper_triangular,
    validate,
)
from gvbimod.errors import UnsupportedCaseError
from gvbimod.fields import GF, QQ
from gvbimod.linalg import Matrix


def test_dual_numbers_structure():
    a = dual_numbers()
    assert a.dim == 2
    x = a.basis_vector(1)
    assert a.mult(x, x) == [QQ.zero, QQ.zero]
    assert a.mult(a.unit, x) == x
    assert validate(a) == []


def test_square_zero_pair_structure():
    a = square_zero_pair()
    assert a.dim == 3
    x, y = a.basis_vector(1), a.basis_vector(2)
    zero = [QQ.zero] * 3
    assert a.mult(x, y) == zero
    assert a.mult(y, x) == zero
    assert a.mult(x, x) == zero
    assert a.mult(y, y) == zero
    assert validate(a) == []


def test_generators():
    assert truncated_polynomial(2).table == dual_numbers().table
    assert matrix_algebra(2).dim == 4
    assert product(dual_numbers(), dual_numbers()).dim == 4
    with pytest.raises(ValueError):
        truncated_polynomial(0)


def test_validate_reports_corruption():
    # corrupting the unit row breaks unitality
    a = dual_numbers()
    table = [[list(cell) for cell in row] for row in a.table]
    table[0][1] = [QQ.one, QQ.zero]  # 1*x = 1
    bad = Algebra(QQ, 2, table, a.unit)
    report = validate(bad)
    assert report
    assert any("unit" in line for line in report)

    # asymmetric corruption of x*y in the three-dimensional algebra breaks
    # associativity: (x y) x != x (y x)
    b = square_zero_pair()
    table = [[list(cell) for cell in row] for row in b.table]
    table[1][2] = list(b.unit)  # x*y = 1, y*x still 0
    bad2 = Algebra(QQ, 3, table, b.unit)
    report2 = validate(bad2)
    assert any(line.startswith("associativity fails at (1,") for line in report2)


def test_radical_examples():
    j2 = radical(dual_numbers())
    assert j2.dim == 1
    assert j2.contains_vector([QQ.zero, QQ.one])

    j3 = radical(square_zero_pair())
    assert j3.dim == 2
    assert j3.contains_vector([QQ.zero, QQ.one, QQ.zero])
    assert j3.contains_vector([QQ.zero, QQ.zero, QQ.one])

    assert radical(matrix_algebra(2)).dim == 0


def test_radical_is_nilpotent_ideal():
    for a in (dual_numbers(), square_zero_pair(), truncated_polynomial(4),
              product(dual_numbers(), truncated_polynomial(3)),
              upper_triangular(2)):
        j = radical(a)
        # two-sided ideal: e_i . J and J . e_i stay inside J
        for r in range(j.dim):
            v = j.basis.row(r)
            for i in range(a.dim):
                assert j.contains_vector(a.mult(a.basis_vector(i), v))
                assert j.contains_vector(a.mult(v, a.basis_vector(i)))
        # nilpotent: J^k = 0 for some k <= dim
        span = j
        for _ in range(a.dim):
            if span.dim == 0:
                break
            rows = []
            for r in range(span.dim):
                for s in range(j.dim):
                    rows.append(a.mult(span.basis.row(r), j.basis.row(s)))
            from gvbimod.linalg import Subspace
            span = Subspace.from_spanning_rows(a.field, a.dim, rows)
        assert span.dim == 0


def test_radical_prime_field_commutative():
    a = dual_numbers(GF(5))
    j = radical(a)
    assert j.dim == 1
    b = truncated_polynomial(5, GF(5))  # q = p case
    assert radical(b).dim == 4
    with pytest.raises(UnsupportedCaseError):
        radical(upper_triangular(2, GF(5)))


def test_morphism_validation():
    a = dual_numbers()
    ident = identity_morphism(a)
    assert ident.validate() == []
    assert ident.is_automorphism()
    # x -> 2x is an automorphism of k[x]/x^2
    m = Matrix.from_rows(QQ, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]])
    phi = AlgebraMorphism(a, a, m)
    assert phi.validate() == []
    assert phi.is_automorphism()
    # x -> 1 is not multiplicative
    bad = AlgebraMorphism(a, a, Matrix.from_rows(QQ, [[1, 1], [0, 0]]))
    assert bad.validate()


def test_ground_field_algebra():
    k = ground_field_algebra()
    assert k.dim == 1
    assert validate(k) == []
