"""Finite-dimensional unital associative algebras given by structure
constants, plus constructors for the standard examples and Jacobson
radical computation.
"""

from __future__ import annotations

from .errors import UnsupportedCaseError, ValidationError
from .fields import QQ, Field
from .linalg import Matrix, Subspace, kernel


class Algebra:
    """Algebra over `field` with basis e_0..e_{dim-1}; the multiplication
    table stores e_i * e_j as a coefficient vector, and the unit is an
    explicit coefficient vector (not necessarily a basis element)."""

    def __init__(self, field: Field, dim: int, table, unit, label: str = ""):
        self.field = field
        self.dim = dim
        # table[i][j] = coefficient list of e_i * e_j
        self.table = [[list(table[i][j]) for j in range(dim)] for i in range(dim)]
        self.unit = list(unit)
        self.label = label
        if len(self.unit) != dim:
            raise ValueError("unit vector has wrong length")
        for i in range(dim):
            for j in range(dim):
                if len(self.table[i][j]) != dim:
                    raise ValueError("structure constant row has wrong length")
        self._key = None

    @property
    def key(self):
        if self._key is None:
            flat = tuple(x for row in self.table for cell in row for x in cell)
            self._key = (self.field.key, self.dim, flat, tuple(self.unit))
        return self._key

    def same_as(self, other: "Algebra"):
        return self is other or self.key == other.key

    def __repr__(self):
        return "Algebra(%s, dim %d%s)" % (
            self.field, self.dim, ", %s" % self.label if self.label else "")

    # -- multiplication ----------------------------------------------------

    def mult(self, u, v):
        """Product of two coefficient vectors."""
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        out = [zero] * self.dim
        for i, ui in enumerate(u):
            if ui == zero:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if vj == zero:
                    continue
                c = mul(ui, vj)
                cell = row[j]
                for k in range(self.dim):
                    if cell[k] != zero:
                        out[k] = add(out[k], mul(c, cell[k]))
        return out

    def left_mult_matrix(self, a):
        """Matrix of left multiplication by the coefficient vector a."""
        cols = [self.mult(a, _basis_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return _cols_to_matrix(self.field, self.dim, cols)

    def right_mult_matrix(self, a):
        cols = [self.mult(_basis_vec(self.field, self.dim, j), a)
                for j in range(self.dim)]
        return _cols_to_matrix(self.field, self.dim, cols)

    def basis_vector(self, i):
        return _basis_vec(self.field, self.dim, i)

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    def power(self, u, n):
        out = list(self.unit)
        sq = list(u)
        while n:
            if n & 1:
                out = self.mult(out, sq)
            n >>= 1
            if n:
                sq = self.mult(sq, sq)
        return out


def _basis_vec(field, dim, i):
    v = [field.zero] * dim
    v[i] = field.one
    return v


def _cols_to_matrix(field, dim, cols):
    ents = [field.zero] * (dim * len(cols))
    for j, c in enumerate(cols):
        for i in range(dim):
            ents[i * len(cols) + j] = c[i]
    return Matrix(field, dim, len(cols), ents)


def validate(a: Algebra):
    """All violated associativity/unitality constraints; empty means valid."""
    problems = []
    d = a.dim
    f = a.field
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = a.mult(a.table[i][j], _basis_vec(f, d, k))
                rhs = a.mult(_basis_vec(f, d, i), a.table[j][k])
                if lhs != rhs:
                    problems.append("associativity fails at (%d,%d,%d)" % (i, j, k))
    for i in range(d):
        e = _basis_vec(f, d, i)
        if a.mult(a.unit, e) != e:
            problems.append("left unit fails at %d" % i)
        if a.mult(e, a.unit) != e:
            problems.append("right unit fails at %d" % i)
    return problems


def _checked(a: Algebra) -> Algebra:
    problems = validate(a)
    if problems:
        raise ValidationError("; ".join(problems[:5]))
    return a


# -- constructors ------------------------------------------------------------

def ground_field_algebra(field: Field = QQ) -> Algebra:
    """The base field as a one-dimensional algebra."""
    return truncated_polynomial(1, field)


def dual_numbers(field: Field = QQ) -> Algebra:
    """k[x]/<x^2>, basis {1, x}."""
    a = truncated_polynomial(2, field)
    a.label = "dual_numbers"
    return a


def truncated_polynomial(n: int, field: Field = QQ) -> Algebra:
    """k[x]/<x^n>, basis {1, x, ..., x^(n-1)}."""
    if n < 1:
        raise ValueError("need n >= 1")
    f = field
    table = [[_basis_vec(f, n, i + j) if i + j < n else [f.zero] * n
              for j in range(n)] for i in range(n)]
    return _checked(Algebra(f, n, table, _basis_vec(f, n, 0),
                            "k[x]/x^%d" % n))


def square_zero_pair(field: Field = QQ) -> Algebra:
    """k[x,y]/<x^2, xy, y^2>: local, three-dimensional, radical square zero.
    Basis {1, x, y}."""
    f = field
    z3 = [f.zero] * 3
    e0 = _basis_vec(f, 3, 0)
    e1 = _basis_vec(f, 3, 1)
    e2 = _basis_vec(f, 3, 2)
    table = [
        [e0, e1, e2],
        [e1, z3, z3],
        [e2, z3, z3],
    ]
    return _checked(Algebra(f, 3, table, e0, "square_zero_pair"))


def matrix_algebra(n: int, field: Field = QQ) -> Algebra:
    """Full matrix algebra Mat_n(k); basis E_{ab} flattened row-major."""
    if n < 1:
        raise ValueError("need n >= 1")
    f = field
    d = n * n
    table = [[None] * d for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    # E_ab * E_ce = delta_{bc} E_ae
                    prod = [f.zero] * d
                    if b == c:
                        prod[a * n + e] = f.one
                    table[a * n + b][c * n + e] = prod
    unit = [f.zero] * d
    for a in range(n):
        unit[a * n + a] = f.one
    return _checked(Algebra(f, d, table, unit, "Mat_%d" % n))


def upper_triangular(n: int, field: Field = QQ) -> Algebra:
    """Upper triangular n x n matrices; a small noncommutative test algebra.
    Basis E_{ab} for a <= b, ordered lexicographically."""
    if n < 1:
        raise ValueError("need n >= 1")
    f = field
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    idx = {p: i for i, p in enumerate(pairs)}
    d = len(pairs)
    table = [[None] * d for _ in range(d)]
    for i, (a, b) in enumerate(pairs):
        for j, (c, e) in enumerate(pairs):
            prod = [f.zero] * d
            if b == c:
                prod[idx[(a, e)]] = f.one
            table[i][j] = prod
    unit = [f.zero] * d
    for a in range(n):
        unit[idx[(a, a)]] = f.one
    return _checked(Algebra(f, d, table, unit, "UT_%d" % n))


def product(a: Algebra, b: Algebra) -> Algebra:
    """Direct product algebra A x B."""
    if a.field is not b.field and a.field.key != b.field.key:
        raise ValueError("fields differ")
    f = a.field
    d = a.dim + b.dim
    z = [f.zero] * d

    def emb_a(v):
        return list(v) + [f.zero] * b.dim

    def emb_b(v):
        return [f.zero] * a.dim + list(v)

    table = [[list(z) for _ in range(d)] for _ in range(d)]
    for i in range(a.dim):
        for j in range(a.dim):
            table[i][j] = emb_a(a.table[i][j])
    for i in range(b.dim):
        for j in range(b.dim):
            table[a.dim + i][a.dim + j] = emb_b(b.table[i][j])
    unit = emb_a(a.unit)
    for k in range(b.dim):
        unit[a.dim + k] = b.unit[k]
    return _checked(Algebra(f, d, table, unit,
                            "(%s)x(%s)" % (a.label or "?", b.label or "?")))


# -- morphisms ----------------------------------------------------------------

class AlgebraMorphism:
    """Unital algebra homomorphism, stored as a dim_target x dim_source
    matrix acting on coefficient vectors."""

    def __init__(self, source: Algebra, target: Algebra, matrix: Matrix):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ValueError("morphism matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, v):
        return (self.matrix * Matrix.column(self.source.field, v)).col(0)

    def validate(self):
        problems = []
        s, t = self.source, self.target
        if self.apply(s.unit) != t.unit:
            problems.append("unit not preserved")
        for i in range(s.dim):
            for j in range(s.dim):
                lhs = self.apply(s.table[i][j])
                rhs = t.mult(self.apply(s.basis_vector(i)),
                             self.apply(s.basis_vector(j)))
                if lhs != rhs:
                    problems.append("multiplicativity fails at (%d,%d)" % (i, j))
        return problems

    def is_automorphism(self):
        return (self.source.same_as(self.target)
                and not self.validate()
                and self.matrix.inverse() is not None)

    def compose(self, inner: "AlgebraMorphism") -> "AlgebraMorphism":
        if not inner.target.same_as(self.source):
            raise ValueError("morphisms not composable")
        return AlgebraMorphism(inner.source, self.target, self.matrix * inner.matrix)


def identity_morphism(a: Algebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, Matrix.identity(a.field, a.dim))


def unit_inclusion(a: Algebra) -> AlgebraMorphism:
    """The structure map k -> A of the ground field."""
    k = ground_field_algebra(a.field)
    return AlgebraMorphism(k, a, Matrix.column(a.field, a.unit))


# -- radical -------------------------------------------------------------------

def radical(a: Algebra) -> Subspace:
    """Jacobson radical as a canonical subspace.

    Characteristic zero uses the trace form: J = {u : tr(L_u L_b) = 0 for
    all b}.  Over GF(p) only commutative algebras are supported, where the
    nilradical is the kernel of the (linear) iterated Frobenius u -> u^(p^m).
    """
    f = a.field
    d = a.dim
    if f.characteristic == 0:
        left = [a.left_mult_matrix(a.basis_vector(i)) for i in range(d)]
        rows = []
        for lb in left:
            # row_b[i] = tr(L_{e_i} L_b)
            row = []
            for li in left:
                prod = li * lb
                t = f.zero
                for k in range(d):
                    t = f.add(t, prod[k, k])
                row.append(t)
            rows.append(row)
        return kernel(Matrix.from_rows(f, rows))
    if not a.is_commutative():
        raise UnsupportedCaseError(
            "radical over GF(p) implemented for commutative algebras only")
    p = f.characteristic
    q = 1
    while q < d:
        q *= p
    cols = [a.power(a.basis_vector(i), q) for i in range(d)]
    frob = _cols_to_matrix(f, d, cols)
    return kernel(frob)
