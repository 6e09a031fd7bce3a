"""Exact dense linear algebra over a Field: RREF, kernels, images, solving,
and canonical quotients.

Conventions that the rest of the library leans on:

* matrices act on column vectors; entries are stored row-major;
* a Subspace is always represented by its reduced row-echelon basis, so
  subspace equality is literal data equality;
* quotient complements are the non-pivot standard coordinates of the
  subspace basis, which makes every quotient basis reproducible.

Everything here is pure and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("need %d entries, got %d" % (rows * cols, len(entries)))
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        zero, one = field.zero, field.one
        e = [zero] * (n * n)
        for i in range(n):
            e[i * n + i] = one
        return cls(field, n, n, e)

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != m:
                raise ValueError("ragged rows")
        flat = [x for r in rows for x in r]
        return cls(field, n, m, flat)

    @classmethod
    def column(cls, field, vec):
        vec = list(vec)
        return cls(field, len(vec), 1, vec)

    # -- accessors ---------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        c = self.cols
        return [self.entries[i * c + j] for i in range(self.rows)]

    def row_lists(self):
        c = self.cols
        e = self.entries
        return [e[i * c : (i + 1) * c] for i in range(self.rows)]

    @property
    def key(self):
        return (self.rows, self.cols, tuple(self.entries))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        ts = self.field.to_str
        body = "; ".join(" ".join(ts(x) for x in self.row(i)) for i in range(self.rows))
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)

    def is_zero(self):
        zero = self.field.zero
        return all(x == zero for x in self.entries)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        return self == Matrix.identity(self.field, self.rows)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._compat(other)
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._compat(other)
        sub = self.field.sub
        return Matrix(self.field, self.rows, self.cols,
                      [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self.entries])

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [mul(c, a) for a in self.entries])

    def _compat(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("cannot multiply %dx%d by %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [zero] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            orow = i * m
            for t in range(k):
                x = arow[t]
                if x == zero:
                    continue
                brow = t * m
                for j in range(m):
                    y = b[brow + j]
                    if y == zero:
                        continue
                    out[orow + j] = add(out[orow + j], mul(x, y))
        return Matrix(f, n, m, out)

    def transpose(self):
        n, m = self.rows, self.cols
        e = self.entries
        out = [None] * (n * m)
        for i in range(n):
            base = i * m
            for j in range(m):
                out[j * n + i] = e[base + j]
        return Matrix(self.field, m, n, out)

    def kron(self, other):
        """Kronecker product, matching the row-major flat index convention
        (i, j) -> i*dim_other + j used for tensor-product coordinates."""
        f = self.field
        mul, zero = f.mul, f.zero
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        out = [zero] * (r1 * r2 * c1 * c2)
        oc = c1 * c2
        for i1 in range(r1):
            for j1 in range(c1):
                x = self.entries[i1 * c1 + j1]
                if x == zero:
                    continue
                for i2 in range(r2):
                    base = (i1 * r2 + i2) * oc + j1 * c2
                    brow = i2 * c2
                    for j2 in range(c2):
                        y = other.entries[brow + j2]
                        if y != zero:
                            out[base + j2] = mul(x, y)
        return Matrix(f, r1 * r2, c1 * c2, out)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix.from_rows(self.field, rows) if rows else \
            Matrix(self.field, 0, self.cols + other.cols, [])

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    @classmethod
    def stack_rows(cls, field, cols, mats):
        total = 0
        ents = []
        for m in mats:
            if m.cols != cols:
                raise ValueError("column mismatch in stack")
            total += m.rows
            ents.extend(m.entries)
        return cls(field, total, cols, ents)

    def rank(self):
        return rref(self).rank

    def inverse(self):
        if self.rows != self.cols:
            return None
        sol = solve(self, Matrix.identity(self.field, self.rows))
        if sol is None:
            return None
        if not (self * sol).is_identity():
            return None
        return sol


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    pivots: tuple
    rank: int


def _rref_rows(field, rows, ncols):
    """In-place RREF of a list of row lists; returns pivot column list."""
    zero = field.zero
    div, sub, mul = field.div, field.sub, field.mul
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pivrow = rows[r]
        pv = pivrow[c]
        if pv != field.one:
            for j in range(c, ncols):
                pivrow[j] = div(pivrow[j], pv)
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == zero:
                continue
            row = rows[i]
            for j in range(c, ncols):
                row[j] = sub(row[j], mul(f, pivrow[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, r


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row-echelon form with pivot columns and rank."""
    rows = m.row_lists()
    pivots, rank = _rref_rows(m.field, rows, m.cols)
    return RrefResult(Matrix.from_rows(m.field, rows) if rows else m,
                      tuple(pivots), rank)


class Subspace:
    """A subspace of a coordinate space, stored as its canonical RREF basis
    (rows = basis vectors).  Equal subspaces have identical data."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        if basis.cols != ambient_dim:
            raise ValueError("basis ambient mismatch")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_spanning_rows(cls, field, ambient_dim, rows):
        rows = [list(r) for r in rows]
        pivots, rank = _rref_rows(field, rows, ambient_dim)
        return cls(ambient_dim, Matrix(field, rank, ambient_dim,
                                       [x for r in rows[:rank] for x in r]))

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(ambient_dim, Matrix(field, 0, ambient_dim, []))

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def dim(self):
        return self.basis.rows

    @property
    def field(self):
        return self.basis.field

    def pivots(self):
        """Pivot column of each RREF basis row."""
        zero = self.field.zero
        out = []
        for i in range(self.basis.rows):
            row = self.basis.row(i)
            for j, x in enumerate(row):
                if x != zero:
                    out.append(j)
                    break
        return out

    def reduce_vector(self, vec):
        """Residual of vec after subtracting its projection onto the basis
        rows (zero iff vec lies in the subspace)."""
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vec)
        piv = self.pivots()
        for i, p in enumerate(piv):
            c = v[p]
            if c == f.zero:
                continue
            row = self.basis.row(i)
            for j in range(p, self.ambient_dim):
                if row[j] != f.zero:
                    v[j] = sub(v[j], mul(c, row[j]))
        return v

    def contains_vector(self, vec):
        zero = self.field.zero
        return all(x == zero for x in self.reduce_vector(vec))

    def contains(self, other: "Subspace"):
        return all(self.contains_vector(other.basis.row(i))
                   for i in range(other.basis.rows))

    def coordinates_of(self, vec):
        """Coefficients of vec in the RREF basis, or None if not a member."""
        f = self.field
        piv = self.pivots()
        coeffs = [vec[p] for p in piv]
        res = self.reduce_vector(vec)
        if any(x != f.zero for x in res):
            return None
        return coeffs

    def inclusion_matrix(self):
        """ambient_dim x dim matrix whose columns are the basis vectors."""
        return self.basis.transpose()

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis.key))

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient_dim)


def kernel(m: Matrix) -> Subspace:
    """Right kernel {v : m v = 0} with canonical basis."""
    f = m.field
    rr = rref(m)
    piv = set(rr.pivots)
    free = [c for c in range(m.cols) if c not in piv]
    rows = []
    pv = list(rr.pivots)
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, p in enumerate(pv):
            v[p] = f.neg(rr.matrix[r, fc])
        rows.append(v)
    return Subspace.from_spanning_rows(f, m.cols, rows)


def image(m: Matrix) -> Subspace:
    """Column space of m, canonically presented."""
    t = m.transpose()
    return Subspace.from_spanning_rows(m.field, m.rows, t.row_lists())


def solve(m: Matrix, rhs: Matrix):
    """A particular solution X of m X = rhs (free variables set to zero),
    or None if the system is inconsistent."""
    if rhs.rows != m.rows:
        raise ValueError("rhs row mismatch")
    f = m.field
    aug = [m.row(i) + rhs.row(i) for i in range(m.rows)]
    pivots, rank = _rref_rows(f, aug, m.cols + rhs.cols)
    for p in pivots:
        if p >= m.cols:
            return None
    sol = [[f.zero] * rhs.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        row = aug[r]
        for j in range(rhs.cols):
            sol[p][j] = row[m.cols + j]
    return Matrix.from_rows(f, sol) if m.cols else Matrix(f, 0, rhs.cols, [])


def quotient(ambient_dim: int, sub: Subspace):
    """Projection and section presenting ambient/sub.

    The complement is spanned by the non-pivot standard coordinates of the
    subspace basis; projection o section is the identity on the quotient and
    kernel(projection) == sub.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace ambient mismatch")
    f = sub.field
    piv = sub.pivots()
    pivset = set(piv)
    comp = [c for c in range(ambient_dim) if c not in pivset]
    q = len(comp)
    proj = [[f.zero] * ambient_dim for _ in range(q)]
    for k, c in enumerate(comp):
        proj[k][c] = f.one
    for r, p in enumerate(piv):
        row = sub.basis.row(r)
        for k, c in enumerate(comp):
            if row[c] != f.zero:
                proj[k][p] = f.neg(row[c])
    section = [[f.zero] * q for _ in range(ambient_dim)]
    for k, c in enumerate(comp):
        section[c][k] = f.one
    proj_m = Matrix(f, q, ambient_dim, [x for r in proj for x in r])
    sec_m = Matrix(f, ambient_dim, q, [x for r in section for x in r])
    return proj_m, sec_m
