"""The two tensor products of bimodules over a middle algebra A:

* `tensor_over`    -- the coequalizer tensor: the quotient of X (x) Y by the
  balancing relations x.a (x) y - x (x) a.y;  right exact, unit A;
* `cotensor_over`  -- the equalizer tensor: the subspace of X (x) Y on which
  right and left A-(co)actions agree;  left exact, unit A*.

Flat coordinates on X (x) Y are row-major: basis vector (x_i, y_j) has index
i * dim(Y) + j.  Every structural map below depends on this convention being
fixed once, globally.

Both constructions are canonical (quotient complements and kernel bases come
from the RREF conventions in `linalg`), so rebuilding the same tensor yields
bit-identical data; composite maps built from independent constructions
therefore compose exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebras import Algebra
from .bimodules import Bimodule, BimoduleMap, dual_bimodule, regular_bimodule
from .errors import AlgebraMismatchError, InternalConsistencyError, ValidationError
from .linalg import Matrix, image, kernel, quotient, solve


def _middle_algebra(x: Bimodule, y: Bimodule) -> Algebra:
    if not x.right_algebra.same_as(y.left_algebra):
        raise AlgebraMismatchError("middle algebras do not match")
    return x.right_algebra


def vector_space_tensor(x: Bimodule, y: Bimodule) -> Bimodule:
    """X (x)_k Y with the outer actions (left on X, right on Y)."""
    f = x.field
    idx = Matrix.identity(f, x.dim)
    idy = Matrix.identity(f, y.dim)
    lam = [l.kron(idy) for l in x.left_actions]
    rho = [idx.kron(r) for r in y.right_actions]
    return Bimodule(x.left_algebra, y.right_algebra, x.dim * y.dim, lam, rho)


def balancing_map(x: Bimodule, y: Bimodule) -> Matrix:
    """The map X (x) A (x) Y -> X (x) Y,
    x (x) a (x) y  |->  x.a (x) y - x (x) a.y,
    whose image is divided out to form X (x)_A Y.
    Source flat index (i, k, j) -> (i*dimA + k)*dimY + j."""
    a = _middle_algebra(x, y)
    f = x.field
    dx, da, dy = x.dim, a.dim, y.dim
    rows, cols = dx * dy, dx * da * dy
    ents = [f.zero] * (rows * cols)
    add, sub = f.add, f.sub
    for k in range(da):
        rx = x.right_actions[k]
        ly = y.left_actions[k]
        for i in range(dx):
            for j in range(dy):
                c = (i * da + k) * dy + j
                for r in range(dx):
                    v = rx[r, i]
                    if v != f.zero:
                        t = r * dy + j
                        ents[t * cols + c] = add(ents[t * cols + c], v)
                for s in range(dy):
                    v = ly[s, j]
                    if v != f.zero:
                        t = i * dy + s
                        ents[t * cols + c] = sub(ents[t * cols + c], v)
    return Matrix(f, rows, cols, ents)


def cobalancing_map(x: Bimodule, y: Bimodule) -> Matrix:
    """The map X (x) Y -> X (x) A* (x) Y assembled from the dual-basis
    coactions m |-> sum_k m.a_k (x) a^k and m |-> sum_k a^k (x) a_k.m;
    its kernel is X (x)^A Y.
    Target flat index (i, k, j) -> (i*dimA + k)*dimY + j."""
    a = _middle_algebra(x, y)
    f = x.field
    dx, da, dy = x.dim, a.dim, y.dim
    rows, cols = dx * da * dy, dx * dy
    ents = [f.zero] * (rows * cols)
    add, sub = f.add, f.sub
    for k in range(da):
        rx = x.right_actions[k]
        ly = y.left_actions[k]
        for i0 in range(dx):
            for j0 in range(dy):
                c = i0 * dy + j0
                for i in range(dx):
                    v = rx[i, i0]
                    if v != f.zero:
                        t = (i * da + k) * dy + j0
                        ents[t * cols + c] = add(ents[t * cols + c], v)
                for j in range(dy):
                    v = ly[j, j0]
                    if v != f.zero:
                        t = (i0 * da + k) * dy + j
                        ents[t * cols + c] = sub(ents[t * cols + c], v)
    return Matrix(f, rows, cols, ents)


@dataclass
class TensorPresentation:
    """A tensor-product bimodule together with the structural map relating
    it to the plain vector-space tensor: the surjection pi for the
    coequalizer kind, the inclusion iota for the equalizer kind."""

    result: Bimodule
    kind: str                      # "coequalizer" | "equalizer"
    structural_map: Matrix
    factor_dims: tuple
    section: Optional[Matrix] = None   # coequalizer only: pi o section = id

    def express(self, mat: Matrix) -> Matrix:
        """Coordinates in the subspace basis of columns living inside the
        equalizer image (error if any column is outside)."""
        assert self.kind == "equalizer"
        sol = solve(self.structural_map, mat)
        if sol is None or self.structural_map * sol != mat:
            raise InternalConsistencyError("columns do not lie in the equalizer")
        return sol


_tensor_cache: dict = {}
_cotensor_cache: dict = {}


def tensor_over(x: Bimodule, y: Bimodule) -> TensorPresentation:
    """X (x)_A Y as the canonical quotient of X (x) Y by the image of the
    balancing map; the outer actions descend (checked)."""
    ck = (x.key, y.key)
    hit = _tensor_cache.get(ck)
    if hit is not None:
        return hit
    a = _middle_algebra(x, y)
    f = x.field
    dx, dy = x.dim, y.dim
    rel = image(balancing_map(x, y))
    proj, sec = quotient(dx * dy, rel)
    q = proj.rows
    idx = Matrix.identity(f, dx)
    idy = Matrix.identity(f, dy)
    relcols = rel.basis.transpose()
    lam, rho = [], []
    for l in x.left_actions:
        big = l.kron(idy)
        if not (proj * (big * relcols)).is_zero():
            raise InternalConsistencyError("left action does not descend")
        lam.append(proj * big * sec)
    for r in y.right_actions:
        big = idx.kron(r)
        if not (proj * (big * relcols)).is_zero():
            raise InternalConsistencyError("right action does not descend")
        rho.append(proj * big * sec)
    result = Bimodule(x.left_algebra, y.right_algebra, q, lam, rho)
    bad = result.check()
    if bad:
        raise ValidationError("descended tensor structure invalid: " + bad[0])
    pres = TensorPresentation(result, "coequalizer", proj, (dx, dy), sec)
    _tensor_cache[ck] = pres
    return pres


def cotensor_over(x: Bimodule, y: Bimodule) -> TensorPresentation:
    """X (x)^A Y as the kernel of the cobalancing map, with the outer
    actions restricted (checked)."""
    ck = (x.key, y.key)
    hit = _cotensor_cache.get(ck)
    if hit is not None:
        return hit
    f = x.field
    dx, dy = x.dim, y.dim
    sub = kernel(cobalancing_map(x, y))
    inc = sub.basis.transpose()
    idx = Matrix.identity(f, dx)
    idy = Matrix.identity(f, dy)
    lam, rho = [], []
    for l in x.left_actions:
        restricted = solve(inc, l.kron(idy) * inc)
        if restricted is None:
            raise InternalConsistencyError("left action does not restrict")
        lam.append(restricted)
    for r in y.right_actions:
        restricted = solve(inc, idx.kron(r) * inc)
        if restricted is None:
            raise InternalConsistencyError("right action does not restrict")
        rho.append(restricted)
    result = Bimodule(x.left_algebra, y.right_algebra, sub.dim, lam, rho)
    bad = result.check()
    if bad:
        raise ValidationError("restricted cotensor structure invalid: " + bad[0])
    pres = TensorPresentation(result, "equalizer", inc, (dx, dy))
    _cotensor_cache[ck] = pres
    return pres


def tensor_of_maps(f: BimoduleMap, g: BimoduleMap, kind: str,
                   src: TensorPresentation = None,
                   tgt: TensorPresentation = None) -> BimoduleMap:
    """The induced map on tensor products: descend through the quotients for
    kind="over", restrict to the equalizers for kind="cotensor"."""
    _middle_algebra(f.source, g.source)
    _middle_algebra(f.target, g.target)
    kr = f.matrix.kron(g.matrix)
    if kind == "over":
        src = src or tensor_over(f.source, g.source)
        tgt = tgt or tensor_over(f.target, g.target)
        mat = tgt.structural_map * kr * src.section
        if mat * src.structural_map != tgt.structural_map * kr:
            raise InternalConsistencyError("map does not descend to the quotient")
    elif kind == "cotensor":
        src = src or cotensor_over(f.source, g.source)
        tgt = tgt or cotensor_over(f.target, g.target)
        mat = tgt.express(kr * src.structural_map)
    else:
        raise ValueError("kind must be 'over' or 'cotensor'")
    return BimoduleMap(src.result, tgt.result, mat)


_assoc_cache: dict = {}


def associator(x: Bimodule, y: Bimodule, z: Bimodule, kind: str) -> BimoduleMap:
    """Canonical isomorphism (x . y) . z -> x . (y . z) for either tensor,
    induced on representatives by the (trivial, in flat row-major
    coordinates) vector-space associator."""
    ck = (kind, x.key, y.key, z.key)
    hit = _assoc_cache.get(ck)
    if hit is not None:
        return hit
    f = x.field
    idx = Matrix.identity(f, x.dim)
    idz = Matrix.identity(f, z.dim)
    if kind == "over":
        xy = tensor_over(x, y)
        xy_z = tensor_over(xy.result, z)
        yz = tensor_over(y, z)
        x_yz = tensor_over(x, yz.result)
        mat = x_yz.structural_map * idx.kron(yz.structural_map) \
            * xy.section.kron(idz) * xy_z.section
        lhs = mat * xy_z.structural_map * xy.structural_map.kron(idz)
        rhs = x_yz.structural_map * idx.kron(yz.structural_map)
        if lhs != rhs:
            raise InternalConsistencyError("tensor associator square broke")
        out = BimoduleMap(xy_z.result, x_yz.result, mat)
    elif kind == "cotensor":
        xy = cotensor_over(x, y)
        xy_z = cotensor_over(xy.result, z)
        yz = cotensor_over(y, z)
        x_yz = cotensor_over(x, yz.result)
        left_inc = xy.structural_map.kron(idz) * xy_z.structural_map
        right_inc = idx.kron(yz.structural_map) * x_yz.structural_map
        sol = solve(right_inc, left_inc)
        if sol is None or right_inc * sol != left_inc:
            raise InternalConsistencyError("cotensor associator has no solution")
        out = BimoduleMap(xy_z.result, x_yz.result, sol)
    else:
        raise ValueError("kind must be 'over' or 'cotensor'")
    if not out.is_iso():
        raise InternalConsistencyError("associator is not invertible")
    _assoc_cache[ck] = out
    return out


_unitor_cache: dict = {}


def unitors(x: Bimodule, kind: str):
    """The pair (left, right) of unit isomorphisms: for kind="over" the maps
    A (x)_A x -> x and x (x)_A B -> x; for kind="cotensor" the counit maps
    A* (x)^A x -> x and x (x)^A B* -> x built from the stored basis."""
    ck = (kind, x.key)
    hit = _unitor_cache.get(ck)
    if hit is not None:
        return hit
    f = x.field
    if kind == "over":
        ua = regular_bimodule(x.left_algebra)
        ub = regular_bimodule(x.right_algebra)
        lp = tensor_over(ua, x)
        act = Matrix.zeros(f, x.dim, ua.dim * x.dim)
        for k in range(ua.dim):
            lk = x.left_actions[k]
            for j in range(x.dim):
                for r in range(x.dim):
                    act.entries[r * act.cols + k * x.dim + j] = lk[r, j]
        lmat = act * lp.section
        if lmat * lp.structural_map != act:
            raise InternalConsistencyError("left unitor does not descend")
        left = BimoduleMap(lp.result, x, lmat)
        rp = tensor_over(x, ub)
        act = Matrix.zeros(f, x.dim, x.dim * ub.dim)
        for k in range(ub.dim):
            rk = x.right_actions[k]
            for j in range(x.dim):
                for r in range(x.dim):
                    act.entries[r * act.cols + j * ub.dim + k] = rk[r, j]
        rmat = act * rp.section
        if rmat * rp.structural_map != act:
            raise InternalConsistencyError("right unitor does not descend")
        right = BimoduleMap(rp.result, x, rmat)
    elif kind == "cotensor":
        ka = dual_bimodule(regular_bimodule(x.left_algebra))
        kb = dual_bimodule(regular_bimodule(x.right_algebra))
        unit_a = x.left_algebra.unit
        unit_b = x.right_algebra.unit
        lp = cotensor_over(ka, x)
        # counit on the left factor: beta (x) v  |->  beta(1) v
        ev = Matrix.zeros(f, x.dim, ka.dim * x.dim)
        for k in range(ka.dim):
            c = unit_a[k]
            if c != f.zero:
                for j in range(x.dim):
                    ev.entries[j * ev.cols + k * x.dim + j] = c
        left = BimoduleMap(lp.result, x, ev * lp.structural_map)
        rp = cotensor_over(x, kb)
        ev = Matrix.zeros(f, x.dim, x.dim * kb.dim)
        for k in range(kb.dim):
            c = unit_b[k]
            if c != f.zero:
                for j in range(x.dim):
                    ev.entries[j * ev.cols + j * kb.dim + k] = c
        right = BimoduleMap(rp.result, x, ev * rp.structural_map)
    else:
        raise ValueError("kind must be 'over' or 'cotensor'")
    if not left.is_iso() or not right.is_iso():
        raise InternalConsistencyError("unitor is not invertible")
    _unitor_cache[ck] = (left, right)
    return left, right


# -- exactness ------------------------------------------------------------------

@dataclass
class ShortExactSequence:
    """0 -> f.source -> f.target = g.source -> g.target -> 0."""

    f: BimoduleMap
    g: BimoduleMap

    def validate(self):
        if not self.f.target.same_as(self.g.source):
            raise ValidationError("maps of the sequence do not compose")
        if self.f.kernel().dim != 0:
            raise ValidationError("first map is not injective")
        if self.g.image().dim != self.g.target.dim:
            raise ValidationError("second map is not surjective")
        if self.f.image() != self.g.kernel():
            raise ValidationError("sequence is not exact in the middle")
        return self


@dataclass
class ExactnessReport:
    kind: str
    side: str
    injective_preserved: bool
    middle_exact: bool
    surjective_preserved: bool

    @property
    def left_exact(self):
        return self.injective_preserved and self.middle_exact

    @property
    def right_exact(self):
        return self.surjective_preserved and self.middle_exact


def check_exactness(kind: str, ses: ShortExactSequence, w: Bimodule,
                    side: str = "left") -> ExactnessReport:
    """Tensor the verified short exact sequence with w on the given side and
    report which exactness properties survive on this instance."""
    from .bimodules import identity_map
    ses.validate()
    idw = identity_map(w)
    if side == "left":
        tf = tensor_of_maps(idw, ses.f, "over" if kind == "over" else "cotensor")
        tg = tensor_of_maps(idw, ses.g, "over" if kind == "over" else "cotensor")
    elif side == "right":
        tf = tensor_of_maps(ses.f, idw, "over" if kind == "over" else "cotensor")
        tg = tensor_of_maps(ses.g, idw, "over" if kind == "over" else "cotensor")
    else:
        raise ValueError("side must be 'left' or 'right'")
    return ExactnessReport(
        kind=kind,
        side=side,
        injective_preserved=tf.kernel().dim == 0,
        middle_exact=tf.image() == tg.kernel(),
        surjective_preserved=tg.image().dim == tg.target.dim,
    )
