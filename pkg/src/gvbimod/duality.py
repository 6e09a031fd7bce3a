"""Duality structure on bimodule categories: the linear-dual functor G, the
dualizing object K = A*, the representing bijection varpi, the second tensor
product, and internal Homs/coHoms in all four variants.

Conventions.  For an (A,B)-bimodule M the dual G(M) = M* is a (B,A)-bimodule
with (b.f.a)(m) = f(a.m.b); in matrices the left action of G(M) is the
transpose of M's right action and vice versa, so G is an involution on the
nose and the double-dual identification is the identity matrix.

Internal Homs are returned as explicit subspaces of map space (rows of
`basis` are maps flattened row-major), because the distributor formulas act
on representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebras import Algebra
from .bimodules import (
    Bimodule,
    BimoduleMap,
    dual_bimodule,
    hom_space,
    left_hom_space,
    identity_map,
    regular_bimodule,
    right_hom_space,
)
from .errors import AlgebraMismatchError, InternalConsistencyError
from .linalg import Matrix, Subspace, solve
from .tensor import TensorPresentation, cotensor_over, tensor_over

dual = dual_bimodule


def double_dual_map(m: Bimodule) -> BimoduleMap:
    """The canonical isomorphism M -> G(G(M)); the identity matrix in our
    conventions (asserted)."""
    dd = dual(dual(m))
    if not dd.same_as(m):
        raise InternalConsistencyError("double dual is not the identity on data")
    return BimoduleMap(m, dd, Matrix.identity(m.field, m.dim), check=False)


class GVStructure:
    """A choice of dualizing object for the bimodule category of an algebra.
    The default K = A* gives the linear-dual duality functor; twisted
    dualizing objects K (x)_A A_psi are accepted, with the duality functor
    realized as iHom-right(-, K)."""

    def __init__(self, algebra: Algebra, dualizing_object: Bimodule = None):
        self.algebra = algebra
        self.default = dualizing_object is None
        if dualizing_object is None:
            dualizing_object = dual(regular_bimodule(algebra))
        if not (dualizing_object.left_algebra.same_as(algebra)
                and dualizing_object.right_algebra.same_as(algebra)):
            raise AlgebraMismatchError("dualizing object must be an A-bimodule")
        self.dualizing_object = dualizing_object
        self._dual_cache: dict = {}

    def dual_of(self, m: Bimodule) -> Bimodule:
        hit = self._dual_cache.get(m.key)
        if hit is not None:
            return hit
        out = dual(m) if self.default else \
            internal_hom_right(m, self.dualizing_object).object
        self._dual_cache[m.key] = out
        return out


# -- internal Homs ---------------------------------------------------------------

@dataclass
class InternalHomResult:
    object: Bimodule
    variant: str                 # iHom-right | iHom-left | icoHom-right | icoHom-left
    first: Bimodule
    second: Bimodule
    basis: Subspace = None       # iHom variants: subspace of flattened map space
    presentation: TensorPresentation = None   # icoHom variants: the quotient

    def maps(self):
        """Unflattened basis of the map space (iHom variants)."""
        n, x = self.first, self.second
        return [Matrix(x.field, x.dim, n.dim, self.basis.basis.row(r))
                for r in range(self.basis.dim)]

    def adjunction_witness(self, w: Bimodule) -> "AdjunctionWitness":
        return _adjunction_witness(self, w)


def internal_hom_right(n: Bimodule, x: Bimodule) -> InternalHomResult:
    """iHom-right(N, X): the k-linear maps N -> X intertwining the right
    actions, an (C,B)-bimodule via (c.f.b)(v) = c.f(b.v) for N an (B,A)-
    and X a (C,A)-bimodule."""
    if not n.right_algebra.same_as(x.right_algebra):
        raise AlgebraMismatchError("right algebras differ")
    space = right_hom_space(n, x)
    obj = _hom_subspace_bimodule(
        space, n, x,
        left_algebra=x.left_algebra, right_algebra=n.left_algebra,
        left_mats=x.left_actions, left_side="post",
        right_mats=n.left_actions, right_side="pre")
    return InternalHomResult(obj, "iHom-right", n, x, basis=space)


def internal_hom_left(n: Bimodule, x: Bimodule) -> InternalHomResult:
    """iHom-left(N, X): maps N -> X intertwining the left actions, a
    (B,C)-bimodule via (b.f.c)(v) = f(v.b).c for N an (A,B)- and X an
    (A,C)-bimodule."""
    if not n.left_algebra.same_as(x.left_algebra):
        raise AlgebraMismatchError("left algebras differ")
    space = left_hom_space(n, x)
    obj = _hom_subspace_bimodule(
        space, n, x,
        left_algebra=n.right_algebra, right_algebra=x.right_algebra,
        left_mats=n.right_actions, left_side="pre",
        right_mats=x.right_actions, right_side="post")
    return InternalHomResult(obj, "iHom-left", n, x, basis=space)


def _hom_subspace_bimodule(space, n, x, left_algebra, right_algebra,
                           left_mats, left_side, right_mats, right_side):
    f = x.field
    idn = Matrix.identity(f, n.dim)
    idx = Matrix.identity(f, x.dim)
    inc = space.basis.transpose()

    def flat_action(mat, side):
        # vec(M F) = (M kron I) vec F;  vec(F M) = (I kron M^T) vec F
        return mat.kron(idn) if side == "post" else idx.kron(mat.transpose())

    def restrict(mats, side):
        out = []
        for mat in mats:
            big = flat_action(mat, side)
            sol = solve(inc, big * inc)
            if sol is None:
                raise InternalConsistencyError("hom subspace not action-stable")
            out.append(sol)
        return out

    lam = restrict(left_mats, left_side)
    rho = restrict(right_mats, right_side)
    obj = Bimodule(left_algebra, right_algebra, space.dim, lam, rho)
    bad = obj.check()
    if bad:
        raise InternalConsistencyError("hom bimodule structure invalid: " + bad[0])
    return obj


def internal_cohom_right(z: Bimodule, x: Bimodule) -> InternalHomResult:
    """icoHom-right(Z, X) = X (x)_A Z*, the left adjoint companion of the
    equalizer tensor: Hom(X, W cotensor Z) = Hom(icoHom-right(Z,X), W)."""
    pres = tensor_over(x, dual(z))
    return InternalHomResult(pres.result, "icoHom-right", z, x, presentation=pres)


def internal_cohom_left(z: Bimodule, x: Bimodule) -> InternalHomResult:
    """icoHom-left(Z, X) = Z* (x)_A X, with
    Hom(X, Z cotensor W) = Hom(icoHom-left(Z,X), W)."""
    pres = tensor_over(dual(z), x)
    return InternalHomResult(pres.result, "icoHom-left", z, x, presentation=pres)


# -- adjunction witnesses -----------------------------------------------------------

@dataclass
class AdjunctionWitness:
    """Explicit mutually inverse matrices between two Hom spaces, in their
    canonical bases."""

    hom_tensor_side: Subspace
    hom_inner_side: Subspace
    forward: Matrix            # coords on the tensor side -> inner side
    backward: Matrix

    def check(self):
        return (self.backward * self.forward).is_identity() and \
            (self.forward * self.backward).is_identity()


def _hom_maps(space, src_dim, tgt_dim, f):
    return [Matrix(f, tgt_dim, src_dim, space.basis.row(r))
            for r in range(space.dim)]


def _express_map_in(space, mat):
    coords = space.coordinates_of(list(mat.entries))
    if coords is None:
        raise InternalConsistencyError("map falls outside the expected hom space")
    return coords


def _adjunction_witness(res: InternalHomResult, w: Bimodule) -> AdjunctionWitness:
    f = res.object.field
    n, x, h = res.first, res.second, res.object
    if res.variant == "iHom-right":
        # Hom(W (x)_B N, X)  <->  Hom(W, H)
        pres = tensor_over(w, n)
        homt = hom_space(pres.result, x)
        homi = hom_space(w, h)
        fwd_cols = []
        for hm in _hom_maps(homt, pres.result.dim, x.dim, f):
            full = hm * pres.structural_map            # X (x) flat(W (x) N)
            g = Matrix.zeros(f, h.dim, w.dim)
            for wi in range(w.dim):
                fm = Matrix(f, x.dim, n.dim,
                            [full[s, wi * n.dim + j]
                             for s in range(x.dim) for j in range(n.dim)])
                coords = _express_map_in(res.basis, fm)
                for r in range(h.dim):
                    g.entries[r * w.dim + wi] = coords[r]
            fwd_cols.append(_express_map_in(homi, g))
        bwd_cols = []
        basis_maps = res.maps()
        for gm in _hom_maps(homi, w.dim, h.dim, f):
            full = Matrix.zeros(f, x.dim, w.dim * n.dim)
            for wi in range(w.dim):
                fm = Matrix.zeros(f, x.dim, n.dim)
                for r in range(h.dim):
                    c = gm[r, wi]
                    if c != f.zero:
                        fm = fm + basis_maps[r].scale(c)
                for s in range(x.dim):
                    for j in range(n.dim):
                        full.entries[s * full.cols + wi * n.dim + j] = fm[s, j]
            hm = full * pres.section
            if hm * pres.structural_map != full:
                raise InternalConsistencyError("adjoint map does not descend")
            bwd_cols.append(_express_map_in(homt, hm))
    elif res.variant == "iHom-left":
        # Hom(N (x)_B W, X)  <->  Hom(W, H)
        pres = tensor_over(n, w)
        homt = hom_space(pres.result, x)
        homi = hom_space(w, h)
        fwd_cols = []
        for hm in _hom_maps(homt, pres.result.dim, x.dim, f):
            full = hm * pres.structural_map
            g = Matrix.zeros(f, h.dim, w.dim)
            for wi in range(w.dim):
                fm = Matrix(f, x.dim, n.dim,
                            [full[s, j * w.dim + wi]
                             for s in range(x.dim) for j in range(n.dim)])
                coords = _express_map_in(res.basis, fm)
                for r in range(h.dim):
                    g.entries[r * w.dim + wi] = coords[r]
            fwd_cols.append(_express_map_in(homi, g))
        bwd_cols = []
        basis_maps = res.maps()
        for gm in _hom_maps(homi, w.dim, h.dim, f):
            full = Matrix.zeros(f, x.dim, n.dim * w.dim)
            for wi in range(w.dim):
                fm = Matrix.zeros(f, x.dim, n.dim)
                for r in range(h.dim):
                    c = gm[r, wi]
                    if c != f.zero:
                        fm = fm + basis_maps[r].scale(c)
                for s in range(x.dim):
                    for j in range(n.dim):
                        full.entries[s * full.cols + j * w.dim + wi] = fm[s, j]
            hm = full * pres.section
            if hm * pres.structural_map != full:
                raise InternalConsistencyError("adjoint map does not descend")
            bwd_cols.append(_express_map_in(homt, hm))
    elif res.variant in ("icoHom-right", "icoHom-left"):
        return _cohom_adjunction_witness(res, w)
    else:
        raise ValueError("unknown variant %r" % res.variant)
    fwd = Matrix.from_rows(f, fwd_cols).transpose() if fwd_cols else \
        Matrix(f, homi.dim, 0, [])
    bwd = Matrix.from_rows(f, bwd_cols).transpose() if bwd_cols else \
        Matrix(f, homt.dim, 0, [])
    wit = AdjunctionWitness(homt, homi, fwd, bwd)
    if not wit.check():
        raise InternalConsistencyError("adjunction bijection failed to invert")
    return wit


def _cohom_adjunction_witness(res: InternalHomResult, w: Bimodule) -> AdjunctionWitness:
    """Hom(X, W cotensor Z) <-> Hom(Q, W) for Q = icoHom-right(Z, X) = X (x) Z*
    (and mirrored for icoHom-left)."""
    f = res.object.field
    z, x = res.first, res.second
    right = res.variant == "icoHom-right"
    cpres = cotensor_over(w, z) if right else cotensor_over(z, w)
    homt = hom_space(x, cpres.result)
    homi = hom_space(res.object, w)
    q = res.presentation
    dz, dw, dx = z.dim, w.dim, x.dim
    fwd_cols = []
    for hm in _hom_maps(homt, x.dim, cpres.result.dim, f):
        flat = cpres.structural_map * hm       # (W Z or Z W flat) x X
        gfull = Matrix.zeros(f, dw, q.structural_map.cols)
        for i in range(dx):
            for k in range(dz):
                if right:
                    col = i * dz + k
                    for r in range(dw):
                        gfull.entries[r * gfull.cols + col] = flat[r * dz + k, i]
                else:
                    col = k * dx + i
                    for r in range(dw):
                        gfull.entries[r * gfull.cols + col] = flat[k * dw + r, i]
        g = gfull * q.section
        if g * q.structural_map != gfull:
            raise InternalConsistencyError("cohom adjoint does not descend")
        fwd_cols.append(_express_map_in(homi, g))
    fwd = Matrix.from_rows(f, fwd_cols).transpose() if fwd_cols else \
        Matrix(f, homi.dim, 0, [])
    if homt.dim != homi.dim:
        raise InternalConsistencyError("cohom adjunction dimensions differ")
    bwd = fwd.inverse()
    if bwd is None:
        raise InternalConsistencyError("cohom adjunction is not bijective")
    wit = AdjunctionWitness(homt, homi, fwd, bwd)
    return wit


# -- varpi and the second tensor product ----------------------------------------------

@dataclass
class VarpiResult:
    """The bijection Hom(X (x)_A Y, K) -> Hom(X, G(Y)) in canonical bases."""

    x: Bimodule
    y: Bimodule
    dual_object: Bimodule
    hom_tensor_side: Subspace
    hom_dual_side: Subspace
    forward: Matrix
    backward: Matrix
    presentation: TensorPresentation

    def check(self):
        return (self.backward * self.forward).is_identity() and \
            (self.forward * self.backward).is_identity()


def _ihom_to_dual_identification(y: Bimodule, gv: GVStructure):
    """Canonical iso iHom-right(y, A*) -> y*, f |-> f(-)(1), as a matrix on
    the iHom basis (default dualizing object only)."""
    res = internal_hom_right(y, gv.dualizing_object)
    f = y.field
    unit = gv.algebra.unit
    da = gv.algebra.dim
    cols = []
    for fm in res.maps():
        beta = [f.zero] * y.dim
        for j in range(y.dim):
            acc = f.zero
            for k in range(da):
                if unit[k] != f.zero:
                    acc = f.add(acc, f.mul(unit[k], fm[k, j]))
            beta[j] = acc
        cols.append(beta)
    ident = Matrix.from_rows(f, cols).transpose() if cols else Matrix(f, y.dim, 0, [])
    return res, ident


def varpi(x: Bimodule, y: Bimodule, gv: GVStructure = None) -> VarpiResult:
    """Explicit invertible map between the intertwiner spaces
    Hom(X (x)_A Y, K) and Hom(X, G(Y)), both computed independently."""
    if gv is None:
        gv = GVStructure(x.left_algebra)
    k_obj = gv.dualizing_object
    gy = gv.dual_of(y)
    f = x.field
    pres = tensor_over(x, y)
    homt = hom_space(pres.result, k_obj)
    homd = hom_space(x, gy)
    if gv.default:
        ihom, ident = _ihom_to_dual_identification(y, gv)
    else:
        ihom, ident = internal_hom_right(y, k_obj), Matrix.identity(f, gy.dim)
    fwd_cols = []
    for hm in _hom_maps(homt, pres.result.dim, k_obj.dim, f):
        full = hm * pres.structural_map
        g = Matrix.zeros(f, gy.dim, x.dim)
        for i in range(x.dim):
            fm = Matrix(f, k_obj.dim, y.dim,
                        [full[s, i * y.dim + j]
                         for s in range(k_obj.dim) for j in range(y.dim)])
            col = ident * Matrix.column(f, _express_map_in(ihom.basis, fm))
            for r in range(gy.dim):
                g.entries[r * x.dim + i] = col[r, 0]
        fwd_cols.append(_express_map_in(homd, g))
    fwd = Matrix.from_rows(f, fwd_cols).transpose() if fwd_cols else \
        Matrix(f, homd.dim, 0, [])
    if homt.dim != homd.dim:
        raise InternalConsistencyError("varpi sides have different dimensions")
    bwd = fwd.inverse()
    if bwd is None:
        raise InternalConsistencyError("varpi is not a bijection")
    return VarpiResult(x, y, gy, homt, homd, fwd, bwd, pres)


def varpi_apply(vr: VarpiResult, h: BimoduleMap) -> BimoduleMap:
    """Transport a concrete morphism X (x)_A Y -> K through varpi."""
    f = h.matrix.field
    coords = _express_map_in(vr.hom_tensor_side, h.matrix)
    out = vr.forward * Matrix.column(f, coords)
    ents = [f.zero] * vr.hom_dual_side.ambient_dim
    for r in range(vr.hom_dual_side.dim):
        c = out[r, 0]
        if c != f.zero:
            row = vr.hom_dual_side.basis.row(r)
            for t in range(len(ents)):
                ents[t] = f.add(ents[t], f.mul(c, row[t]))
    return BimoduleMap(vr.x, vr.dual_object,
                       Matrix(f, vr.dual_object.dim, vr.x.dim, ents))


def second_tensor(x: Bimodule, y: Bimodule, gv: GVStructure = None) -> Bimodule:
    """x (x)-bar y := G^{-1}(G(y) (x)_A G(x)), computed through duals; agrees
    with cotensor_over(x, y) up to the canonical isomorphism
    (see second_tensor_iso)."""
    if gv is None or gv.default:
        return dual(tensor_over(dual(y), dual(x)).result)
    gyx = tensor_over(gv.dual_of(y), gv.dual_of(x)).result
    return gv.dual_of(gyx)


def second_tensor_iso(x: Bimodule, y: Bimodule) -> BimoduleMap:
    """The canonical isomorphism X (x)^A Y -> (Y* (x)_A X*)* induced by the
    swap-and-evaluate pairing < x_i (x) y_j , b (x) a > = a(x_i) b(y_j)."""
    f = x.field
    w = cotensor_over(x, y)
    q = tensor_over(dual(y), dual(x))
    dx, dy = x.dim, y.dim
    # pairing in flat coordinates: PM[(j*dx+i), (i*dy+j)] = 1
    pm = Matrix.zeros(f, dy * dx, dx * dy)
    for i in range(dx):
        for j in range(dy):
            pm.entries[(j * dx + i) * (dx * dy) + (i * dy + j)] = f.one
    direct = pm * w.structural_map               # (dy dx) x dim W
    mat = q.section.transpose() * direct         # q x dim W
    if q.structural_map.transpose() * mat != direct:
        raise InternalConsistencyError("pairing not balanced against the quotient")
    out = BimoduleMap(w.result, dual(q.result), mat)
    if not out.is_iso():
        raise InternalConsistencyError("second-tensor comparison is not invertible")
    return out


# -- evaluation and internal multiplication ----------------------------------------

def evaluation(x: Bimodule, y: Bimodule, side: str = "right") -> BimoduleMap:
    """The counit of the internal-Hom adjunction: for side="right" the map
    iHom-right(x,y) (x)_A x -> y, f (x) v |-> f(v); mirrored on the left."""
    f = x.field
    if side == "right":
        res = internal_hom_right(x, y)
        h = res.object
        pres = tensor_over(h, x)
        full = Matrix.zeros(f, y.dim, h.dim * x.dim)
        for r, fm in enumerate(res.maps()):
            for j in range(x.dim):
                for s in range(y.dim):
                    full.entries[s * full.cols + r * x.dim + j] = fm[s, j]
    elif side == "left":
        res = internal_hom_left(x, y)
        h = res.object
        pres = tensor_over(x, h)
        full = Matrix.zeros(f, y.dim, x.dim * h.dim)
        for r, fm in enumerate(res.maps()):
            for j in range(x.dim):
                for s in range(y.dim):
                    full.entries[s * full.cols + j * h.dim + r] = fm[s, j]
    else:
        raise ValueError("side must be 'left' or 'right'")
    mat = full * pres.section
    if mat * pres.structural_map != full:
        raise InternalConsistencyError("evaluation does not descend")
    return BimoduleMap(pres.result, y, mat)


def internal_multiplication(x: Bimodule, y: Bimodule, z: Bimodule,
                            side: str = "right") -> BimoduleMap:
    """Composition of internal Homs: for side="right" the map
    iHom-right(y,z) (x)_A iHom-right(x,y) -> iHom-right(x,z)."""
    f = x.field
    if side == "right":
        h1 = internal_hom_right(y, z)
        h2 = internal_hom_right(x, y)
        h3 = internal_hom_right(x, z)
        pres = tensor_over(h1.object, h2.object)
        full = Matrix.zeros(f, h3.object.dim, h1.object.dim * h2.object.dim)
        for r, fm in enumerate(h1.maps()):
            for s, gm in enumerate(h2.maps()):
                coords = _express_map_in(h3.basis, fm * gm)
                for t in range(h3.object.dim):
                    full.entries[t * full.cols + r * h2.object.dim + s] = coords[t]
    elif side == "left":
        h1 = internal_hom_left(x, y)
        h2 = internal_hom_left(y, z)
        h3 = internal_hom_left(x, z)
        pres = tensor_over(h1.object, h2.object)
        full = Matrix.zeros(f, h3.object.dim, h1.object.dim * h2.object.dim)
        for r, fm in enumerate(h1.maps()):
            for s, gm in enumerate(h2.maps()):
                coords = _express_map_in(h3.basis, gm * fm)
                for t in range(h3.object.dim):
                    full.entries[t * full.cols + r * h2.object.dim + s] = coords[t]
    else:
        raise ValueError("side must be 'left' or 'right'")
    mat = full * pres.section
    if mat * pres.structural_map != full:
        raise InternalConsistencyError("internal multiplication does not descend")
    return BimoduleMap(pres.result, h3.object, mat)


# -- two-path comparisons for internal Homs ------------------------------------------

def ihom_right_vs_cotensor(n: Bimodule, x: Bimodule) -> BimoduleMap:
    """Canonical isomorphism X (x)^A N* -> iHom-right(N, X): the subspace
    inclusion followed by the flat identification X (x) N* = Hom_k(N, X)."""
    res = internal_hom_right(n, x)
    w = cotensor_over(x, dual(n))
    f = x.field
    cols = []
    for c in range(w.result.dim):
        flat = w.structural_map.col(c)      # coordinates in X (x) N*, index (s, j)
        coords = res.basis.coordinates_of(flat)
        if coords is None:
            raise InternalConsistencyError(
                "cotensor element is not a right-module map")
        cols.append(coords)
    mat = Matrix.from_rows(f, cols).transpose() if cols else \
        Matrix(f, res.object.dim, 0, [])
    out = BimoduleMap(w.result, res.object, mat)
    if not out.is_iso():
        raise InternalConsistencyError("cotensor comparison not invertible")
    return out


def ihom_right_vs_double_dual(n: Bimodule, x: Bimodule) -> BimoduleMap:
    """Canonical isomorphism iHom-right(N, X) -> G(N (x)_A G^{-1} X) =
    (N (x)_A X*)*, f |-> ([v (x) beta] |-> beta(f(v)))."""
    res = internal_hom_right(n, x)
    q = tensor_over(n, dual(x))
    f = x.field
    dn, dx = n.dim, x.dim
    # pairing of Hom_k(N,X) with N (x) X*: <F, v (x) beta> = beta(F v);
    # PM[(j*dx+s), (s*dn+j)] = 1 in flat coordinates
    pm = Matrix.zeros(f, dn * dx, dx * dn)
    for j in range(dn):
        for s in range(dx):
            pm.entries[(j * dx + s) * (dx * dn) + (s * dn + j)] = f.one
    direct = pm * res.basis.basis.transpose()    # (dn dx) x h
    mat = q.section.transpose() * direct
    if q.structural_map.transpose() * mat != direct:
        raise InternalConsistencyError("pairing not balanced against the quotient")
    out = BimoduleMap(res.object, dual(q.result), mat)
    if not out.is_iso():
        raise InternalConsistencyError("double-dual comparison not invertible")
    return out
