"""The four distributor homomorphisms mixing the two tensor products,

    d-left :  X (x)_A (Y (x)^A Z)  ->  (X (x)_A Y) (x)^A Z
    d-right:  (X (x)^A Y) (x)_A Z  ->  X (x)^A (Y (x)_A Z),

each built twice: through the universal properties (the equalizer iso gamma
followed by descent through the coequalizer, or the mirrored order for the
tilde variants) and through the direct element formula

    d-left : [x (x) (y_i (x) z_i)]  |->  [x (x) y_i] (x) z_i
    d-right: [(x_i (x) y_i) (x) z]  |->  x_i (x) [y_i (x) z].

Any disagreement between routes aborts: it indicates an index-convention
bug, never mathematics.  The module also verifies the coherence laws (six
pentagon families, four unitor triangles), the strongness ladder for a
bimodule, and the flatness implications for distributor (in/sur)jectivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebras import Algebra
from .bimodules import (
    Bimodule,
    BimoduleMap,
    dual_bimodule,
    identity_map,
    is_projective_left,
    is_projective_right,
    regular_bimodule,
)
from .corpus import corpus_objects, ses_bank
from .duality import evaluation, internal_hom_left, internal_hom_right
from .errors import AlgebraMismatchError, InternalConsistencyError
from .linalg import Matrix, Subspace, solve
from .tensor import (
    associator,
    check_exactness,
    cotensor_over,
    tensor_of_maps,
    tensor_over,
    unitors,
    vector_space_tensor,
)


def _same_algebra_triple(x, y, z):
    a = x.left_algebra
    for m in (x, y, z):
        if not (m.left_algebra.same_as(a) and m.right_algebra.same_as(a)):
            raise AlgebraMismatchError("distributors need (A,A)-bimodules over one A")
    return a


@dataclass
class DistributorResult:
    map: BimoduleMap
    variant: str          # "left" | "left-tilde" | "right" | "right-tilde"
    kernel: Subspace
    image: Subspace

    @property
    def is_isomorphism(self):
        return self.kernel.dim == 0 and self.image.dim == self.map.target.dim


_dist_cache: dict = {}


def distributor_left(x: Bimodule, y: Bimodule, z: Bimodule) -> DistributorResult:
    _same_algebra_triple(x, y, z)
    ck = ("l", x.key, y.key, z.key)
    hit = _dist_cache.get(ck)
    if hit is not None:
        return hit
    f = x.field
    idx = Matrix.identity(f, x.dim)
    idz = Matrix.identity(f, z.dim)
    yz = cotensor_over(y, z)
    src = tensor_over(x, yz.result)
    xy = tensor_over(x, y)
    tgt = cotensor_over(xy.result, z)
    # universal route: gamma through the equalizer of (X (x) Y) (x)^A Z,
    # then descent of pi_{X,Y} (x)^A Z through the coequalizer
    flat_xy = vector_space_tensor(x, y)
    mid = cotensor_over(flat_xy, z)
    gamma = solve(mid.structural_map, idx.kron(yz.structural_map))
    if gamma is None or mid.structural_map * gamma != idx.kron(yz.structural_map):
        raise InternalConsistencyError("gamma-left does not factor through the equalizer")
    if gamma.inverse() is None:
        raise InternalConsistencyError("gamma-left is not an isomorphism")
    pi_map = BimoduleMap(flat_xy, xy.result, xy.structural_map)
    pi_cot_z = tensor_of_maps(pi_map, identity_map(z), "cotensor", src=mid, tgt=tgt)
    composite = pi_cot_z.matrix * gamma
    mat = composite * src.section
    if mat * src.structural_map != composite:
        raise InternalConsistencyError("d-left does not descend to the coequalizer")
    # element-formula route
    direct = xy.structural_map.kron(idz) * idx.kron(yz.structural_map)
    formula = solve(tgt.structural_map, direct * src.section)
    if formula is None or \
            tgt.structural_map * formula * src.structural_map != direct:
        raise InternalConsistencyError("d-left element formula inconsistent")
    if mat != formula:
        raise InternalConsistencyError("d-left universal and formula routes differ")
    out = BimoduleMap(src.result, tgt.result, mat)
    res = DistributorResult(out, "left", out.kernel(), out.image())
    _dist_cache[ck] = res
    return res


def distributor_right(x: Bimodule, y: Bimodule, z: Bimodule) -> DistributorResult:
    _same_algebra_triple(x, y, z)
    ck = ("r", x.key, y.key, z.key)
    hit = _dist_cache.get(ck)
    if hit is not None:
        return hit
    f = x.field
    idx = Matrix.identity(f, x.dim)
    idz = Matrix.identity(f, z.dim)
    xy = cotensor_over(x, y)
    src = tensor_over(xy.result, z)
    yz = tensor_over(y, z)
    tgt = cotensor_over(x, yz.result)
    flat_yz = vector_space_tensor(y, z)
    mid = cotensor_over(x, flat_yz)
    gamma = solve(mid.structural_map, xy.structural_map.kron(idz))
    if gamma is None or mid.structural_map * gamma != xy.structural_map.kron(idz):
        raise InternalConsistencyError("gamma-right does not factor through the equalizer")
    if gamma.inverse() is None:
        raise InternalConsistencyError("gamma-right is not an isomorphism")
    pi_map = BimoduleMap(flat_yz, yz.result, yz.structural_map)
    x_cot_pi = tensor_of_maps(identity_map(x), pi_map, "cotensor", src=mid, tgt=tgt)
    composite = x_cot_pi.matrix * gamma
    mat = composite * src.section
    if mat * src.structural_map != composite:
        raise InternalConsistencyError("d-right does not descend to the coequalizer")
    direct = idx.kron(yz.structural_map) * xy.structural_map.kron(idz)
    formula = solve(tgt.structural_map, direct * src.section)
    if formula is None or \
            tgt.structural_map * formula * src.structural_map != direct:
        raise InternalConsistencyError("d-right element formula inconsistent")
    if mat != formula:
        raise InternalConsistencyError("d-right universal and formula routes differ")
    out = BimoduleMap(src.result, tgt.result, mat)
    res = DistributorResult(out, "right", out.kernel(), out.image())
    _dist_cache[ck] = res
    return res


def tilde_variants(x: Bimodule, y: Bimodule, z: Bimodule,
                   side: str) -> DistributorResult:
    """The alternative universal-property route (coequalizer first for the
    left side, equalizer first for the right side); must coincide with the
    plain variant as a matrix, which is enforced."""
    _same_algebra_triple(x, y, z)
    f = x.field
    idx = Matrix.identity(f, x.dim)
    idz = Matrix.identity(f, z.dim)
    if side == "left":
        base = distributor_left(x, y, z)
        yz = cotensor_over(y, z)
        src = tensor_over(x, yz.result)
        xy = tensor_over(x, y)
        tgt = cotensor_over(xy.result, z)
        flat_yz = vector_space_tensor(y, z)
        mid = tensor_over(x, flat_yz)
        big = xy.structural_map.kron(idz)
        gamma = big * mid.section
        if gamma * mid.structural_map != big:
            raise InternalConsistencyError("gamma-left-tilde does not descend")
        if gamma.inverse() is None:
            raise InternalConsistencyError("gamma-left-tilde is not an isomorphism")
        inc_map = BimoduleMap(yz.result, flat_yz, yz.structural_map)
        x_tens_inc = tensor_of_maps(identity_map(x), inc_map, "over",
                                    src=src, tgt=mid)
        composite = gamma * x_tens_inc.matrix
        mat = solve(tgt.structural_map, composite)
        if mat is None or tgt.structural_map * mat != composite:
            raise InternalConsistencyError(
                "d-left-tilde does not factor through the equalizer")
        variant = "left-tilde"
    elif side == "right":
        base = distributor_right(x, y, z)
        xy = cotensor_over(x, y)
        src = tensor_over(xy.result, z)
        yz = tensor_over(y, z)
        tgt = cotensor_over(x, yz.result)
        flat_xy = vector_space_tensor(x, y)
        mid = tensor_over(flat_xy, z)
        big = idx.kron(yz.structural_map)
        gamma = big * mid.section
        if gamma * mid.structural_map != big:
            raise InternalConsistencyError("gamma-right-tilde does not descend")
        if gamma.inverse() is None:
            raise InternalConsistencyError("gamma-right-tilde is not an isomorphism")
        inc_map = BimoduleMap(xy.result, flat_xy, xy.structural_map)
        inc_tens_z = tensor_of_maps(inc_map, identity_map(z), "over",
                                    src=src, tgt=mid)
        composite = gamma * inc_tens_z.matrix
        mat = solve(tgt.structural_map, composite)
        if mat is None or tgt.structural_map * mat != composite:
            raise InternalConsistencyError(
                "d-right-tilde does not factor through the equalizer")
        variant = "right-tilde"
    else:
        raise ValueError("side must be 'left' or 'right'")
    if mat != base.map.matrix:
        raise InternalConsistencyError(
            "tilde distributor differs from the plain one (side=%s)" % side)
    out = BimoduleMap(base.map.source, base.map.target, mat, check=False)
    return DistributorResult(out, variant, base.kernel, base.image)


# -- coherence -------------------------------------------------------------------

def _t(x, y):
    return tensor_over(x, y).result


def _c(x, y):
    return cotensor_over(x, y).result


def _tmap(fm, gm):
    return tensor_of_maps(fm, gm, "over")


def _cmap(fm, gm):
    return tensor_of_maps(fm, gm, "cotensor")


def _dl(x, y, z):
    return distributor_left(x, y, z).map


def _dr(x, y, z):
    return distributor_right(x, y, z).map


def _compare(name, lhs: BimoduleMap, rhs: BimoduleMap):
    if not lhs.source.same_as(rhs.source) or not lhs.target.same_as(rhs.target):
        raise InternalConsistencyError("%s endpoints disagree" % name)
    if lhs.matrix == rhs.matrix:
        return name, True, None
    diff = lhs.matrix - rhs.matrix
    col = next(j for j in range(diff.cols)
               if any(diff[i, j] != diff.field.zero for i in range(diff.rows)))
    return name, False, {"basis_index": col, "difference": diff.col(col)}


@dataclass
class CoherenceReport:
    entries: list

    @property
    def all_commute(self):
        return all(ok for _, ok, _ in self.entries)

    def failures(self):
        return [(n, w) for n, ok, w in self.entries if not ok]


def check_mixed_pentagons(w: Bimodule, x: Bimodule, y: Bimodule,
                          z: Bimodule) -> CoherenceReport:
    """Composes both paths of the six pentagon families on the quadruple:
    the four documented ones (each distributor against each associator) and
    the two involving both distributors at once.  Exact matrix equality."""
    _same_algebra_triple(w, x, y)
    _same_algebra_triple(x, y, z)
    entries = []

    # d-left against the coequalizer associator
    lhs = _dl(w, _t(x, y), z).compose(
        _tmap(identity_map(w), _dl(x, y, z))).compose(
        associator(w, x, _c(y, z), "over"))
    rhs = _cmap(associator(w, x, y, "over"), identity_map(z)).compose(
        _dl(_t(w, x), y, z))
    entries.append(_compare("pentagon-left-coeq", lhs, rhs))

    # d-left against the equalizer associator
    lhs = _dl(w, x, _c(y, z)).compose(
        _tmap(identity_map(w), associator(x, y, z, "cotensor")))
    rhs = associator(_t(w, x), y, z, "cotensor").compose(
        _cmap(_dl(w, x, y), identity_map(z))).compose(
        _dl(w, _c(x, y), z))
    entries.append(_compare("pentagon-left-eq", lhs, rhs))

    # d-right against the coequalizer associator
    lhs = _dr(w, x, _t(y, z)).compose(associator(_c(w, x), y, z, "over"))
    rhs = _cmap(identity_map(w), associator(x, y, z, "over")).compose(
        _dr(w, _t(x, y), z)).compose(
        _tmap(_dr(w, x, y), identity_map(z)))
    entries.append(_compare("pentagon-right-coeq", lhs, rhs))

    # d-right against the equalizer associator
    lhs = _dr(_c(w, x), y, z).compose(
        _tmap(associator(w, x, y, "cotensor").inverse(), identity_map(z)))
    rhs = associator(w, x, _t(y, z), "cotensor").inverse().compose(
        _cmap(identity_map(w), _dr(x, y, z))).compose(
        _dr(w, _c(x, y), z))
    entries.append(_compare("pentagon-right-eq", lhs, rhs))

    # the two mixed pentagons involving both distributors
    lhs = _cmap(identity_map(w), _dl(x, y, z)).compose(_dr(w, x, _c(y, z)))
    rhs = associator(w, _t(x, y), z, "cotensor").compose(
        _cmap(_dr(w, x, y), identity_map(z))).compose(
        _dl(_c(w, x), y, z))
    entries.append(_compare("pentagon-mixed-right-left", lhs, rhs))

    lhs = _dl(w, x, _t(y, z)).compose(_tmap(identity_map(w), _dr(x, y, z)))
    rhs = _dr(_t(w, x), y, z).compose(
        _tmap(_dl(w, x, y), identity_map(z))).compose(
        associator(w, _c(x, y), z, "over").inverse())
    entries.append(_compare("pentagon-mixed-left-right", lhs, rhs))

    return CoherenceReport(entries)


def check_triangles(x: Bimodule, y: Bimodule) -> CoherenceReport:
    """The four compatibility triangles of the distributors with the unit
    isomorphisms of the two tensor products."""
    _same_algebra_triple(x, y, x)
    a = x.left_algebra
    unit_t = regular_bimodule(a)
    unit_c = dual_bimodule(unit_t)
    entries = []

    lhs = _cmap(unitors(x, "over")[0], identity_map(y)).compose(
        _dl(unit_t, x, y))
    rhs = unitors(_c(x, y), "over")[0]
    entries.append(_compare("triangle-left-unit-coeq", lhs, rhs))

    lhs = unitors(_t(x, y), "cotensor")[1].compose(_dl(x, y, unit_c))
    rhs = _tmap(identity_map(x), unitors(y, "cotensor")[1])
    entries.append(_compare("triangle-left-unit-eq", lhs, rhs))

    lhs = _cmap(identity_map(x), unitors(y, "over")[1]).compose(
        _dr(x, y, unit_t))
    rhs = unitors(_c(x, y), "over")[1]
    entries.append(_compare("triangle-right-unit-coeq", lhs, rhs))

    lhs = unitors(_t(x, y), "cotensor")[0].compose(_dr(unit_c, x, y))
    rhs = _tmap(unitors(x, "cotensor")[0], identity_map(y))
    entries.append(_compare("triangle-right-unit-eq", lhs, rhs))

    return CoherenceReport(entries)


# -- lax module constraint of the internal Hom (independent route) -----------------

def ihom_lax_constraint(m: Bimodule, c: Bimodule, n: Bimodule) -> BimoduleMap:
    """The module constraint c (x)_A iHom-right(m,n) -> iHom-right(m, c (x)_A n),
    w (x) f |-> (v |-> [w (x) f(v)]), built on representatives through the
    adjunction rather than through the distributor machinery."""
    f = m.field
    hn = internal_hom_right(m, n)
    cn = tensor_over(c, n)
    hcn = internal_hom_right(m, cn.result)
    pres = tensor_over(c, hn.object)
    full = Matrix.zeros(f, hcn.object.dim, c.dim * hn.object.dim)
    maps = hn.maps()
    for i in range(c.dim):
        emb = Matrix.zeros(f, c.dim * n.dim, n.dim)
        for j in range(n.dim):
            emb.entries[(i * n.dim + j) * n.dim + j] = f.one
        for r, fm in enumerate(maps):
            target_map = cn.structural_map * emb * fm
            coords = hcn.basis.coordinates_of(list(target_map.entries))
            if coords is None:
                raise InternalConsistencyError("lax constraint left the hom space")
            for t in range(hcn.object.dim):
                full.entries[t * full.cols + i * hn.object.dim + r] = coords[t]
    mat = full * pres.section
    if mat * pres.structural_map != full:
        raise InternalConsistencyError("lax constraint does not descend")
    return BimoduleMap(pres.result, hcn.object, mat)


def ihom_left_lax_constraint(m: Bimodule, n: Bimodule, c: Bimodule) -> BimoduleMap:
    """Mirror constraint iHom-left(m,n) (x)_A c -> iHom-left(m, n (x)_A c)."""
    f = m.field
    hn = internal_hom_left(m, n)
    nc = tensor_over(n, c)
    hnc = internal_hom_left(m, nc.result)
    pres = tensor_over(hn.object, c)
    full = Matrix.zeros(f, hnc.object.dim, hn.object.dim * c.dim)
    maps = hn.maps()
    for i in range(c.dim):
        emb = Matrix.zeros(f, n.dim * c.dim, n.dim)
        for j in range(n.dim):
            emb.entries[(j * c.dim + i) * n.dim + j] = f.one
        for r, fm in enumerate(maps):
            target_map = nc.structural_map * emb * fm
            coords = hnc.basis.coordinates_of(list(target_map.entries))
            if coords is None:
                raise InternalConsistencyError("lax constraint left the hom space")
            for t in range(hnc.object.dim):
                full.entries[t * full.cols + r * c.dim + i] = coords[t]
    mat = full * pres.section
    if mat * pres.structural_map != full:
        raise InternalConsistencyError("lax constraint does not descend")
    return BimoduleMap(pres.result, hnc.object, mat)


# -- duals, strongness, flatness -----------------------------------------------------

@dataclass
class DualData:
    exists: bool
    dual_object: Bimodule = None
    ev: BimoduleMap = None
    coev: BimoduleMap = None
    snake_first: bool = False
    snake_second: bool = False


def right_dual_data(m: Bimodule) -> DualData:
    """Right dual Hom_A(M_A, A_A) with evaluation/coevaluation and both
    snake identities, when M is right projective; exists=False otherwise."""
    a = m.left_algebra
    reg = regular_bimodule(a)
    ok, sec = is_projective_right(m, witness=True)
    if not ok:
        return DualData(False)
    f = m.field
    hom = internal_hom_right(m, reg)
    dualm = hom.object
    ev = evaluation(m, reg, "right")
    # dual basis from the splitting: coev(1) = sum_b [e_b (x) f_b]
    da = a.dim
    pres = tensor_over(m, dualm)
    flat = [f.zero] * (m.dim * dualm.dim)
    for b in range(m.dim):
        fb = Matrix(f, da, m.dim, [sec[b * da + k, j]
                                   for k in range(da) for j in range(m.dim)])
        coords = hom.basis.coordinates_of(list(fb.entries))
        if coords is None:
            raise InternalConsistencyError("splitting rows are not module maps")
        for r in range(dualm.dim):
            flat[b * dualm.dim + r] = f.add(flat[b * dualm.dim + r], coords[r])
    cls = pres.structural_map * Matrix.column(f, flat)
    cols = []
    for k in range(da):
        acted = pres.result.left_action(a.basis_vector(k)) * cls
        cols.append(acted.col(0))
    coev_mat = Matrix.from_rows(f, cols).transpose()
    coev = BimoduleMap(reg, pres.result, coev_mat)
    lm, rm = unitors(m, "over")
    snake1 = rm.compose(tensor_of_maps(identity_map(m), ev, "over")) \
        .compose(associator(m, dualm, m, "over")) \
        .compose(tensor_of_maps(coev, identity_map(m), "over")) \
        .compose(lm.inverse())
    ld, rd = unitors(dualm, "over")
    snake2 = ld.compose(tensor_of_maps(ev, identity_map(dualm), "over")) \
        .compose(associator(dualm, m, dualm, "over").inverse()) \
        .compose(tensor_of_maps(identity_map(dualm), coev, "over")) \
        .compose(rd.inverse())
    return DualData(True, dualm, ev, coev,
                    snake1.matrix.is_identity(), snake2.matrix.is_identity())


def left_dual_data(m: Bimodule) -> DualData:
    """Left dual Hom_A(_A M, _A A), mirrored."""
    a = m.left_algebra
    reg = regular_bimodule(a)
    ok, sec = is_projective_left(m, witness=True)
    if not ok:
        return DualData(False)
    f = m.field
    hom = internal_hom_left(m, reg)
    dualm = hom.object
    ev = evaluation(m, reg, "left")
    da = a.dim
    pres = tensor_over(dualm, m)
    flat = [f.zero] * (dualm.dim * m.dim)
    for b in range(m.dim):
        fb = Matrix(f, da, m.dim, [sec[b * da + k, j]
                                   for k in range(da) for j in range(m.dim)])
        coords = hom.basis.coordinates_of(list(fb.entries))
        if coords is None:
            raise InternalConsistencyError("splitting rows are not module maps")
        for r in range(dualm.dim):
            flat[r * m.dim + b] = f.add(flat[r * m.dim + b], coords[r])
    cls = pres.structural_map * Matrix.column(f, flat)
    cols = []
    for k in range(da):
        acted = pres.result.left_action(a.basis_vector(k)) * cls
        cols.append(acted.col(0))
    coev_mat = Matrix.from_rows(f, cols).transpose()
    coev = BimoduleMap(reg, pres.result, coev_mat)
    lm, rm = unitors(m, "over")
    snake1 = lm.compose(tensor_of_maps(ev, identity_map(m), "over")) \
        .compose(associator(m, dualm, m, "over").inverse()) \
        .compose(tensor_of_maps(identity_map(m), coev, "over")) \
        .compose(rm.inverse())
    ld, rd = unitors(dualm, "over")
    snake2 = rd.compose(tensor_of_maps(identity_map(dualm), ev, "over")) \
        .compose(associator(dualm, m, dualm, "over")) \
        .compose(tensor_of_maps(coev, identity_map(dualm), "over")) \
        .compose(ld.inverse())
    return DualData(True, dualm, ev, coev,
                    snake1.matrix.is_identity(), snake2.matrix.is_identity())


@dataclass
class StrongnessSide:
    ihom_strong: bool
    has_dual: bool
    projective: bool
    dual_injective: bool
    distributor_iso: bool
    witness: dict = dc_field(default_factory=dict)

    @property
    def answers(self):
        return (self.ihom_strong, self.has_dual, self.projective,
                self.dual_injective, self.distributor_iso)

    @property
    def consistent(self):
        return len(set(self.answers)) == 1


@dataclass
class StrongnessReport:
    right: StrongnessSide
    left: StrongnessSide

    @property
    def consistent(self):
        return self.right.consistent and self.left.consistent


def strongness_report(m: Bimodule, sample=None) -> StrongnessReport:
    """Evaluates the five equivalent characterizations per side: strongness
    of the internal-Hom module functor (sampled), existence of the tensor
    dual with exact snake identities, projectivity of the underlying one-
    sided module, injectivity of the dual, and invertibility of the
    corresponding distributors over the sample."""
    a = m.left_algebra
    if sample is None:
        sample = corpus_objects(a)
    mdual = dual_bimodule(m)

    def right_side():
        proj = is_projective_right(m)
        dd = right_dual_data(m)
        has_dual = dd.exists and dd.snake_first and dd.snake_second
        inj = is_projective_right(dual_bimodule(mdual))  # (iv) through duality
        strong, strong_wit = True, None
        for c in sample:
            for n in sample:
                if not ihom_lax_constraint(m, c, n).is_iso():
                    strong, strong_wit = False, (c.label or "?", n.label or "?")
                    break
            if not strong:
                break
        dist, dist_wit = True, None
        for xx in sample:
            for yy in sample:
                res = distributor_left(xx, yy, mdual)
                if not res.is_isomorphism:
                    dist, dist_wit = False, {
                        "pair": (xx.label or "?", yy.label or "?"),
                        "kernel_dim": res.kernel.dim,
                        "cokernel_dim": res.map.target.dim - res.image.dim,
                    }
                    break
            if not dist:
                break
        wit = {}
        if strong_wit:
            wit["ihom_non_iso_at"] = strong_wit
        if dist_wit:
            wit["distributor_non_iso"] = dist_wit
        if dd.exists and not (dd.snake_first and dd.snake_second):
            wit["snake_failure"] = True
        return StrongnessSide(strong, has_dual, proj, inj, dist, wit)

    def left_side():
        proj = is_projective_left(m)
        dd = left_dual_data(m)
        has_dual = dd.exists and dd.snake_first and dd.snake_second
        inj = is_projective_left(dual_bimodule(mdual))
        strong, strong_wit = True, None
        for n in sample:
            for c in sample:
                if not ihom_left_lax_constraint(m, n, c).is_iso():
                    strong, strong_wit = False, (n.label or "?", c.label or "?")
                    break
            if not strong:
                break
        dist, dist_wit = True, None
        for xx in sample:
            for yy in sample:
                res = distributor_right(mdual, xx, yy)
                if not res.is_isomorphism:
                    dist, dist_wit = False, {
                        "pair": (xx.label or "?", yy.label or "?"),
                        "kernel_dim": res.kernel.dim,
                        "cokernel_dim": res.map.target.dim - res.image.dim,
                    }
                    break
            if not dist:
                break
        wit = {}
        if strong_wit:
            wit["ihom_non_iso_at"] = strong_wit
        if dist_wit:
            wit["distributor_non_iso"] = dist_wit
        return StrongnessSide(strong, has_dual, proj, inj, dist, wit)

    return StrongnessReport(right_side(), left_side())


# -- flatness ------------------------------------------------------------------------

def is_flat_tensor(w: Bimodule, side: str, bank=None) -> bool:
    """Empirical coequalizer-tensor flatness: w (x)_A - (side="left") or
    - (x)_A w (side="right") preserves injections over the sequence bank."""
    if bank is None:
        bank = ses_bank(w.left_algebra)
    return all(check_exactness("over", ses, w, side).injective_preserved
               for ses in bank)


def is_flat_cotensor(w: Bimodule, side: str, bank=None) -> bool:
    """Empirical equalizer-tensor flatness: the left-exact functor also
    preserves surjections over the sequence bank."""
    if bank is None:
        bank = ses_bank(w.left_algebra)
    return all(check_exactness("cotensor", ses, w, side).surjective_preserved
               for ses in bank)


@dataclass
class ImplicationReport:
    name: str
    hypothesis: bool
    conclusion: bool

    @property
    def holds(self):
        return (not self.hypothesis) or self.conclusion


def flatness_implications(x: Bimodule, y: Bimodule, z: Bimodule,
                          bank=None) -> list:
    """The four flatness-to-distributor implications on the triple:
    1. x left coeq-flat       => d-left(x,y,z) injective;
    2. z right eq-flat        => d-left(x,y,z) surjective;
    3. z right coeq-flat      => d-right(x,y,z) injective;
    4. x left eq-flat         => d-right(x,y,z) surjective."""
    if bank is None:
        bank = ses_bank(x.left_algebra)
    dl = distributor_left(x, y, z)
    dr = distributor_right(x, y, z)
    return [
        ImplicationReport("left-flat-gives-left-injective",
                          is_flat_tensor(x, "left", bank),
                          dl.kernel.dim == 0),
        ImplicationReport("right-coflat-gives-left-surjective",
                          is_flat_cotensor(z, "right", bank),
                          dl.image.dim == dl.map.target.dim),
        ImplicationReport("right-flat-gives-right-injective",
                          is_flat_tensor(z, "right", bank),
                          dr.kernel.dim == 0),
        ImplicationReport("left-coflat-gives-right-surjective",
                          is_flat_cotensor(x, "left", bank),
                          dr.image.dim == dr.map.target.dim),
    ]
