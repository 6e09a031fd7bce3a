"""Restriction, induction and coinduction along an algebra morphism
phi: A -> A', in the symmetric transport-bimodule form: every functor is
tensoring (or cotensoring) with its value on the relevant unit.

Right modules are encoded as (B,A)-bimodules (B the ground field for plain
modules); all formulas below stay valid with a nontrivial left algebra B
riding along.
"""

from __future__ import annotations

from .algebras import AlgebraMorphism
from .bimodules import Bimodule, BimoduleMap, dual_bimodule, regular_bimodule
from .duality import internal_hom_right
from .errors import AlgebraMismatchError, InternalConsistencyError
from .linalg import Matrix
from .tensor import cotensor_over, tensor_over


def restrict(phi: AlgebraMorphism, m: Bimodule) -> Bimodule:
    """Pull the right A'-action back along phi; the underlying space and
    left structure are unchanged."""
    if not m.right_algebra.same_as(phi.target):
        raise AlgebraMismatchError("module is not a right module over phi's target")
    rho = [m.right_action(phi.apply(phi.source.basis_vector(i)))
           for i in range(phi.source.dim)]
    return Bimodule(m.left_algebra, phi.source, m.dim, m.left_actions, rho,
                    m.label)


def restrict_left(phi: AlgebraMorphism, m: Bimodule) -> Bimodule:
    if not m.left_algebra.same_as(phi.target):
        raise AlgebraMismatchError("module is not a left module over phi's target")
    lam = [m.left_action(phi.apply(phi.source.basis_vector(i)))
           for i in range(phi.source.dim)]
    return Bimodule(phi.source, m.right_algebra, m.dim, lam, m.right_actions,
                    m.label)


def res_transport(phi: AlgebraMorphism) -> Bimodule:
    """Res_phi(A') as an (A',A)-bimodule."""
    return restrict(phi, regular_bimodule(phi.target))


def res_dual_transport(phi: AlgebraMorphism) -> Bimodule:
    """Res_phi(A'*) as an (A',A)-bimodule."""
    return restrict(phi, dual_bimodule(regular_bimodule(phi.target)))


def induce(phi: AlgebraMorphism, m: Bimodule) -> Bimodule:
    """Ind_phi(M) = M (x)_A (Res_phi(A'*))*; unwinding the duals, this is
    the classical M (x)_A A' with A' acting on itself on the right."""
    return tensor_over(m, dual_bimodule(res_dual_transport(phi))).result


def coinduce(phi: AlgebraMorphism, m: Bimodule) -> Bimodule:
    """coInd_phi(M) = M (x)^A (Res_phi(A'))*."""
    return cotensor_over(m, dual_bimodule(res_transport(phi))).result


def coinduce_direct(phi: AlgebraMorphism, m: Bimodule) -> Bimodule:
    """The classical right adjoint Hom_A(Res_phi(A'), M): an independent
    route that must agree with the cotensor formula."""
    return internal_hom_right(res_transport(phi), m).object


def eilenberg_watts_left_exact(h_on_unit: Bimodule, m: Bimodule,
                               side: str = "left") -> Bimodule:
    """Evaluate a left-exact functor through its transport bimodule: for
    left modules H(M) = H(A*) (x)^A M (side="left"), for right modules
    H(M) = M (x)^A H(A*) (side="right")."""
    if side == "left":
        return cotensor_over(h_on_unit, m).result
    if side == "right":
        return cotensor_over(m, h_on_unit).result
    raise ValueError("side must be 'left' or 'right'")


# -- canonical comparison isomorphisms -----------------------------------------------

def restriction_tensor_iso(phi: AlgebraMorphism, m: Bimodule) -> BimoduleMap:
    """M' (x)_{A'} Res_phi(A')  ->  Res_phi(M'),  [m (x) a'] |-> m.a'."""
    t = res_transport(phi)
    pres = tensor_over(m, t)
    f = m.field
    da = phi.target.dim
    act = Matrix.zeros(f, m.dim, m.dim * da)
    for k in range(da):
        rk = m.right_actions[k]
        for j in range(m.dim):
            for r in range(m.dim):
                act.entries[r * act.cols + j * da + k] = rk[r, j]
    mat = act * pres.section
    if mat * pres.structural_map != act:
        raise InternalConsistencyError("restriction comparison does not descend")
    out = BimoduleMap(pres.result, restrict(phi, m), mat)
    if not out.is_iso():
        raise InternalConsistencyError("restriction comparison is not invertible")
    return out


def restriction_cotensor_iso(phi: AlgebraMorphism, m: Bimodule) -> BimoduleMap:
    """M' (x)^{A'} Res_phi(A'*)  ->  Res_phi(M'),  sum m_i (x) b_i |->
    sum b_i(1) m_i."""
    t = res_dual_transport(phi)
    pres = cotensor_over(m, t)
    f = m.field
    da = phi.target.dim
    unit = phi.target.unit
    ev = Matrix.zeros(f, m.dim, m.dim * da)
    for k in range(da):
        c = unit[k]
        if c != f.zero:
            for j in range(m.dim):
                ev.entries[j * ev.cols + j * da + k] = c
    out = BimoduleMap(pres.result, restrict(phi, m), ev * pres.structural_map)
    if not out.is_iso():
        raise InternalConsistencyError("restriction cotensor comparison not invertible")
    return out


# -- adjunction data -------------------------------------------------------------------

def ind_res_unit(phi: AlgebraMorphism, m: Bimodule) -> BimoduleMap:
    """eta_M: M -> Res(Ind M), m |-> [m (x) 1']."""
    t = dual_bimodule(res_dual_transport(phi))
    pres = tensor_over(m, t)
    f = m.field
    unit = phi.target.unit
    emb = Matrix.zeros(f, m.dim * t.dim, m.dim)
    for j in range(m.dim):
        for k in range(t.dim):
            if unit[k] != f.zero:
                emb.entries[(j * t.dim + k) * m.dim + j] = unit[k]
    return BimoduleMap(m, restrict(phi, pres.result), pres.structural_map * emb)


def ind_res_counit(phi: AlgebraMorphism, n: Bimodule) -> BimoduleMap:
    """eps_N: Ind(Res N) -> N, [n (x) a'] |-> n.a'."""
    t = dual_bimodule(res_dual_transport(phi))
    pres = tensor_over(restrict(phi, n), t)
    f = n.field
    da = phi.target.dim
    act = Matrix.zeros(f, n.dim, n.dim * da)
    for k in range(da):
        rk = n.right_actions[k]
        for j in range(n.dim):
            for r in range(n.dim):
                act.entries[r * act.cols + j * da + k] = rk[r, j]
    mat = act * pres.section
    if mat * pres.structural_map != act:
        raise InternalConsistencyError("counit does not descend")
    return BimoduleMap(pres.result, n, mat)
