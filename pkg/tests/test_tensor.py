import pytest

from gvbimod.algebras import dual_numbers, ground_field_algebra, square_zero_pair
from gvbimod.bimodules import (
    BimoduleMap,
    direct_sum,
    dual_bimodule,
    identity_map,
    regular_bimodule,
    simple_module_of_local,
)
from gvbimod.errors import AlgebraMismatchError
from gvbimod.fields import QQ
from gvbimod.linalg import Matrix, rref
from gvbimod.tensor import (
    ShortExactSequence,
    balancing_map,
    check_exactness,
    cobalancing_map,
    cotensor_over,
    tensor_of_maps,
    tensor_over,
    unitors,
    associator,
)

A2 = dual_numbers()
A3 = square_zero_pair()
S2 = simple_module_of_local(A2)
P2 = regular_bimodule(A2)
S3 = simple_module_of_local(A3)
P3 = regular_bimodule(A3)
I3 = dual_bimodule(P3)


def iota_S_P():
    return BimoduleMap(S2, P2, Matrix.from_rows(QQ, [[0], [1]]))


def proj_P_S():
    return BimoduleMap(P2, S2, Matrix.from_rows(QQ, [[1, 0]]))


def test_balancing_map_examples():
    # S,S over A2: both actions kill x, so every balancing generator is zero
    m = balancing_map(S2, S2)
    assert m.rows == 1 and m.cols == 2
    assert rref(m).rank == 0
    # regular (x) regular over A2: dim(A (x)_A A) = 2 forces rank 4 - 2
    assert rref(balancing_map(P2, P2)).rank == 2
    # over the ground field the two scalar actions cancel
    k = ground_field_algebra()
    kk = regular_bimodule(k)
    assert balancing_map(kk, kk).is_zero()


def test_tensor_over_paper_dims():
    assert tensor_over(S2, S2).result.dim == 1
    assert tensor_over(S2, P2).result.dim == 1
    assert tensor_over(I3, I3).result.dim == 4
    assert tensor_over(P3, P3).result.dim == 3


def test_tensor_unit_law():
    for m in (S2, P2):
        pres = tensor_over(P2, m)  # P2 is the regular bimodule = unit
        assert pres.result.dim == m.dim
        left, right = unitors(m, "over")
        assert left.is_iso() and right.is_iso()


def test_structural_surjection_kernel_is_balancing_image():
    from gvbimod.linalg import image, kernel
    pres = tensor_over(P3, I3)
    assert kernel(pres.structural_map) == image(balancing_map(P3, I3))


def test_cotensor_paper_dims():
    K2 = dual_bimodule(P2)
    assert cotensor_over(K2, S2).result.dim == 1
    assert cotensor_over(K2, P2).result.dim == 2
    assert cotensor_over(S2, S2).result.dim == 1
    assert cotensor_over(P3, P3).result.dim == 4


def test_cotensor_inclusion_image_is_cobalancing_kernel():
    from gvbimod.linalg import image, kernel
    pres = cotensor_over(P3, P3)
    assert image(pres.structural_map) == kernel(cobalancing_map(P3, P3))


def test_cotensor_unit_law():
    for m in (S3, P3, I3):
        left, right = unitors(m, "cotensor")
        assert left.source.dim == m.dim
        assert right.source.dim == m.dim


def test_cotensor_matches_dual_route():
    # dim(X (x)^A Y) = dim(Y* (x)_A X*)
    pairs = [(S2, P2), (P2, P2), (P3, I3), (I3, P3), (S3, P3),
             (direct_sum([S3, P3]), I3)]
    for x, y in pairs:
        lhs = cotensor_over(x, y).result.dim
        rhs = tensor_over(dual_bimodule(y), dual_bimodule(x)).result.dim
        assert lhs == rhs


def test_tensor_of_maps_identity_and_zero():
    got = tensor_of_maps(identity_map(S2), identity_map(P2), "over")
    assert got.matrix.is_identity()
    # tensoring with S kills the inclusion S -> P
    smap = tensor_of_maps(identity_map(S2), iota_S_P(), "over")
    assert smap.is_zero()
    assert smap.source.dim == 1 and smap.target.dim == 1


def test_tensor_of_maps_functorial():
    f, g = iota_S_P(), proj_P_S()
    comp = g.compose(f)  # zero map S -> S
    lhs = tensor_of_maps(identity_map(P2), comp, "over")
    rhs = tensor_of_maps(identity_map(P2), g, "over").compose(
        tensor_of_maps(identity_map(P2), f, "over"))
    assert lhs.matrix == rhs.matrix
    lhs = tensor_of_maps(comp, identity_map(P2), "cotensor")
    rhs = tensor_of_maps(g, identity_map(P2), "cotensor").compose(
        tensor_of_maps(f, identity_map(P2), "cotensor"))
    assert lhs.matrix == rhs.matrix


def test_associator_iso_and_pentagon():
    for kind in ("over", "cotensor"):
        a = associator(P2, S2, P2, kind)
        assert a.is_iso()

    def pentagon(w, x, y, z, kind):
        # ((wx)y)z -> w(x(yz)) both ways
        a_wx_y_z = associator(tensor(w, x, kind), y, z, kind)
        a_w_x_yz = associator(w, x, tensor(y, z, kind), kind)
        path1 = a_w_x_yz.compose(a_wx_y_z)
        aw = tensor_map_id(associator(w, x, y, kind), z, kind, right=True)
        a_w_xy_z = associator(w, tensor(x, y, kind), z, kind)
        az = tensor_map_id(associator(x, y, z, kind), w, kind, right=False)
        path2 = az.compose(a_w_xy_z).compose(aw)
        assert path1.matrix == path2.matrix

    def tensor(x, y, kind):
        return (tensor_over(x, y) if kind == "over" else cotensor_over(x, y)).result

    def tensor_map_id(f, other, kind, right):
        if right:
            return tensor_of_maps(f, identity_map(other), kind)
        return tensor_of_maps(identity_map(other), f, kind)

    pentagon(P2, S2, P2, S2, "over")
    pentagon(P2, S2, P2, S2, "cotensor")
    pentagon(I3, S3, P3, S3, "over")


def test_associator_naturality():
    import random
    from gvbimod.bimodules import random_hom
    rng = random.Random(2)
    for kind in ("over", "cotensor"):
        x, y, z = S2, P2, P2
        xp, yp, zp = P2, P2, S2
        f = random_hom(x, xp, rng)
        g = random_hom(y, yp, rng)
        h = random_hom(z, zp, rng)
        lhs = associator(xp, yp, zp, kind).compose(
            tensor_of_maps(tensor_of_maps(f, g, kind), h, kind))
        rhs = tensor_of_maps(f, tensor_of_maps(g, h, kind), kind).compose(
            associator(x, y, z, kind))
        assert lhs.matrix == rhs.matrix


def test_triangle_identity():
    # (x (x) A) (x) y -> x (x) y  two ways
    x, y = S2, P2
    a = associator(x, P2, y, "over")
    _, r = unitors(x, "over")
    l, _ = unitors(y, "over")
    left_path = tensor_of_maps(r, identity_map(y), "over")
    right_path = tensor_of_maps(identity_map(x), l, "over").compose(a)
    assert left_path.matrix == right_path.matrix


def test_exactness_report():
    ses = ShortExactSequence(iota_S_P(), proj_P_S()).validate()
    rep = check_exactness("over", ses, S2)
    assert rep.right_exact
    assert not rep.left_exact              # iota is crushed to zero
    rep2 = check_exactness("over", ses, P2)
    assert rep2.right_exact and rep2.left_exact
    # mirror behavior for the equalizer tensor on the dualized sequence
    dses = ShortExactSequence(
        BimoduleMap(dual_bimodule(S2), dual_bimodule(P2),
                    proj_P_S().matrix.transpose()),
        BimoduleMap(dual_bimodule(P2), dual_bimodule(S2),
                    iota_S_P().matrix.transpose())).validate()
    rep3 = check_exactness("cotensor", dses, dual_bimodule(S2))
    assert rep3.left_exact
    assert not rep3.right_exact
    rep4 = check_exactness("cotensor", dses, dual_bimodule(P2))
    assert rep4.left_exact and rep4.right_exact


def test_middle_mismatch_rejected():
    with pytest.raises(AlgebraMismatchError):
        tensor_over(S2, S3)
    with pytest.raises(AlgebraMismatchError):
        cotensor_over(P3, P2)
