"""Exact calculus of bimodules over finite-dimensional algebras: the two
tensor products (coequalizer and equalizer), linear duality and its
dualizing object, internal Homs and coHoms, and the distributor
homomorphisms relating the two tensors, with all coherence and flatness
diagnostics computed in exact arithmetic."""

from .algebras import (
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
    unit_inclusion,
    upper_triangular,
    validate,
)
from .bimodules import (
    Bimodule,
    BimoduleMap,
    IsoReport,
    are_isomorphic,
    conjugate,
    direct_sum,
    dual_bimodule,
    dual_map,
    hom_basis_maps,
    hom_space,
    identity_map,
    is_injective_left,
    is_injective_right,
    is_projective_left,
    is_projective_right,
    left_module,
    quotient_bimodule,
    random_hom,
    regular_bimodule,
    right_module,
    simple_module_of_local,
    socle_left,
    socle_right,
    sub_bimodule,
    twist_bimodule,
    zero_bimodule,
    zero_map,
)
from .corpus import corpus_objects, extended_corpus, ses_bank, standard_corpus
from .distributors import (
    CoherenceReport,
    DistributorResult,
    DualData,
    StrongnessReport,
    check_mixed_pentagons,
    check_triangles,
    distributor_left,
    distributor_right,
    flatness_implications,
    ihom_lax_constraint,
    ihom_left_lax_constraint,
    is_flat_cotensor,
    is_flat_tensor,
    left_dual_data,
    right_dual_data,
    strongness_report,
    tilde_variants,
)
from .duality import (
    GVStructure,
    InternalHomResult,
    VarpiResult,
    double_dual_map,
    dual,
    evaluation,
    ihom_right_vs_cotensor,
    ihom_right_vs_double_dual,
    internal_cohom_left,
    internal_cohom_right,
    internal_hom_left,
    internal_hom_right,
    internal_multiplication,
    second_tensor,
    second_tensor_iso,
    varpi,
    varpi_apply,
)
from .errors import (
    AlgebraMismatchError,
    GvError,
    InternalConsistencyError,
    UnsupportedCaseError,
    ValidationError,
)
from .fields import GF, QQ, Field
from .functors import (
    coinduce,
    coinduce_direct,
    eilenberg_watts_left_exact,
    ind_res_counit,
    ind_res_unit,
    induce,
    res_dual_transport,
    res_transport,
    restrict,
    restrict_left,
    restriction_cotensor_iso,
    restriction_tensor_iso,
)
from .linalg import Matrix, Subspace, image, kernel, quotient, rref, solve
from .suites import run_suite
from .tensor import (
    ShortExactSequence,
    TensorPresentation,
    associator,
    balancing_map,
    check_exactness,
    cobalancing_map,
    cotensor_over,
    tensor_of_maps,
    tensor_over,
    unitors,
    vector_space_tensor,
)

__version__ = "0.1.0"
