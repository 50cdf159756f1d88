"""Exact combinatorics of alternating sign matrices: the lattice order,
prism tableaux, pipe dreams and subword-complex facets, determinantal
initial ideals, and the polynomials they all compute."""

from .algebra import Monomial, Polynomial, ZeroPolynomialError, poly_add, poly_from_monomials, poly_min_total_degree
from .asm import (
    Asm,
    AsmValidationError,
    CornerSum,
    MatrixParseError,
    MonotoneTriangle,
    PartialAsm,
    asm_from_corner_sum,
    asm_from_rank_conditions,
    asm_join,
    asm_leq,
    asm_meet,
    canonical_completion,
    corner_sum,
    embed,
    enumerate_asms,
    essential_set,
    identity_asm,
    inversions,
    monotone_triangle,
    lambda_row,
    rothe_diagram,
    validate_asm,
    validate_partial_asm,
)
from .perm import (
    Perm,
    asm_from_shape_tuple,
    bigr_of,
    bigrassmannian_encode,
    bruhat_leq,
    deg,
    demazure_product,
    grassmannian_encode,
    is_reduced,
    min_perm_set,
    perm_set,
    word_product,
)
from .prism import (
    PrismShapeSpec,
    PrismTableau,
    Rssyt,
    asm_polynomial,
    bigrassmannian_model,
    enumerate_all_prism,
    enumerate_rssyt,
    has_unstable_triple,
    parabolic_model,
    prism_set,
    prism_weight,
)
from .pipedream import (
    Facet,
    PlusDiagram,
    SquareWord,
    delta_facets,
    delta_fmax,
    diagram_demazure,
    phi,
    pipe_dreams_of,
    schubert_oracle,
    schubert_polynomial,
    square_word,
    verify_bijection,
)
from .ideal import (
    MinorSpec,
    SquareFreeMonomial,
    SRComplexFacets,
    antidiagonal_init,
    essential_generators,
    initial_ideal,
    multidegree,
    stanley_reisner_facets,
)

__version__ = "0.1.0"
