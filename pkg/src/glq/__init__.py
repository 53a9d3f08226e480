"""Exact noncommutative charts for the quantum general linear group.

Symbolic construction of the triangular factorization charts of
GL_q(N), verification of their minor relations, embeddings into
quantum tori, minimal torus counts via integer symplectic reduction,
and numeric (root-of-unity) and classical (q = 1) cross-checks.
"""

from .laurent import QLaurent
from .algebra import (
    AlgebraSignature,
    Morphism,
    Polynomial,
    SignatureError,
    apply_morphism,
    check_morphism,
    make_algebra,
    normal_mul,
    q_commutation_exponent,
)
from .charts import (
    LusztigChart,
    OperatorMatrix,
    build_full,
    build_upper,
    coproduct_stability_check,
    entry_closed_form,
    folded_chart,
    full_chart,
    quantum_determinant,
    upper_chart,
    verify_glq2_relations,
    verify_row_order_independence,
)
from .cluster import (
    cluster_monomial,
    initial_minor,
    p_exponent,
    ratio_chart,
    verify_cluster_commutation,
)
from .tori import (
    DEFAULT_CONVENTION,
    SymplecticReduction,
    ToriSignature,
    balanced_monomial,
    check_convention_sweep,
    commutation_rank,
    full_embedding,
    minimal_embedding,
    monomial_minimality_search,
    published_table,
    reduced_embedding,
    symplectic_reduce,
    upper_embedding,
)
from .numeric import (
    ClockShiftRep,
    ReducedWord,
    braid_phi,
    braid_phi_report,
    build_rep,
    canonical_word,
    clock_shift,
    measure_commutation,
    move_path,
    reduced_words,
    word_chart,
)
from .classical import (
    PositiveParam,
    haar_density_check,
    initial_minors_classical,
    lusztig_matrix,
    params_from_minors,
    x_coordinates,
)
from .reports import VerificationReport

__version__ = "0.1.0"
