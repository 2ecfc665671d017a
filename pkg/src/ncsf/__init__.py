"""Exact-arithmetic computer algebra for symmetric, quasisymmetric, and
noncommutative symmetric functions, descent algebras of symmetric groups,
and symmetric-group character theory."""

from .compositions import (
    Composition,
    DescentSet,
    Partition,
    comp_of,
    compositions_of,
    partitions_of,
    refines,
    reversal,
    set_of,
    underlying_partition,
    z_stat,
)
from .tableaux import (
    SYCT,
    SYT,
    CompositionDiagram,
    descent_composition_syct,
    descent_composition_syt,
    dhat_matrix,
    enumerate_syct,
    enumerate_syt,
    is_valid_syct,
    kostka_counts,
    rho_bar,
)
from .sym import (
    SYM_BASES,
    SymElement,
    schur,
    sym_basis_element,
    sym_convert,
    sym_element,
    sym_multiply,
)
from .qsym import (
    QSYM_BASES,
    QSymElement,
    embed_sym_in_qsym,
    qsym_basis_element,
    qsym_convert,
    qsym_element,
    reversal_automorphism,
    symmetric_part,
)
from .nsym import (
    NSYM_BASES,
    NSymElement,
    duality_pairing,
    forgetful_map,
    nsym_basis_element,
    nsym_convert,
    nsym_element,
    nsym_multiply,
    star_antiautomorphism,
)
from .descent import (
    GroupAlgebraElement,
    Permutation,
    compose,
    convolve,
    cycle_type,
    delta,
    descent_composition_perm,
    descent_span_coordinates,
    group_algebra_element,
    max_group_degree,
    psi,
    psi_inverse,
    xi,
)
from .characters import (
    Check,
    ClassFunction,
    VerificationReport,
    ch_inverse,
    class_function,
    class_products,
    frobenius_ch,
    irreducible_character,
    noncommutative_character,
    theta,
    verify_main_theorem,
    young_character,
)
from .verification import SUITES, run_suite
from .errors import (
    BasisMismatchError,
    DegreeMismatchError,
    InternalConsistencyError,
    InvalidSubsetError,
    MalformedFillingError,
    NcsfError,
    NotInDescentSpanError,
    ResourceLimitError,
)

__version__ = "0.1.0"
