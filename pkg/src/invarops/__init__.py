"""Exact rational computer algebra for invariant differential operators
on coset spaces: PBW normal forms, symmetrization, reduction modulo the
covariance ideal, invariant polynomial algebras, and machine checks of
the decomposition, reductivity, commutativity, and generation statements
on concrete Lie algebras."""

from .coset import (
    DirectSumReport,
    GeneratorNotStableError,
    InvariantBasis,
    NotStableError,
    QuotientClass,
    check_commutativity,
    check_generation,
    check_laplace_generation,
    check_stable_span_equality,
    check_symmetrized_invariants_stable,
    in_ideal,
    invariants_basis,
    is_stable,
    project_mod_ideal,
    quotient_class,
    quotient_mul,
    stable_complement_basis,
    verify_direct_sum,
)
from .lie import (
    Character,
    ComplementSearch,
    CosetSetup,
    InvalidAutomorphismError,
    InvalidCharacterError,
    LieAlgebra,
    LieError,
    NotASubalgebraError,
    NotComplementaryError,
    StructureReport,
    Subspace,
    auto_complement,
    check_character,
    check_structure,
    invariant_complement,
    is_subalgebra,
    make_setup,
)
from .pbw import (
    DegreeCapError,
    PBWElement,
    ad_commutator,
    group_transform,
    pbw_from_vector_words,
    pbw_normalize,
    symmetrize,
    symmetrize_inverse,
    u_mul,
)
from .setupio import SetupFileError, load_preset, load_setup, preset_names
from .sympoly import (
    SymPoly,
    ad_derivation,
    ad_group,
    change_frame,
    complement_poly,
    embed_poly,
    monomial_basis,
    standard_frame,
)

__version__ = "0.1.0"
