"""Exact structure analysis of real Clifford algebras Cl(p,q).

Classifies each algebra as a matrix algebra over R, C, or H (or a double
copy of one), constructs the commuting monomial frames and primitive
idempotents behind that structure, extracts spinor bases of minimal left
ideals together with faithful matrix images of the generators, and verifies
the whole decomposition with exact rational arithmetic.
"""

from .classify import (
    AlgebraClass,
    K_DIMENSION,
    classification_table,
    classify,
    radon_hurwitz,
    render_table_text,
    table_json,
)
from .core import (
    MAX_DIMENSION,
    Multivector,
    Signature,
    SignatureMismatchError,
    blade_mul,
    blade_name,
    blade_square_sign,
    blades_commute,
    format_multivector,
    grade,
    grade_involution,
    multivector_from_json_dict,
    multivector_to_json_dict,
    parse_multivector,
)
from .division import (
    DivisionRingBasis,
    KElement,
    NotPrimitiveError,
    UnitConstructionError,
    division_ring_basis,
)
from .idempotents import (
    FrameSearchError,
    IdempotentSet,
    IdempotentSetError,
    MonomialFrame,
    center_basis,
    central_idempotents,
    complete_set,
    find_frame,
    is_idempotent,
    is_primitive,
    primitive_idempotent,
)
from .representation import (
    Component,
    KMatrix,
    Representation,
    RepresentationError,
    SpinorBasis,
    build_representation,
    format_kelement,
    format_kmatrix,
    kmatrix_add,
    kmatrix_eq,
    kmatrix_mul,
    represent,
    represent_semisimple,
    representation_from_json_dict,
    representation_to_json_dict,
    spinor_basis,
    spinor_coordinates,
)
from .verify import (
    CheckResult,
    DEFAULT_SAMPLE_SEED,
    RangeSummary,
    VerificationReport,
    brute_force_minimal_ideal_dim,
    verify_range,
    verify_representation,
    verify_signature,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass",
    "CheckResult",
    "Component",
    "DEFAULT_SAMPLE_SEED",
    "DivisionRingBasis",
    "FrameSearchError",
    "IdempotentSet",
    "IdempotentSetError",
    "KElement",
    "KMatrix",
    "K_DIMENSION",
    "MAX_DIMENSION",
    "MonomialFrame",
    "Multivector",
    "NotPrimitiveError",
    "RangeSummary",
    "Representation",
    "RepresentationError",
    "Signature",
    "SignatureMismatchError",
    "SpinorBasis",
    "UnitConstructionError",
    "VerificationReport",
    "blade_mul",
    "blade_name",
    "blade_square_sign",
    "blades_commute",
    "brute_force_minimal_ideal_dim",
    "build_representation",
    "center_basis",
    "central_idempotents",
    "classification_table",
    "classify",
    "complete_set",
    "division_ring_basis",
    "find_frame",
    "format_kelement",
    "format_kmatrix",
    "format_multivector",
    "grade",
    "grade_involution",
    "is_idempotent",
    "is_primitive",
    "kmatrix_add",
    "kmatrix_eq",
    "kmatrix_mul",
    "multivector_from_json_dict",
    "multivector_to_json_dict",
    "parse_multivector",
    "primitive_idempotent",
    "radon_hurwitz",
    "render_table_text",
    "represent",
    "represent_semisimple",
    "representation_from_json_dict",
    "representation_to_json_dict",
    "spinor_basis",
    "spinor_coordinates",
    "table_json",
    "verify_range",
    "verify_representation",
    "verify_signature",
]
