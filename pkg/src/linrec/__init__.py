"""Exact linear recurrences in one and several dimensions over commutative rings."""

from .closedform import (
    R_poly,
    R_rational,
    RootPair,
    S_value,
    gf_via_roots,
    term_via_roots,
)
from .errors import (
    AmbiguousOrbitError,
    HypothesisError,
    LinrecError,
    NotInvertibleError,
    RingMismatchError,
    SchemaError,
    SpecMismatchError,
)
from .genfun import RationalGF, TruncatedSeries, expand, gf, verify_gf
from .multiseq import (
    Block,
    MultiSequence,
    MultiSpec,
    antisymmetrize,
    box_indices,
    decompose_tensor,
    diagonal_check,
    diagonal_identity_fib,
    direct_sum,
    direct_sum_mixed,
    from_sequence,
    is_antisymmetric,
    is_symmetric,
    symmetrize,
    tensor_product,
)
from .orbits import (
    Orbit,
    block_index,
    block_sequence,
    classify_orbits,
    enumerate_blocks,
    format_block,
    format_shift,
    generation_certificate,
    positions_determine,
)
from .recurrence import Recurrence, Sequence, check_membership, reconstruct
from .rings import (
    QQ,
    ZZ,
    IntegerModRing,
    IntegerRing,
    ModuleElement,
    PolynomialRing,
    ProductRing,
    RationalRing,
    Ring,
    RingElement,
    as_module_element,
)

__all__ = [
    "AmbiguousOrbitError",
    "HypothesisError",
    "LinrecError",
    "NotInvertibleError",
    "RingMismatchError",
    "SchemaError",
    "SpecMismatchError",
    "QQ",
    "ZZ",
    "IntegerModRing",
    "IntegerRing",
    "ModuleElement",
    "PolynomialRing",
    "ProductRing",
    "RationalRing",
    "Ring",
    "RingElement",
    "as_module_element",
    "Recurrence",
    "Sequence",
    "check_membership",
    "reconstruct",
    "Block",
    "MultiSequence",
    "MultiSpec",
    "antisymmetrize",
    "box_indices",
    "decompose_tensor",
    "diagonal_check",
    "diagonal_identity_fib",
    "direct_sum",
    "direct_sum_mixed",
    "from_sequence",
    "is_antisymmetric",
    "is_symmetric",
    "symmetrize",
    "tensor_product",
    "RationalGF",
    "TruncatedSeries",
    "expand",
    "gf",
    "verify_gf",
    "RootPair",
    "R_poly",
    "R_rational",
    "S_value",
    "gf_via_roots",
    "term_via_roots",
    "Orbit",
    "block_index",
    "block_sequence",
    "classify_orbits",
    "enumerate_blocks",
    "format_block",
    "format_shift",
    "generation_certificate",
    "positions_determine",
]

__version__ = "0.1.0"
