"""Finite BCK, MV and Wajsberg algebras as Cayley tables."""

from .core import (
    AlgebraError,
    CayleyTable,
    FiniteAlgebra,
    Kind,
    OrderRelation,
    bound_element,
    complement_of,
    derived_order,
    involutions,
    new_algebra,
)
from .axioms import (
    VerificationReport,
    Violation,
    check_bci,
    check_bck,
    check_morphism,
    check_mv,
    check_wajsberg,
    is_commutative,
    is_implicative,
    is_positive_implicative,
)
from .transforms import (
    DerivedMvOps,
    bck_to_mv,
    bck_to_wajsberg,
    derive_mv_ops,
    iseki_extension,
    mv_to_bck,
    mv_to_wajsberg,
    wajsberg_to_bck,
    wajsberg_to_mv,
)
from .enumeration import (
    Factorization,
    direct_product,
    enumerate_wajsberg,
    factorizations,
    find_isomorphism,
    lukasiewicz_chain,
    poset_isomorphic,
)
from .substructures import (
    closure_of,
    ideals,
    induced_subalgebra,
    is_ideal,
    is_subalgebra,
    subalgebras,
)
from .algfile import (
    ParseError,
    fixture_dir,
    load_algebra,
    parse_algebra,
    render_algebra,
    save_algebra,
)

__all__ = [
    "AlgebraError",
    "CayleyTable",
    "DerivedMvOps",
    "Factorization",
    "FiniteAlgebra",
    "Kind",
    "OrderRelation",
    "ParseError",
    "VerificationReport",
    "Violation",
    "bck_to_mv",
    "bck_to_wajsberg",
    "bound_element",
    "check_bci",
    "check_bck",
    "check_morphism",
    "check_mv",
    "check_wajsberg",
    "closure_of",
    "complement_of",
    "derive_mv_ops",
    "derived_order",
    "direct_product",
    "enumerate_wajsberg",
    "factorizations",
    "find_isomorphism",
    "fixture_dir",
    "ideals",
    "induced_subalgebra",
    "involutions",
    "is_commutative",
    "is_ideal",
    "is_implicative",
    "is_positive_implicative",
    "is_subalgebra",
    "iseki_extension",
    "load_algebra",
    "lukasiewicz_chain",
    "mv_to_bck",
    "mv_to_wajsberg",
    "new_algebra",
    "parse_algebra",
    "poset_isomorphic",
    "render_algebra",
    "save_algebra",
    "subalgebras",
    "wajsberg_to_bck",
    "wajsberg_to_mv",
]
