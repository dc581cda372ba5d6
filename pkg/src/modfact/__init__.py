"""Exact arithmetic for module/matrix factorizations of a regular normal ring element.

The toolkit works over four concrete base rings (integers, univariate
polynomials over a prime field, skew polynomials over a small Galois field
twisted by Frobenius, and integral group rings of cyclic groups), and
implements the factorization category, its homotopy relation, the cokernel
functors into the quotient ring, and desk-scale verification suites.
"""

from modfact.rings import (
    IntegerRing,
    PolyRing,
    SkewPolyRing,
    GroupRing,
    UnsupportedRing,
)
from modfact.matrices import Matrix
from modfact.factorizations import (
    ModuleFactorization,
    FactorizationMorphism,
    check_axioms,
    direct_sum,
    shift,
    theta0,
    theta1,
    unshift,
)
from modfact.homotopy import (
    Homotopy,
    SearchBoundExceeded,
    is_p_null_homotopic,
    stable_hom,
    stable_iso,
    syzygy,
)
from modfact.modules import (
    InvariantFactorForm,
    ModulePresentation,
    NoOracle,
    NotFinitePd,
    cokernel_presentation,
    free_cover_step,
    invariant_factors,
    is_gorenstein_projective,
    presentation,
)
from modfact.cokfun import (
    cok0,
    cok0_on_morphism,
    cok1,
    lift_map,
    mf_from_module,
    pd_over_A,
    periodic_resolution,
)

__all__ = [
    "IntegerRing",
    "PolyRing",
    "SkewPolyRing",
    "GroupRing",
    "UnsupportedRing",
    "Matrix",
    "ModuleFactorization",
    "FactorizationMorphism",
    "check_axioms",
    "direct_sum",
    "shift",
    "theta0",
    "theta1",
    "unshift",
    "Homotopy",
    "SearchBoundExceeded",
    "is_p_null_homotopic",
    "stable_hom",
    "stable_iso",
    "syzygy",
    "InvariantFactorForm",
    "ModulePresentation",
    "NoOracle",
    "NotFinitePd",
    "cokernel_presentation",
    "free_cover_step",
    "invariant_factors",
    "is_gorenstein_projective",
    "presentation",
    "cok0",
    "cok0_on_morphism",
    "cok1",
    "lift_map",
    "mf_from_module",
    "pd_over_A",
    "periodic_resolution",
]
