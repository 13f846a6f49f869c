"""Exact verification and construction of hom-center-symmetric algebras,
their bimodules, matched pairs, bialgebras and Manin doubles."""

from .bialg import (
    ComultiplicationView,
    EquivalenceReport,
    PairedAlgebras,
    check_bialgebra,
    check_bialgebra_homomorphism,
    check_cocycle,
    check_cocycle_coordinates,
    check_manin_invariance,
    comultiplication,
    dual_algebra,
    equivalence_report,
    standard_manin_algebra,
    standard_matched_pair,
    standard_pairing,
)
from .exactlin import InputError, scalar
from .homcore import (
    AxiomReport,
    HomAlgebra,
    Violation,
    ad_rep,
    alpha_associator,
    check_center_symmetric,
    check_hom_jacobi,
    check_homomorphism,
    check_multiplicative,
    check_skew,
    commutator_algebra,
    left_rep,
    right_rep,
)
from .matched import (
    MatchedPairCSA,
    MatchedPairHomLie,
    bicross_product,
    check_matched_pair_csa,
    check_matched_pair_hom_lie,
    induced_lie_matched_pair,
)
from .repmod import (
    Bimodule,
    Representation,
    bimodule_to_rep,
    check_bimodule,
    check_hom_lie_rep,
    dual_bimodule,
    regular_bimodule,
    rep_to_bimodule,
    semidirect_hom_csa,
    semidirect_hom_lie,
    tensor_product_rep,
)

__version__ = "0.1.0"
