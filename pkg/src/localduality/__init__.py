"""Exact commutative algebra for local duality, linkage hulls and S_2 checks."""

from .ring import GF, QQ, Field, Matrix, MonomialOrder, Polynomial, Ring, det, mono_cmp
from .groebner import (
    GroebnerBasis, NotInModule, Submodule, annihilator, codimension, colon_functionals,
    dimension, groebner_basis, ideal, intersect, lift, normal_form, quotient, syzygies,
)
from .complexes import (
    ChainMap, FreeComplex, SubquotientPresentation, hom_dual, homology_presentation,
    homotopy_between, koszul, lift_chain_map, minimize, schreyer_resolution, wedge_power,
)
from .duality import (
    CohClass, CompleteIntersection, ExtClass, ci_ext_generator, ci_level_map,
    equidimensional_hull, ext_module, find_regular_sequence, induced_ext_map,
    pairing_eval, pairing_left_kernel, pairing_matrix, purity_test,
    right_injectivity_check, roos_map, sk_test, transformation_check,
)

__version__ = "0.1.0"
