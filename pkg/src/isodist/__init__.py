"""Endomorphism-ring distribution laws in ordinary isogeny classes over F_p.

The library computes, as exact rationals, how endomorphism rings distribute
across an ordinary isogeny class (through weighted class numbers and the
induced l-adic conductor laws), and how the primes admitting a given CM order
distribute (Chebotarev density 1/(2h(D))).  Every formula is verified against
exhaustive censuses, volcano graph structure, and Hilbert polynomial
splitting; `isodist verify ...` runs those suites from the command line.
"""

from .census import build_census, summary_json, verify_deuring_counts
from .classfield import (
    HILBERT_TABLE,
    chebotarev_scan,
    cm_existence,
    hilbert_mod_p,
    hilbert_polynomial,
    representation_test,
)
from .curves import Curve, curves_for_j, j_invariant, point_count
from .distributions import compare_with_census, exact_density, level_masses
from .finitefield import PrimeField, is_prime, kronecker, sqrt_mod_p
from .quadforms import (
    ClassData,
    QuadraticForm,
    class_number,
    class_number_by_formula,
    decompose,
    reduce_form,
    reduced_forms,
    weighted_decomposition,
)
from .volcano import (
    build_component,
    classify_rings,
    components,
    neighbors,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "PrimeField",
    "Curve",
    "ClassData",
    "QuadraticForm",
    "HILBERT_TABLE",
    "build_census",
    "build_component",
    "chebotarev_scan",
    "class_number",
    "class_number_by_formula",
    "classify_rings",
    "cm_existence",
    "compare_with_census",
    "components",
    "curves_for_j",
    "decompose",
    "exact_density",
    "hilbert_mod_p",
    "hilbert_polynomial",
    "is_prime",
    "j_invariant",
    "kronecker",
    "level_masses",
    "neighbors",
    "point_count",
    "reduce_form",
    "reduced_forms",
    "representation_test",
    "sqrt_mod_p",
    "summary_json",
    "verify_deuring_counts",
    "verify_structure",
    "weighted_decomposition",
    "__version__",
]
