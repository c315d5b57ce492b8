"""Arithmetic Singleton bounds for simple-rooted constacyclic codes over finite fields."""

from .bounds import BoundReport, bound_from_med, bound_report, irreducible_bounds, irreducible_coincide
from .codes import (
    BudgetExceeded,
    ConstacyclicCode,
    DistanceResult,
    brute_force_distance,
    build_code,
    code_bound_report,
    generator_divisors,
    shift,
)
from .cyclotomic import Coset, all_cosets, coset, coset_med, is_equal_difference, omega, sigma_gamma
from .finite_field import FieldCtx, FieldElement, base_field, make_field
from .medrep import all_med_representations, coarsest_med, med_representation, stabilizer
from .polynomial import Poly, defining_set, parse_poly, poly_order
from .residues import DefiningSet, MedRep

__version__ = "0.1.0"
