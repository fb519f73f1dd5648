"""Exact covering numbers of finite rings by proper subrings."""
from . import catalog
from .catalog import lookup
from .constructors import canonical, construct, load_ring
from .cover import (CoverReport, all_minimum_covers, is_coverable, sigma_bruteforce,
                    sigma_elementary, sigma_exact, sigma_J, verify_case1_sigma)
from .errors import RingCoverError
from .formulas import (FieldProductShape, SigmaPrediction, omega, predict_sigma_commutative,
                       psi, sigma_field_power, sigma_field_product, tau, thirteen_search)
from .lattice import all_subrings, maximal_subrings, two_sided_ideals
from .radical import (jacobson_radical, reduce, semisimple_profile, split_by_prime,
                      wedderburn_complements)
from .ring import FiniteRing, RingSpec, is_isomorphic, make_ring, product, quotient

__version__ = "0.1.0"

__all__ = [
    "catalog", "lookup", "canonical", "construct", "load_ring",
    "CoverReport", "all_minimum_covers", "is_coverable", "sigma_bruteforce", "sigma_elementary",
    "sigma_exact", "sigma_J", "verify_case1_sigma", "RingCoverError",
    "FieldProductShape", "SigmaPrediction", "omega", "predict_sigma_commutative", "psi",
    "sigma_field_power", "sigma_field_product", "tau", "thirteen_search",
    "all_subrings", "maximal_subrings", "two_sided_ideals",
    "jacobson_radical", "reduce", "semisimple_profile", "split_by_prime", "wedderburn_complements",
    "FiniteRing", "RingSpec", "is_isomorphic", "make_ring", "product", "quotient",
]
