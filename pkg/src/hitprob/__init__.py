"""Admissible monomial bases for the cohit spaces of F2[t1..th] under the Steenrod squares."""

__version__ = "0.1.0"

from .monomials import (  # noqa: F401
    ContractError,
    NoSpikeError,
    Polynomial,
    alpha,
    compare,
    deg_of_weight,
    enumerate_monomials,
    is_spike,
    minimal_spike,
    mu,
    mu_decomposition,
    weight_vector,
)
from .steenrod import binom_mod2, hit_generators, sq, sq_on_power  # noqa: F401
from .gf2 import GF2Matrix, constrained_span, echelonize, kernel_basis, rank, reduce_vector  # noqa: F401
from .hit import (  # noqa: F401
    CohitBasis,
    QuotientPresentation,
    cohit_basis,
    omega_presentation,
    positive_zero_split,
    reduce_mod_omega,
    singer_hit_filter,
    stratify,
    wood_vanishing,
    zero_part_crosscheck,
)
from .kameko import kameko_down_monomial, kameko_iso_predicate, kameko_matrix, kameko_up  # noqa: F401
from .invariants import action_matrix, invariant_space, sigma_apply  # noqa: F401
