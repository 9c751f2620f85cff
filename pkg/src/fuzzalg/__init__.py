"""Fuzzy connectives, uninorms, nullnorms and checkers for fuzzy and vague monoids."""
from .algebra import BoundedLattice, Carrier, Monoid, OperationStructure, grid_structure
from .connectives import S_D, S_L, S_M, S_P, T_D, T_L, T_M, T_P, TConorm, TNorm
from .fuzzy_monoids import (
    FuzzySubset, check_a_fuzzy_submonoid, check_f_fuzzy_submonoid, check_u_fuzzy_submonoid,
)
from .nullnorms import Nullnorm
from .numerics import DEFAULT_POLICY, MonotoneFunction, TolerancePolicy, pseudo_inverse, uniform_grid
from .operators import MinAggregation
from .uninorms import (
    CosMaxUninorm, CosMinUninorm, IdempotentUninorm, RepresentableUninorm, UMax, UMin, u_max, u_min,
)
from .vague import IndistinguishabilityOp, VagueOp, vague_from_monoid

__version__ = "0.1.0"
