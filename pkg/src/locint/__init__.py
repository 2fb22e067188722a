"""Loc-lattices, their semi-prime filters and interval representations."""
from .filters import (
    Filter,
    Ideal,
    Overlap,
    SemiPrimeSpace,
    enumerate_filters,
    enumerate_ideals,
    extend_to_semiprime,
    is_completely_separated,
    is_semi_prime,
    is_well_separated,
    semiprime_filters,
)
from .io import BadInput, fixture, load_input
from .lattice import (
    FiniteLattice,
    NoBottom,
    NotALattice,
    CyclicCovers,
    accessibility,
    build_lattice,
    internal_elements,
    is_interlocking,
    is_loc_lattice,
)
from .oracle import (
    BudgetExceeded,
    SearchBudget,
    brute_force_order,
    brute_force_representation,
    enumerate_lattices,
    sample_interval_sublattice,
)
from .ordering import (
    AmbiguousCase,
    ConsistentTriple,
    LinearOrder,
    NotLoc,
    NotSeparating,
    OracleFallbackUsed,
    Section,
    Unrealizable,
    altwegg_realize,
    build_consistent_order,
    classify_point,
    construct_order,
    extend_step,
    is_consistent,
    order_completely_separated,
)
from .represent import (
    IntervalRepresentation,
    open_interval_check,
    represent_intervals,
    verify_faithful,
    verify_representation,
)
from .setfam import SetFamily, is_loc_setfamily, leader_preorder, representative_family, separation_profile, ternary
from .stone import InvariantViolation, StoneRepresentation, stone_map, verify_stone
from .verdict import LocIntError, SizeGuard, Verdict

__version__ = "0.1.0"
