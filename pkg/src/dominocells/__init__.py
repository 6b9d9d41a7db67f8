"""
Exact combinatorics of signed permutations, rank-r domino tableaux,
cycles, insertion, combinatorial cells, and an exact unequal-parameter
Kazhdan-Lusztig oracle, with exhaustive verification suites.
"""

from .wgroup import (
    Generator, DescentSet, compose, inverse, identity, length,
    right_descends, tau_invariant, enhanced_tau_invariant, is_nonsplit,
    enumerate_group, group_elements, parse_perm, format_perm,
    simple_generators, generator_perm,
)
from .shapes import staircase, two_core, removable_dominos, diagonal
from .tableaux import (
    DominoTableau, TableauPair, TableauError, tau_of_tableau,
    enhanced_tau_of_tableau, enumerate_sdt, core_tableau,
)
from .cycles import (
    REGULAR, OPPOSITE, Cycle, ExtendedCycles, cycle_partition,
    move_through, extended_cycles, raise_rank, lower_rank,
)
from .insertion import (
    insert, insertion_states, uninsert, asymptotic_bitableaux, split_rank,
)
from .cells import (
    CellPartition, class_of_tableau, combinatorial_cells, asymptotic_cells,
)
from .hecke import (
    LaurentPolynomial, WeightFunction, kl_basis, kl_cells, bruhat_leq,
)

__version__ = "0.1.0"
