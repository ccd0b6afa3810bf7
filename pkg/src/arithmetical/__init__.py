"""Arithmetical structures on paths and cycles, in exact integer arithmetic."""

from .algebra import AbelianGroup, SmithForm, critical_group, generalized_laplacian, smith_normal_form
from .bijections import (
    Triangulation,
    apply_plan,
    f_map,
    f_map_inductive,
    iter_ballot_words,
    normalize_plan,
    omega,
    omega_inverse,
    plan_from_structure,
    quiddity,
    rotate_triangulation,
    structure_from_triangulation,
    triangulation_from_structure,
    word_decode,
    word_encode,
)
from .combinatorics import (
    CountTable,
    aigner_schulze_count,
    ballot,
    binomial,
    catalan,
    cycle_count_refined,
    dsum_census_closed,
    multichoose,
    path_count_refined,
)
from .core import ArithmeticalError, ArithmeticalStructure, Graph, d_from_r, make_graph, r_ones, validate
from .cycle_enum import (
    census_by_r1_cycle,
    census_d_equals_one,
    cut_cycle_at_one,
    cut_cycle_between,
    enumerate_cycles,
)
from .oracle import brute_force_cycle, brute_force_general, brute_force_path, star_structures
from .path_enum import (
    SubdivisionPlan,
    census_by_d_entry,
    census_by_dsum,
    census_by_r1,
    d_zero,
    enumerate_paths,
    split_at_one,
)
from .transforms import (
    canonical_orbit_rep,
    rotate_multiset,
    rotate_structure,
    smooth_cycle,
    smooth_path,
    subdivide_cycle,
    subdivide_path,
)

__version__ = "0.1.0"
