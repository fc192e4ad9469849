"""Exact computations on clutters: covers, idealness, max-flow min-cut, lattices and triangulations."""
from ._backend import BACKEND
from .clutter import (
    Clutter,
    Matching,
    canonical_form,
    incidence_matrix,
    is_bipartite,
    make_clutter,
    maximum_matching,
    minor,
    parse_clutter,
    perfect_matching,
    uniformity,
)
from .covers import (
    CoverList,
    CoverPartition,
    blocker,
    cover_partition,
    covering_number,
    has_konig,
    has_packing_property,
    is_2_partitionable,
    is_unmixed,
    is_vertex_critical,
    exact_hit_cover,
    matching_number,
    minimal_vertex_covers,
)
from .errors import *  # noqa: F401,F403
from .fixtures import FIXTURES, Fixture, get_fixture
from .linalg import (
    Lattice,
    SnfResult,
    delta_r,
    hnf,
    invariant_factors,
    is_t_unimodular,
    lattice_contains,
    lattice_equal,
    lattice_index,
    rank,
    smith_normal_form,
    torsion_trivial,
)
from .matrix import IntMatrix, parse_matrix
from .polyhedra import (
    RationalPolyhedron,
    Triangulation,
    check_triangulation,
    cone_facets,
    covering_polyhedron,
    dd_convert,
    intiffint_check,
    is_ideal,
    is_unimodular_triangulation,
    parse_polyhedron,
    rees_cone_facets,
    regular_triangulation,
)
from .properties import PropertyReport, has_mfmc, is_balanced, tdi_spot_check, verify_theorem
from .report import build_report
from .search import SearchTask, run_search, theorem_suite
from .semigroup import (
    MonomialIdeal,
    Semigroup,
    closure_equality_delta,
    ehrhart_equality,
    is_hilbert_basis,
    is_minimally_non_normal,
    rees_is_normal,
    semigroup_member,
    symbolic_power,
    symbolic_power_equals_ordinary,
)
from .verdict import Verdict

__version__ = "0.1.0"
