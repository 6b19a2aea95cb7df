"""Exact combinatorial and algebraic invariants of simple matroids:
line-closure, nbc/nbb complexes, graded quotient dimensions of the exterior
algebra by circuit-boundary ideals, and formality of explicit realizations.
"""

from .catalog import CatalogEntry, catalog, lookup
from .io import ParsedMatroid, parse_matroid_file, parse_matroid_text, realization_to_text
from .report import Report, analyze, emit
from .algebra import (
    ExteriorElement,
    OSReport,
    boundary,
    dim_A,
    dim_Abar,
    gamma3,
    ideal_dim,
    ideal_r_dim,
    is_quadratic,
    lc_grading_dims,
    nbb_rank_in_Abar,
    os_report,
    phi3,
)
from .complexes import (
    PartialOrder,
    SimplicialComplex,
    broken_circuits,
    nbb,
    nbb_equals_nbc_all_orders,
    nbb_mobius_sum,
    nbb_partial,
    nbc,
    nbc_by_flat,
    r_nbb,
)
from .errors import (
    AxiomError,
    CatalogError,
    GuardError,
    InternalCheckError,
    NotSimpleError,
    OscalcError,
    ParseError,
    SectionError,
)
from .fields import GF, QQ, parse_field
from .formality import (
    RelationSpace,
    doublepoint_witness,
    formalization,
    generic_section,
    has_lc_spanning_basis,
    is_formal,
    is_locally_formal,
    locally_lc_spanning,
    parallel_condition,
    relation_space,
)
from .lines import (
    CharPoly,
    LcLattice,
    integer_roots,
    is_line_closed,
    is_r_closed,
    lc_dimension,
    line_closed_sets,
    line_closure,
    r_closure,
    whitney_numbers,
)
from .matroid import (
    FlatLattice,
    LinearOrder,
    Matroid,
    from_circuits,
    from_graph,
    from_lines,
    from_matrix,
    ranks_equal,
)
from .realization import Realization

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
