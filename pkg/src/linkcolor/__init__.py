"""Goeritz forms and coloring invariants of planar link diagram codes.

The pipeline runs: parse a code, trace its complementary regions,
checkerboard-shade them, read off the Goeritz matrix, diagonalize it
over Z, and interpret the invariant factors as coloring groups. The
reverse direction is ``realize``, which builds a diagram presenting any
prescribed factor sequence. All matrix work is exact integer
arithmetic.
"""

from .catalog import CODES, load, names
from .coloring import (
    ColoringReport,
    CrossingRelation,
    arc_partition,
    coloring_equivalent,
    crossing_relations,
    dehn_count_bruteforce,
    dehn_structure,
    fox_count_bruteforce,
    structure_count,
)
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    NonPlanarError,
    RegionMap,
    disjoint_union,
    parse_diagram,
    relabel_edges,
    serialize_diagram,
    trace_regions,
    underlying_components,
)
from .goeritz import GoeritzData, adjusted_goeritz, goeritz_index, goeritz_matrix
from .intlattice import (
    GroupDescriptor,
    IntMatrix,
    SNFResult,
    WorkBoundError,
    cokernel_descriptor,
    determinant,
    elementary_gcds,
    invariant_factors,
    kernel_count_mod,
    smith_normal_form,
    snf_matrix,
)
from .realize import Realization, realize, verify_realization
from .shading import CheckerboardGraph, Shading, checkerboard, checkerboard_graphs

__version__ = "0.1.0"

__all__ = [
    "CODES",
    "CheckerboardGraph",
    "ColoringReport",
    "Crossing",
    "CrossingRelation",
    "Diagram",
    "DiagramError",
    "GoeritzData",
    "GroupDescriptor",
    "IntMatrix",
    "NonPlanarError",
    "Realization",
    "RegionMap",
    "SNFResult",
    "Shading",
    "WorkBoundError",
    "adjusted_goeritz",
    "arc_partition",
    "checkerboard",
    "checkerboard_graphs",
    "cokernel_descriptor",
    "coloring_equivalent",
    "crossing_relations",
    "dehn_count_bruteforce",
    "dehn_structure",
    "determinant",
    "disjoint_union",
    "elementary_gcds",
    "fox_count_bruteforce",
    "goeritz_index",
    "goeritz_matrix",
    "invariant_factors",
    "kernel_count_mod",
    "load",
    "names",
    "parse_diagram",
    "realize",
    "relabel_edges",
    "serialize_diagram",
    "smith_normal_form",
    "snf_matrix",
    "structure_count",
    "trace_regions",
    "underlying_components",
    "verify_realization",
    "__version__",
]
