"""Combinatorics of nilpotent orbits in the classical Lie algebras of types
B, C and D: partition arithmetic, block decompositions, Richardson orbits and
their polarizations, minimal Richardson orbits, fibration descriptors for the
fibers of generalized Springer maps, finite-field verification, and the
duality between the odd orthogonal and symplectic families.
"""

from .blocks import (
    Block,
    BlockDecomposition,
    ModifiedBlocks,
    canonical_quotient_order,
    decompose,
    is_richardson,
    is_special,
    pivot_candidates,
    reassemble,
)
from .duality import (
    DualPair,
    Report,
    dual_pair,
    epoly_equality_check,
    seesaw_check,
    springer_dual,
    springer_dual_inverse,
)
from .ff_oracle import (
    DEFAULT_BUDGET,
    FlagCount,
    JordanRealization,
    fiber_point_count,
    grassmannian_count,
    realize,
    resolve_budget,
)
from .levi import (
    InducedShape,
    LeviType,
    enumerate_levis,
    induced_shape,
    is_richardson_via_induction,
    langlands_dual_levi,
    levi_of_raw_shape,
    polarizations,
    richardson_orbit_of,
)
from .minimal import (
    IndexEntry,
    IndexSet,
    index_set,
    minimal_richardson_bruteforce,
    minimal_richardson_orbits,
    minimal_richardson_witnessed,
    modify_block,
    pseudo_polarizations,
)
from .partitions import (
    Family,
    OrbitLabel,
    Partition,
    collapse,
    dominance_leq,
    enumerate_valid,
    is_valid,
    orbit_dim,
    parse_partition,
    partitions_of,
    transpose,
)
from .spaltenstein import (
    EPolynomial,
    FibrationDescriptor,
    GrassStep,
    component_count,
    descriptor,
    distinguished_values,
    e_polynomial,
    ig_factors,
    og_tower,
    split_index,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockDecomposition",
    "DEFAULT_BUDGET",
    "DualPair",
    "EPolynomial",
    "Family",
    "FibrationDescriptor",
    "FlagCount",
    "GrassStep",
    "IndexEntry",
    "IndexSet",
    "InducedShape",
    "JordanRealization",
    "LeviType",
    "ModifiedBlocks",
    "OrbitLabel",
    "Partition",
    "Report",
    "canonical_quotient_order",
    "collapse",
    "component_count",
    "decompose",
    "descriptor",
    "distinguished_values",
    "dominance_leq",
    "dual_pair",
    "e_polynomial",
    "enumerate_levis",
    "enumerate_valid",
    "epoly_equality_check",
    "fiber_point_count",
    "grassmannian_count",
    "ig_factors",
    "index_set",
    "induced_shape",
    "is_richardson",
    "is_richardson_via_induction",
    "is_special",
    "is_valid",
    "langlands_dual_levi",
    "levi_of_raw_shape",
    "minimal_richardson_bruteforce",
    "minimal_richardson_orbits",
    "minimal_richardson_witnessed",
    "modify_block",
    "og_tower",
    "orbit_dim",
    "parse_partition",
    "partitions_of",
    "pivot_candidates",
    "polarizations",
    "pseudo_polarizations",
    "realize",
    "reassemble",
    "resolve_budget",
    "richardson_orbit_of",
    "seesaw_check",
    "split_index",
    "springer_dual",
    "springer_dual_inverse",
    "transpose",
]
