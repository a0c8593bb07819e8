"""Power-type graphs and cyclic subgroup lattices of finite groups.

The enhanced power graph of a finite group and the order-labelled lattice of
its cyclic subgroups carry the same information: either one can be rebuilt
from the other without touching the group operation, and the power graph,
directed power graph and difference graph all follow from the lattice alone.
This package computes all of these objects directly from multiplication
tables (the oracles) and implements the element-free reconstructions, so
every reconstruction can be checked against ground truth.
"""

from .group_core import (
    CyclicSubgroup,
    FiniteGroup,
    cyclic_subgroups,
    element_order,
    generated_subgroup,
    is_abelian,
    maximal_cyclic_subgroups,
    order_statistics,
    validate_group,
)
from .catalog import (
    NamedGroup,
    alternating,
    build_group,
    cyclic_group,
    dihedral,
    direct_product,
    format_group_expr,
    from_cayley_csv,
    from_permutations,
    generalized_quaternion,
    heisenberg,
    modular_group,
    order16_catalog,
    parse_group_expr,
    semidihedral,
    symmetric,
)
from .lattice import (
    CyclicLattice,
    LatticeWithSubgroups,
    build_lattice,
    divisor_cover_pairs,
    down_set,
    levelize,
    predecessors,
    totient,
    validate_lattice,
)
from .power_graphs import (
    Digraph,
    DifferenceGraph,
    SimpleGraph,
    diff_oracle,
    dirpow_oracle,
    epow_oracle,
    maximal_cliques,
    pow_oracle,
)
from .reconstruct import (
    CanonicalLabel,
    LabeledDigraph,
    LabeledGraph,
    NotAnEnhancedPowerGraph,
    diff_from_lattice,
    diff_incomparability,
    dirpow_from_lattice,
    epow_from_lattice,
    lattice_from_epow,
    new_vertices,
    oracle_labeling,
    pow_from_lattice,
)
from .iso import (
    EquivalenceProfile,
    IsoResult,
    IsoTimeout,
    compare_groups,
    digraph_isomorphism,
    graph_isomorphism,
    labeled_lattice_isomorphism,
    poset_isomorphism,
)

__version__ = "0.1.0"
