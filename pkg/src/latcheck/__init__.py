"""Finite-lattice computations for the structure theory of sublattices of
free lattices in the pentagon variety: law predicates, McKenzie's catalog,
variety membership, distributive decompositions (Dec), the free-lattice word
problem, and a machine-verification harness for the structural theorems."""

__version__ = "0.1.0"

from .core import (
    CoverDiagram,
    EmbeddingWitness,
    FiniteLattice,
    atoms,
    are_isomorphic,
    build_lattice,
    canonical_form,
    coatoms,
    covers_of,
    direct_product,
    dual,
    generated_sublattice,
    maximal_antichains,
)
from .laws import (
    LawProfile,
    dilworth_bound_holds,
    distributive,
    doubly_reducible_elements,
    is_finite_free_sublattice,
    law_profile,
    length,
    modular,
    semidistributive,
    whitman,
)
from .catalog import get as catalog_get, mckenzie_semidistributive_split
from .embed import ForbiddenProfile, contains_forbidden, find_embedding, iter_embeddings
from .variety import (
    Congruence,
    all_congruences,
    in_n5_variety,
    is_subdirectly_irreducible,
    principal_congruence,
    quotient,
    si_factors,
)
from .decomp import (
    DistributivePartition,
    GJDecomposition,
    dec,
    gj_classify,
    is_distributive_partition,
    minimum_distributive_partitions,
)
from .freeterm import (
    FreeTerm,
    canonicalize,
    evaluate,
    find_free_embedding,
    leq as term_leq,
    parse_term,
    term_equal,
    verify_free_embedding,
)
from .enumeration import all_lattices, filtered
from .theorems import TheoremReport, run_check, run_profile
