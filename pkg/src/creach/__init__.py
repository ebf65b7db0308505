"""creach: analysis toolkit for completely reachable binary automata.

Standardization of binary circular DFAs, orbit and forced-edge digraphs,
expanding/extending word search, exact subset reachability over the image
lattice, and verification of the n(n-k) reachability bound.
"""

from .core import (
    CapacityError,
    Dfa,
    StateSet,
    StateRangeError,
    Transformation,
    WordProfile,
    apply_word,
    as_stateset,
    check_word,
    compose,
    cyclic_shift,
    identity,
    image,
    is_permutation,
    lattice_limit,
    mod_add,
    preimage,
    shortlex_key,
    transformation_of,
    transition_monoid,
    word_profile,
)
from .digraph import Digraph, is_strongly_connected, sccs
from .examples import BUILTIN_NAMES, E21_LONG_REACH_WORD, builtin_example
from .expand import (
    ExpansionResult,
    expands,
    extends,
    find_non_n_expandable_subset,
    is_n_expandable,
    is_n_extensible,
    is_union_of_h0_cosets,
    non_extensible_subsets,
    orbit_expanding_word,
    shortest_expanding_word,
    shortest_extending_word,
)
from .formats import (
    AutomatonParseError,
    WordParseError,
    export_dot,
    parse_automaton,
    parse_word,
    render_automaton,
    render_word,
)
from .generate import FILTERS, enumerate_standardized, standardized_count, standardized_dfa
from .orbits import (
    OrbitData,
    cayley_digraph,
    cosets_of,
    orbit_data,
    orbit_digraph,
    restricted_orbit_digraph,
    spanning_gamma,
)
from .reach import (
    DonReport,
    DonSizeRow,
    DonViolation,
    ExpansionStep,
    ExpansionStuckError,
    ExpansionTrace,
    defect1_factorization,
    is_completely_reachable,
    reach_via_expansion,
    shortest_reaching_word,
    shortest_reset_word,
    subset_lattice,
    verify_defect1_product,
    verify_don,
)
from .rystsov import (
    ForcedEdge,
    forced_edge,
    forced_edges,
    is_perfectly_reachable,
    restricted_rystsov_digraph,
    rystsov_digraph,
)
from .standardize import (
    DuplNotSingletonError,
    ExclNotSingletonError,
    NoCyclicLetterError,
    NotStandardizedError,
    StandardizationError,
    StandardizationReport,
    circular_letters,
    is_standardized,
    require_standardized,
    standardize,
)

__version__ = "0.1.0"
