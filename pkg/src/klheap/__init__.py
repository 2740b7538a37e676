"""Polynomial invariants of 321-hexagon-avoiding permutations.

The package computes the polynomial table attached to a permutation two
ways — by enumerating masks on a reduced word and counting defects, and
through the canonical basis of the Hecke algebra — and exposes the heap
machinery (embeddings, cones, critical zeros, singular triples) that
makes the first computation work.
"""

from .errors import ConsistencyError, InputError, ResourceLimitError
from .perm import (
    HEXAGON_PATTERNS,
    HEXAGON_WORD,
    all_321_avoiding,
    all_below,
    apply_word,
    bruhat_leq,
    canonical_reduced_word,
    catalan,
    compose,
    contains_pattern,
    format_perm,
    format_word,
    identity,
    inverse,
    is_321_avoiding,
    is_321_hexagon_avoiding,
    is_hexagon_avoiding,
    is_reduced,
    lateral_convexity_check,
    length,
    parse_perm,
    parse_word,
)
from .qpoly import (
    bar,
    coeff_at,
    degree,
    poly_add,
    poly_eval,
    poly_mul,
    poly_shift,
    poly_text,
    q_fibonacci,
    rational_series_coeff,
)
from .heap import HeapEmbedding, build_heap, cone_points, heap_json, level_raw, render_ascii
from .deodhar import (
    CriticalZeros,
    DefectGraph,
    DefectRecord,
    critical_zeros,
    defect_graph,
    defect_set,
    delta,
    deodhar_poly,
    deodhar_table,
    deodhar_table_naive,
    format_mask,
    is_forest,
    parse_mask,
    recursion_check,
)
from .hecke import (
    bar_element,
    c_prime_s,
    is_tight,
    kl_table,
    poincare_ih,
    t_mul_gen,
)
from .schubert import (
    SingularTriple,
    codim_check,
    is_smooth,
    max_singular_locus,
    max_singular_locus_oracle,
    singular_triples,
)
from .verify import verify_battery

__version__ = "0.1.0"
