"""Finite quantaloids, their diagonal constructions, quantaloid-enriched
categories, and partial metric spaces — with exact (rational) arithmetic
throughout and exhaustive checkers for every law the structures promise.
"""

from .errors import (EnumerationBoundError, PreconditionError, QcatError,
                     StructureError)
from .extval import INF, ZERO, ExtVal, fmt_ext, parse_ext, tri
from .lattice import HomLattice, chain_lattice, powerset_lattice
from .quantaloid import (Arrow, FiniteQuantaloid, analyze_properties,
                         check_cauchy_bilateral, check_strong_cauchy_bilateral,
                         extension, is_commutative, is_diagonal, join, lifting,
                         meet, non_zero_part, symmetry_witness,
                         truncated_addition_chain, underlying_locale,
                         validate_quantaloid)
from .diagonals import (LaxFunctor, check_lax_functor, compose_lax,
                        diagonal_quantaloid, embed_I, identity_lax,
                        lax_full_faithful, project_J0, project_J1, project_K)
from .category import (EnrichedCategory, EnrichedDistributor, EnrichedFunctor,
                       Presheaf, cauchy_completion, change_of_base, closure,
                       closure_report, dist_compose, dist_ext, dist_lift,
                       is_cauchy_complete, is_fully_dense, is_fully_faithful,
                       presheaf_category, symmetrize, underlying_order,
                       validate, validate_category, validate_distributor,
                       validate_functor, yoneda)
from .pms import (PartialMetricSpace, SampledSequence, CauchyPair, Verdict,
                  closure_membership, closure_set, complete_finite,
                  converges_to, derived_metrics, discretize_to_category,
                  exponentiable, hausdorff, seq_cauchy, seq_equivalent,
                  seq_to_cauchy_pair, seq_type, terminal_sample, validate_pms,
                  word_space)

__version__ = "0.1.0"
