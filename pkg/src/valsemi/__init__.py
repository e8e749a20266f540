"""Exact computation of valuation semigroups on K[X,Y] and on the invariant
subrings K[X,Y]^H for diagonal actions of finite abelian groups H, with
finite-generation decisions, explicit witness valuations, and value-group
index certificates."""

from .errors import (ConstructionError, DepthError, DomainError,
                     GrowthConditionError, InconsistentSequenceError,
                     OracleBoundError, ParameterError, PrimeSearchCeilingError,
                     TrivialGroupError, ZeroPolynomialError)
from .groups import (GoursatTuple, GroupElement, GroupSpec, SubgroupParams,
                     enumerate_subgroups, generating_pair, goursat_tuple,
                     list_elements, subgroup_order, validate_params)
from .invariants import (ConstructionTrace, FGDecision, StructureReport, Verdict,
                         construct_valuation_t1, construct_valuation_tgt1,
                         decide_finite_generation, eigen_condition,
                         invariant_semigroup_slice, verify_structure_invariants)
from .numtheory import (RootContext, delta_exponent, format_rational,
                        group_membership, parse_rational, primes_in_ap,
                        rational_group_generator, roots_equal)
from .qpoly import (EigenReport, GeneratingSequence, QAdicTerm, QPolynomial,
                    build_generating_sequence, eigen_report, format_polynomial,
                    parse_polynomial, q_adic_expansion, valuation_of)
from .splitting import SplittingReport, splitting_report
from .valuation import (DerivedIndices, ExpansionTerm, SemigroupSlice,
                        ValueSequence, expand_value, mbar, semigroup_slice,
                        validate_sequence)

__version__ = "0.1.0"
