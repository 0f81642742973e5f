"""Exact lattice algebra, tube-domain Fourier series and audits of singular
Borcherds products."""

from .audit import (AuditReport, CandidateProduct, DivisorClass, PrincipalPart, PrincipalTerm,
                    RankVerdict, audit, bookkeeping_feasible, check_mK, check_reflective,
                    check_simple_zeros, check_singular, divisor_classes, rank_verdict,
                    singular_weight)
from .catalog import get_form, get_lattice
from .lattice import (DiscriminantData, DomainError, GramLattice, LatticeError, bilinear,
                      direct_sum, discriminant_group, is_even, is_in_dual, is_integral_reflection,
                      norm_ideal_generator, reflection_matrix, rescale, short_vectors, signature, vec)
from .series import (INFINITY, FiberDecomposition, FourierSeries, TubeDatum, apply_isometry,
                     fiber_decompose, is_anti_invariant, is_singular, laplace_normalized,
                     order_along, theorem1_witness)

__version__ = "0.1.0"
