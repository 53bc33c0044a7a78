"""Weight-graded intersection cohomology of toric varieties.

Exact-arithmetic library computing, from a rational polyhedral fan:

- the weight table of the (intersection) cohomology of the associated
  variety, via the Koszul complex on cone-wise polynomial functions
  (simplicial fans);
- virtual Poincare polynomials and equivariant Betti series of arbitrary
  fans, via the cone recursion;
- first-page dimension tables of the boundary spectral sequence for
  smooth completions, with Frobenius-twist bookkeeping.
"""

from .catalogue import builtin_example, catalogue_fans
from .deligne import (CompletionPair, E1Table, boundary_strata, e1_table,
                      euler_consistency, pair_from_dict, pair_to_dict,
                      validate_completion)
from .errors import (DimensionMismatch, DuplicateRay, IncompatibleRayUniverse,
                     InternalInconsistency, NegativeDimension, NonPrimitiveRay,
                     NotAComplex, NotAFan, NotComplete, NotSimplicial,
                     NotSmooth, NotStronglyConvex, PurityViolation,
                     RedundantGenerator, ToricError, UnknownCone,
                     UnknownExample, ValidationError, ZeroCone)
from .fan import (Classification, Cone, Fan, Lattice, classify, face_lattice,
                  fan_from_dict, fan_to_dict, h_vector, link_fan,
                  star_quotient_fan, star_subdivision, subfan,
                  subfan_intersection, subfan_ops, subfan_union, validate_fan)
from .graded import (LinearMapQ, SymBasis, homology_dims, multiply_by_form,
                     restrict_sym)
from .koszul import (KoszulComplex, WeightTable, build_koszul, pure_part,
                     twisted_dims, weight_table)
from .piecewise import (FrobeniusAction, PPSpace, frobenius_action,
                        mayer_vietoris_check, module_action, pp_basis,
                        restriction_to_subfan)
from .poincare import (QPolynomial, QSeries, additivity_check, affine_ih_betti,
                       d_ip, ip_cld, ip_equivariant_series)

__version__ = "0.1.0"
