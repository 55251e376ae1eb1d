"""Exact non-Archimedean arithmetic: valuations, truncated p-adics,
ultrametric spaces, isometry checks and contraction fixed points."""
from .balls import Ball, BallRelation, ball_relation, chain_intersection
from .errors import (ContractViolation, DomainError, ExactZeroDivision, IncompatibleOperands,
                     InsufficientPrecision, InvalidParameter, NonArchError, NonConvergence,
                     PreconditionError, SizeGuardError)
from .fixed_point import (FixedPointResult, invert_isometry, iterate_contraction,
                          proposition_v)
from .isometry import (check_additivity, check_isometry, check_midpoint_equation,
                       check_rational_homogeneity, equidistant_points, gallery, midpoint)
from .maps import IDENTITY, Affine, Compose, Cube, HenselPerturb, Q2Inversion, Translation, apply
from .padic import DigitExpansion, PAdicNumber, equal_to_precision, from_rational
from .spaces import (FiniteModel, QpVector, RationalLine, TrivialLine, check_norm_axioms,
                     strict_convexity_witness, value_set_report)
from .valuation import (INF, TRIVIAL, NormValue, abs_p, absolute, check_field_axioms, padic_val,
                        sharp_triangle, trivial_abs)

__version__ = "0.1.0"
