"""
The definition of errors raised by toricbound.
"""
from enum import Enum


class ToricError(Exception):
    """The base error of all toric computations.

    Attributes:
        code: The error code.
        msg: The human-readable message.
    """

    class Code(Enum):
        # Lattice
        ZERO_VECTOR = 'ZeroVector'
        SHAPE_MISMATCH = 'ShapeMismatch'

        # Fan
        INVALID_CONE = 'InvalidCone'
        OUTSIDE_SUPPORT = 'OutsideSupport'
        NOT_COMPLETE = 'NotComplete'
        NOT_SMOOTH_CONE = 'NotSmoothCone'
        NOT_SMOOTH_COMPLETE = 'NotSmoothComplete'

        # Divisors and relations
        NOT_REPRESENTABLE = 'NotRepresentable'
        NEGATIVE_KAPPA = 'NegativeKappa'
        NO_RELATION = 'NoRelation'
        ZERO_RELATION = 'ZeroRelation'
        NOT_A_RELATION = 'NotARelation'
        DUPLICATE_MARKER = 'DuplicateMarker'
        NOT_AMPLE = 'NotAmple'

        # Polytopes
        EMPTY_POLYTOPE = 'EmptyPolytope'
        UNBOUNDED = 'Unbounded'
        ZERO_DIRECTION = 'ZeroDirection'

        # Seshadri bounds
        NO_CURVES = 'NoCurves'
        INVALID_DEGREE = 'InvalidDegree'

        # Fan documents
        RAY_NOT_PRIMITIVE = 'RayNotPrimitive'
        DUPLICATE_RAY = 'DuplicateRay'
        BAD_NUMBER = 'BadNumber'
        BAD_DOCUMENT = 'BadDocument'

        INTERNAL_CONTRADICTION = 'InternalContradiction'

    exit_code = 1

    def __init__(self, code: 'ToricError.Code', msg: str = ''):
        super(ToricError, self).__init__('{0}: {1}'.format(code.value, msg) if msg else code.value)
        self.code = code
        self.msg = msg


class ValidationError(ToricError):
    """The input (fan, Kaehler class or document) is rejected."""

    exit_code = 2


class ComputationError(ToricError):
    """The computation cannot be carried out on valid input."""

    exit_code = 3
