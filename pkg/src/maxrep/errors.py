"""Exception hierarchy shared across the package.

The CLI maps these to exit codes: InvalidInput -> 2, ConstructionError -> 3,
ComputationError -> 4.
"""


class InvalidInput(ValueError):
    """Bad dimensions, out-of-range parameters, unrealizable targets."""


class UnrealizableInvariants(InvalidInput):
    """Requested (sw1, sw2) pair cannot be realized for this n."""


class ConstructionError(RuntimeError):
    """A constructor failed to assemble a valid representation."""


class GluingError(ConstructionError):
    """Holonomy mismatch along a gluing curve."""


class ComputationError(RuntimeError):
    """An invariant computation could not certify its result."""


class TransversalityError(ComputationError):
    """Lagrangians required to be transverse are not."""


class InvarianceError(ComputationError):
    """A subspace expected to be invariant under a matrix is not."""


class LiftingError(ComputationError):
    """Pin-lift commutator product did not reduce to a scalar."""


class UnsupportedCupError(ComputationError):
    """Cup product outside the modelled part of the cohomology ring."""


class QuadratureError(ComputationError):
    """A winding number failed to certify (under-sampling or residue)."""


class AnosovError(ComputationError):
    """Eigenvalue-gap certification failed for some word."""
