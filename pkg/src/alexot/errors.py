"""Exception types shared across the library."""


class DuplicateSites(ValueError):
    """Two site points coincide (within the geometric tolerance)."""


class FeasibilityFailed(RuntimeError):
    """Could not produce heights giving every site a cell of positive area.

    This signals a geometry bug, not a user error: for distinct sites a
    feasible height vector always exists.
    """


class NonPositiveDensity(ValueError):
    """Density is not strictly positive on the region of interest."""


class Unbalanced(ValueError):
    """Target masses do not sum to the source mass within tolerance."""


class SingularHessian(RuntimeError):
    """The reduced Newton system could not be solved."""


class StepTooSmall(RuntimeError):
    """Feasibility-preserving line search collapsed below the minimum step."""


class InvalidBoundary(ValueError):
    """Boundary vertices are not in convex position (or some vertex is
    redundant, lying in the hull of the others)."""


class InteriorPointOutside(ValueError):
    """A point declared interior is not strictly inside the domain."""


class BoundaryVertex(ValueError):
    """Discrete Hessian determinant requested at a non-interior vertex."""


class Infeasible(ValueError):
    """Transport LP is infeasible (unbalanced supplies and demands)."""
