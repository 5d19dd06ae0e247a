"""Exception types shared across the package."""


class GliderPlanError(Exception):
    """Base class for all errors raised by this package."""


class CoincidentPoints(GliderPlanError):
    """Bearing requested between two identical positions."""


class OutOfDomain(GliderPlanError):
    """A position or time falls outside a gridded field's domain."""


class Stalled(GliderPlanError):
    """All spatial velocity components are too small to ever leave a cell."""


class MalformedFile(GliderPlanError):
    """A data file violates its declared format; message says where."""


class NoFeasibleAction(GliderPlanError):
    """Every root expansion of the search failed (all dives left the grid)."""


class DatasetTooSmall(GliderPlanError):
    """Too few dive records for the requested statistics."""


class DegenerateKDE(GliderPlanError):
    """All samples of a dive coincide; the bandwidth rule yields zero."""


class EmptyBounds(GliderPlanError):
    """An optimizer was given no parameter box to search over."""


class UnknownInstructionSet(GliderPlanError):
    """A named flight profile is not registered."""
