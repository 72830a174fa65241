"""Exception types shared across the package."""


class CyclepowError(Exception):
    """Base class for every package-specific error."""


class ParameterError(CyclepowError, ValueError):
    """An argument lies outside its documented domain."""


class ConsistencyError(CyclepowError):
    """An exact internal identity failed; indicates a bug, not bad input."""


class PrecisionError(CyclepowError):
    """A numeric routine could not reach the requested accuracy."""


class DegeneracyError(CyclepowError):
    """An input sits on a degenerate locus where a formula breaks down."""


class SimulationBudgetError(CyclepowError):
    """A Monte Carlo run exceeded its global step cap."""
