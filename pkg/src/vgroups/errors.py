"""Exception taxonomy shared by all workbench modules."""


class WorkbenchError(Exception):
    """Base class for workbench-specific errors."""


class StructuralError(WorkbenchError):
    """Malformed input: ragged tables, out-of-range indices, bad references.

    Distinct from a law violation: a structurally sound table may still
    fail the algebra laws, which validators report as witnesses instead
    of raising.
    """


class CapacityError(WorkbenchError):
    """An enumeration would exceed the configured candidate guard."""


class TheoremCheckError(WorkbenchError):
    """A statement the theory guarantees failed on concrete data.

    Never expected on valid inputs; raising loudly is preferred to
    returning a silently wrong answer.
    """


class NonIntegralQuantaleError(WorkbenchError):
    """Operation requires an integral quantale (unit = top)."""
