"""Exception hierarchy shared by every module."""


class CayleyError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(CayleyError, ValueError):
    pass


class EmptyGraph(SchemaError):
    pass


class DuplicateEdge(SchemaError):
    pass


class NonTotalTable(SchemaError):
    pass


class EmptyLanguage(CayleyError):
    pass


class NotApplicable(CayleyError):
    pass


class CapExceeded(CayleyError):
    """A bounded search hit its configured cap."""


class SearchCapExceeded(CapExceeded):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class PreconditionViolated(CayleyError):
    def __init__(self, prop, witness=None):
        super().__init__(f"precondition violated: {prop} (witness: {witness!r})")
        self.prop = prop
        self.witness = witness


class EmptySubset(CayleyError):
    pass


class NonInjectiveLabeling(CayleyError):
    pass


class ConditionViolation(CayleyError):
    """A presentation fails one of the group-presentation conditions (i)-(iii)."""

    def __init__(self, condition, witness=None):
        super().__init__(f"condition ({condition}) violated (witness: {witness!r})")
        self.condition = condition
        self.witness = witness


class InternalError(CayleyError, AssertionError):
    """A step that must succeed by construction did not."""
