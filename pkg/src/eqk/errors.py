"""Exception types shared across the package."""


class EqkError(Exception):
    """Base class for all errors raised by eqk."""


class InvalidInputError(EqkError, ValueError):
    """A request names a type, node, label or parameter that does not exist."""


class CapacityError(EqkError):
    """A configured resource bound (orbit size, subset count) would be exceeded."""


class ContractError(EqkError, ValueError):
    """A precondition of an operation was violated by the caller."""
