"""Exception types shared across the package."""


class StructconError(Exception):
    """Base class for every error raised by this package."""


class KindMismatch(StructconError):
    """Operands or arguments belong to different algebras."""


class MembershipError(StructconError):
    """A matrix does not satisfy the constraints of the target algebra."""


class EmptyGenerators(StructconError):
    """A closure was requested for an empty generator list."""


class EmptyPool(StructconError):
    """A coefficient pool is empty after removing zeros."""


class SizeMismatch(StructconError):
    """Two graphs with different node counts cannot be combined."""


class NotSimple(StructconError):
    """A digraph operation requires a graph without self-loops."""


class HasSelfLoop(StructconError):
    """A multigraph operation requires a graph without self-loops."""


class ParseError(StructconError):
    """A spec document is malformed (bad JSON, missing or mistyped fields)."""


class ValidationError(StructconError):
    """A spec document parses but violates a zero-pattern constraint."""
