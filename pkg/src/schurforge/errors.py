"""Shared exception types."""


class SchurforgeError(Exception):
    """Base class for library-specific failures."""


class NonUnitConstantTerm(SchurforgeError):
    """Series inversion or log-derivative needs an invertible constant term."""


class SizeMismatch(SchurforgeError):
    """Partitions of different sizes where equal sizes are required."""


class BoundExceeded(SchurforgeError):
    """A desk-scale bound (tensor-power size, table size) was exceeded."""


class IncompleteClassFunction(SchurforgeError):
    """A class function is missing values on some conjugacy classes."""


class NonQAlgebra(SchurforgeError):
    """Ghost reconstruction required a division the coefficient ring cannot do."""


class GroupMismatch(SchurforgeError):
    """Equivariant operation applied to representations of different groups."""


class NotEndomorphism(SchurforgeError):
    """Trace requires source and target to coincide."""


class NotEquivariant(SchurforgeError):
    """A map fails to commute with the group action."""


class NotAComplex(SchurforgeError):
    """Differentials do not square to zero or their shapes do not match."""
