"""Exception hierarchy shared across the package."""


class SemifockError(Exception):
    """Base class for all errors raised by this package."""


class ZeroElement(SemifockError):
    """A nonzero ring element was required."""


class UnsupportedDomain(SemifockError):
    """The operation is not defined for this coefficient domain."""


class InvalidInput(SemifockError):
    """Malformed argument outside any more specific category."""


class DivisionByZero(SemifockError):
    """Inversion of zero in a fraction field."""


class ZeroScalar(SemifockError):
    """A scalar action by zero was requested."""


class DimensionMismatch(SemifockError):
    """Vector or matrix shapes do not line up."""


class AmbientMismatch(SemifockError):
    """Operands live over different ambient modules."""


class NotSubmodule(SemifockError):
    """A subgroup is not closed under the scalar action."""


class NotSubgroup(SemifockError):
    """Generators do not describe a subgroup of the ambient module."""


class TorsionPresent(SemifockError):
    """The construction requires a torsion-free module."""


class EmptyList(SemifockError):
    """A nonempty collection was required."""


class InfiniteGroup(SemifockError):
    """The operation needs a finite group."""


class WindowTooSmall(SemifockError):
    """A truncation window misses a required element."""


class OutOfWindow(SemifockError):
    """An operator index lies outside the declared window."""


class EmptyInterior(SemifockError):
    """No basis vector survives the interior test; enlarge the window."""


class InfiniteQuotient(SemifockError):
    """Quotient group is infinite and no box bound was supplied."""


class NotADirectProduct(SemifockError):
    """An index does not factor uniquely through the declared split."""


class NotEquivariant(SemifockError):
    """A map does not intertwine the two dynamics."""


class NotSurjective(SemifockError):
    """A surjection was required."""


class EmptyFamily(SemifockError):
    """A nonempty family of functions was required."""


class DegreeOverflow(SemifockError):
    """Polynomial substitution exceeded the declared degree cap."""


class ParseError(SemifockError):
    """A scenario file could not be parsed."""


class UnsupportedKind(SemifockError):
    """Unknown scenario kind."""
