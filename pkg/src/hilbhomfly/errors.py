"""Exception hierarchy shared by all modules."""


class HilbHomflyError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(HilbHomflyError, ArithmeticError):
    """An exact division has no polynomial quotient."""


class NotRepresentable(HilbHomflyError, ValueError):
    """A polynomial cannot be written in the requested basis."""


class NotStabilized(HilbHomflyError, ValueError):
    """A truncated series does not determine a polynomial at the requested bound."""


class NotCofinite(HilbHomflyError, ValueError):
    """Generators with gcd > 1 span a semigroup with infinitely many gaps."""


class TruncationTooLow(HilbHomflyError, ValueError):
    """Valuations could not be certified below the working truncation order."""


class NotContained(HilbHomflyError, ValueError):
    """A shifted module is not contained in the semigroup."""


class NotCoprime(HilbHomflyError, ValueError):
    """The torus parameters k, n share a common factor."""


class ParityError(HilbHomflyError, ValueError):
    """Odd powers of q survived where only even powers are allowed."""
