#
# This file is part of quantale-tools.
#
""" Exceptions raised by quantale-tools. """


class QuantaleError(ValueError):
    """ Base class for every domain error raised by this package.

    Parameters:
        message -- Human-readable description of the problem.
        witness -- Optional tuple of elements (or other values) demonstrating the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


    def __str__(self):
        message = super().__str__()

        if self.witness is None:
            return message
        return f"{message} (witness: {self.witness!r})"


class DimensionMismatch(QuantaleError):
    """ A table does not have the shape its element count demands. """


class NotALattice(QuantaleError):
    """ An order relation is not a (complete, finite) lattice. """


class NotAQuantale(QuantaleError):
    """ A multiplication table violates the monoid or distributivity laws. """


class NotIntegral(QuantaleError):
    """ A construction needs the unit to be the top element. """


class NotCyclic(QuantaleError):
    """ An element was required to be cyclic, and isn't. """


class NotDualizing(QuantaleError):
    """ An element was required to be cyclic and dualizing, and isn't. """


class NonClosed(QuantaleError):
    """ A discretized operation leaves its carrier. """


class TooLarge(QuantaleError):
    """ The requested instance exceeds the desk-scale bounds. """


class TypeMismatch(QuantaleError):
    """ Two arrows were composed whose middle objects differ. """


class NotInvolutive(QuantaleError):
    """ An involution was needed but the quantale does not carry one. """


class ModePreconditionFailed(QuantaleError):
    """ A similarity checking mode was requested on an unsuitable quantale. """


class NotASimilarity(QuantaleError):
    """ A matrix fails the similarity axioms. """


class NotADissimilarity(QuantaleError):
    """ A matrix fails the dissimilarity axioms. """


class NotBoolean(QuantaleError):
    """ A construction needs a Boolean algebra as its base. """


class NotDivisible(QuantaleError):
    """ A construction needs a divisible quantale. """


class NotAFrame(QuantaleError):
    """ A construction needs a frame. """


class IllTyped(QuantaleError):
    """ A functor sends an arrow outside of its target hom-set. """


class NotLax(QuantaleError):
    """ A functor was required to be lax, and isn't. """


class BudgetExceeded(QuantaleError):
    """ A search ran out of budget before it could decide its question. """


class UnknownQuantale(QuantaleError):
    """ A builtin quantale name could not be resolved. """


class QuantaleFileError(QuantaleError):
    """ A quantale or matrix file could not be parsed.

    Parameters:
        message -- Description of the problem.
        line    -- The one-based line number the problem was found on, if any.
    """

    def __init__(self, message, line=None, witness=None):
        self.line = line

        if line is not None:
            message = f"line {line}: {message}"

        super().__init__(message, witness=witness)
