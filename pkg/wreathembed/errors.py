class WreathEmbedError(Exception):
    """Base class of every error raised by wreathembed."""


class InvalidInputError(WreathEmbedError, ValueError):
    """The input does not describe the object it claims to describe."""


class BudgetExceededError(WreathEmbedError):
    """A desk-scale budget (element cap, degree, table order) was exceeded."""


class NotABijection(InvalidInputError):
    pass


class DegreeMismatch(InvalidInputError):
    pass


class SizeMismatch(InvalidInputError):
    pass


class IndexOutOfRange(InvalidInputError, IndexError):
    pass


class InputFormatError(InvalidInputError):
    pass


class NotAPartition(InvalidInputError):
    pass


class GroundMismatch(InvalidInputError):
    pass


class NotACartesianDecomposition(InvalidInputError):
    pass


class NotHomogeneous(InvalidInputError):
    pass


class NotPreserved(InvalidInputError):
    pass


class BadDimensions(InvalidInputError):
    pass


class ContextMismatch(InvalidInputError):
    pass


class EmptyIntersection(InvalidInputError):
    pass


class NonSingletonIntersection(InvalidInputError):
    pass


class InvalidTable(InvalidInputError):
    pass


class NotLatin(InvalidTable):
    pass


class NotAssociative(InvalidTable):
    pass


class IdentityNotZero(InvalidTable):
    pass


class NotAnAutomorphism(InvalidInputError):
    pass


class CapExceeded(BudgetExceededError):
    def __init__(self, cap, count):
        super(CapExceeded, self).__init__(cap, count)
        self.cap = cap
        self.count = count

    def __str__(self):
        return 'group closure exceeded element cap %s (%s elements found so far)' % (self.cap, self.count)


class DegreeBudgetExceeded(BudgetExceededError):
    pass


class OrderTooLarge(BudgetExceededError):
    pass
