"""Exception hierarchy shared by every module."""


class QuandleKitError(Exception):
    """Base class for all library errors."""


class MalformedTable(QuandleKitError, ValueError):
    """Table is not square, is empty, or has out-of-range entries."""


class ParseError(QuandleKitError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BoundExceeded(QuandleKitError, ValueError):
    pass


class LengthMismatch(QuandleKitError, ValueError):
    pass


# -- groups -----------------------------------------------------------------

class GroupError(QuandleKitError):
    pass


class NotLatin(GroupError):
    def __init__(self, kind, index):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} is not a permutation")


class NoIdentity(GroupError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NoInverse(GroupError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) at a={a}, b={b}, c={c}")


class NotAbelian(GroupError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"group is not abelian: {a}*{b} != {b}*{a}")


class BadAutomorphism(GroupError, ValueError):
    pass


class ExponentDoesNotAnnihilate(GroupError, ValueError):
    def __init__(self, k):
        self.k = k
        super().__init__(f"phi^{k} is not the identity")


# -- quandles ---------------------------------------------------------------

class QuandleAxiomError(QuandleKitError):
    axiom = None

    def __init__(self, message, witness):
        self.witness = witness
        super().__init__(message)


class NotIdempotent(QuandleAxiomError):
    axiom = 1

    def __init__(self, x):
        super().__init__(f"axiom(1) violated at x={x}", (x,))


class NotDistributive(QuandleAxiomError):
    axiom = 2

    def __init__(self, x, y, z):
        super().__init__(f"axiom(2) violated at x={x}, y={y}, z={z}", (x, y, z))


class ColumnNotBijective(QuandleAxiomError):
    axiom = 3

    def __init__(self, y):
        super().__init__(f"axiom(3) violated at y={y}", (y,))


class InnerIdentityViolated(QuandleAxiomError):
    """S_{x*y} differs from S_y^-1 S_x S_y; cannot happen once axioms (2), (3) hold."""

    axiom = 2

    def __init__(self, x, y):
        super().__init__(f"inner permutation identity violated at x={x}, y={y}", (x, y))


class RangeError(QuandleKitError, ValueError):
    pass


class VerificationFailed(QuandleKitError):
    def __init__(self, message, witness=None, report=None):
        self.witness = witness
        self.report = report
        super().__init__(message)
