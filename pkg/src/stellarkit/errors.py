"""Exception hierarchy shared by all stellarkit modules."""


class StellarKitError(ValueError):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class VertexOutOfRange(StellarKitError):
    pass


class UncoveredVertex(StellarKitError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} lies in no facet")
        self.vertex = vertex


class NotAFace(StellarKitError):
    pass


class FaceTooSmall(StellarKitError):
    pass


class VoidComplex(StellarKitError):
    pass


class InvalidChoiceIndex(StellarKitError):
    pass


class NotGorensteinStar(StellarKitError):
    pass


class GeneratorNotAFace(StellarKitError):
    pass


class UnknownVariable(StellarKitError):
    pass


class LengthMismatch(StellarKitError):
    pass


class TooManyVertices(StellarKitError):
    pass


class OutOfRange(StellarKitError):
    pass


class FormatError(StellarKitError):
    """Malformed input file."""
