"""Exception hierarchy shared by every module."""


class DefcolorError(Exception):
    """Base class for all errors raised by this package."""


class UnknownVertex(DefcolorError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class InvalidGraph(DefcolorError, ValueError):
    pass


class DisconnectedGraph(DefcolorError, ValueError):
    pass


class CorruptRotation(DefcolorError, ValueError):
    """Rotation data is inconsistent (e.g. traced faces give a negative genus)."""


class UntriangulatableFace(DefcolorError):
    def __init__(self, face):
        super().__init__(
            "face %s cannot be split by a chord without creating a loop or a "
            "parallel edge" % (list(face),))
        self.face = tuple(face)


class NotTriangulated(DefcolorError, ValueError):
    pass


class NotFromList(DefcolorError, ValueError):
    def __init__(self, vertex, colour):
        super().__init__(f"vertex {vertex} has colour {colour} which is not in its list")
        self.vertex = vertex
        self.colour = colour


class PartialColouring(DefcolorError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} is uncoloured")
        self.vertex = vertex


class ListExhausted(DefcolorError):
    def __init__(self, vertex):
        super().__init__(f"every colour in the list of vertex {vertex} is blocked")
        self.vertex = vertex


class ListTooShort(DefcolorError, ValueError):
    def __init__(self, vertex, size, required):
        super().__init__(
            f"vertex {vertex} has a list of size {size}, at least {required} required")
        self.vertex = vertex


class NoFreeColour(DefcolorError):
    def __init__(self, vertex):
        super().__init__(f"no free colour for vertex {vertex}")
        self.vertex = vertex


class BranchInvariantViolated(DefcolorError):
    pass


class ContextInvalid(DefcolorError):
    pass


class PreconditionTooSmallT(DefcolorError, ValueError):
    pass


class InternalContradiction(DefcolorError):
    """No reducible configuration exists although the list size is large enough.

    Carries the discharging audit of the offending graph.
    """

    def __init__(self, message, audit=None):
        super().__init__(message)
        self.audit = audit


class InstanceTooLarge(DefcolorError):
    pass
