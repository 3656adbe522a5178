"""Exception types raised across the toolkit."""


class TricxError(Exception):
    """Base class for all toolkit errors."""


# --- gluing table / kernel ------------------------------------------------

class NonInvolutiveGluing(TricxError):
    """A face gluing whose partner does not glue back with the inverse."""


class SelfGluedFace(TricxError):
    """A face glued to itself."""


class EdgeReversedOntoItself(TricxError):
    """A tetrahedron edge identified with itself in reverse."""


class InvalidVertexLink(TricxError):
    """A vertex link that is neither a closed surface nor a disc."""


class NonSphereBoundary(TricxError):
    """cap_sphere_boundaries needs every boundary component to be a sphere."""


class BoundaryEdge(TricxError):
    """The requested operation needs an internal edge."""


class NoIdealVertices(TricxError):
    """truncate_ideal needs at least one ideal vertex."""


# --- isomorphism signatures -------------------------------------------------

class MalformedSignature(TricxError):
    """A signature string that cannot be parsed."""


class InvalidGluingData(TricxError):
    """A parseable signature describing an impossible gluing."""


class EmptyTriangulation(TricxError):
    """Signatures are only defined for non-empty triangulations."""


class DisconnectedTriangulation(TricxError):
    """Signatures are only emitted for connected triangulations."""


# --- moves -------------------------------------------------------------------

class InvalidSite(TricxError):
    """A move site that is stale or does not satisfy the move's conditions."""


# --- normal surfaces ---------------------------------------------------------

class IdealVertexPresent(TricxError):
    """Normal surface machinery needs real boundary only."""


class IncompatibleVector(TricxError):
    """A coordinate vector that is not admissible for the triangulation."""


class QuadConstraintViolation(TricxError):
    """Two different quadrilateral types in the same tetrahedron."""


# --- crushing ----------------------------------------------------------------

class NotSphereOrDisc(TricxError):
    """Crushing is only defined for connected normal spheres and discs."""


class TrivialSurface(TricxError):
    """Crushing a vertex-linking (quad-free) surface would be a no-op."""


# --- recognition ---------------------------------------------------------------

class NotClosed(TricxError):
    """3-sphere certification needs a closed triangulation."""


class ClosedInput(TricxError):
    """3-ball certification needs non-empty boundary."""


class PropertyShapeMismatch(TricxError):
    """The ambient triangulation has the wrong shape for the edge property."""


# --- search --------------------------------------------------------------------

class EmptyBadSet(TricxError):
    """Complexity is undefined when there are no bad edges."""


class BaselineExceedsCount(TricxError):
    """Modified complexity needs at least n bad edges."""
