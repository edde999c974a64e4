from __future__ import annotations


class GeometryError(ValueError):
    """A geometric degeneracy: the input admits no unique answer."""


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class IndeterminatePencil(GeometryError):
    pass


class DegenerateChoice(GeometryError):
    pass


class CoplanarTriple(GeometryError):
    """A defining vertex triple of a plane pair is collinear."""


class RankDeficient(GeometryError):
    pass


class InvalidDisplacement(GeometryError):
    pass


class DegenerateSource(GeometryError):
    pass


class BadPentagon(GeometryError):
    pass


class ZeroTranslation(GeometryError):
    pass


class PointsOffCone(GeometryError):
    pass


class DegenerateTriple(GeometryError):
    """The three points are collinear, so the translation system has rank < 2.

    `curve` carries the single remaining linear condition (a plane through the
    origin in t-space) when the rank is exactly 1, and is None when the points coincide.
    """

    def __init__(self, message: str, curve: tuple[float, float, float] | None = None) -> None:
        super().__init__(message)
        self.curve = curve


class VerificationFailed(GeometryError):
    """An emitted result did not pass the independent residual re-check."""


class DocumentError(ValueError):
    """Malformed or mismatched input document."""
