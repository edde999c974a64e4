from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import ClassVar, Iterable, Sequence, TypeVar, Union

from app.errors import CoincidentLines, CoincidentPoints, CollinearPoints
from app.projective.exact import signed_minors

Rational = Fraction
RationalLike = Union[int, str, Fraction]

H = TypeVar("H", bound="Homogeneous")


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        # floats are exact binary fractions; route through repr to keep printed decimals
        return Fraction(repr(value))
    return Fraction(value)


def canonical(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    """Scale a nonzero rational vector to integers with gcd 1 and first nonzero entry positive."""
    fr = [to_rational(v) for v in values]
    if not any(fr):
        raise ValueError("cannot canonicalize the zero vector")
    den = lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = gcd(*ints)
    lead = next(i for i in ints if i != 0)
    if lead < 0:
        g = -g
    return tuple(Fraction(i // g) for i in ints)


def cross3(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@dataclass(frozen=True)
class Homogeneous:
    coords: tuple[Fraction, ...]

    SIZE: ClassVar[int] = 0

    def __post_init__(self) -> None:
        coords = tuple(to_rational(v) for v in self.coords)
        if len(coords) != self.SIZE:
            raise ValueError(f"{type(self).__name__} needs {self.SIZE} coordinates, got {len(coords)}")
        if not any(coords):
            raise ValueError(f"{type(self).__name__} coordinates are all zero")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls: type[H], *coords: RationalLike) -> H:
        return cls(tuple(coords))

    @classmethod
    def affine(cls: type[H], *coords: RationalLike) -> H:
        """Point (or element) with leading homogeneous coordinate 1."""
        return cls((Fraction(1),) + tuple(to_rational(c) for c in coords))

    def canonical(self: H) -> H:
        return type(self)(canonical(self.coords))

    def same_as(self, other: "Homogeneous") -> bool:
        return type(self) is type(other) and canonical(self.coords) == canonical(other.coords)

    def dehomogenize(self) -> tuple[Fraction, ...]:
        if self.coords[0] == 0:
            raise ValueError("element at infinity has no affine coordinates")
        return tuple(c / self.coords[0] for c in self.coords[1:])

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return self.SIZE

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]


class HPoint2(Homogeneous):
    SIZE = 3


class HLine2(Homogeneous):
    SIZE = 3


class HPoint3(Homogeneous):
    SIZE = 4


class HPlane3(Homogeneous):
    SIZE = 4


def incidence(element: Homogeneous | Sequence[Fraction], dual: Homogeneous | Sequence[Fraction]) -> Fraction:
    a = tuple(element)
    b = tuple(dual)
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def join_points2(a: HPoint2, b: HPoint2) -> HLine2:
    v = cross3(a.coords, b.coords)
    if not any(v):
        raise CoincidentPoints(f"points {a.coords} and {b.coords} coincide")
    return HLine2(v).canonical()


def meet_lines2(l: HLine2, m: HLine2) -> HPoint2:
    v = cross3(l.coords, m.coords)
    if not any(v):
        raise CoincidentLines(f"lines {l.coords} and {m.coords} coincide")
    return HPoint2(v).canonical()


def plane_coordinates(a: Sequence[Fraction], b: Sequence[Fraction], c: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Unscaled plane (-M0, M1, -M2, M3), Mk the minor of [a; b; c] without column k.

    For affine points this is n = (b - a) x (c - a) with constant -n.a.
    """
    v = tuple(-m for m in signed_minors([tuple(a), tuple(b), tuple(c)]))
    if not any(v):
        raise CollinearPoints(f"points {tuple(a)}, {tuple(b)}, {tuple(c)} are collinear")
    return v


def plane_through_points3(a: HPoint3, b: HPoint3, c: HPoint3) -> HPlane3:
    return HPlane3(plane_coordinates(a.coords, b.coords, c.coords)).canonical()
