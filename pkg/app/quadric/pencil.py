from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from app.errors import CollinearPoints, CoplanarTriple, DegenerateChoice, DuplicatePoints, RankDeficient
from app.projective.core import HPlane3, HPoint3, canonical, incidence, plane_coordinates, to_rational
from app.projective.exact import exact_rank, signed_minors

logger = logging.getLogger(__name__)

VERTEX_LABELS = "ABCDEF"

# (i, j) of the symmetric 4x4 matrix in storage order
QUADRIC_INDEX = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


@dataclass(frozen=True)
class Quadric:
    """Σ a_ij x_i x_j over the symmetric 4x4 matrix; off-diagonal terms appear doubled."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if len(coeffs) != 10:
            raise ValueError(f"quadric needs 10 coefficients, got {len(coeffs)}")
        if not any(coeffs):
            raise ValueError("quadric coefficients are all zero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_monomials(cls, monomials: Sequence) -> "Quadric":
        m = [to_rational(v) for v in monomials]
        return cls(tuple(v if i == j else v / 2 for (i, j), v in zip(QUADRIC_INDEX, m)))

    def monomials(self) -> tuple[Fraction, ...]:
        return tuple(a if i == j else 2 * a for (i, j), a in zip(QUADRIC_INDEX, self.coeffs))

    def canonical(self) -> "Quadric":
        return Quadric(canonical(self.coeffs))

    def same_as(self, other: "Quadric") -> bool:
        return canonical(self.coeffs) == canonical(other.coeffs)

    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * 4 for _ in range(4)]
        for (i, j), a in zip(QUADRIC_INDEX, self.coeffs):
            m[i][j] = a
            m[j][i] = a
        return m

    def evaluate(self, p: HPoint3 | Sequence) -> Fraction:
        x = [to_rational(v) for v in p]
        return sum((v * x[i] * x[j] for (i, j), v in zip(QUADRIC_INDEX, self.monomials())), Fraction(0))


def _expand_product(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a[i] * b[j] if i == j else a[i] * b[j] + a[j] * b[i] for i, j in QUADRIC_INDEX)


@dataclass(frozen=True)
class PlanePairQuadric:
    pi1: HPlane3
    pi2: HPlane3
    monomials: tuple[Fraction, ...]

    @classmethod
    def of(cls, pi1: HPlane3, pi2: HPlane3) -> "PlanePairQuadric":
        return cls(pi1=pi1, pi2=pi2, monomials=_expand_product(pi1.coords, pi2.coords))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return Quadric.from_monomials(self.monomials).coeffs

    def evaluate(self, p: HPoint3 | Sequence) -> Fraction:
        return incidence(p, self.pi1) * incidence(p, self.pi2)


@dataclass(frozen=True)
class PlanePair:
    """Two complementary vertex triples, e.g. ABF↔CDE."""

    first: str
    second: str

    def __post_init__(self) -> None:
        labels = self.first + self.second
        if len(self.first) != 3 or sorted(labels) != list(VERTEX_LABELS):
            raise ValueError(f"{self.first}↔{self.second} does not partition {VERTEX_LABELS}")

    @classmethod
    def parse(cls, text: str) -> "PlanePair":
        for sep in ("↔", "-", ":", "/"):
            if sep in text:
                a, b = text.split(sep, 1)
                return cls(a.strip().upper(), b.strip().upper())
        raise ValueError(f"cannot parse plane pair {text!r}")

    def key(self) -> frozenset:
        return frozenset((frozenset(self.first), frozenset(self.second)))

    def __str__(self) -> str:
        return f"{self.first}↔{self.second}"


PairChoice = tuple[PlanePair, PlanePair, PlanePair, PlanePair]


def make_choice(pairs: Sequence[PlanePair | str]) -> PairChoice:
    out = tuple(p if isinstance(p, PlanePair) else PlanePair.parse(p) for p in pairs)
    if len(out) != 4:
        raise ValueError(f"a pair choice has 4 plane pairs, got {len(out)}")
    if len({p.key() for p in out}) != 4:
        raise ValueError("plane pairs of a choice must be distinct")
    return out  # type: ignore[return-value]


# pv, ru, ts, qw
DEFAULT_CHOICE: PairChoice = make_choice(["ABF↔CDE", "ADE↔BCF", "ADF↔BCE", "ABE↔CDF"])


def enumerate_pairs() -> list[PlanePair]:
    out = []
    for rest in combinations(VERTEX_LABELS[1:], 2):
        first = "A" + "".join(rest)
        second = "".join(c for c in VERTEX_LABELS if c not in first)
        out.append(PlanePair(first, second))
    return out


def enumerate_choices() -> list[PairChoice]:
    return [tuple(c) for c in combinations(enumerate_pairs(), 4)]  # type: ignore[misc]


def solve_multipliers4(system: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Null vector of a rank-3 3x4 system as alternating 3x3 minors."""
    rows = [[to_rational(v) for v in row] for row in system]
    if len(rows) != 3 or any(len(r) != 4 for r in rows):
        raise ValueError("multiplier system must be 3x4")
    if exact_rank(rows) < 3:
        raise RankDeficient("multiplier system has rank < 3")
    return signed_minors(rows)


@dataclass(frozen=True)
class QuadricConstruction:
    choice: PairChoice
    planes: dict[str, HPlane3]
    pairs: tuple[PlanePairQuadric, ...]
    system: tuple[tuple[Fraction, ...], ...]
    multipliers: tuple[Fraction, ...]
    quadric: Quadric


def _as_points(pts: Sequence) -> list[HPoint3]:
    if len(pts) != 9:
        raise ValueError(f"need 9 points, got {len(pts)}")
    pts = [p if isinstance(p, HPoint3) else HPoint3(tuple(p)) for p in pts]
    for (i, a), (j, b) in combinations(enumerate(pts), 2):
        if a.same_as(b):
            raise DuplicatePoints(f"points {i} and {j} coincide: {a.coords}")
    return pts


def _plane(triple: str, vertices: dict[str, HPoint3]) -> HPlane3:
    try:
        return HPlane3(plane_coordinates(*(vertices[c].coords for c in triple)))
    except CollinearPoints as exc:
        raise CoplanarTriple(f"vertex triple {triple} is collinear") from exc


def _construct(pts: list[HPoint3], choice: PairChoice) -> QuadricConstruction:
    vertices = dict(zip(VERTEX_LABELS, pts[:6]))
    planes: dict[str, HPlane3] = {}
    pairs = []
    for pair in choice:
        pi1 = planes.setdefault(pair.first, _plane(pair.first, vertices))
        pi2 = planes.setdefault(pair.second, _plane(pair.second, vertices))
        pairs.append(PlanePairQuadric.of(pi1, pi2))
    system = tuple(tuple(pq.evaluate(p) for pq in pairs) for p in pts[6:])
    try:
        multipliers = solve_multipliers4(system)
    except RankDeficient as exc:
        raise DegenerateChoice(f"choice {[str(p) for p in choice]}: {exc}") from exc
    monomials = tuple(
        sum((m * pq.monomials[k] for m, pq in zip(multipliers, pairs)), Fraction(0)) for k in range(10)
    )
    if not any(monomials):
        raise DegenerateChoice(f"choice {[str(p) for p in choice]}: plane-pair quadrics are dependent")
    return QuadricConstruction(
        choice=choice,
        planes=planes,
        pairs=tuple(pairs),
        system=system,
        multipliers=multipliers,
        quadric=Quadric.from_monomials(monomials).canonical(),
    )


def quadric_pencil_details(
    pts: Sequence,
    choice: PairChoice | None = None,
    fallback: bool = True,
) -> QuadricConstruction:
    """First six points are the octahedron vertices A..F, the last three are substituted."""
    pts = _as_points(pts)
    choice = choice or DEFAULT_CHOICE
    try:
        return _construct(pts, choice)
    except DegenerateChoice as exc:
        if not fallback:
            raise
        first_reason = str(exc)
    for alternative in enumerate_choices():
        if {p.key() for p in alternative} == {p.key() for p in choice}:
            continue
        try:
            built = _construct(pts, alternative)
        except (DegenerateChoice, CoplanarTriple):
            continue
        logger.info("fell back to pair choice %s (%s)", [str(p) for p in alternative], first_reason)
        return built
    raise DegenerateChoice(f"no pair choice spans the nine points ({first_reason})")


def quadric_through_9(pts: Sequence, choice: PairChoice | None = None, fallback: bool = True) -> Quadric:
    return quadric_pencil_details(pts, choice=choice, fallback=fallback).quadric


def choice_invariance_check(pts: Sequence, choice_a: PairChoice, choice_b: PairChoice) -> bool:
    qa = quadric_through_9(pts, choice_a, fallback=False)
    qb = quadric_through_9(pts, choice_b, fallback=False)
    return qa.coeffs == qb.coeffs


def double_cover_check(pts: Sequence, choice: PairChoice | None = None) -> bool:
    """Each vertex lies on exactly one plane of every pair of the choice."""
    pts = _as_points(pts)
    vertices = dict(zip(VERTEX_LABELS, pts[:6]))
    for pair in choice or DEFAULT_CHOICE:
        pi1 = _plane(pair.first, vertices)
        pi2 = _plane(pair.second, vertices)
        for v in vertices.values():
            on = (incidence(v, pi1) == 0) + (incidence(v, pi2) == 0)
            if on != 1:
                return False
    return True
