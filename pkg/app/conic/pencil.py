from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from app.conic.flops import FlopCounter
from app.errors import DegenerateConfiguration, DuplicatePoints, IndeterminatePencil
from app.projective.core import HLine2, HPoint2, canonical, to_rational
from app.projective.exact import det3, exact_rank

logger = logging.getLogger(__name__)

# (i, j) index pairs of the symmetric 3x3 matrix in storage order
CONIC_INDEX = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


@dataclass(frozen=True)
class Conic:
    """a00 x0² + 2a01 x0x1 + 2a02 x0x2 + a11 x1² + 2a12 x1x2 + a22 x2² = 0."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if len(coeffs) != 6:
            raise ValueError(f"conic needs 6 coefficients, got {len(coeffs)}")
        if not any(coeffs):
            raise ValueError("conic coefficients are all zero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_monomials(cls, monomials: Sequence) -> "Conic":
        """From plain monomial coefficients of x0², x0x1, x0x2, x1², x1x2, x2²."""
        m = [to_rational(v) for v in monomials]
        return cls((m[0], m[1] / 2, m[2] / 2, m[3], m[4] / 2, m[5]))

    def monomials(self) -> tuple[Fraction, ...]:
        a = self.coeffs
        return (a[0], 2 * a[1], 2 * a[2], a[3], 2 * a[4], a[5])

    def canonical(self) -> "Conic":
        return Conic(canonical(self.coeffs))

    def same_as(self, other: "Conic") -> bool:
        return canonical(self.coeffs) == canonical(other.coeffs)

    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * 3 for _ in range(3)]
        for (i, j), a in zip(CONIC_INDEX, self.coeffs):
            m[i][j] = a
            m[j][i] = a
        return m

    def evaluate(self, p: HPoint2 | Sequence) -> Fraction:
        x = [to_rational(v) for v in p]
        a = self.coeffs
        return (
            a[0] * x[0] * x[0]
            + 2 * a[1] * x[0] * x[1]
            + 2 * a[2] * x[0] * x[2]
            + a[3] * x[1] * x[1]
            + 2 * a[4] * x[1] * x[2]
            + a[5] * x[2] * x[2]
        )


def _raw_cross(a: Sequence, b: Sequence, fc: FlopCounter) -> tuple:
    return (
        fc.sub(fc.mul(a[1], b[2]), fc.mul(a[2], b[1])),
        fc.sub(fc.mul(a[2], b[0]), fc.mul(a[0], b[2])),
        fc.sub(fc.mul(a[0], b[1]), fc.mul(a[1], b[0])),
    )


def _eval_line(l: Sequence, p: Sequence, fc: FlopCounter):
    return fc.add(fc.add(fc.mul(l[0], p[0]), fc.mul(l[1], p[1])), fc.mul(l[2], p[2]))


def _expand_product(l1: Sequence, l2: Sequence, fc: FlopCounter) -> tuple:
    """Monomial coefficients of (l1.x)(l2.x)."""
    return (
        fc.mul(l1[0], l2[0]),
        fc.add(fc.mul(l1[0], l2[1]), fc.mul(l1[1], l2[0])),
        fc.add(fc.mul(l1[0], l2[2]), fc.mul(l1[2], l2[0])),
        fc.mul(l1[1], l2[1]),
        fc.add(fc.mul(l1[1], l2[2]), fc.mul(l1[2], l2[1])),
        fc.mul(l1[2], l2[2]),
    )


@dataclass(frozen=True)
class LinePairConic:
    l1: HLine2
    l2: HLine2
    monomials: tuple[Fraction, ...]

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return Conic.from_monomials(self.monomials).coeffs

    def conic(self) -> Conic:
        return Conic.from_monomials(self.monomials)

    def evaluate(self, p: HPoint2 | Sequence, counter: FlopCounter | None = None) -> Fraction:
        fc = counter or FlopCounter()
        return fc.mul(_eval_line(self.l1.coords, p, fc), _eval_line(self.l2.coords, p, fc))


def line_pair(l1: HLine2, l2: HLine2, counter: FlopCounter | None = None) -> LinePairConic:
    fc = counter or FlopCounter()
    return LinePairConic(l1=l1, l2=l2, monomials=_expand_product(l1.coords, l2.coords, fc))


def solve_multipliers(
    pr: LinePairConic,
    qs: LinePairConic,
    t: HPoint2 | Sequence,
    counter: FlopCounter | None = None,
) -> tuple[Fraction, Fraction]:
    """(λ, μ) with λ·pr(t) + μ·qs(t) = 0.

    The pair is (qs(t), -pr(t)) with λ made positive (μ positive when λ = 0).
    No gcd reduction here: the conic is canonicalized after assembly.
    """
    fc = counter or FlopCounter()
    pt = tuple(to_rational(v) for v in t)
    pr_t = pr.evaluate(pt, fc)
    qs_t = qs.evaluate(pt, fc)
    if pr_t == 0 and qs_t == 0:
        raise IndeterminatePencil(f"point {pt} lies on both line pairs")
    lam, mu = qs_t, fc.neg(pr_t)
    if lam < 0 or (lam == 0 and mu < 0):
        lam, mu = -lam, -mu
    return lam, mu


@dataclass(frozen=True)
class PencilConstruction:
    order: tuple[int, ...]
    lines: dict[str, HLine2]
    pr: LinePairConic
    qs: LinePairConic
    multipliers: tuple[Fraction, Fraction]
    conic: Conic


def _check_distinct(pts: Sequence[HPoint2]) -> None:
    for (i, a), (j, b) in combinations(enumerate(pts), 2):
        if a.same_as(b):
            raise DuplicatePoints(f"points {i} and {j} coincide: {a.coords}")


def _collinear(a: HPoint2, b: HPoint2, c: HPoint2) -> bool:
    return det3([a.coords, b.coords, c.coords]) == 0


def _construct(pts: Sequence[HPoint2], fc: FlopCounter) -> PencilConstruction:
    P, Q, R, S, T = pts
    for tri in combinations((P, Q, R, S), 3):
        if _collinear(*tri):
            raise DegenerateConfiguration("three of the first four points are collinear")
    p = HLine2(_raw_cross(S.coords, P.coords, fc))
    q = HLine2(_raw_cross(P.coords, Q.coords, fc))
    r = HLine2(_raw_cross(Q.coords, R.coords, fc))
    s = HLine2(_raw_cross(R.coords, S.coords, fc))
    pr = line_pair(p, r, fc)
    qs = line_pair(q, s, fc)
    try:
        lam, mu = solve_multipliers(pr, qs, T.coords, fc)
    except IndeterminatePencil as exc:
        raise DegenerateConfiguration(str(exc)) from exc
    monomials = tuple(
        fc.add(fc.mul(lam, a), fc.mul(mu, b)) for a, b in zip(pr.monomials, qs.monomials)
    )
    stored = (
        monomials[0],
        fc.div(monomials[1], 2),
        fc.div(monomials[2], 2),
        monomials[3],
        fc.div(monomials[4], 2),
        monomials[5],
    )
    if not any(stored):
        raise DegenerateConfiguration("pencil member vanishes identically")
    return PencilConstruction(
        order=(0, 1, 2, 3, 4),
        lines={"p": p, "q": q, "r": r, "s": s},
        pr=pr,
        qs=qs,
        multipliers=(lam, mu),
        conic=Conic(tuple(Fraction(v) for v in stored)).canonical(),
    )


def conic_pencil_details(
    pts: Sequence[HPoint2],
    counter: FlopCounter | None = None,
    relabel: bool = True,
) -> PencilConstruction:
    """Pencil construction with roles P, Q, R, S, T taken from input order.

    When the given labeling degenerates, the remaining orderings are tried in
    lexicographic permutation order.
    """
    if len(pts) != 5:
        raise ValueError(f"need 5 points, got {len(pts)}")
    pts = [p if isinstance(p, HPoint2) else HPoint2(tuple(p)) for p in pts]
    _check_distinct(pts)
    fc = counter or FlopCounter()
    try:
        return _construct(pts, fc)
    except DegenerateConfiguration as exc:
        if not relabel:
            raise
        first_reason = str(exc)
    for order in permutations(range(5)):
        if order == (0, 1, 2, 3, 4):
            continue
        try:
            built = _construct([pts[i] for i in order], FlopCounter())
        except DegenerateConfiguration:
            continue
        logger.info("relabeled five points as %s (%s)", order, first_reason)
        return PencilConstruction(
            order=order,
            lines=built.lines,
            pr=built.pr,
            qs=built.qs,
            multipliers=built.multipliers,
            conic=built.conic,
        )
    raise DegenerateConfiguration(f"no labeling of the five points spans a pencil ({first_reason})")


def conic_through_5(
    pts: Sequence[HPoint2],
    counter: FlopCounter | None = None,
    relabel: bool = True,
) -> Conic:
    return conic_pencil_details(pts, counter=counter, relabel=relabel).conic


def third_pair(P: HPoint2, Q: HPoint2, R: HPoint2, S: HPoint2) -> LinePairConic:
    """Diagonal pair t·u = (P∨R)(Q∨S) of the complete quadrilateral PQRS."""
    fc = FlopCounter()
    t = HLine2(_raw_cross(P.coords, R.coords, fc))
    u = HLine2(_raw_cross(Q.coords, S.coords, fc))
    return line_pair(t, u)


def three_pair_rank(pairs: Sequence[LinePairConic]) -> int:
    return exact_rank([list(p.coeffs) for p in pairs])


class ConicClass(str, Enum):
    ELLIPSE = "Ellipse"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    DEGENERATE_PAIR = "DegeneratePair"
    DOUBLE_LINE = "DoubleLine"
    POINT_CONIC = "PointConic"


def classify_conic(c: Conic) -> ConicClass:
    a00, a01, a02, a11, a12, a22 = c.coeffs
    det = det3(c.matrix())
    if det != 0:
        minor = a11 * a22 - a12 * a12
        if minor > 0:
            return ConicClass.ELLIPSE
        if minor == 0:
            return ConicClass.PARABOLA
        return ConicClass.HYPERBOLA
    if exact_rank(c.matrix()) == 1:
        return ConicClass.DOUBLE_LINE
    principal = (a00 * a11 - a01 * a01) + (a00 * a22 - a02 * a02) + (a11 * a22 - a12 * a12)
    return ConicClass.DEGENERATE_PAIR if principal < 0 else ConicClass.POINT_CONIC
