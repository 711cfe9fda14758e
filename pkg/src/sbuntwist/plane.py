"""Projective-plane geometry over finite fields.

Closed points are modeled as Frobenius orbits of plane points; incidence
tests (collinearity, common conics) are exact determinant computations;
and six-point configurations are classified by their profile of connecting
lines.  This layer supplies the geometric side of the oracle: the symbolic
link formulas never see coordinates, so every geometric claim is checked
here explicitly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .gf import Element, FiniteField, field


class SamplingExhausted(Exception):
    """The retry budget for closed-point sampling ran out."""


class UnclassifiableConfiguration(Exception):
    """A six-point line profile matched none of the known cases; would
    signal a gap in the case enumeration."""


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^2 with homogeneous coordinates normalized so the first
    nonzero coordinate is 1; equal points have identical representations."""

    field: FiniteField
    coords: tuple[Element, Element, Element]

    @classmethod
    def make(cls, F: FiniteField, coords: Sequence[Element]) -> "ProjPoint":
        if len(coords) != 3:
            raise ValueError("projective points need 3 homogeneous coordinates")
        coords = tuple(coords)
        for c in coords:
            if c != F.zero:
                scale = F.inv(c)
                return cls(F, tuple(F.mul(scale, x) for x in coords))
        raise ValueError("(0 : 0 : 0) is not a projective point")

    @classmethod
    def of_ints(cls, F: FiniteField, triple: Sequence[int]) -> "ProjPoint":
        """Convenience constructor from prime-subfield coordinates."""
        return cls.make(F, tuple(F.element(t) for t in triple))


def affine_point(F: FiniteField, x: int, y: int) -> ProjPoint:
    """The point (x : y : 1) of the standard affine chart."""
    return ProjPoint.of_ints(F, (x, y, 1))


def frobenius_point(pt: ProjPoint) -> ProjPoint:
    F = pt.field
    return ProjPoint.make(F, tuple(F.frobenius(c) for c in pt.coords))


def frobenius_orbit(pt: ProjPoint) -> list[ProjPoint]:
    """The orbit of pt under coordinate-wise x -> x^p; its size divides the
    extension degree of the coordinate field."""
    orbit = [pt]
    cur = frobenius_point(pt)
    while cur != pt:
        orbit.append(cur)
        if len(orbit) > pt.field.m:
            raise AssertionError("Frobenius orbit exceeded the field degree")
        cur = frobenius_point(cur)
    return orbit


def _det(F: FiniteField, rows: list[list[Element]]) -> Element:
    """Exact determinant by Gaussian elimination with pivot search."""
    n = len(rows)
    a = [row[:] for row in rows]
    det = F.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != F.zero), None)
        if pivot is None:
            return F.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = F.neg(det)
        det = F.mul(det, a[col][col])
        inv = F.inv(a[col][col])
        for r in range(col + 1, n):
            if a[r][col] != F.zero:
                factor = F.mul(a[r][col], inv)
                for c in range(col, n):
                    a[r][c] = F.sub(a[r][c], F.mul(factor, a[col][c]))
    return det


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    """True iff the 3x3 coordinate determinant vanishes."""
    F = a.field
    if b.field != F or c.field != F:
        raise ValueError("points must share a coordinate field")
    return _det(F, [list(a.coords), list(b.coords), list(c.coords)]) == F.zero


def _cross(F: FiniteField, u: Sequence[Element], v: Sequence[Element]) -> tuple[Element, Element, Element]:
    return (
        F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
        F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
        F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
    )


def line_through(a: ProjPoint, b: ProjPoint) -> tuple[Element, Element, Element]:
    """Normalized dual coordinates of the line joining two distinct points."""
    if a == b:
        raise ValueError("two coincident points do not span a line")
    F = a.field
    coeffs = _cross(F, a.coords, b.coords)
    for c in coeffs:
        if c != F.zero:
            scale = F.inv(c)
            return tuple(F.mul(scale, x) for x in coeffs)
    raise AssertionError("cross product of distinct points cannot vanish")


def incident(line: Sequence[Element], pt: ProjPoint) -> bool:
    F = pt.field
    acc = F.zero
    for l, c in zip(line, pt.coords):
        acc = F.add(acc, F.mul(l, c))
    return acc == F.zero


def on_common_conic(points: Sequence[ProjPoint]) -> bool:
    """True iff six points lie on a common conic, degenerate ones included:
    the 6x6 determinant of Veronese images (x^2, xy, xz, y^2, yz, z^2)."""
    if len(points) != 6:
        raise ValueError(f"need exactly 6 points, got {len(points)}")
    F = points[0].field
    rows = []
    for pt in points:
        x, y, z = pt.coords
        rows.append(
            [
                F.mul(x, x),
                F.mul(x, y),
                F.mul(x, z),
                F.mul(y, y),
                F.mul(y, z),
                F.mul(z, z),
            ]
        )
    return _det(F, rows) == F.zero


@dataclass(frozen=True)
class ClosedPoint:
    """A closed point of the plane over F_p: a single transitive Frobenius
    orbit of geometric points."""

    points: tuple[ProjPoint, ...]

    @property
    def degree(self) -> int:
        return len(self.points)

    def __post_init__(self) -> None:
        orbit = frobenius_orbit(self.points[0])
        if len(orbit) != len(self.points) or set(orbit) != set(self.points):
            raise ValueError(
                "points do not form a single transitive Frobenius orbit"
            )


def sample_closed_point(
    p: int,
    degree: int,
    seed: int,
    attempts: int = 1000,
) -> ClosedPoint:
    """A pseudo-random closed point of the requested degree: a uniformly
    sampled point of P^2(F_{p^degree}) whose Frobenius orbit has exactly
    ``degree`` elements.  Deterministic per seed."""
    F = field(p, degree)
    rng = random.Random(seed)
    for _ in range(attempts):
        coords = tuple(F.random_element(rng) for _ in range(3))
        if all(c == F.zero for c in coords):
            continue
        pt = ProjPoint.make(F, coords)
        orbit = frobenius_orbit(pt)
        if len(orbit) == degree:
            return ClosedPoint(tuple(orbit))
    raise SamplingExhausted(
        f"no degree-{degree} point found over F_{p}^{degree} in {attempts} tries"
    )


@dataclass(frozen=True)
class PositionReport:
    """General-position verdicts for a six-point set."""

    no_three_collinear: bool
    off_conic: bool
    collinear_triples: tuple[tuple[int, int, int], ...]

    @property
    def general_position(self) -> bool:
        return self.no_three_collinear and self.off_conic


def general_position_report(points: Sequence[ProjPoint]) -> PositionReport:
    """Check all 20 triples for collinearity and the sextuple for a common
    conic.  A valid degree-6 link center must pass both."""
    if len(points) != 6:
        raise ValueError(f"need exactly 6 points, got {len(points)}")
    triples = []
    for i in range(6):
        for j in range(i + 1, 6):
            for k in range(j + 1, 6):
                if collinear(points[i], points[j], points[k]):
                    triples.append((i, j, k))
    return PositionReport(
        no_three_collinear=not triples,
        off_conic=not on_common_conic(points),
        collinear_triples=tuple(triples),
    )


# --- six-point configuration classification ---


class ConfigCase(Enum):
    """Line profiles of six distinct points carrying at least one 3-point
    line, plus the generic case.  Values are stable case ids."""

    GENERAL_POSITION = 0
    ALL_SIX_ON_A_LINE = 1
    FIVE_ON_A_LINE = 2
    FOUR_ON_A_LINE = 3
    FOUR_AND_A_TRIPLE = 4
    TWO_TRIPLES_SHARING_A_POINT = 5
    ONE_TRIPLE = 6
    TWO_DISJOINT_TRIPLES = 7
    TRIPLE_TRIANGLE = 8
    QUADRILATERAL = 9

    @property
    def case_id(self) -> int:
        return self.value


#: Number of connecting lines forced by each configuration case.
EXPECTED_LINE_COUNTS = {
    ConfigCase.ALL_SIX_ON_A_LINE: 1,
    ConfigCase.FIVE_ON_A_LINE: 6,
    ConfigCase.FOUR_ON_A_LINE: 10,
    ConfigCase.FOUR_AND_A_TRIPLE: 8,
    ConfigCase.TWO_TRIPLES_SHARING_A_POINT: 11,
    ConfigCase.ONE_TRIPLE: 13,
    ConfigCase.TWO_DISJOINT_TRIPLES: 11,
    ConfigCase.TRIPLE_TRIANGLE: 9,
    ConfigCase.QUADRILATERAL: 7,
    ConfigCase.GENERAL_POSITION: 15,
}


def connecting_lines(points: Sequence[ProjPoint]) -> list[frozenset[int]]:
    """All lines through at least two of the points, each as the index set
    of the configuration points incident to it."""
    seen: dict[tuple[Element, Element, Element], frozenset[int]] = {}
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            key = line_through(points[i], points[j])
            if key in seen:
                continue
            line = key
            members = frozenset(
                k for k in range(n) if incident(line, points[k])
            )
            seen[key] = members
    return list(seen.values())


def classify_configuration(
    points: Sequence[ProjPoint],
) -> tuple[ConfigCase, int]:
    """Classify six distinct points by their connecting-line profile and
    return (case, number of connecting lines).

    Raises :class:`UnclassifiableConfiguration` if the profile matches no
    case; a correct enumeration makes that unreachable, so any raise would
    expose a gap in the case analysis.
    """
    if len(points) != 6:
        raise ValueError(f"need exactly 6 points, got {len(points)}")
    if len(set(points)) != 6:
        raise ValueError("configuration points must be distinct")
    lines = connecting_lines(points)
    count = len(lines)
    sizes = sorted((len(m) for m in lines), reverse=True)
    top = sizes[0]
    triples = [m for m in lines if len(m) == 3]

    if top == 2:
        return ConfigCase.GENERAL_POSITION, count
    if top == 6:
        return ConfigCase.ALL_SIX_ON_A_LINE, count
    if top == 5:
        return ConfigCase.FIVE_ON_A_LINE, count
    if top == 4:
        if sizes.count(4) != 1 or len(triples) > 1:
            raise UnclassifiableConfiguration(
                f"unexpected profile with a 4-point line: {sizes}"
            )
        if triples:
            return ConfigCase.FOUR_AND_A_TRIPLE, count
        return ConfigCase.FOUR_ON_A_LINE, count

    # top == 3
    if len(triples) == 1:
        return ConfigCase.ONE_TRIPLE, count
    if len(triples) == 2:
        if triples[0] & triples[1]:
            return ConfigCase.TWO_TRIPLES_SHARING_A_POINT, count
        return ConfigCase.TWO_DISJOINT_TRIPLES, count
    if len(triples) == 3:
        shared = [a & b for a, b in _pairs(triples)]
        vertices = frozenset().union(*shared)
        if (
            all(len(s) == 1 for s in shared)
            and len(vertices) == 3
            and len(frozenset().union(*triples)) == 6
        ):
            return ConfigCase.TRIPLE_TRIANGLE, count
        raise UnclassifiableConfiguration(
            f"three 3-point lines without triangle structure: {triples}"
        )
    if len(triples) == 4:
        incidence = {k: sum(1 for m in triples if k in m) for k in range(6)}
        if all(v == 2 for v in incidence.values()) and all(
            len(a & b) == 1 for a, b in _pairs(triples)
        ):
            return ConfigCase.QUADRILATERAL, count
        raise UnclassifiableConfiguration(
            f"four 3-point lines without quadrilateral structure: {triples}"
        )
    raise UnclassifiableConfiguration(
        f"{len(triples)} three-point lines cannot occur on six points"
    )


def _pairs(items: Sequence[frozenset[int]]):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def sample_configuration(
    F: FiniteField, rng: random.Random
) -> tuple[ProjPoint, ...]:
    """Six distinct pseudo-random points of P^2 over F."""
    points: list[ProjPoint] = []
    while len(points) < 6:
        coords = tuple(F.random_element(rng) for _ in range(3))
        if all(c == F.zero for c in coords):
            continue
        pt = ProjPoint.make(F, coords)
        if pt not in points:
            points.append(pt)
    return tuple(points)


@dataclass(frozen=True)
class PlaneConfig:
    """Labelled plane points together with their Frobenius-orbit grouping;
    the geometric instantiation handed to curve-class transforms."""

    points: tuple[tuple[str, ProjPoint], ...]
    orbits: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        labels = [lbl for lbl, _ in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("point labels must be unique")
        grouped = [lbl for orbit in self.orbits for lbl in orbit]
        if sorted(grouped) != sorted(labels):
            raise ValueError("orbits must partition the labelled points")
        geometry = dict(self.points)
        for orbit in self.orbits:
            members = {geometry[lbl] for lbl in orbit}
            if len(members) != len(orbit):
                raise ValueError(f"orbit {orbit!r} repeats a geometric point")
            first = geometry[orbit[0]]
            if set(frobenius_orbit(first)) != members:
                raise ValueError(
                    f"orbit {orbit!r} is not a single transitive Frobenius orbit"
                )

    @classmethod
    def from_closed_points(
        cls, named: Iterable[tuple[str, ClosedPoint]]
    ) -> "PlaneConfig":
        points: list[tuple[str, ProjPoint]] = []
        orbits: list[tuple[str, ...]] = []
        for prefix, cp in named:
            labels = tuple(f"{prefix}_{i}" for i in range(cp.degree))
            points.extend(zip(labels, cp.points))
            orbits.append(labels)
        return cls(tuple(points), tuple(orbits))

    def geometry(self) -> dict[str, ProjPoint]:
        return dict(self.points)
