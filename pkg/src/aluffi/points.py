"""Finite point sets in projective space: position predicates, vanishing
ideals, frame normalization, and the direct quadric construction for point
ideals in the small-cardinality range."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .ideals import Ideal, intersect_all
from .poly import Polynomial, PolyRing


class GeneralPositionError(ValueError):
    """The configuration violates a required position hypothesis."""


class PointFormatError(ValueError):
    """A points file could not be parsed."""


class ProjectivePoint:
    """A point of P^n, stored with the first nonzero coordinate scaled to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        vec = [Fraction(c) for c in coords]
        lead = next((c for c in vec if c), None)
        if lead is None:
            raise ValueError("a projective point needs a nonzero coordinate vector")
        object.__setattr__(self, "coords", tuple(c / lead for c in vec))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class PointSet:
    """Distinct points of P^n; ambient_n is the n of the ambient space."""

    ambient_n: int
    points: tuple[ProjectivePoint, ...]

    def __post_init__(self):
        if self.ambient_n < 2:
            raise ValueError("the ambient dimension must be at least 2")
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)
                    for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.ambient_n + 1:
                raise ValueError("point has the wrong number of coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")

    def __len__(self):
        return len(self.points)

    def ring(self) -> PolyRing:
        return PolyRing(self.ambient_n + 1)

    def coordinate_rows(self) -> list[list[Fraction]]:
        return [list(p.coords) for p in self.points]


def glp_check(ps: PointSet) -> bool:
    """General linear position: s <= n points must span a P^(s-1); for
    s >= n+1 every subset of n+1 points must have nonzero determinant."""
    n, s = ps.ambient_n, len(ps)
    rows = ps.coordinate_rows()
    if s <= n:
        return linalg.rank(rows) == s
    for subset in combinations(range(s), n + 1):
        if linalg.det([rows[i] for i in subset]) == 0:
            return False
    return True


def hyperplane_position_check(ps: PointSet) -> bool:
    """True when some s-1 points span a hyperplane H, are in general linear
    position inside H, and the remaining point lies off H."""
    n, s = ps.ambient_n, len(ps)
    if s < n + 2:
        raise ValueError("hyperplane position needs at least n+2 points")
    rows = ps.coordinate_rows()
    for out in range(s):
        rest = [rows[i] for i in range(s) if i != out]
        if linalg.rank(rest) != n:
            continue
        if linalg.rank(rest + [rows[out]]) != n + 1:
            continue
        if all(linalg.rank(list(sub)) == n for sub in combinations(rest, n)):
            return True
    return False


def vanishing_ideal_point(p: ProjectivePoint, ring: PolyRing | None = None) -> Ideal:
    """The prime ideal of a point: n independent linear forms vanishing at it."""
    n = len(p) - 1
    ring = ring or PolyRing(n + 1)
    j = next(i for i, c in enumerate(p.coords) if c)
    forms = []
    for i in range(n + 1):
        if i == j:
            continue
        forms.append(ring.variable(i) - ring.variable(j) * p.coords[i])
    return Ideal(ring, forms)


def ideal_of_points(ps: PointSet, ring: PolyRing | None = None) -> Ideal:
    """The defining ideal of the set, a left fold of prime intersections."""
    ring = ring or ps.ring()
    return intersect_all([vanishing_ideal_point(p, ring) for p in ps.points])


def normalize_frame(ps: PointSet) -> tuple[list[list[Fraction]], PointSet]:
    """Move a general-position set to the standard frame.

    Returns (A, moved) where A is invertible, the first n+1 moved points are
    the coordinate points, the (n+2)nd is the unit point, and A fixes the
    incidence structure of the rest.
    """
    n, s = ps.ambient_n, len(ps)
    if s < n + 2:
        raise GeneralPositionError("frame normalization needs at least n+2 points")
    if not glp_check(ps):
        raise GeneralPositionError("points are not in general linear position")
    cols = [p.coords for p in ps.points[: n + 1]]
    m = [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)]
    c = linalg.solve(m, list(ps.points[n + 1].coords))
    scaled = [[m[i][j] * c[j] for j in range(n + 1)] for i in range(n + 1)]
    a = linalg.invert(scaled)
    moved = [apply_matrix(a, p) for p in ps.points]
    return a, PointSet(n, tuple(moved))


def apply_matrix(a: Sequence[Sequence[Fraction]], p: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint([sum(Fraction(a[i][j]) * p.coords[j]
                                for j in range(len(p))) for i in range(len(p))])


@dataclass(frozen=True)
class IgpGenerators:
    """Output of the direct quadric construction: one generator
    x_i*x_j + sum_t alpha[(i,j)][t] * x_t*x_n per index pair in lambda_set."""

    ring: PolyRing
    t_window: tuple[int, ...]
    lambda_set: tuple[tuple[int, int], ...]
    alpha: dict[tuple[int, int], dict[int, Fraction]]
    generators: tuple[Polynomial, ...]


def igp_construct(ps: PointSet) -> IgpGenerators:
    """Construct the quadric generators of the point ideal directly, for
    n+2 <= s <= 2n points in general linear position in the standard frame.

    For each admissible pair (i, j) the coefficients solve a square linear
    system with one equation from the unit point and one from every extra
    point; general position makes the system matrix invertible.
    """
    n, s = ps.ambient_n, len(ps)
    if not n + 2 <= s <= 2 * n:
        raise GeneralPositionError(f"need n+2 <= s <= 2n points, got s={s}, n={n}")
    if not glp_check(ps):
        raise GeneralPositionError("points are not in general linear position")
    _require_standard_frame(ps)
    ring = ps.ring()
    window = tuple(range(2 * n - s + 1, n))
    lam = tuple((i, j) for i in range(n + 1) for j in range(i + 1, n + 1)
                if not (j == n and i in window))
    extras = []
    for p in ps.points[n + 2:]:
        last = p.coords[n]
        if last == 0:
            raise GeneralPositionError(
                "extra point lies on the last coordinate hyperplane")
        extras.append([c / last for c in p.coords])
    rows = [[Fraction(1)] * len(window)]
    rows += [[a[t] for t in window] for a in extras]
    alpha: dict[tuple[int, int], dict[int, Fraction]] = {}
    gens = []
    for (i, j) in lam:
        rhs = [Fraction(-1)] + [-a[i] * a[j] for a in extras]
        try:
            sol = linalg.solve(rows, rhs)
        except linalg.SingularMatrixError:
            raise GeneralPositionError(
                "singular coefficient system; points are too degenerate") from None
        coeffs = dict(zip(window, sol))
        alpha[(i, j)] = coeffs
        g = ring.variable(i) * ring.variable(j)
        for t in window:
            g = g + ring.variable(t) * ring.variable(n) * coeffs[t]
        gens.append(g)
    return IgpGenerators(ring, window, lam, alpha, tuple(gens))


def _require_standard_frame(ps: PointSet):
    n = ps.ambient_n
    for i in range(n + 1):
        expected = [0] * (n + 1)
        expected[i] = 1
        if ps.points[i] != ProjectivePoint(expected):
            raise GeneralPositionError(
                "points are not in the standard frame; call normalize_frame first")
    if ps.points[n + 1] != ProjectivePoint([1] * (n + 1)):
        raise GeneralPositionError(
            "point n+2 is not the unit point; call normalize_frame first")


def hyperplane_standard_points(n: int) -> PointSet:
    """The standard hyperplane configuration: the coordinate points and unit
    point of the hyperplane {x_n = 0}, plus the last coordinate point."""
    pts = []
    for i in range(n):
        coords = [0] * (n + 1)
        coords[i] = 1
        pts.append(coords)
    pts.append([1] * n + [0])
    last = [0] * (n + 1)
    last[n] = 1
    pts.append(last)
    return PointSet(n, tuple(pts))


def hyperplane_standard_ideal(n: int) -> Ideal:
    """The standard ideal of the hyperplane configuration for n >= 3:
    (x_i*x_j - x_{n-2}*x_{n-1}, x_i*x_n for 0 <= i < j <= n-1)."""
    if n < 3:
        raise ValueError("the standard quadric presentation needs n >= 3; "
                         "for n = 2 the point ideal has a cubic generator")
    ring = PolyRing(n + 1)
    x = ring.variables()
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) != (n - 2, n - 1):
                gens.append(x[i] * x[j] - x[n - 2] * x[n - 1])
    gens += [x[i] * x[n] for i in range(n)]
    return Ideal(ring, gens)


def sample_glp_points(n: int, s: int, rng: random.Random,
                      bound: int = 10, max_tries: int = 500) -> PointSet:
    """Rejection-sample s integer-coordinate points in general linear
    position, last coordinate normalized to 1."""
    for _ in range(max_tries):
        pts = []
        for _ in range(s):
            coords = [rng.randint(-bound, bound) for _ in range(n)]
            coords.append(1)
            pts.append(coords)
        try:
            ps = PointSet(n, tuple(pts))
        except ValueError:
            continue
        if glp_check(ps):
            return ps
    raise GeneralPositionError(
        f"could not sample {s} points in general position in {max_tries} tries")


def parse_points_text(text: str) -> PointSet:
    """Points file: header line "n s", then s lines of n+1 rationals.
    '#' starts a comment; blank lines are ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise PointFormatError("empty points file")
    header = lines[0].split()
    if len(header) != 2:
        raise PointFormatError(f"expected header 'n s', got {lines[0]!r}")
    try:
        n, s = int(header[0]), int(header[1])
    except ValueError:
        raise PointFormatError(f"expected integers in header, got {lines[0]!r}") from None
    if len(lines) - 1 != s:
        raise PointFormatError(f"expected {s} point lines, found {len(lines) - 1}")
    pts = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n + 1:
            raise PointFormatError(f"expected {n + 1} coordinates, got {line!r}")
        try:
            pts.append([Fraction(tok) for tok in tokens])
        except (ValueError, ZeroDivisionError):
            raise PointFormatError(f"bad coordinate in {line!r}") from None
    try:
        return PointSet(n, tuple(pts))
    except ValueError as exc:
        raise PointFormatError(str(exc)) from None
