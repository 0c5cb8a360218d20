"""Jacobian matrices, exact minors, critical and Jacobian ideals, and the
degree-by-degree torsion test for the pair J inside its Jacobian ideal.

The torsion module of the pair J in I is graded; its degree-t component
vanishes exactly when J meets I^t inside J*I^(t-1).  The check here walks
t = 2..t_max and certifies any failure with an explicit witness polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .ideals import Ideal, irrelevant_power
from .poly import Polynomial, PolyRing, RingMismatchError


class PolyMatrix:
    """A rectangular matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one entry")
        ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.ring != ring:
                    raise RingMismatchError("matrix entry from a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.ring, tuple(zip(*self.entries)))

    def determinant(self) -> Polynomial:
        """Exact determinant by cofactor expansion along the sparsest row,
        memoized on (row subset, column subset)."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        return self._minor(tuple(range(self.rows)), tuple(range(self.cols)), {})

    def _minor(self, rows, cols, memo) -> Polynomial:
        if len(rows) == 1:
            return self.entries[rows[0]][cols[0]]
        got = memo.get((rows, cols))
        if got is not None:
            return got
        best = min(rows, key=lambda r: (sum(1 for c in cols if not self.entries[r][c].is_zero), r))
        rest = tuple(r for r in rows if r != best)
        sign = 1 if rows.index(best) % 2 == 0 else -1
        total = self.ring.zero()
        for k, c in enumerate(cols):
            e = self.entries[best][c]
            if e.is_zero:
                sign = -sign
                continue
            sub = self._minor(rest, cols[:k] + cols[k + 1:], memo)
            total = total + e * sub * sign
            sign = -sign
        memo[(rows, cols)] = total
        return total

    def minors(self, r: int) -> list[Polynomial]:
        """All r x r minors, enumerated lexicographically by (row subset,
        column subset), zero minors dropped."""
        if not 1 <= r <= min(self.rows, self.cols):
            raise ValueError(f"minor size {r} out of range")
        out = []
        memo: dict = {}
        for rs in combinations(range(self.rows), r):
            for cs in combinations(range(self.cols), r):
                m = self._minor(rs, cs, memo)
                if not m.is_zero:
                    out.append(m)
        return out


def jacobian_matrix(gens: Sequence[Polynomial]) -> PolyMatrix:
    """Row i holds the partial derivatives of the i-th generator."""
    if not gens:
        raise ValueError("jacobian of an empty generator list")
    ring = gens[0].ring
    return PolyMatrix(ring, [[g.derivative(j) for j in range(ring.num_vars)]
                             for g in gens])


@dataclass(frozen=True)
class CriticalData:
    """The ideal of r-minors of the Jacobian of a minimal generating set.

    equals_power records whether the minors generate the full r-th power of
    the irrelevant maximal ideal; the reverse inclusion is automatic when
    the Jacobian has linear entries (minors are then forms of degree r).
    """

    r: int
    minors: tuple[Polynomial, ...]
    critical_ideal: Ideal
    equals_power: bool
    mu_critical: int


def critical_ideal(j_ideal: Ideal, r: int) -> CriticalData:
    ring = j_ideal.ring
    mingens, _ = j_ideal.minimal_generators()
    if not mingens:
        raise ValueError("the zero ideal has no Jacobian")
    if not 1 <= r <= min(len(mingens), ring.num_vars):
        raise ValueError(f"minor size {r} out of range for {len(mingens)} "
                         f"generators in {ring.num_vars} variables")
    theta = jacobian_matrix(list(mingens))
    minors = theta.minors(r)
    ideal = Ideal(ring, minors)
    minimal, mu = ideal.minimal_generators() if minors else ((), 0)
    ideal = Ideal(ring, minimal)
    equals = ideal.contains_ideal(irrelevant_power(ring, r)) if minors else False
    return CriticalData(r, tuple(minors), ideal, equals, mu)


def jacobian_ideal(j_ideal: Ideal, r: int,
                   critical: Optional[CriticalData] = None) -> Ideal:
    """The Jacobian ideal (J, I_r(Theta)), minimalized.  For the ideal of a
    point set in P^n the right minor size is r = n."""
    critical = critical or critical_ideal(j_ideal, r)
    total = j_ideal + critical.critical_ideal
    gens, _ = total.minimal_generators()
    return Ideal(j_ideal.ring, gens)


def jacobian_contains_power(j_ideal: Ideal, r: int,
                            critical: Optional[CriticalData] = None) -> bool:
    """Whether every degree-r monomial lies in (J, I_r(Theta))."""
    ideal = jacobian_ideal(j_ideal, r, critical)
    return ideal.contains_ideal(irrelevant_power(j_ideal.ring, r))


@dataclass(frozen=True)
class DegreeVerdict:
    t: int
    vv_zero: bool
    witness: Optional[Polynomial] = None


@dataclass(frozen=True)
class TorsionReport:
    """Outcome of the degree-bounded torsion check.

    verdict is "torsion-free" only on the fast path (I equals J plus a full
    power of the irrelevant ideal, which settles every degree at once);
    otherwise it is "torsion-free-up-to-{t_max}" or "torsion-at-{t}".  A
    witness, when present, lies in J and in I^t but not in J*I^(t-1).
    """

    j_ideal: Ideal
    i_ideal: Ideal
    t_max: int
    per_degree: tuple[DegreeVerdict, ...]
    verdict: str
    fast_path: bool = False
    r: Optional[int] = None

    @property
    def torsion_free(self) -> bool:
        return not self.verdict.startswith("torsion-at")

    def to_json(self) -> dict:
        degrees = []
        for dv in self.per_degree:
            entry = {"t": dv.t, "vv_zero": dv.vv_zero}
            if dv.witness is not None:
                entry["witness"] = str(dv.witness)
            degrees.append(entry)
        return {
            "schema_version": 1,
            "pair": {
                "J": [str(g) for g in self.j_ideal.generators],
                "I": [str(g) for g in self.i_ideal.generators],
            },
            "r": self.r,
            "fast_path": self.fast_path,
            "degrees": degrees,
            "verdict": self.verdict,
        }


def vv_component(j_ideal: Ideal, i_ideal: Ideal, t: int):
    """Generators of J meet I^t, whether they all fall into J*I^(t-1), and a
    witness generator when one does not."""
    if t < 2:
        raise ValueError("torsion components start at degree 2")
    if not i_ideal.contains_ideal(j_ideal):
        raise ValueError("J is not contained in I")
    meet = j_ideal.intersect(i_ideal ** t)
    lower = j_ideal * (i_ideal ** (t - 1))
    witness = None
    vv_zero = True
    for g in meet.generators:
        if not lower.contains(g):
            vv_zero = False
            witness = g
            break
    return meet.generators, vv_zero, witness


def _fast_path_applies(j_ideal: Ideal, i_ideal: Ideal, r: Optional[int]) -> bool:
    """The power criterion: when J is generated by quadrics, r >= 2 and
    I = (J, m^r), the pair is torsion-free in every degree."""
    if r is None or r < 2:
        return False
    mingens, _ = j_ideal.minimal_generators()
    if not mingens or any(g.degree != 2 for g in mingens):
        return False
    return i_ideal == j_ideal + irrelevant_power(j_ideal.ring, r)


def torsion_free_check(j_ideal: Ideal, i_ideal: Ideal, t_max: int = 2,
                       r: Optional[int] = None) -> TorsionReport:
    """Decide torsion-freeness of the pair J in I degree by degree up to
    t_max, short-circuiting on the first nonzero component.

    When r is supplied and I is J plus the full r-th power of the irrelevant
    maximal ideal (with J generated by quadrics), the verdict is
    unconditional and no intersections are computed.
    """
    if t_max < 2:
        raise ValueError("t_max must be at least 2")
    if not i_ideal.contains_ideal(j_ideal):
        raise ValueError("J is not contained in I")
    if _fast_path_applies(j_ideal, i_ideal, r):
        return TorsionReport(j_ideal, i_ideal, t_max, (), "torsion-free",
                             fast_path=True, r=r)
    per_degree = []
    for t in range(2, t_max + 1):
        _, vv_zero, witness = vv_component(j_ideal, i_ideal, t)
        per_degree.append(DegreeVerdict(t, vv_zero, witness))
        if not vv_zero:
            return TorsionReport(j_ideal, i_ideal, t_max, tuple(per_degree),
                                 f"torsion-at-{t}", r=r)
    return TorsionReport(j_ideal, i_ideal, t_max, tuple(per_degree),
                         f"torsion-free-up-to-{t_max}", r=r)
