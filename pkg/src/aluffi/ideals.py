"""Ideal-level algebra: sums, products, powers, intersections via
elimination, membership, equality, minimal generators and graded Hilbert
functions."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from . import groebner
from .linalg import SparseEchelon
from .orders import Monomial, TermOrder, elimination_order, mon_degree, mon_divides
from .poly import Polynomial, PolyRing, RingMismatchError


class NotHomogeneousError(ValueError):
    """Operation requires homogeneous generators."""


class Ideal:
    """A polynomial ideal given by generators, with cached Groebner bases.

    Ideals are immutable; the Groebner cache is a benign memo (a given term
    order always maps to the identical reduced basis).
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb_cache: dict[TermOrder, groebner.GroebnerBasis] = {}
        self._minimal: tuple[tuple[Polynomial, ...], int] | None = None

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.generators)

    def groebner_basis(self, order: TermOrder | None = None,
                       degree_cap: int | None = None) -> groebner.GroebnerBasis:
        """The reduced Groebner basis for the given order (cached)."""
        order = order or self.ring.default_order
        gb = self._gb_cache.get(order)
        if gb is None:
            if self.is_zero:
                raise ValueError("the zero ideal has no Groebner basis")
            gb = groebner.reduce_basis(
                groebner.buchberger(self.generators, order, degree_cap=degree_cap))
            self._gb_cache[order] = gb
        return gb

    def _check_ring(self, other: Ideal):
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")

    # -- membership and comparison -------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        if f.is_zero:
            return True
        if self.is_zero:
            return False
        gb = self.groebner_basis()
        return groebner.normal_form(f, gb.elements, gb.order).is_zero

    def contains_ideal(self, other: Ideal) -> bool:
        self._check_ring(other)
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        order = self.ring.default_order
        return self.groebner_basis(order).elements == other.groebner_basis(order).elements

    __hash__ = None

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: Ideal) -> Ideal:
        self._check_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: Ideal) -> Ideal:
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Ideal(self.ring, [])
        a = self._generators_for_products()
        b = other._generators_for_products()
        return Ideal(self.ring, [f * g for f in a for g in b])

    def __pow__(self, t: int) -> Ideal:
        if not isinstance(t, int) or t < 0:
            raise ValueError("ideal powers take non-negative integer exponents")
        if t == 0:
            return Ideal(self.ring, [self.ring.one()])
        if self.is_zero:
            return Ideal(self.ring, [])
        gens = self._generators_for_products()
        out = []
        for combo in combinations_with_replacement(gens, t):
            p = combo[0]
            for q in combo[1:]:
                p = p * q
            out.append(p)
        return Ideal(self.ring, out)

    def _generators_for_products(self) -> Sequence[Polynomial]:
        """Minimalized generators when homogeneous, else the raw ones; keeps
        generator blowup of products and powers polynomial at desk scale."""
        if self.is_homogeneous and not self.is_zero:
            return self.minimal_generators()[0]
        return self.generators

    def intersect(self, other: Ideal) -> Ideal:
        """Intersection via a single auxiliary variable w: take the basis of
        w*A + (1-w)*B in an elimination order with w greatest and keep the
        elements free of w."""
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Ideal(self.ring, [])
        ring = self.ring
        ext = PolyRing(ring.num_vars + 1, elimination_order(1))
        w = ext.variable(0)
        one = ext.one()

        def lift(f: Polynomial) -> Polynomial:
            return Polynomial(ext, {(0,) + m: c for m, c in f.terms})

        gens = [w * lift(f) for f in self._generators_for_products()]
        gens += [(one - w) * lift(g) for g in other._generators_for_products()]
        gb = groebner.reduce_basis(groebner.buchberger(gens, ext.default_order))
        kept = []
        for e in gb.elements:
            if all(m[0] == 0 for m, _ in e.terms):
                kept.append(Polynomial(ring, {m[1:]: c for m, c in e.terms}))
        return Ideal(ring, kept)

    # -- graded invariants ------------------------------------------------------

    def minimal_generators(self) -> tuple[tuple[Polynomial, ...], int]:
        """A minimal homogeneous generating subset and mu, by exact linear
        algebra degree by degree (graded Nakayama)."""
        if self._minimal is not None:
            return self._minimal
        if self.is_zero:
            self._minimal = ((), 0)
            return self._minimal
        for g in self.generators:
            if not g.is_homogeneous:
                raise NotHomogeneousError(f"non-homogeneous generator: {g}")
        if any(g.degree == 0 for g in self.generators):
            self._minimal = ((self.ring.one(),), 1)
            return self._minimal
        key = self.ring.default_order.key
        nvars = self.ring.num_vars
        buckets: dict[int, list[Polynomial]] = {}
        for g in self.generators:
            buckets.setdefault(g.degree, []).append(g)
        chosen: list[Polynomial] = []
        prev_rows: list[dict] = []
        for d in range(min(buckets), max(buckets) + 1):
            ech = SparseEchelon(key)
            for row in prev_rows:
                for i in range(nvars):
                    ech.insert({m[:i] + (m[i] + 1,) + m[i + 1:]: v
                                for m, v in row.items()})
            for g in buckets.get(d, []):
                if ech.insert(dict(g.terms)):
                    chosen.append(g)
            prev_rows = ech.rows()
        self._minimal = (tuple(chosen), len(chosen))
        return self._minimal

    def mu(self) -> int:
        """Minimal number of homogeneous generators."""
        return self.minimal_generators()[1]

    def hilbert_function(self, d: int) -> int:
        """dim of (R/I)_d, counted on degree-d standard monomials."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        mons = self.ring.monomials_of_degree(d)
        if self.is_zero:
            return len(mons)
        for g in self.generators:
            if not g.is_homogeneous:
                raise NotHomogeneousError(f"non-homogeneous generator: {g}")
        lead = groebner.initial_ideal(self.groebner_basis())
        return sum(1 for m in mons
                   if not any(mon_divides(g, m) for g in lead))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    """The irrelevant maximal ideal (x0, ..., xn)."""
    return Ideal(ring, ring.variables())


def irrelevant_power(ring: PolyRing, r: int) -> Ideal:
    """(x0, ..., xn)^r, generated by all monomials of degree r."""
    if r < 1:
        raise ValueError("the exponent must be at least 1")
    return Ideal(ring, [Polynomial(ring, {m: Fraction(1)})
                        for m in ring.monomials_of_degree(r)])


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    """Left fold of pairwise intersections."""
    if not ideals:
        raise ValueError("nothing to intersect")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = acc.intersect(nxt)
    return acc
