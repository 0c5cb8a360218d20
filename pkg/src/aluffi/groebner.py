"""Normal forms, Buchberger's algorithm, reduced bases, initial ideals."""

from __future__ import annotations

import heapq
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import SparseEchelon
from .orders import (Monomial, TermOrder, mon_degree, mon_div, mon_divides,
                     mon_lcm, mon_mul)
from .poly import Polynomial, RingMismatchError


class DegreeCapExceeded(RuntimeError):
    """Raised when a Buchberger run needs S-pairs above the configured cap."""


# Process-wide default cap (None = unbounded); buchberger() arguments win.
# A ContextVar keeps the setting per execution context, so concurrent use
# stays isolated.
default_degree_cap: ContextVar[int | None] = ContextVar("default_degree_cap",
                                                        default=None)


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _common_ring(polys: Sequence[Polynomial]):
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise RingMismatchError("polynomials live in different rings")
    return ring


def _reduce_dict(p: dict, reducers, key) -> dict:
    """Divide p by the reducers, leftmost reducible term first, divisors in
    list order; returns the remainder."""
    rem: dict[Monomial, Fraction] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        md = mon_degree(m)
        for lmg, lcg, gterms, dg in reducers:
            if dg > md:
                continue
            q = mon_div(m, lmg)
            if q is not None:
                fac = c / lcg
                for mg, cg in gterms:
                    mm = mon_mul(mg, q)
                    v = p.get(mm, 0) - fac * cg
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _prepare(g: Polynomial, order: TermOrder):
    lm = g.leading_monomial(order)
    lc = dict(g.terms)[lm]
    return (lm, lc, g.terms, mon_degree(lm))


def normal_form(f: Polynomial, divisors: Sequence[Polynomial],
                order: TermOrder | None = None) -> Polynomial:
    """Remainder of f on division by the divisor list.

    Deterministic: the leading reducible term is always cancelled first and
    divisors are tried in list order.  f - normal_form(f) lies in the ideal
    generated by the divisors.
    """
    ring = _common_ring([f] + [g for g in divisors])
    order = order or ring.default_order
    reducers = [_prepare(g, order) for g in divisors if not g.is_zero]
    rem = _reduce_dict(dict(f.terms), reducers, order.key)
    return Polynomial(ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: TermOrder | None = None) -> Polynomial:
    order = order or f.ring.default_order
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcf, lcg = dict(f.terms)[lmf], dict(g.terms)[lmg]
    lcm = mon_lcm(lmf, lmg)
    uf, ug = mon_div(lcm, lmf), mon_div(lcm, lmg)
    sf = Polynomial(f.ring, {mon_mul(m, uf): c / lcf for m, c in f.terms})
    sg = Polynomial(g.ring, {mon_mul(m, ug): c / lcg for m, c in g.terms})
    return sf - sg


def _interreduce_by_degree(gens: list[Polynomial], order: TermOrder):
    """Exact linear interreduction of homogeneous generators, degree by
    degree; cheap preprocessing that leaves the generated ideal unchanged."""
    ring = gens[0].ring
    buckets: dict[int, list[Polynomial]] = {}
    for g in gens:
        buckets.setdefault(g.degree, []).append(g)
    out = []
    for d in sorted(buckets):
        ech = SparseEchelon(order.key)
        for g in buckets[d]:
            ech.insert(dict(g.terms))
        rows = sorted(ech.rows(), key=lambda r: order.key(max(r, key=order.key)),
                      reverse=True)
        out.extend(Polynomial(ring, {m: Fraction(v) for m, v in r.items()}) for r in rows)
    return out


def buchberger(gens: Sequence[Polynomial], order: TermOrder | None = None,
               use_criteria: bool = True, degree_cap: int | None = None) -> GroebnerBasis:
    """Buchberger's algorithm with the coprime and chain criteria.

    Pairs are processed by smallest lcm degree, ties broken by the term
    order on the lcm and then by generator indices, so runs are fully
    deterministic.  A degree_cap aborts (with DegreeCapExceeded) instead of
    chasing S-pairs above the cap.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("cannot take a Groebner basis of the zero ideal")
    ring = _common_ring(gens)
    order = order or ring.default_order
    if degree_cap is None:
        degree_cap = default_degree_cap.get()
    key = order.key
    if all(g.is_homogeneous for g in gens):
        gens = _interreduce_by_degree(gens, order)

    basis: list[Polynomial] = []
    reducers = []
    lms: list[Monomial] = []
    alive: set[tuple[int, int]] = set()
    heap: list = []

    def push(i, j):
        lcm = mon_lcm(lms[i], lms[j])
        heapq.heappush(heap, (mon_degree(lcm), key(lcm), i, j))

    def add_generator(f: Polynomial):
        f = f.monic(order)
        k = len(basis)
        lmf = f.leading_monomial(order)
        if use_criteria:
            lcms = {i: mon_lcm(lms[i], lmf) for i in range(k)}
            keep = []
            for i in range(k):
                li = lcms[i]
                if any(lcms[j] != li and mon_divides(lcms[j], li) for j in lcms):
                    continue
                keep.append(i)
            seen: dict[Monomial, int] = {}
            for i in keep:
                seen.setdefault(lcms[i], i)
            keep = sorted(seen.values())
            keep = [i for i in keep if lcms[i] != mon_mul(lms[i], lmf)]
            for (i, j) in list(alive):
                lij = mon_lcm(lms[i], lms[j])
                if (mon_divides(lmf, lij)
                        and mon_lcm(lms[i], lmf) != lij
                        and mon_lcm(lms[j], lmf) != lij):
                    alive.discard((i, j))
        else:
            keep = list(range(k))
        basis.append(f)
        reducers.append(_prepare(f, order))
        lms.append(lmf)
        for i in keep:
            alive.add((i, k))
            push(i, k)

    for g in gens:
        add_generator(g)

    while heap:
        d, _, i, j = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        if degree_cap is not None and d > degree_cap:
            raise DegreeCapExceeded(
                f"S-pair of degree {d} exceeds the degree cap {degree_cap}")
        s = s_polynomial(basis[i], basis[j], order)
        rem = _reduce_dict(dict(s.terms), reducers, key)
        if rem:
            add_generator(Polynomial(ring, rem))

    return GroebnerBasis(order, tuple(basis), reduced=False)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis of the same ideal and order."""
    order = gb.order
    key = order.key
    elems = sorted(gb.elements, key=lambda g: key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in elems:
        lm = g.leading_monomial(order)
        if not any(mon_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return GroebnerBasis(order, tuple(reduced), reduced=True)


def initial_ideal(gb: GroebnerBasis) -> list[Monomial]:
    """Minimal monomial generators of the initial ideal of a reduced basis."""
    if not gb.reduced:
        raise ValueError("initial_ideal expects a reduced Groebner basis")
    return [g.leading_monomial(gb.order) for g in gb.elements]
