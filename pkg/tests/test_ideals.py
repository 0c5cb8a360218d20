"""Ideal algebra: sums, products, powers, intersections, membership,
minimal generators and Hilbert functions."""

import random
from fractions import Fraction
from math import comb

import pytest

from aluffi import (Ideal, NotHomogeneousError, PolyRing, Polynomial,
                    hyperplane_standard_ideal, intersect_all,
                    irrelevant_ideal, irrelevant_power, mon_divides,
                    parse_poly)


def ideal(ring, *texts):
    return Ideal(ring, [parse_poly(t, ring) for t in texts])


def random_monomial_ideal(ring, rng, max_gens=5, max_degree=3):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        mon = [0] * ring.num_vars
        for _ in range(rng.randint(1, max_degree)):
            mon[rng.randrange(ring.num_vars)] += 1
        gens.append(Polynomial(ring, {tuple(mon): 1}))
    return Ideal(ring, gens)


# -- sum / product / power ----------------------------------------------------

def test_sum_concatenates_generators():
    ring = PolyRing(2)
    total = ideal(ring, "x0") + ideal(ring, "x1")
    assert [str(g) for g in total.generators] == ["x0", "x1"]


def test_sum_idempotent_up_to_equality():
    ring = PolyRing(3)
    a = ideal(ring, "x0*x1 - x2^2", "x0^2")
    assert a + a == a


def test_product_of_principal_ideals():
    ring = PolyRing(2)
    assert ideal(ring, "x0") * ideal(ring, "x1") == ideal(ring, "x0*x1")


def test_product_contained_in_intersection():
    rng = random.Random(31)
    ring = PolyRing(3)
    for _ in range(5):
        a = random_monomial_ideal(ring, rng)
        b = random_monomial_ideal(ring, rng)
        meet = a.intersect(b)
        for g in (a * b).generators:
            assert meet.contains(g)


def test_power_of_linear_pair():
    ring = PolyRing(2)
    sq = ideal(ring, "x0", "x1") ** 2
    assert sq == ideal(ring, "x0^2", "x0*x1", "x1^2")


def test_first_power_is_identity():
    ring = PolyRing(3)
    a = ideal(ring, "x0*x1 - x2^2", "x1^2")
    assert a ** 1 == a


def test_zeroth_power_is_unit_ideal():
    ring = PolyRing(2)
    a = ideal(ring, "x0")
    assert (a ** 0).contains(ring.one())


def test_square_membership(four_points):
    _, j, i = four_points
    ring = j.ring
    f = parse_poly("(x0*x1 - x0*x2)^2", ring)
    assert (i ** 2).contains(f)


def test_power_contained_in_intersection_chain():
    ring = PolyRing(3)
    a = ideal(ring, "x0*x1 - x2^2", "x1*x2")
    chain = intersect_all([a, a, a])
    for g in (a ** 3).generators:
        assert chain.contains(g)
    assert chain == a


# -- intersection ----------------------------------------------------------------

def test_intersection_of_coordinate_ideals():
    ring = PolyRing(2)
    assert ideal(ring, "x0").intersect(ideal(ring, "x1")) == ideal(ring, "x0*x1")


def lcm_oracle(a, b):
    """Pairwise-lcm intersection for monomial ideals."""
    ring = a.ring
    gens = []
    for f in a.generators:
        for g in b.generators:
            mf, mg = f.terms[0][0], g.terms[0][0]
            gens.append(Polynomial(ring, {tuple(max(x, y) for x, y in zip(mf, mg)): 1}))
    return Ideal(ring, gens)


def test_monomial_intersection_matches_lcm_oracle():
    rng = random.Random(32)
    for trial in range(50):
        ring = PolyRing(rng.randint(2, 4))
        a = random_monomial_ideal(ring, rng)
        b = random_monomial_ideal(ring, rng)
        assert a.intersect(b) == lcm_oracle(a, b)


def test_hyperplane_plane_intersection():
    ring = PolyRing(3)
    j1 = ideal(ring, "x2", "x0*x1*(x0 - x1)")
    j2 = ideal(ring, "x0", "x1")
    assert j1.intersect(j2) == ideal(ring, "x0*x2", "x1*x2", "x0*x1*(x0 - x1)")


def test_intersection_membership_property():
    rng = random.Random(33)
    ring = PolyRing(3)
    for _ in range(5):
        a = random_monomial_ideal(ring, rng)
        b = random_monomial_ideal(ring, rng)
        meet = a.intersect(b)
        for g in meet.generators:
            assert a.contains(g) and b.contains(g)
        for f in (a * b).generators:
            assert meet.contains(f) == (a.contains(f) and b.contains(f))


# -- membership and comparisons -----------------------------------------------------

def test_contains_zero():
    ring = PolyRing(2)
    assert ideal(ring, "x0").contains(ring.zero())


def test_two_point_witness_membership():
    ring = PolyRing(4)
    j = ideal(ring, "x0*x1", "x2", "x3")
    ji = j * irrelevant_ideal(ring)
    f = parse_poly("x0*x1", ring)
    assert not ji.contains(f)


def test_collinear_witness_membership(collinear_triple):
    _, j, i = collinear_triple
    ring = j.ring
    w = parse_poly("x1*x2^3*(x1 - x2)", ring)
    assert j.intersect(i ** 2).contains(w)
    assert not (j * i).contains(w)


def test_ideal_equality_reflexive():
    ring = PolyRing(3)
    a = ideal(ring, "x0*x1 - x2^2")
    assert a == a


def test_irrelevant_power_equals_repeated_product():
    ring = PolyRing(2)
    m = irrelevant_ideal(ring)
    assert irrelevant_power(ring, 2) == m ** 2


def test_irrelevant_power_generators():
    ring = PolyRing(2)
    sq = irrelevant_power(ring, 2)
    assert sq == ideal(ring, "x0^2", "x0*x1", "x1^2")
    assert len(irrelevant_power(PolyRing(4), 3).generators) == 20


# -- minimal generators ----------------------------------------------------------

def test_mu_of_four_points(four_points):
    _, j, _ = four_points
    assert j.mu() == comb(4, 2) - 4  # C(n+2,2) - s with n=2, s=4


def test_mu_invariant_under_shuffle_and_basis_change():
    rng = random.Random(34)
    ring = PolyRing(3)
    a = ideal(ring, "x0*x1 - x2^2", "x0^2 - x1*x2", "x0^2 - x0*x1 + x1*x2 - x2^2")
    mu = a.mu()
    for _ in range(10):
        gens = list(a.generators)
        rng.shuffle(gens)
        assert Ideal(ring, gens).mu() == mu
    gb = a.groebner_basis()
    assert Ideal(ring, list(gb.elements)).mu() == mu


def test_minimal_generators_requires_homogeneous():
    ring = PolyRing(2)
    with pytest.raises(NotHomogeneousError):
        ideal(ring, "x0^2 - x1").minimal_generators()


def test_minimal_generators_of_redundant_set():
    ring = PolyRing(3)
    a = ideal(ring, "x0", "x1", "x0 + x1", "x0*x2")
    gens, mu = a.minimal_generators()
    assert mu == 2
    assert Ideal(ring, list(gens)) == ideal(ring, "x0", "x1")


# -- Hilbert functions ---------------------------------------------------------------

def test_hilbert_of_zero_ideal():
    ring = PolyRing(4)
    zero = Ideal(ring, [])
    for d in range(4):
        assert zero.hilbert_function(d) == comb(3 + d, 3)


def test_hilbert_of_hyperplane_configuration():
    for n in (3, 4):
        j = hyperplane_standard_ideal(n)
        values = [j.hilbert_function(d) for d in range(5)]
        assert values == [1, n + 1, n + 2, n + 2, n + 2]


def test_hilbert_of_point_ideal_stabilizes(four_points):
    _, j, _ = four_points
    assert [j.hilbert_function(d) for d in (2, 3, 4)] == [4, 4, 4]
    assert j.hilbert_function(1) == 3


def enumeration_oracle(a, d):
    """Count degree-d monomials divisible by no generator (monomial ideals)."""
    gens = [g.terms[0][0] for g in a.generators]
    return sum(1 for m in a.ring.monomials_of_degree(d)
               if not any(mon_divides(g, m) for g in gens))


def test_hilbert_matches_enumeration_oracle():
    rng = random.Random(35)
    for trial in range(25):
        ring = PolyRing(rng.randint(2, 4))
        a = random_monomial_ideal(ring, rng)
        d = rng.randint(0, 4)
        assert a.hilbert_function(d) == enumeration_oracle(a, d)


def test_hilbert_additivity_on_split_configuration():
    """For J = J1 meet J2 the four Hilbert functions satisfy the
    inclusion-exclusion identity degree by degree."""
    ring = PolyRing(4)
    n = 3
    x = ring.variables()
    gens1 = [x[i] * x[j] - x[n - 2] * x[n - 1]
             for i in range(n) for j in range(i + 1, n) if (i, j) != (n - 2, n - 1)]
    j1 = Ideal(ring, gens1 + [x[n]])
    j2 = Ideal(ring, x[:n])
    j = j1.intersect(j2)
    total = j1 + j2
    for d in range(6):
        assert (j.hilbert_function(d)
                == j1.hilbert_function(d) + j2.hilbert_function(d)
                - total.hilbert_function(d))


def test_hilbert_rejects_non_homogeneous():
    ring = PolyRing(2)
    with pytest.raises(NotHomogeneousError):
        ideal(ring, "x0^2 - x1").hilbert_function(2)
