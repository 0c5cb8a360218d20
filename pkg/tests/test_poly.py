"""Polynomial arithmetic, parsing, orders, and calculus."""

import random
from collections import Counter
from fractions import Fraction

import pytest

from aluffi import (GREVLEX, LEX, ParseError, Polynomial, PolyRing,
                    RingMismatchError, elimination_order, format_poly,
                    parse_poly)
from aluffi.linalg import SingularMatrixError


def random_poly(ring, rng, max_degree=3, max_terms=4):
    acc = {}
    for _ in range(rng.randint(1, max_terms)):
        mon = [0] * ring.num_vars
        for _ in range(rng.randint(0, max_degree)):
            mon[rng.randrange(ring.num_vars)] += 1
        acc[tuple(mon)] = acc.get(tuple(mon), 0) + Fraction(
            rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(ring, acc)


# -- parsing and printing ---------------------------------------------------

def test_parse_quadric_terms():
    ring = PolyRing(3)
    f = parse_poly("x0*x2 - x1*x2", ring)
    assert f.terms == (((1, 0, 1), Fraction(1)), ((0, 1, 1), Fraction(-1)))


def test_parse_zero():
    ring = PolyRing(3)
    assert parse_poly("0", ring).terms == ()


def test_parse_binomial_square():
    ring = PolyRing(2)
    f = parse_poly("(x0 - x1)^2", ring)
    assert f == parse_poly("x0^2 - 2*x0*x1 + x1^2", ring)


def test_parse_rational_coefficients():
    ring = PolyRing(2)
    f = parse_poly("1/2*x0 + 3*x1 - 2/7", ring)
    assert f.coefficient((1, 0)) == Fraction(1, 2)
    assert f.coefficient((0, 0)) == Fraction(-2, 7)


def test_parse_error_reports_position():
    ring = PolyRing(2)
    with pytest.raises(ParseError) as err:
        parse_poly("x0 + @", ring)
    assert err.value.position == 5


def test_parse_unknown_variable():
    ring = PolyRing(2)
    with pytest.raises(ParseError):
        parse_poly("x0 + x5", ring)


def test_parse_rejects_implicit_multiplication():
    ring = PolyRing(3)
    with pytest.raises(ParseError):
        parse_poly("2 x0", ring)


def test_roundtrip_on_random_polynomials():
    rng = random.Random(101)
    for nvars in (1, 2, 3, 4):
        ring = PolyRing(nvars)
        for _ in range(25):
            f = random_poly(ring, rng)
            assert parse_poly(format_poly(f), ring) == f


def test_format_canonical_spaces_and_powers():
    ring = PolyRing(3)
    f = parse_poly("-x0^2 + 1/2*x1*x2 - 3", ring)
    assert str(f) == "-x0^2 + 1/2*x1*x2 - 3"


# -- arithmetic --------------------------------------------------------------

def test_difference_of_squares():
    ring = PolyRing(2)
    x0, x1 = ring.variables()
    assert (x0 + x1) * (x0 - x1) == x0 ** 2 - x1 ** 2


def test_additive_identity():
    ring = PolyRing(3)
    f = parse_poly("x0*x1 - 2*x2^2", ring)
    assert f + ring.zero() == f


def expand_oracle(f, g):
    """Independent term-by-term expansion used to cross-check products."""
    acc = Counter()
    for m1, c1 in f.terms:
        for m2, c2 in g.terms:
            acc[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in acc.items() if c}


def test_product_matches_expansion_oracle():
    ring = PolyRing(3)
    f = parse_poly("x0*x1 - x1*x2", ring)
    g = parse_poly("x0*x2 - x1*x2", ring)
    prod = f * g
    assert dict(prod.terms) == expand_oracle(f, g)
    assert prod == parse_poly(
        "x0^2*x1*x2 - x0*x1^2*x2 - x0*x1*x2^2 + x1^2*x2^2", ring)


def test_ring_axioms_on_random_inputs():
    rng = random.Random(7)
    ring = PolyRing(3)
    for _ in range(30):
        f, g, h = (random_poly(ring, rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h


def test_product_oracle_on_random_inputs():
    rng = random.Random(8)
    ring = PolyRing(2)
    for _ in range(20):
        f, g = random_poly(ring, rng), random_poly(ring, rng)
        assert dict((f * g).terms) == expand_oracle(f, g)


def test_ring_mismatch_raises():
    f = PolyRing(2).variable(0)
    g = PolyRing(3).variable(0)
    with pytest.raises(RingMismatchError):
        f + g


# -- derivatives -------------------------------------------------------------

def test_derivative_power_rule():
    ring = PolyRing(2)
    f = parse_poly("x0^2*x1", ring)
    assert f.derivative(0) == parse_poly("2*x0*x1", ring)


def test_derivative_of_quadric():
    ring = PolyRing(3)
    f = parse_poly("x0*x1 - x1*x2", ring)
    assert f.derivative(1) == parse_poly("x0 - x2", ring)


def test_derivative_of_constant_is_zero():
    ring = PolyRing(3)
    assert ring.constant(7).derivative(2).is_zero


def test_derivative_index_out_of_range():
    ring = PolyRing(2)
    with pytest.raises(IndexError):
        ring.variable(0).derivative(2)


def test_leibniz_rule_on_random_inputs():
    rng = random.Random(9)
    ring = PolyRing(3)
    for _ in range(20):
        f, g = random_poly(ring, rng), random_poly(ring, rng)
        for i in range(3):
            assert (f * g).derivative(i) == f * g.derivative(i) + g * f.derivative(i)


# -- substitution ------------------------------------------------------------

def test_substitute_identity():
    ring = PolyRing(3)
    f = parse_poly("x0*x2 - x1^2", ring)
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert f.substitute(eye) == f


def test_substitute_swap():
    ring = PolyRing(3)
    f = parse_poly("x0*x2", ring)
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert f.substitute(swap) == parse_poly("x1*x2", ring)


def test_substitute_rejects_singular_matrix():
    ring = PolyRing(2)
    with pytest.raises(SingularMatrixError):
        ring.variable(0).substitute([[1, 1], [1, 1]])


def random_invertible(n, rng):
    from aluffi.linalg import det
    while True:
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        if det(m) != 0:
            return m


def test_substitute_is_multiplicative():
    rng = random.Random(10)
    ring = PolyRing(3)
    for _ in range(8):
        a = random_invertible(3, rng)
        f, g = random_poly(ring, rng, max_degree=2), random_poly(ring, rng, max_degree=2)
        assert (f * g).substitute(a) == f.substitute(a) * g.substitute(a)


def test_substitute_preserves_homogeneous_degree():
    rng = random.Random(11)
    ring = PolyRing(3)
    f = parse_poly("x0*x1 + x2^2 - 3*x0*x2", ring)
    for _ in range(5):
        a = random_invertible(3, rng)
        image = f.substitute(a)
        assert image.is_homogeneous and image.degree == 2


# -- monomial enumeration ------------------------------------------------------

def test_monomials_of_degree_two_vars():
    ring = PolyRing(2)
    assert ring.monomials_of_degree(2) == [(2, 0), (1, 1), (0, 2)]


def test_monomials_of_degree_zero():
    ring = PolyRing(4)
    assert ring.monomials_of_degree(0) == [(0, 0, 0, 0)]


def test_monomials_of_degree_count():
    ring = PolyRing(4)
    assert len(ring.monomials_of_degree(3)) == 20


# -- term orders ----------------------------------------------------------------

@pytest.mark.parametrize("order", [LEX, GREVLEX, elimination_order(1),
                                   elimination_order(2)])
def test_order_laws(order):
    rng = random.Random(12)
    nvars = 4

    def random_mon():
        return tuple(rng.randint(0, 4) for _ in range(nvars))

    one = (0,) * nvars
    for _ in range(200):
        a, b, c = random_mon(), random_mon(), random_mon()
        ka, kb = order.key(a), order.key(b)
        assert (ka < kb) + (ka == kb) + (ka > kb) == 1
        assert (a == b) == (ka == kb)
        if ka < kb:
            prod_a = tuple(x + y for x, y in zip(a, c))
            prod_b = tuple(x + y for x, y in zip(b, c))
            assert order.key(prod_a) < order.key(prod_b)
        assert order.key(one) <= ka


def test_grevlex_orders_degree_first():
    assert GREVLEX.greater((2, 0, 0), (1, 1, 0))
    assert GREVLEX.greater((0, 2, 0), (1, 0, 1))


def test_elimination_order_separates_blocks():
    order = elimination_order(1)
    assert order.greater((1, 0, 0), (0, 5, 5))
