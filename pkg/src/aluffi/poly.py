"""Exact multivariate polynomials with rational coefficients.

Variables are named x0..xn.  Every polynomial carries its ring, and all
arithmetic is exact over the rationals (``fractions.Fraction``); nothing in
this package ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .orders import GREVLEX, Monomial, TermOrder, mon_degree

Scalar = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class ParseError(ValueError):
    """Polynomial text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class PolyRing:
    """The ring Q[x0, ..., xn] with a default term order.

    num_vars is n+1: PolyRing(3) is the coordinate ring of the projective
    plane with variables x0, x1, x2.
    """

    num_vars: int
    default_order: TermOrder = GREVLEX

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a polynomial ring needs at least one variable")

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Scalar) -> Polynomial:
        return Polynomial(self, {(0,) * self.num_vars: Fraction(c)})

    def variable(self, i: int) -> Polynomial:
        if not 0 <= i < self.num_vars:
            raise IndexError(f"variable index {i} out of range for {self}")
        exps = [0] * self.num_vars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def variables(self) -> list[Polynomial]:
        return [self.variable(i) for i in range(self.num_vars)]

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All monomials of total degree d, descending in the default order."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        mons: list[Monomial] = []

        def build(prefix, remaining, slots):
            if slots == 1:
                mons.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining, -1, -1):
                build(prefix + [e], remaining - e, slots - 1)

        build([], d, self.num_vars)
        mons.sort(key=self.default_order.key, reverse=True)
        return mons

    def __str__(self):
        return f"QQ[x0..x{self.num_vars - 1}]/{self.default_order}"


class Polynomial:
    """Immutable polynomial; terms stored descending in the ring's order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, data: Mapping[Monomial, Scalar] | Iterable):
        items = data.items() if isinstance(data, Mapping) else data
        acc: dict[Monomial, Fraction] = {}
        for mon, c in items:
            c = Fraction(c)
            if not c:
                continue
            prev = acc.get(mon)
            if prev is None:
                acc[mon] = c
            else:
                s = prev + c
                if s:
                    acc[mon] = s
                else:
                    del acc[mon]
        key = ring.default_order.key
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "terms", tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mon_degree(m) for m, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        degs = {mon_degree(m) for m, _ in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: TermOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        if order is None or order == self.ring.default_order:
            return self.terms[0][0]
        return max((m for m, _ in self.terms), key=order.key)

    def leading_coefficient(self, order: TermOrder | None = None) -> Fraction:
        lm = self.leading_monomial(order)
        return dict(self.terms)[lm]

    def coefficient(self, mon: Monomial) -> Fraction:
        for m, c in self.terms:
            if m == mon:
                return c
        return Fraction(0)

    def monic(self, order: TermOrder | None = None) -> Polynomial:
        if self.is_zero:
            return self
        lc = self.leading_coefficient(order)
        return self if lc == 1 else self * (Fraction(1) / lc)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.ring, {m: cf * c for m, cf in self.terms})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                v = acc.get(m, 0) + c1 * c2
                if v:
                    acc[m] = v
                else:
                    acc.pop(m, None)
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take non-negative integer exponents")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and substitution ------------------------------------------

    def derivative(self, i: int) -> Polynomial:
        """Formal partial derivative with respect to x_i."""
        if not 0 <= i < self.ring.num_vars:
            raise IndexError(f"variable index {i} out of range")
        acc = {}
        for m, c in self.terms:
            e = m[i]
            if e:
                dm = m[:i] + (e - 1,) + m[i + 1:]
                acc[dm] = acc.get(dm, 0) + c * e
        return Polynomial(self.ring, acc)

    def substitute(self, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
        """Apply the linear change of coordinates x -> A * x.

        The matrix must be square of size num_vars and invertible (checked by
        exact determinant).
        """
        from . import linalg

        n = self.ring.num_vars
        rows = [[Fraction(v) for v in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"substitution matrix must be {n}x{n}")
        if linalg.det(rows) == 0:
            raise linalg.SingularMatrixError("substitution matrix is singular")
        images = [
            Polynomial(self.ring, {
                (0,) * j + (1,) + (0,) * (n - j - 1): rows[i][j]
                for j in range(n) if rows[i][j]
            })
            for i in range(n)
        ]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            p = powers.get((i, e))
            if p is None:
                p = images[i] ** e
                powers[(i, e)] = p
            return p

        total = self.ring.zero()
        for m, c in self.terms:
            term = self.ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, coords: Sequence[Scalar]) -> Fraction:
        if len(coords) != self.ring.num_vars:
            raise ValueError("wrong number of coordinates")
        coords = [Fraction(v) for v in coords]
        total = Fraction(0)
        for m, c in self.terms:
            v = c
            for x, e in zip(coords, m):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({self})"


def _format_term(mon: Monomial, coeff: Fraction) -> str:
    factors = []
    for i, e in enumerate(mon):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def format_poly(f: Polynomial) -> str:
    """Canonical text form; parse_poly(format_poly(f)) == f."""
    if f.is_zero:
        return "0"
    parts = []
    for idx, (m, c) in enumerate(f.terms):
        t = _format_term(m, c)
        if idx == 0:
            parts.append(t)
        elif t.startswith("-"):
            parts.append("- " + t[1:])
        else:
            parts.append("+ " + t)
    return " ".join(parts)


_TOKEN_RE = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<int>\d+)|(?P<op>[-+*^()/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if m.lastgroup == "var":
            tokens.append(("var", m.group("var"), m.start("var")))
        elif m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over: expr := [+-] term ((+|-) term)*;
    term := factor (* factor)*; factor := atom (^ uint)?;
    atom := coeff | var | ( expr ); coeff := int (/ uint)?."""

    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val, at = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", at)
        return self.advance()

    def parse(self) -> Polynomial:
        f = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", at)
        return f

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        f = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                g = self.term()
                f = f - g if val == "-" else f + g
            else:
                return f

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                f = f * self.factor()
            else:
                return f

    def factor(self) -> Polynomial:
        f = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            ekind, eval_, at = self.advance()
            if ekind != "int":
                raise ParseError("expected integer exponent", at)
            f = f ** int(eval_)
        return f

    def atom(self) -> Polynomial:
        kind, val, at = self.advance()
        if kind == "var":
            idx = int(val[1:])
            if idx >= self.ring.num_vars:
                raise ParseError(
                    f"variable {val} out of range (ring has x0..x{self.ring.num_vars - 1})", at
                )
            return self.ring.variable(idx)
        if kind == "int":
            num = int(val)
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                self.advance()
                dkind, dval, dat = self.advance()
                if dkind != "int" or int(dval) == 0:
                    raise ParseError("expected positive integer denominator", dat)
                return self.ring.constant(Fraction(num, int(dval)))
            return self.ring.constant(num)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", at)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse polynomial text such as "x0*x1 - 1/2*x2^2 + (x0 - x1)^2"."""
    return _Parser(text, ring).parse()
