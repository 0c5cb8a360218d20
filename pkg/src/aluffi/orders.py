"""Term orders on exponent vectors.

A monomial is a plain tuple of non-negative integer exponents, one entry per
ring variable.  Orders are exposed as key functions: ``order.key(m)`` returns
a tuple that sorts ascending in the order, so ``max(..., key=order.key)``
picks the leading monomial.
"""

from dataclasses import dataclass

Monomial = tuple[int, ...]

_KINDS = ("lex", "grevlex", "elim")


def mon_degree(m: Monomial) -> int:
    return sum(m)


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial | None:
    """Exact quotient a/b, or None when b does not divide a."""
    q = [x - y for x, y in zip(a, b)]
    for e in q:
        if e < 0:
            return None
    return tuple(q)


def mon_divides(b: Monomial, a: Monomial) -> bool:
    """True when b divides a."""
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class TermOrder:
    """A multiplicative well-order on monomials.

    kind "lex" and "grevlex" are the classical orders with x0 > x1 > ... .
    kind "elim" with block k makes any monomial involving one of the first k
    variables greater than every monomial in the remaining variables (grevlex
    is used within each block), which is what elimination of those variables
    requires.
    """

    kind: str
    block: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if (self.kind == "elim") != (self.block is not None):
            raise ValueError("block size is required exactly for elimination orders")

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return m
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def __str__(self):
        if self.kind == "elim":
            return f"elim({self.block})"
        return self.kind


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def elimination_order(block: int) -> TermOrder:
    return TermOrder("elim", block)
