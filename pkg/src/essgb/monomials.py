"""Monomials, term orders and polynomials over GF(p).

Variables are indexed from 0 internally and printed as ``x1 .. xn``.  The
variable order is always ``x1 < x2 < ... < xn``.

A :class:`Monomial` is stored sparsely (sorted ``(index, exponent)`` pairs
with positive exponents) because the monomials that occur here have support
of size at most ``m`` while ``n`` can be in the thousands.
"""

import re

from .exceptions import ParseError


class Monomial:
    """The monomial ``x1^a1 * ... * xn^an`` in ``n`` variables."""

    __slots__ = ("n", "items", "_exp", "_hash", "degree")

    def __init__(self, n, items=()):
        self.n = n
        self.items = tuple(sorted((i, e) for i, e in items if e))
        self._exp = dict(self.items)
        self._hash = hash((n, self.items))
        self.degree = sum(e for _, e in self.items)
        for i, e in self.items:
            if not 0 <= i < n or e < 0:
                raise ValueError(f"bad exponent {e} for variable index {i} (n={n})")

    @classmethod
    def from_exponents(cls, exponents):
        exponents = tuple(int(e) for e in exponents)
        return cls(len(exponents), enumerate(exponents))

    @classmethod
    def one(cls, n):
        return cls(n)

    @classmethod
    def variable(cls, i, n, e=1):
        return cls(n, ((i, e),))

    @property
    def exponents(self):
        dense = [0] * self.n
        for i, e in self.items:
            dense[i] = e
        return tuple(dense)

    def exponent(self, i):
        return self._exp.get(i, 0)

    def support(self):
        return frozenset(self._exp)

    def is_one(self):
        return not self.items

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"monomials in {self.n} and {other.n} variables")

    def __mul__(self, other):
        self._check(other)
        exp = dict(self._exp)
        for i, e in other.items:
            exp[i] = exp.get(i, 0) + e
        return Monomial(self.n, exp.items())

    def divides(self, other):
        """True iff ``self | other``."""
        self._check(other)
        exp = other._exp
        for i, e in self.items:
            if exp.get(i, 0) < e:
                return False
        return True

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        exp = dict(self._exp)
        for i, e in other.items:
            exp[i] -= e
        return Monomial(self.n, exp.items())

    def evaluate(self, point, p):
        if len(point) != self.n:
            raise ValueError(f"point of length {len(point)} for {self.n} variables")
        value = 1
        for i, e in self.items:
            value = value * pow(point[i], e, p) % p
        return value

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.n == other.n and self.items == other.items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.items:
            return "1"
        factors = []
        for i, e in self.items:
            factors.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        return "*".join(factors)


class TermOrder:
    """Lex or graded reverse lex with ``x1 < ... < xn``.

    lex
        ``x^a > x^b`` iff ``a_j > b_j`` at the largest ``j`` where they differ.
    grevlex
        higher total degree wins; on ties ``x^a > x^b`` iff ``a_j < b_j`` at
        the smallest ``j`` where they differ.
    """

    KINDS = ("lex", "grevlex")

    def __init__(self, kind):
        kind = str(kind).lower()
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}; expected one of {self.KINDS}")
        self.kind = kind
        self.key = self._lex_key if kind == "lex" else self._grevlex_key

    @staticmethod
    def _lex_key(mono):
        # Comparing (index, exp) pairs from the top variable down is exactly lex:
        # a larger index present only in one monomial makes it bigger.
        return mono.items[::-1]

    @staticmethod
    def _grevlex_key(mono):
        return (mono.degree, tuple((i, -e) for i, e in mono.items))

    def compare(self, a, b):
        """Return -1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
        a._check(b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monos, reverse=False):
        return sorted(monos, key=self.key, reverse=reverse)

    def max(self, monos):
        return max(monos, key=self.key)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(("TermOrder", self.kind))

    def __repr__(self):
        return f"TermOrder({self.kind!r})"

    def __str__(self):
        return self.kind


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def as_order(order):
    return order if isinstance(order, TermOrder) else TermOrder(order)


class Polynomial:
    """Polynomial over GF(p) as a tuple of ``(Monomial, coefficient)`` terms
    sorted strictly decreasing under ``order``; no zero coefficients."""

    __slots__ = ("n", "p", "order", "terms")

    def __init__(self, n, p, order, terms=()):
        order = as_order(order)
        acc = {}
        for mono, c in terms:
            if mono.n != n:
                raise ValueError(f"monomial in {mono.n} variables for a ring in {n}")
            acc[mono] = (acc.get(mono, 0) + c) % p
        self.n = n
        self.p = p
        self.order = order
        self.terms = tuple(
            sorted(((m, c) for m, c in acc.items() if c), key=lambda t: order.key(t[0]), reverse=True)
        )

    @classmethod
    def constant(cls, c, n, p, order):
        return cls(n, p, order, [(Monomial.one(n), c)])

    def is_zero(self):
        return not self.terms

    @property
    def leading_monomial(self):
        return self.terms[0][0] if self.terms else None

    @property
    def leading_coefficient(self):
        return self.terms[0][1] if self.terms else 0

    def tail(self):
        return Polynomial(self.n, self.p, self.order, self.terms[1:])

    def monomials(self):
        return [m for m, _ in self.terms]

    def evaluate(self, point, p=None):
        p = self.p if p is None else p
        if len(point) != self.n:
            raise ValueError(f"point of length {len(point)} for {self.n} variables")
        total = 0
        for mono, c in self.terms:
            total += c * mono.evaluate(point, p)
        return total % p

    def __add__(self, other):
        return Polynomial(self.n, self.p, self.order, self.terms + other.terms)

    def __neg__(self):
        return Polynomial(self.n, self.p, self.order, [(m, -c) for m, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and (self.n, self.p, self.order) == (other.n, other.p, other.order)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.p, self.order.kind, self.terms))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, p={self.p}, order={self.order.kind!r})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(f):
    """Canonical text: terms decreasing, e.g. ``x1^2+4*x1`` or ``3*x1*x2+1``."""
    if not f.terms:
        return "0"
    parts = []
    for mono, c in f.terms:
        if mono.is_one():
            parts.append(str(c))
        elif c == 1:
            parts.append(str(mono))
        else:
            parts.append(f"{c}*{mono}")
    return "+".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^]))")


def parse_polynomial(text, n, p, order):
    """Inverse of :func:`format_polynomial`.

    Accepts terms in any order and ``-`` between terms; coefficients are
    reduced mod ``p``.  Raises :class:`ParseError` with a 1-based position.
    """
    order = as_order(order)
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise ParseError(f"unexpected character {stripped[pos]!r}", pos + 1)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start + 1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", 1)

    terms = []
    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else ("end", "", len(stripped) + 1)

    def expect_int():
        nonlocal k
        kind, val, col = peek()
        if kind != "int":
            raise ParseError("expected an exponent", col)
        k += 1
        return int(val)

    sign = 1
    while True:
        kind, val, col = peek()
        if kind == "op" and val in "+-" and not terms and k == 0:
            sign = -1 if val == "-" else 1
            k += 1
            kind, val, col = peek()
        coeff = 1
        exp = {}
        seen_factor = False
        while True:
            kind, val, col = peek()
            if kind == "int":
                coeff *= int(val)
                k += 1
            elif kind == "var":
                i = int(val[1:]) - 1
                if not 0 <= i < n:
                    raise ParseError(f"variable {val} outside x1..x{n}", col)
                k += 1
                e = 1
                if peek()[:2] == ("op", "^"):
                    k += 1
                    e = expect_int()
                exp[i] = exp.get(i, 0) + e
            else:
                raise ParseError("expected a coefficient or variable", col)
            seen_factor = True
            if peek()[:2] == ("op", "*"):
                k += 1
                continue
            break
        assert seen_factor
        terms.append((Monomial(n, exp.items()), sign * coeff))
        kind, val, col = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            k += 1
            if peek()[0] == "end":
                raise ParseError("dangling operator", col)
            continue
        raise ParseError(f"unexpected {val!r}", col)
    return Polynomial(n, p, order, terms)
