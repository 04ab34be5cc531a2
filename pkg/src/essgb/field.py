"""Arithmetic in the prime field GF(p).

Elements are plain Python ints kept in ``[0, p-1]``; a :class:`PrimeField`
carries the modulus so elements don't have to.
"""

from functools import cached_property

from .exceptions import NotPrimeError


def is_prime(p):
    """Deterministic primality check by trial division (moduli are small)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field Z/pZ."""

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise NotPrimeError(f"modulus {p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def normalize(self, z):
        return int(z) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        if self.p <= 1024:
            return self.inverse_table[a]
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        # 0**0 == 1, so the constant monomial evaluates to 1 everywhere
        if e < 0:
            raise ValueError("negative exponent")
        return pow(a, e, self.p)

    @cached_property
    def inverse_table(self):
        table = [0] * self.p
        for a in range(1, self.p):
            table[a] = pow(a, -1, self.p)
        return table

    def elements(self):
        return range(self.p)
