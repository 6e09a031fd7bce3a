"""Exact scalar arithmetic: the rationals and prime fields GF(p).

Scalars are plain Python objects (Fraction over QQ, reduced int over GF(p));
a Field object supplies the arithmetic callables so matrix code stays generic.
No floating point anywhere.
"""

from __future__ import annotations

import operator
from fractions import Fraction


class Field:
    """Arithmetic context.  Instances expose `add`, `sub`, `mul`, `neg`,
    `inv`, `div` as plain callables (bind them to locals in hot loops),
    plus the constants `zero` and `one`."""

    characteristic: int

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def sample(self, rng, bound: int = 9):
        """Small random element, for seeded isomorphism sampling."""
        raise NotImplementedError

    @property
    def key(self):
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg
        self.div = operator.truediv

    def inv(self, a):
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        if isinstance(text, int):
            return Fraction(text)
        if isinstance(text, str):
            return Fraction(text.strip())
        raise ValueError("rational scalar must be an int or 'p/q' string, got %r" % (text,))

    def to_str(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def sample(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound))

    @property
    def key(self):
        return ("Q",)

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """GF(p) for prime p < 2**31; elements are ints reduced mod p."""

    def __init__(self, p: int):
        if p < 2 or p >= 2**31:
            raise ValueError("prime modulus out of range: %r" % (p,))
        for d in range(2, min(p, 1 << 16)):
            if d * d > p:
                break
            if p % d == 0:
                raise ValueError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.mul = lambda a, b: (a * b) % p
        self.neg = lambda a: (-a) % p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        if isinstance(text, int):
            return text % self.p
        if isinstance(text, str):
            return int(text.strip()) % self.p
        raise ValueError("GF(%d) scalar must be an int or string, got %r" % (self.p, text))

    def to_str(self, a):
        return str(a % self.p)

    def sample(self, rng, bound=9):
        return rng.randrange(self.p)

    @property
    def key(self):
        return ("F", self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()

_prime_fields: dict = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]
