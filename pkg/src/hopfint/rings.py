"""Exact commutative base rings.

Ring objects do arithmetic on *raw* canonical values (``int``, ``Fraction``,
tuples) so the linear-algebra layer can work on plain lists.  The public
element-level API wraps raw values in :class:`RingElement`, which carries
its ring and refuses to mix rings.

Canonical values per ring::

    Integers        int
    Rationals       Fraction
    IntegersMod(m)  int in [0, m)
    PrimeField(p)   int in [0, p)
    Localization    (a, k) meaning a / r**k, r the radical, k minimal
    Product         tuple of component values
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit, ParseError, RingMismatch, UnsupportedRingTier

FIELD = "FIELD"
PID = "PID"
FINITE_PIR = "FINITE-PIR"
PRODUCT = "PRODUCT"
VERIFY_ONLY = "VERIFY-ONLY"


def prime_factors(n):
    """Distinct prime factors of ``n > 0`` by trial division."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        s, t, g = -s, -t, -g
    return g, s, t


class Ring:
    """Base class.  Subclasses are immutable and compare by descriptor."""

    tier = None
    is_finite = False

    def __eq__(self, other):
        return isinstance(other, Ring) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    def __repr__(self):
        return f"Ring({str(self)!r})"

    # arithmetic on raw values
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            if x != self.zero and y != self.zero:
                acc = self.add(acc, self.mul(x, y))
        return acc

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{self.format_element(a)} is not a unit in {self}")
        return self._inv(a)

    def idempotents(self):
        return [self.zero, self.one]

    def nontrivial_idempotents(self):
        return [e for e in self.idempotents() if e != self.zero and e != self.one]

    def elements(self):
        raise UnsupportedRingTier(f"{self} is infinite; elements cannot be enumerated")

    def reduce_mod_ideal(self, c, n):
        """Canonical representative of ``c`` modulo the principal ideal (n)."""
        if n == self.zero:
            return c
        if self.is_unit(n):
            return self.zero
        raise UnsupportedRingTier(f"quotients of {self} by non-unit ideals")

    def element(self, value):
        return RingElement(self, self.coerce(value))

    def coerce(self, value):
        """Turn ints, strings or raw values into a canonical raw value."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} element used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        return self._coerce_raw(value)

    def _coerce_raw(self, value):
        raise ParseError(f"cannot interpret {value!r} in {self}")


class Integers(Ring):
    tier = PID
    zero = 0
    one = 1

    def __str__(self):
        return "Z"

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return int(k)

    def is_unit(self, a):
        return a in (1, -1)

    def _inv(self, a):
        return a

    def is_semisimple(self):
        return False

    def reduce_mod_ideal(self, c, n):
        return c if n == 0 else c % abs(n)

    def random_element(self, rng):
        return rng.randint(-20, 20)

    def parse_element(self, s):
        try:
            return int(s.strip())
        except ValueError:
            raise ParseError(f"bad integer {s!r}") from None

    def format_element(self, a):
        return str(a)

    def _coerce_raw(self, value):
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        return super()._coerce_raw(value)


class Rationals(Ring):
    tier = FIELD
    zero = Fraction(0)
    one = Fraction(1)

    def __str__(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return Fraction(k)

    def is_unit(self, a):
        return a != 0

    def _inv(self, a):
        return 1 / a

    def is_semisimple(self):
        return True

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

    def parse_element(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {s!r}") from None

    def format_element(self, a):
        return str(a)

    def _coerce_raw(self, value):
        if isinstance(value, Fraction):
            return value
        return super()._coerce_raw(value)


class IntegersMod(Ring):
    tier = FINITE_PIR
    is_finite = True
    zero = 0
    one = 1

    def __init__(self, m):
        m = int(m)
        if m < 2:
            raise ValueError(f"Z/m requires m >= 2, got {m}")
        self.modulus = m

    def __str__(self):
        return f"Z/{self.modulus}"

    @property
    def order(self):
        return self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def from_int(self, k):
        return int(k) % self.modulus

    def is_unit(self, a):
        return math.gcd(a, self.modulus) == 1

    def _inv(self, a):
        return pow(a, -1, self.modulus)

    def is_semisimple(self):
        return all(self.modulus % (p * p) for p in prime_factors(self.modulus))

    def idempotents(self):
        m = self.modulus
        return [e for e in range(m) if (e * e) % m == e]

    def elements(self):
        return list(range(self.modulus))

    def reduce_mod_ideal(self, c, n):
        return c % math.gcd(n, self.modulus)

    def random_element(self, rng):
        return rng.randrange(self.modulus)

    def parse_element(self, s):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return self.mul(self.from_int(int(num)), self.inv(self.from_int(int(den))))
            return self.from_int(int(s))
        except (ValueError, NotAUnit):
            raise ParseError(f"bad element {s!r} of {self}") from None

    def format_element(self, a):
        return str(a)


class PrimeField(IntegersMod):
    tier = FIELD

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"GF(p) requires p prime, got {p}")
        super().__init__(p)

    def __str__(self):
        return f"GF({self.modulus})"


class Localization(Ring):
    """Z[1/n].  Only the radical of n matters."""

    tier = VERIFY_ONLY

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise ValueError("Z[1/n] requires n >= 1")
        self.primes = tuple(prime_factors(n))
        self.radical = math.prod(self.primes)
        self.zero = (0, 0)
        self.one = (1, 0)

    def __str__(self):
        return f"Z[1/{self.radical}]"

    def _norm(self, a, k):
        r = self.radical
        if a == 0:
            return (0, 0)
        if r == 1:
            return (a, 0)
        while k > 0 and a % r == 0:
            a //= r
            k -= 1
        return (a, k)

    def add(self, x, y):
        (a, k), (b, j) = x, y
        top = max(k, j)
        r = self.radical
        return self._norm(a * r ** (top - k) + b * r ** (top - j), top)

    def mul(self, x, y):
        return self._norm(x[0] * y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], x[1])

    def from_int(self, k):
        return self._norm(int(k), 0)

    def _strip(self, a):
        a = abs(a)
        exps = []
        for p in self.primes:
            e = 0
            while a % p == 0:
                a //= p
                e += 1
            exps.append(e)
        return a, exps

    def is_unit(self, x):
        if x[0] == 0:
            return False
        rest, _ = self._strip(x[0])
        return rest == 1

    def _inv(self, x):
        a, k = x
        _, exps = self._strip(a)
        top = max(exps, default=0)
        c = self.radical ** top // abs(a)
        sign = 1 if a > 0 else -1
        return self._norm(sign * c * self.radical ** k, top)

    def is_semisimple(self):
        return False

    def to_fraction(self, x):
        return Fraction(x[0], self.radical ** x[1])

    def from_fraction(self, q):
        q = Fraction(q)
        den = q.denominator
        _, exps = self._strip(den)
        rest = den
        for p in self.primes:
            while rest % p == 0:
                rest //= p
        if rest != 1:
            raise ParseError(f"{q} is not in {self}")
        top = max(exps, default=0)
        return self._norm(q.numerator * (self.radical ** top // den), top)

    def random_element(self, rng):
        return self._norm(rng.randint(-20, 20), rng.randint(0, 2))

    def parse_element(self, s):
        try:
            return self.from_fraction(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad element {s!r} of {self}") from None

    def format_element(self, x):
        return str(self.to_fraction(x))

    def _coerce_raw(self, value):
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, tuple) and len(value) == 2:
            return self._norm(int(value[0]), int(value[1]))
        return super()._coerce_raw(value)


class Product(Ring):
    tier = PRODUCT

    def __init__(self, factors):
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Product) else [f])
        if len(flat) < 2:
            raise ValueError("a product ring needs at least two factors")
        self.factors = tuple(flat)
        self.zero = tuple(f.zero for f in flat)
        self.one = tuple(f.one for f in flat)
        self.is_finite = all(f.is_finite for f in flat)

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)

    @property
    def order(self):
        return math.prod(f.order for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def from_int(self, k):
        return tuple(f.from_int(k) for f in self.factors)

    def is_unit(self, a):
        return all(f.is_unit(x) for f, x in zip(self.factors, a))

    def _inv(self, a):
        return tuple(f._inv(x) for f, x in zip(self.factors, a))

    def is_semisimple(self):
        return all(f.is_semisimple() for f in self.factors)

    def idempotents(self):
        return [tuple(c) for c in itertools.product(*(f.idempotents() for f in self.factors))]

    def elements(self):
        return [tuple(c) for c in itertools.product(*(f.elements() for f in self.factors))]

    def reduce_mod_ideal(self, c, n):
        return tuple(f.reduce_mod_ideal(x, y) for f, x, y in zip(self.factors, c, n))

    def component(self, a, k):
        return a[k]

    def embed(self, value, k):
        """Element with ``value`` in factor ``k`` and zero elsewhere."""
        out = list(self.zero)
        out[k] = value
        return tuple(out)

    def random_element(self, rng):
        return tuple(f.random_element(rng) for f in self.factors)

    def parse_element(self, s):
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            parts = [p for p in s[1:-1].split(",")]
            if len(parts) != len(self.factors):
                raise ParseError(f"{s!r} needs {len(self.factors)} components for {self}")
            return tuple(f.parse_element(p) for f, p in zip(self.factors, parts))
        try:
            return self.from_int(int(s))
        except ValueError:
            raise ParseError(f"bad element {s!r} of {self}") from None

    def format_element(self, a):
        return "(" + ",".join(f.format_element(x) for f, x in zip(self.factors, a)) + ")"

    def _coerce_raw(self, value):
        if isinstance(value, (tuple, list)) and len(value) == len(self.factors):
            return tuple(f.coerce(v) for f, v in zip(self.factors, value))
        return super()._coerce_raw(value)


_ATOMS = [
    (re.compile(r"^Z$"), lambda m: Integers()),
    (re.compile(r"^Q$"), lambda m: Rationals()),
    (re.compile(r"^Z/(\d+)$"), lambda m: IntegersMod(int(m.group(1)))),
    (re.compile(r"^GF\((\d+)\)$"), lambda m: PrimeField(int(m.group(1)))),
    (re.compile(r"^Z\[1/(\d+)\]$"), lambda m: Localization(int(m.group(1)))),
]


def parse_ring(text):
    """Parse a ring descriptor such as ``"Z/6"``, ``"Z[1/6]"`` or ``"Q x Z/4"``."""
    parts = [p.strip() for p in text.strip().split("x")]
    rings = []
    for part in parts:
        for pattern, make in _ATOMS:
            m = pattern.match(part)
            if m:
                try:
                    rings.append(make(m))
                except ValueError as exc:
                    raise ParseError(str(exc)) from None
                break
        else:
            raise ParseError(f"unknown ring descriptor {part!r}")
    return rings[0] if len(rings) == 1 else Product(rings)


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    value: object

    def _check(self, other):
        if not isinstance(other, RingElement):
            return RingElement(self.ring, self.ring.coerce(other))
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __str__(self):
        return self.ring.format_element(self.value)


def ring_add(x, y):
    return x + y


def ring_mul(x, y):
    return x * y


def ring_neg(x):
    return -x


def is_unit(x):
    return x.ring.is_unit(x.value)


def unit_inverse(x):
    return RingElement(x.ring, x.ring.inv(x.value))


def ring_is_semisimple(ring):
    return ring.is_semisimple()


def nontrivial_idempotents(ring):
    """All ``e`` with ``e*e == e`` other than 0 and 1, as :class:`RingElement`."""
    return [RingElement(ring, e) for e in ring.nontrivial_idempotents()]
