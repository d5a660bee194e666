"""Exact residue arithmetic and univariate polynomials over finite local rings.

Ring objects are small immutable descriptors; their elements are plain
hashable Python values:

* ``IntegersMod(p, s)`` -- elements are ``int`` in ``[0, p**s)``.
* ``QuotientRing(base, modulus)`` -- elements are tuples of ``deg(modulus)``
  base elements (power-basis coordinates, ascending).

Both expose the same small protocol (``add``, ``mul``, ``inv``, ``valuation``,
``reduce_p`` ...) so that polynomials, matrices and Howell forms can be
written once and reused for Z_{p^s}, GR(p^s, r), GR(p^s, rm) and the residue
fields.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from sympy import factorint, isprime

from .errors import (
    InvalidParameters,
    NonMonicDivisor,
    NonUnit,
    NonUnitLeading,
    ParamsTooLarge,
    ZeroPolynomial,
)

INF = math.inf

# p**s must stay a machine word so residues can go through int64 numpy paths.
MAX_CHARACTERISTIC = 2**31


def is_prime(p: int) -> bool:
    return isprime(p)


def prime_divisors(n: int) -> list[int]:
    if n <= 1:
        return []
    return sorted(factorint(n))


@dataclass(frozen=True)
class RingParams:
    """Parameters of L = GR(p^s, r): prime p, nilpotency index s, degree r."""

    p: int
    s: int
    r: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InvalidParameters(f"p={self.p} is not prime")
        if self.s < 1 or self.r < 1:
            raise InvalidParameters(f"need s >= 1 and r >= 1, got s={self.s}, r={self.r}")
        if self.p**self.s > MAX_CHARACTERISTIC:
            raise ParamsTooLarge(f"characteristic {self.p}^{self.s} exceeds {MAX_CHARACTERISTIC}")

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def char(self) -> int:
        return self.p**self.s


# ---------------------------------------------------------------------------
# Coefficient rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegersMod:
    """The residue ring Z_{p^s}."""

    p: int
    s: int

    @property
    def modulus(self) -> int:
        return self.p**self.s

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.modulus

    @property
    def order(self) -> int:
        return self.modulus

    @property
    def residue_order(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        """Rank as a free Z_{p^s}-module."""
        return 1

    def residue(self) -> "IntegersMod":
        return IntegersMod(self.p, 1)

    def from_int(self, k: int) -> int:
        return k % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def scale(self, k: int, a: int) -> int:
        return k * a % self.modulus

    def is_zero(self, a: int) -> bool:
        return a == 0

    def valuation(self, a: int):
        """Largest t with p^t | a; ``INF`` for zero."""
        if a == 0:
            return INF
        t = 0
        while a % self.p == 0:
            a //= self.p
            t += 1
        return t

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise NonUnit(f"{a} is not a unit modulo {self.modulus}")
        return pow(a, -1, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.modulus)
        return pow(a, e, self.modulus)

    def div_p(self, a: int) -> int:
        assert a % self.p == 0, f"{a} not divisible by {self.p}"
        return a // self.p

    def rem_p_power(self, a: int, v: int) -> int:
        """Canonical representative of a modulo p^v."""
        return a % (self.p**v)

    def reduce_p(self, a: int) -> int:
        return a % self.p

    def lift(self, a: int) -> int:
        """Canonical lift of a residue-field element."""
        return a

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def to_ints(self, a: int) -> tuple:
        return (a,)

    def from_ints(self, ints: Sequence[int]) -> int:
        return ints[0] % self.modulus

    @property
    def flat_dim(self) -> int:
        """Number of Z_{p^s} coordinates of an element."""
        return 1

    def fmt(self, a: int) -> str:
        return str(a)


@dataclass(frozen=True)
class QuotientRing:
    """base[x] / (modulus) for a monic modulus; elements are coordinate tuples."""

    base: object
    modulus: "UPoly"
    _reductions: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        mod = self.modulus
        if mod.degree is None or mod.degree < 1:
            raise InvalidParameters("quotient modulus must have degree >= 1")
        if mod.lead != self.base.one:
            raise NonMonicDivisor("quotient modulus must be monic")
        d = mod.degree
        # x^(d+k) expressed in the power basis, k = 0..d-2
        base = self.base
        red = []
        cur = [base.neg(c) for c in mod.coeffs[:d]]
        for _ in range(max(d - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            nxt = [base.zero] + cur[:-1]
            cur = [base.add(nxt[i], base.mul(top, base.neg(mod.coeffs[i]))) for i in range(d)]
        object.__setattr__(self, "_reductions", tuple(red))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def s(self) -> int:
        return self.base.s

    @property
    def zero(self) -> tuple:
        return (self.base.zero,) * self.degree

    @property
    def one(self) -> tuple:
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    @property
    def order(self) -> int:
        return self.base.order**self.degree

    @property
    def residue_order(self) -> int:
        return self.base.residue_order**self.degree

    def residue(self) -> "QuotientRing":
        rb = self.base.residue()
        return QuotientRing(rb, self.modulus.map(rb, self.base.reduce_p))

    def embed(self, a) -> tuple:
        """Image of a base-ring element."""
        return (a,) + (self.base.zero,) * (self.degree - 1)

    def from_int(self, k: int) -> tuple:
        return self.embed(self.base.from_int(k))

    def gen(self) -> tuple:
        """The class of x."""
        if self.degree == 1:
            return (self.base.neg(self.modulus.coeffs[0]),)
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.degree - 2)

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def scale(self, k: int, a):
        return tuple(self.base.scale(k, x) for x in a)

    def base_mul(self, c, a):
        """Multiply by an element of the base ring."""
        return tuple(self.base.mul(c, x) for x in a)

    def mul(self, a, b):
        base = self.base
        d = self.degree
        zero = base.zero
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                if base.is_zero(y):
                    continue
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if base.is_zero(c):
                continue
            row = self._reductions[k]
            out = [base.add(out[i], base.mul(c, row[i])) for i in range(d)]
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(x) for x in a)

    def valuation(self, a):
        return min(self.base.valuation(x) for x in a)

    def is_unit(self, a) -> bool:
        return self.valuation(a) == 0

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnit(f"{a} is not a unit")
        # unit group order of a finite local ring
        units = self.order - self.order // self.residue_order
        return self.pow(a, units - 1)

    def div_p(self, a):
        return tuple(self.base.div_p(x) for x in a)

    def rem_p_power(self, a, v: int):
        return tuple(self.base.rem_p_power(x, v) for x in a)

    def reduce_p(self, a):
        return tuple(self.base.reduce_p(x) for x in a)

    def lift(self, a):
        return tuple(self.base.lift(x) for x in a)

    def elements(self) -> Iterator[tuple]:
        return itertools.product(list(self.base.elements()), repeat=self.degree)

    @property
    def flat_dim(self) -> int:
        return self.degree * self.base.flat_dim

    def to_ints(self, a) -> tuple:
        out = ()
        for x in a:
            out += self.base.to_ints(x)
        return out

    def from_ints(self, ints: Sequence[int]):
        w = self.base.flat_dim
        return tuple(self.base.from_ints(ints[i * w:(i + 1) * w]) for i in range(self.degree))

    def fmt(self, a) -> str:
        return "[" + ",".join(self.base.fmt(x) for x in a) + "]"


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------


class UPoly:
    """Polynomial over a ring object, coefficients ascending, no trailing zeros.

    The zero polynomial has ``degree is None`` (deg 0 = -infinity).
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Sequence = ()):
        coeffs = list(coeffs)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, ring, k: int, c=None) -> "UPoly":
        c = ring.one if c is None else c
        return cls(ring, [ring.zero] * k + [c])

    @classmethod
    def x_minus(cls, ring, a) -> "UPoly":
        return cls(ring, [ring.neg(a), ring.one])

    @classmethod
    def from_ints(cls, ring, ints: Sequence[int]) -> "UPoly":
        return cls(ring, [ring.from_int(k) for k in ints])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def map(self, ring, fn) -> "UPoly":
        return UPoly(ring, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring == other.ring

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        ring = self.ring
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if ring.is_zero(c):
                continue
            cs = ring.fmt(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == ring.one else f"{cs}*{mono}")
        return " + ".join(terms)

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        add = self.ring.add
        return UPoly(self.ring, [add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        sub = self.ring.sub
        return UPoly(self.ring, [sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "UPoly":
        return UPoly(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __mul__(self, other: "UPoly") -> "UPoly":
        ring = self.ring
        if not self.coeffs or not other.coeffs:
            return UPoly(ring)
        out = [ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if ring.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = ring.add(out[i + j], ring.mul(a, b))
        return UPoly(ring, out)

    def scalar(self, c) -> "UPoly":
        return UPoly(self.ring, [self.ring.mul(c, a) for a in self.coeffs])

    def __call__(self, x):
        """Horner evaluation at an element of the coefficient ring."""
        ring = self.ring
        acc = ring.zero
        for c in reversed(self.coeffs):
            acc = ring.add(ring.mul(acc, x), c)
        return acc

    def __divmod__(self, other: "UPoly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return poly_divmod(self, other)[1]


def poly_divmod(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    """Division with remainder by a polynomial with unit leading coefficient."""
    ring = f.ring
    if g.is_zero() or not ring.is_unit(g.lead):
        raise NonMonicDivisor(f"leading coefficient of {g} is not a unit")
    lead_inv = ring.inv(g.lead)
    dg = g.degree
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return UPoly(ring), UPoly(ring, rem)
    quo = [ring.zero] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if ring.is_zero(c):
            continue
        t = ring.mul(c, lead_inv)
        quo[k - dg] = t
        for i, gc in enumerate(g.coeffs):
            rem[k - dg + i] = ring.sub(rem[k - dg + i], ring.mul(t, gc))
    return UPoly(ring, quo), UPoly(ring, rem[:dg])


def poly_reciprocal(f: UPoly) -> UPoly:
    """x^deg(f) * f(1/x): the coefficient list reversed."""
    if f.is_zero():
        raise ZeroPolynomial("reciprocal of the zero polynomial")
    return UPoly(f.ring, reversed(f.coeffs))


def monicize(f: UPoly) -> UPoly:
    if f.is_zero() or not f.ring.is_unit(f.lead):
        raise NonUnitLeading(f"leading coefficient of {f} is not a unit")
    return f.scalar(f.ring.inv(f.lead))


def x_pow_minus_one(ring, n: int) -> UPoly:
    """x^n - 1."""
    return UPoly(ring, [ring.neg(ring.one)] + [ring.zero] * (n - 1) + [ring.one])


def poly_pow_mod(base: UPoly, e: int, mod: UPoly) -> UPoly:
    result = UPoly(base.ring, [base.ring.one])
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def field_xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Extended Euclid over a field: returns (g, u, v) with u*a + v*b = g monic."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = UPoly(ring, [ring.one]), UPoly(ring)
    t0, t1 = UPoly(ring), UPoly(ring, [ring.one])
    while not r1.is_zero():
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = ring.inv(r0.lead)
    return r0.scalar(c), s0.scalar(c), t0.scalar(c)


def hensel_lift_factor(f: UPoly, h_bar: UPoly) -> UPoly:
    """Lift a monic factor of f mod p to a monic factor of f over Z_{p^s}.

    ``f`` is monic over ``IntegersMod(p, s)``; ``h_bar`` is a monic factor of
    f modulo p, coprime to its cofactor.
    """
    big = f.ring
    p, s = big.p, big.s
    small = big.residue()
    f_bar = f.map(small, big.reduce_p)
    g_bar, rem = poly_divmod(f_bar, h_bar)
    if not rem.is_zero():
        raise InvalidParameters(f"{h_bar} does not divide {f_bar} mod {p}")
    one, _, b = field_xgcd(h_bar, g_bar)
    if one.degree != 0:
        raise InvalidParameters("factor is not coprime to its cofactor")
    # b*g_bar = 1 mod h_bar
    h = h_bar.map(big, small.lift)
    g = g_bar.map(big, small.lift)
    for k in range(1, s):
        pk = p**k
        err = f - g * h
        e = UPoly(small, [(c // pk) % p for c in err.coeffs])
        dh = (b * e) % h_bar
        dg, r = poly_divmod(e - g_bar * dh, h_bar)
        assert r.is_zero()
        h = h + dh.map(big, lambda c: c * pk)
        g = g + dg.map(big, lambda c: c * pk)
    assert (f - g * h).is_zero()
    return h


def int_to_coeffs(k: int, base: int, length: int) -> list[int]:
    """Digits of k in the given base, least significant first."""
    out = []
    for _ in range(length):
        k, d = divmod(k, base)
        out.append(d)
    return out
