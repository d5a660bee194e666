"""The tower Z_{p^s} < L = GR(p^s, r) < R = GR(p^s, rm).

L is built as Z_{p^s}[w]/(h_r) with h_r a Hensel-lifted primitive polynomial,
and R as L[x]/(g0) with g0 the Teichmuller lift of a primitive polynomial over
the residue field F_q.  Elements of R are stored in the x-power basis; the
primitive element ``xi`` is obtained by Teichmuller-correcting the class of x,
and coordinates relative to the xi-power basis go through a basis-change
matrix.

Teichmuller elements are addressed by exponent index: ``None`` stands for the
zero element (exponent infinity) and ``i`` for ``xi**i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import CoefficientNotInBase, InvalidParameters, NoPrimitivePolynomial, ParamsTooLarge
from .ring_base import (
    IntegersMod,
    QuotientRing,
    RingParams,
    UPoly,
    hensel_lift_factor,
    int_to_coeffs,
    poly_pow_mod,
    prime_divisors,
    x_pow_minus_one,
)
from .ring_linalg import Matrix, invert

# residue field of R has q^m elements; its discrete-log table is kept in memory
MAX_RESIDUE_FIELD = 2**20

INFINITY = None  # exponent label of the zero Teichmuller element


def residue_field_elements(field_ring) -> Iterator:
    """All elements of a residue ring in the deterministic integer-encoding order."""
    order = field_ring.order
    for k in range(order):
        yield element_from_index(field_ring, k)


def element_from_index(ring, k: int):
    """Decode an integer into an element of IntegersMod(p,1) or a quotient tower over it."""
    if isinstance(ring, IntegersMod):
        return k % ring.modulus
    base_order = ring.base.order
    return tuple(element_from_index(ring.base, d) for d in int_to_coeffs(k, base_order, ring.degree))


def is_primitive_mod(poly: UPoly, q_m: int) -> bool:
    """Whether x generates the multiplicative group of F[x]/(poly), of order q_m - 1.

    Order q_m - 1 for x forces every nonzero class to be a unit, so the
    quotient is a field and poly is irreducible.
    """
    ring = poly.ring
    if ring.is_zero(poly.coeff(0)):
        return False
    n = q_m - 1
    x = UPoly(ring, [ring.zero, ring.one])
    one = UPoly(ring, [ring.one])
    if poly.degree == 1 and n == 1:
        return x % poly == one
    if poly_pow_mod(x, n, poly) != one:
        return False
    return all(poly_pow_mod(x, n // ell, poly) != one for ell in prime_divisors(n))


def smallest_primitive_poly(field_ring, degree: int) -> UPoly:
    """Lexicographically smallest monic primitive polynomial of the given degree.

    Candidates are ordered by the integer whose base-|F| digits are the
    non-leading coefficients, constant term least significant.
    """
    size = field_ring.order
    q_m = size**degree
    for k in range(size**degree):
        coeffs = [element_from_index(field_ring, d) for d in int_to_coeffs(k, size, degree)]
        poly = UPoly(field_ring, coeffs + [field_ring.one])
        if is_primitive_mod(poly, q_m):
            return poly
    raise NoPrimitivePolynomial(f"no primitive polynomial of degree {degree} found")


@dataclass(frozen=True)
class PAdicDigits:
    """Digits xi_0, ..., xi_{s-1} as Teichmuller exponent indices (None = zero)."""

    digits: tuple


@dataclass(eq=False)
class GaloisTower:
    params: RingParams
    m: int
    h_r: UPoly
    g0: UPoly
    Z: IntegersMod
    L: QuotientRing
    R: QuotientRing
    xi: tuple
    n: int
    to_xi_basis: Matrix
    from_xi_basis: Matrix
    powers: list  # xi^i in the x-basis, i = 0..n-1
    teich_log: dict  # residue of xi^i -> i
    b_table: list  # b_i in L^m (xi-basis coordinates), i = 0..n-1
    frob_table: list = field(default_factory=list, repr=False)  # [k][j] = f^k(x^j), k = 0..m-1

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def r(self) -> int:
        return self.params.r

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def length(self) -> int:
        """Code length q^m."""
        return self.n + 1

    @property
    def rm_ge_s(self) -> bool:
        return self.r * self.m >= self.s

    @property
    def residue_field(self) -> QuotientRing:
        """F_q = L / pL."""
        return self.L.residue()

    def key(self) -> tuple:
        return (self.p, self.s, self.r, self.m)

    # -- embeddings -------------------------------------------------------

    def embed(self, a) -> tuple:
        """L -> R."""
        return self.R.embed(a)

    def in_base(self, c) -> bool:
        zero = self.L.zero
        return all(x == zero for x in c[1:])

    def to_base(self, c):
        """R -> L for elements known to lie in L."""
        if not self.in_base(c):
            raise CoefficientNotInBase(f"{self.R.fmt(c)} does not lie in L")
        return c[0]

    def xi_pow(self, i: Optional[int]) -> tuple:
        """xi^i with the convention xi^inf = 0."""
        if i is INFINITY:
            return self.R.zero
        return self.powers[i % self.n]

    def to_xi_coords(self, c) -> tuple:
        """Coordinates of c in the basis 1, xi, ..., xi^{m-1}."""
        L = self.L
        rows = self.to_xi_basis.rows
        out = []
        for j in range(self.m):
            acc = L.zero
            for k in range(self.m):
                acc = L.add(acc, L.mul(c[k], rows[k][j]))
            out.append(acc)
        return tuple(out)

    def from_xi_coords(self, b) -> tuple:
        L = self.L
        rows = self.from_xi_basis.rows
        out = []
        for k in range(self.m):
            acc = L.zero
            for j in range(self.m):
                acc = L.add(acc, L.mul(b[j], rows[j][k]))
            out.append(acc)
        return tuple(out)

    def random_element(self, rng: random.Random) -> tuple:
        base = self.Z.modulus
        return tuple(tuple(rng.randrange(base) for _ in range(self.r)) for _ in range(self.m))

    def random_base_element(self, rng: random.Random) -> tuple:
        return tuple(rng.randrange(self.Z.modulus) for _ in range(self.r))

    def elements(self) -> Iterator[tuple]:
        return self.R.elements()

    # -- Teichmuller structure ---------------------------------------------

    def teich_index(self, c) -> Optional[int]:
        """Exponent of the Teichmuller representative congruent to c mod p."""
        res = self.R.reduce_p(c)
        if res == self._residue_zero:
            return INFINITY
        return self.teich_log[res]

    @property
    def _residue_zero(self):
        return self.R.reduce_p(self.R.zero)


def _require_sizes(params: RingParams, m: int):
    if m < 1:
        raise InvalidParameters(f"m must be >= 1, got {m}")
    if params.q**m > MAX_RESIDUE_FIELD:
        raise ParamsTooLarge(f"q^m = {params.q ** m} exceeds {MAX_RESIDUE_FIELD}")


def build_base_ring(params: RingParams) -> tuple[UPoly, QuotientRing]:
    """Construct h_r and L = Z_{p^s}[w]/(h_r)."""
    Z = IntegersMod(params.p, params.s)
    if params.r == 1:
        h_r = UPoly.from_ints(Z, [-1, 1])
    else:
        Fp = IntegersMod(params.p, 1)
        h_bar = smallest_primitive_poly(Fp, params.r)
        h_r = hensel_lift_factor(x_pow_minus_one(Z, params.q - 1), h_bar)
    return h_r, QuotientRing(Z, h_r)


def teichmuller_power(ring: QuotientRing, a, field_size: int, s: int):
    """a^(field_size^(s-1)): the Teichmuller representative congruent to a."""
    for _ in range(s - 1):
        a = ring.pow(a, field_size)
    return a


def build_tower(params: RingParams, m: int) -> GaloisTower:
    """Deterministically construct Z_{p^s} < L < R with a primitive element xi."""
    _require_sizes(params, m)
    p, s, q = params.p, params.s, params.q
    h_r, L = build_base_ring(params)
    Z = L.base
    Fq = L.residue()

    g_bar = smallest_primitive_poly(Fq, m)
    g0 = g_bar.map(L, lambda c: teichmuller_power(L, L.lift(c), q, s))
    R = QuotientRing(L, g0)
    n = q**m - 1

    xi = teichmuller_power(R, R.gen(), q**m, s)

    powers = [R.one]
    for _ in range(n - 1):
        powers.append(R.mul(powers[-1], xi))
    if R.mul(powers[-1], xi) != R.one:
        raise NoPrimitivePolynomial("xi^n != 1")
    for ell in prime_divisors(n):
        if powers[n // ell] == R.one:
            raise NoPrimitivePolynomial(f"xi has order dividing n/{ell}")

    teich_log = {}
    for i, t in enumerate(powers):
        res = R.reduce_p(t)
        if res in teich_log:
            raise NoPrimitivePolynomial("xi mod p does not generate the residue field")
        teich_log[res] = i

    # rows: xi^j in the x-basis; invertible because xi = x mod p
    xi_rows = Matrix(L, [R.pow(xi, j) for j in range(m)], m)
    from_xi = xi_rows
    to_xi = invert(xi_rows)

    tower = GaloisTower(
        params=params,
        m=m,
        h_r=h_r,
        g0=g0,
        Z=Z,
        L=L,
        R=R,
        xi=xi,
        n=n,
        to_xi_basis=to_xi,
        from_xi_basis=from_xi,
        powers=powers,
        teich_log=teich_log,
        b_table=[],
    )
    tower.b_table = [tower.to_xi_coords(t) for t in powers]
    basis = [R.pow(R.gen(), j) for j in range(m)]
    tower.frob_table = [[frobenius_digits(tower, b, k) for b in basis] for k in range(m)]
    return tower


def teichmuller_lift(tower: GaloisTower, c) -> tuple:
    return tower.xi_pow(tower.teich_index(c))


def padic_digits(tower: GaloisTower, c) -> PAdicDigits:
    """c = sum p^i * xi_{e_i}; returns the exponent indices e_0..e_{s-1}."""
    R = tower.R
    digits = []
    for k in range(tower.s):
        e = tower.teich_index(c)
        digits.append(e)
        c = R.sub(c, tower.xi_pow(e))
        if k < tower.s - 1:
            c = R.div_p(c)
    return PAdicDigits(tuple(digits))


def from_digits(tower: GaloisTower, digits: PAdicDigits) -> tuple:
    R = tower.R
    acc = R.zero
    for k, e in enumerate(digits.digits):
        acc = R.add(acc, R.scale(tower.p**k, tower.xi_pow(e)))
    return acc


def frobenius(tower: GaloisTower, c, times: int = 1) -> tuple:
    """f^times(c), using L-linearity of f on the power basis of R."""
    times %= tower.m
    if times == 0 or not tower.frob_table:
        return frobenius_digits(tower, c, times)
    R, L = tower.R, tower.L
    acc = R.zero
    for cj, img in zip(c, tower.frob_table[times]):
        if not L.is_zero(cj):
            acc = R.add(acc, R.base_mul(cj, img))
    return acc


def frobenius_digits(tower: GaloisTower, c, times: int = 1) -> tuple:
    """Frobenius by definition: every Teichmuller digit is raised to the q-th power."""
    times %= tower.m
    if times == 0:
        return c
    R = tower.R
    n, q = tower.n, tower.q
    shift = pow(q, times, n) if n > 1 else 0
    acc = R.zero
    for k, e in enumerate(padic_digits(tower, c).digits):
        if e is INFINITY:
            continue
        acc = R.add(acc, R.scale(tower.p**k, tower.powers[(e * shift) % n]))
    return acc


def trace(tower: GaloisTower, c):
    """Relative trace R -> L: sum of the m Frobenius conjugates."""
    R = tower.R
    acc = c
    for k in range(1, tower.m):
        acc = R.add(acc, frobenius(tower, c, k))
    return tower.to_base(acc)


def coord_vector(tower: GaloisTower, i: Optional[int]) -> tuple:
    """b_i in L^m: coordinates of xi^i in the xi-power basis; b_inf = 0."""
    if i is INFINITY:
        return (tower.L.zero,) * tower.m
    return tower.b_table[i % tower.n]


def frobenius_orbit(tower: GaloisTower, c) -> list:
    orbit = [c]
    for k in range(1, tower.m):
        d = frobenius(tower, c, k)
        if d == c:
            break
        orbit.append(d)
    return orbit


def minimal_polynomial(tower: GaloisTower, c) -> UPoly:
    """Product of (x - e) over the distinct Frobenius conjugates of c, as a polynomial over L."""
    R = tower.R
    poly = UPoly(R, [R.one])
    for e in frobenius_orbit(tower, c):
        poly = poly * UPoly.x_minus(R, e)
    return UPoly(tower.L, [tower.to_base(a) for a in poly.coeffs])


def lift_poly(tower: GaloisTower, f: UPoly) -> UPoly:
    """View a polynomial over L as one over R."""
    return f.map(tower.R, tower.embed)


def teichmuller_set(tower: GaloisTower) -> list:
    """The Teichmuller set {0, 1, xi, ..., xi^{n-1}}."""
    return [tower.R.zero] + list(tower.powers)


def all_base_elements(tower: GaloisTower) -> list:
    return list(tower.L.elements())


def l_basis_of_R(tower: GaloisTower) -> list:
    """1, xi, ..., xi^{m-1}: an L-basis of R."""
    return [tower.xi_pow(j) for j in range(tower.m)]
