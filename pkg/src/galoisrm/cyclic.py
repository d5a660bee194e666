"""q-weights, cyclotomic cosets and cyclic codes of length n = q^m - 1 over L."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import OrderOutOfRange, OutOfRange, PreconditionViolated
from .galois_ring import GaloisTower, lift_poly
from .ring_base import UPoly, monicize, poly_divmod, poly_reciprocal, x_pow_minus_one
from .ring_linalg import Matrix


def qweight(k: int, q: int, m: int) -> int:
    """Sum of the base-q digits of k, for 0 <= k <= q^m - 1."""
    if not 0 <= k <= q**m - 1:
        raise OutOfRange(f"{k} outside [0, {q ** m - 1}]")
    total = 0
    while k:
        k, d = divmod(k, q)
        total += d
    return total


@dataclass(frozen=True)
class CyclotomicCoset:
    rep: int
    members: tuple  # orbit order: rep, rep*q, rep*q^2, ... (mod n)

    def __len__(self):
        return len(self.members)


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    """Partition of {0..n-1} into orbits of j -> j*q mod n, ascending by representative."""
    seen = set()
    cosets = []
    for j in range(n):
        if j in seen:
            continue
        orbit = [j]
        k = j * q % n
        while k != j:
            orbit.append(k)
            k = k * q % n
        seen.update(orbit)
        cosets.append(CyclotomicCoset(j, tuple(orbit)))
    return cosets


def complementary_qweight_identity(j: int, q: int, m: int) -> bool:
    """w_q(q^m - 1 - j) == m(q-1) - w_q(j)."""
    return qweight(q**m - 1 - j, q, m) == m * (q - 1) - qweight(j, q, m)


@dataclass(frozen=True)
class LCyclicCode:
    """Cyclic code (gen) of length n over L, with check polynomial gen*check = x^n - 1."""

    n: int
    gen: UPoly
    check: UPoly

    @property
    def rank(self) -> int:
        return self.n - self.gen.degree


def make_cyclic_code(gen: UPoly, n: int) -> LCyclicCode:
    gen = monicize(gen)
    quo, rem = poly_divmod(x_pow_minus_one(gen.ring, n), gen)
    if not rem.is_zero():
        raise PreconditionViolated(f"{gen} does not divide x^{n} - 1")
    return LCyclicCode(n, gen, quo)


def check_poly(code: LCyclicCode) -> UPoly:
    """(x^n - 1) / gen."""
    quo, rem = poly_divmod(x_pow_minus_one(code.gen.ring, code.n), code.gen)
    if not rem.is_zero():
        raise PreconditionViolated("generator does not divide x^n - 1")
    return quo


def _check_order(tower: GaloisTower, nu: int):
    top = tower.m * (tower.q - 1)
    if not 0 <= nu < top:
        raise OrderOutOfRange(f"order {nu} outside [0, {top})")
    if not tower.rm_ge_s:
        raise PreconditionViolated(f"rm = {tower.r * tower.m} < s = {tower.s}")


def coset_polynomial(tower: GaloisTower, coset: CyclotomicCoset) -> UPoly:
    """prod (x - xi^j) over a coset; its coefficients lie in L."""
    R = tower.R
    poly = UPoly(R, [R.one])
    for j in coset.members:
        poly = poly * UPoly.x_minus(R, tower.xi_pow(j))
    return UPoly(tower.L, [tower.to_base(c) for c in poly.coeffs])


def grm_generator_poly(tower: GaloisTower, nu: int) -> LCyclicCode:
    """Generator of the shortened GRM code: prod (x - xi^j), 1 <= j <= n-1, w_q(j) <= m(q-1)-nu-1."""
    _check_order(tower, nu)
    q, m, n = tower.q, tower.m, tower.n
    bound = m * (q - 1) - nu - 1
    L = tower.L
    gen = UPoly(L, [L.one])
    for coset in cyclotomic_cosets(n, q):
        if coset.rep == 0:
            continue
        if qweight(coset.rep, q, m) <= bound:
            gen = gen * coset_polynomial(tower, coset)
    return make_cyclic_code(gen, n)


def cyclic_genmat(code: LCyclicCode) -> Matrix:
    """Rows g, xg, ..., x^(k-1) g as length-n vectors."""
    L = code.gen.ring
    n = code.n
    g = list(code.gen.coeffs)
    rows = []
    for i in range(code.rank):
        row = [L.zero] * n
        row[i:i + len(g)] = g
        rows.append(row)
    return Matrix(L, rows, n)


def cyclic_shift(v) -> tuple:
    """(v_{n-1}, v_0, ..., v_{n-2}): multiplication by x modulo x^n - 1."""
    return tuple(v[-1:]) + tuple(v[:-1])


def vector_to_poly(L, v) -> UPoly:
    return UPoly(L, v)


def bch_root_run(tower: GaloisTower, code: LCyclicCode, start: int = 1) -> int:
    """Designed distance: 1 + length of the run xi^start, xi^(start+1), ... of roots of gen."""
    g = lift_poly(tower, code.gen)
    R = tower.R
    run = 0
    while run < tower.n and R.is_zero(g(tower.xi_pow(start + run))):
        run += 1
    return run + 1


def root_exponents(tower: GaloisTower, f: UPoly) -> list[int]:
    """Exponents j in [0, n) with f(xi^j) = 0."""
    g = lift_poly(tower, f)
    R = tower.R
    return [j for j in range(tower.n) if R.is_zero(g(tower.xi_pow(j)))]


def annihilates(f: UPoly, word, n: int) -> bool:
    """Whether f(x) * word(x) = 0 modulo x^n - 1."""
    L = f.ring
    prod = f * UPoly(L, word)
    _, rem = poly_divmod(prod, x_pow_minus_one(L, n))
    return rem.is_zero()


def dual_complement_generator(code: LCyclicCode) -> Optional[UPoly]:
    """monicize(reciprocal((x^n - 1) / ((x - 1) gen)))."""
    L = code.gen.ring
    x_minus_one = UPoly.x_minus(L, L.one)
    quo, rem = poly_divmod(code.check, x_minus_one)
    if not rem.is_zero():
        return None
    return monicize(poly_reciprocal(quo))
