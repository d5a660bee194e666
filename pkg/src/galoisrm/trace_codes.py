"""Kerdock codes over L and trace descriptions of GRM codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .cyclic import (
    LCyclicCode,
    cyclotomic_cosets,
    make_cyclic_code,
    qweight,
)
from .errors import EnumerationTooLarge, OrderOutOfRange, PreconditionViolated
from .galois_ring import GaloisTower, frobenius, l_basis_of_R, minimal_polynomial, trace
from .grm import extend_parity
from .ring_base import UPoly, monicize, poly_divmod, poly_reciprocal, x_pow_minus_one
from .ring_linalg import Matrix, vec_add

DEFAULT_GUARD = 2**20


def _require_rm_ge_s(tower: GaloisTower):
    if not tower.rm_ge_s:
        raise PreconditionViolated(f"rm = {tower.r * tower.m} < s = {tower.s}")


def kerdock_gen_poly(tower: GaloisTower) -> LCyclicCode:
    """Monic reciprocal of (x^n - 1) / ((x - 1) h(x)), h the minimal polynomial of xi."""
    _require_rm_ge_s(tower)
    L = tower.L
    h = minimal_polynomial(tower, tower.xi)
    denom = UPoly.x_minus(L, L.one) * h
    quo, rem = poly_divmod(x_pow_minus_one(L, tower.n), denom)
    if not rem.is_zero():
        raise PreconditionViolated("(x - 1) h(x) does not divide x^n - 1")
    return make_cyclic_code(monicize(poly_reciprocal(quo)), tower.n)


@dataclass(frozen=True)
class KerdockPair:
    shortened: LCyclicCode
    shortened_genmat: Matrix  # rows 1^n and (b_{j,0}, ..., b_{j,n-1}), j = 1..m
    extended: Matrix


def kerdock_code(tower: GaloisTower) -> KerdockPair:
    _require_rm_ge_s(tower)
    L = tower.L
    n = tower.n
    rows = [(L.one,) * n]
    for j in range(tower.m):
        rows.append(tuple(tower.b_table[i][j] for i in range(n)))
    g_minus = Matrix(L, rows, n)
    return KerdockPair(kerdock_gen_poly(tower), g_minus, extend_parity(g_minus))


def trace_word(tower: GaloisTower, lam, j: int, with_leading_zero: bool = False) -> tuple:
    """(T(lam), T(lam xi^j), ..., T(lam xi^{(n-1)j})), optionally preceded by 0."""
    R = tower.R
    word = tuple(trace(tower, R.mul(lam, tower.xi_pow(i * j))) for i in range(tower.n))
    if with_leading_zero:
        return (tower.L.zero,) + word
    return word


def _check_enumeration(count: int, guard: int):
    if count > guard:
        raise EnumerationTooLarge(f"{count} words exceed the enumeration guard {guard}")


def kerdock_trace_words(tower: GaloisTower, guard: int = DEFAULT_GUARD) -> dict:
    """Map (eps, lam) -> eps 1^n + v^(lam) over all eps in L, lam in R."""
    _require_rm_ge_s(tower)
    L = tower.L
    _check_enumeration(L.order * tower.R.order, guard)
    ones = (L.one,) * tower.n
    v_words = {lam: trace_word(tower, lam, 1) for lam in tower.R.elements()}
    out = {}
    for eps in L.elements():
        shift = tuple(L.mul(eps, a) for a in ones)
        for lam, v in v_words.items():
            out[(eps, lam)] = vec_add(L, shift, v)
    return out


def kerdock_trace_set(tower: GaloisTower, guard: int = DEFAULT_GUARD) -> frozenset:
    return frozenset(kerdock_trace_words(tower, guard).values())


def kerdock_trace_collision(tower: GaloisTower, guard: int = DEFAULT_GUARD):
    """First pair of distinct (eps, lam) giving the same word, or None if the map is injective."""
    seen = {}
    for key, word in kerdock_trace_words(tower, guard).items():
        if word in seen:
            return seen[word], key
        seen[word] = key
    return None


def grm_trace_genmat(tower: GaloisTower, nu: int) -> Matrix:
    """1^{q^m} together with (0, T(lam xi^{ij}))_i for cyclotomic cosets of q-weight <= nu.

    Exponents are taken in [1, n], so the zero coset is represented by n and
    has q-weight m(q-1): its word (0, T(lam), ..., T(lam)) only enters at the
    top order.  lam runs over the L-basis 1, xi, ..., xi^{m-1} of R, which
    suffices by L-linearity of the trace word in lam.
    """
    _require_rm_ge_s(tower)
    top = tower.m * (tower.q - 1)
    if not 1 <= nu <= top:
        raise OrderOutOfRange(f"order {nu} outside [1, {top}]")
    L = tower.L
    rows = [(L.one,) * tower.length]
    basis = l_basis_of_R(tower)
    for coset in cyclotomic_cosets(tower.n, tower.q):
        if coset_qweight(coset.rep, tower.q, tower.m) > nu:
            continue
        for lam in basis:
            rows.append(trace_word(tower, lam, coset.rep, with_leading_zero=True))
    return Matrix(L, rows, tower.length)


def coset_qweight(j: int, q: int, m: int) -> int:
    """q-weight of the representative of j in [1, q^m - 1]."""
    return qweight(fold_exponent(j, q**m - 1), q, m)


def fold_exponent(t: int, n: int) -> int:
    """Representative of t >= 1 in [1, n] modulo n (z^t agrees for every Teichmuller z, including 0)."""
    return (t - 1) % n + 1


def trace_product_expand(tower: GaloisTower, lambdas: Sequence, exponents: Sequence[int]) -> list[tuple]:
    """Terms (t, mu_t) with prod_i T(lam_i z)^{e_i} = sum_t T(mu_t z^t) for every z in the Teichmuller set.

    With factors lam_(1), ..., lam_(a) listed with multiplicity, each term comes
    from a shift pattern (j_2, ..., j_a) in [0, m)^(a-1):
    t = 1 + q^{j_2} + ... + q^{j_a} and mu = lam_(1) * prod lam_(k)^{f^{j_k}}.
    """
    factors = [lam for lam, e in zip(lambdas, exponents) for _ in range(e)]
    if not factors:
        raise ValueError("need at least one factor")
    R = tower.R
    q, m, n = tower.q, tower.m, tower.n
    conj = [[frobenius(tower, lam, k) for k in range(m)] for lam in factors[1:]]
    terms = []
    for shifts in itertools.product(range(m), repeat=len(factors) - 1):
        t = 1
        mu = factors[0]
        for k, jk in enumerate(shifts):
            t += q**jk
            mu = R.mul(mu, conj[k][jk])
        terms.append((fold_exponent(t, n), mu))
    return terms


def eval_trace_product(tower: GaloisTower, lambdas: Sequence, exponents: Sequence[int], z) -> tuple:
    """prod_i T(lam_i z)^{e_i}, computed directly."""
    L, R = tower.L, tower.R
    acc = L.one
    for lam, e in zip(lambdas, exponents):
        acc = L.mul(acc, L.pow(trace(tower, R.mul(lam, z)), e))
    return acc


def eval_trace_expansion(tower: GaloisTower, terms: Sequence[tuple], z) -> tuple:
    """sum_t T(mu_t z^t)."""
    L, R = tower.L, tower.R
    acc = L.zero
    for t, mu in terms:
        acc = L.add(acc, trace(tower, R.mul(mu, R.pow(z, t))))
    return acc
