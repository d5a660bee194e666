"""Generalized Reed-Muller codes RM_L(nu, m) over L = GR(p^s, r).

Coordinates are labelled inf, 0, 1, ..., n-1: position inf is the evaluation
point 0 and position i the coordinate vector b_i of xi^i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .cyclic import qweight
from .errors import OrderOutOfRange, PreconditionViolated
from .galois_ring import INFINITY, GaloisTower, coord_vector
from .ring_linalg import Matrix, compwise_product

ExponentTuple = tuple


def column_labels(tower: GaloisTower) -> list:
    return [INFINITY] + list(range(tower.n))


def exponent_tuples(m: int, q: int, nu: int) -> list[ExponentTuple]:
    """Tuples (i_1..i_m), 0 <= i_j <= q-1, total <= nu.

    Graded order: total degree ascending, then lexicographically descending,
    so that degree one lists x_1, x_2, ..., x_m.
    """
    tuples = [e for e in itertools.product(range(q), repeat=m) if sum(e) <= nu]
    return sorted(tuples, key=lambda e: (sum(e), tuple(-i for i in e)))


class MultivarPoly:
    """Polynomial in x_1..x_m over L, stored as {exponent tuple: coefficient}."""

    def __init__(self, ring, m: int, terms: Mapping | None = None):
        self.ring = ring
        self.m = m
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != m:
                raise ValueError(f"exponent {e} has wrong arity for m={m}")
            if not ring.is_zero(c):
                self.terms[tuple(e)] = c

    @classmethod
    def variable(cls, ring, m: int, j: int) -> "MultivarPoly":
        """x_j for 1 <= j <= m."""
        e = [0] * m
        e[j - 1] = 1
        return cls(ring, m, {tuple(e): ring.one})

    @classmethod
    def constant(cls, ring, m: int, c) -> "MultivarPoly":
        return cls(ring, m, {(0,) * m: c})

    def in_S(self, q: int) -> bool:
        """Per-variable degree at most q-1."""
        return all(max(e, default=0) <= q - 1 for e in self.terms)

    @property
    def degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def __add__(self, other: "MultivarPoly") -> "MultivarPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = self.ring.add(out.get(e, self.ring.zero), c)
        return MultivarPoly(self.ring, self.m, out)

    def __mul__(self, other: "MultivarPoly") -> "MultivarPoly":
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = ring.add(out.get(e, ring.zero), ring.mul(c1, c2))
        return MultivarPoly(ring, self.m, out)

    def scalar(self, c) -> "MultivarPoly":
        return MultivarPoly(self.ring, self.m, {e: self.ring.mul(c, a) for e, a in self.terms.items()})

    def __call__(self, point: Sequence):
        ring = self.ring
        acc = ring.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                for _ in range(k):
                    term = ring.mul(term, x)
            acc = ring.add(acc, term)
        return acc


def evaluate(P: MultivarPoly, tower: GaloisTower) -> tuple:
    """(P(b_inf), P(b_0), ..., P(b_{n-1}))."""
    return tuple(P(coord_vector(tower, i)) for i in column_labels(tower))


@dataclass(frozen=True)
class GrmCode:
    tower: GaloisTower
    nu: int
    exponents: tuple
    genmat: Matrix

    @property
    def length(self) -> int:
        return self.genmat.ncols

    @property
    def column_labels(self) -> list:
        return column_labels(self.tower)


def _basic_rows(tower: GaloisTower) -> list[tuple]:
    """v_1..v_m: row j is (0, b_{j,0}, ..., b_{j,n-1})."""
    L = tower.L
    return [tuple([L.zero] + [tower.b_table[i][j] for i in range(tower.n)]) for j in range(tower.m)]


def monomial_row(tower: GaloisTower, e: ExponentTuple, basic=None) -> tuple:
    """v_1^{i_1} ... v_m^{i_m} as a component-wise product."""
    L = tower.L
    basic = basic or _basic_rows(tower)
    row = (L.one,) * tower.length
    for v, k in zip(basic, e):
        for _ in range(k):
            row = compwise_product(L, row, v)
    return row


def _top_order(tower: GaloisTower) -> int:
    return tower.m * (tower.q - 1)


def standard_genmat(tower: GaloisTower, nu: int) -> GrmCode:
    if not 0 <= nu <= _top_order(tower):
        raise OrderOutOfRange(f"order {nu} outside [0, {_top_order(tower)}]")
    exps = exponent_tuples(tower.m, tower.q, nu)
    basic = _basic_rows(tower)
    rows = [monomial_row(tower, e, basic) for e in exps]
    return GrmCode(tower, nu, tuple(exps), Matrix(tower.L, rows, tower.length))


def _binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    return comb(a, b)


def rank_formula(nu: int, m: int, q: int) -> int:
    """Inclusion-exclusion count of exponent tuples with digits <= q-1 and total <= nu."""
    total = 0
    for i in range(nu + 1):
        for j in range(m + 1):
            total += (-1) ** j * comb(m, j) * _binom(i - j * q + m - 1, i - j * q)
    return total


def qweight_rank_count(nu: int, m: int, q: int) -> int:
    """#{j : 0 <= j <= q^m - 2, w_q(j) <= nu}."""
    if not 0 <= nu < m * (q - 1):
        raise OrderOutOfRange(f"order {nu} outside [0, {m * (q - 1)})")
    return sum(1 for j in range(q**m - 1) if qweight(j, q, m) <= nu)


def project(obj, tower: GaloisTower):
    """Reduction modulo p of an element vector, a Matrix or a GrmCode."""
    L = tower.L
    F = tower.residue_field
    if isinstance(obj, GrmCode):
        obj = obj.genmat
    if isinstance(obj, Matrix):
        return obj.map(F, L.reduce_p)
    return tuple(L.reduce_p(a) for a in obj)


def _matrix(code) -> Matrix:
    return code.genmat if isinstance(code, GrmCode) else code


def puncture_first(code) -> Matrix:
    """Delete coordinate inf (the first position)."""
    return _matrix(code).drop_column(0)


def extend_parity(code) -> Matrix:
    """Prepend c_inf = -(sum of the other coordinates) to every row."""
    M = _matrix(code)
    ring = M.ring
    rows = []
    for r in M.rows:
        acc = ring.zero
        for a in r:
            acc = ring.add(acc, a)
        rows.append((ring.neg(acc),) + tuple(r))
    return Matrix(ring, rows, M.ncols + 1)


def dual_order(nu: int, m: int, q: int) -> int:
    if not 0 <= nu < m * (q - 1):
        raise OrderOutOfRange(f"order {nu} outside [0, {m * (q - 1)})")
    return m * (q - 1) - nu - 1


@dataclass(frozen=True)
class DistanceParams:
    Q: int
    rem: int
    designed: int

    def __iter__(self):
        return iter((self.Q, self.rem, self.designed))


def distance_params(nu: int, m: int, q: int) -> DistanceParams:
    """(Q, rem) = divmod(m(q-1) - nu, q-1) and designed = (rem+1) q^Q - 1."""
    if not 0 <= nu < m * (q - 1):
        raise OrderOutOfRange(f"order {nu} outside [0, {m * (q - 1)})")
    Q, rem = divmod(m * (q - 1) - nu, q - 1)
    return DistanceParams(Q, rem, (rem + 1) * q**Q - 1)


def row_sums(M: Matrix) -> list:
    ring = M.ring
    out = []
    for r in M.rows:
        acc = ring.zero
        for a in r:
            acc = ring.add(acc, a)
        out.append(acc)
    return out


def zero_sum_check(code) -> bool:
    """Every generator row sums to zero in L.

    For a GrmCode the hypotheses rm >= s and nu < m(q-1) are enforced first.
    """
    if isinstance(code, GrmCode):
        t = code.tower
        if not t.rm_ge_s:
            raise PreconditionViolated(f"rm = {t.r * t.m} < s = {t.s}: the zero-sum property does not hold")
        if code.nu >= _top_order(t):
            raise PreconditionViolated(f"order {code.nu} must be < m(q-1) = {_top_order(t)}")
    M = _matrix(code)
    return all(M.ring.is_zero(a) for a in row_sums(M))
