"""Matrices over a finite chain ring and their Howell normal form.

The coefficient ring is any ring object from :mod:`galoisrm.ring_base` whose
ideals form the chain (1) > (p) > ... > (p^s) = 0: Z_{p^s}, GR(p^s, r) and the
residue fields (s = 1).  Row-module equality and membership are decided on the
Howell form, which is canonical for row modules over such rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatch, NotFree, NotInvertible


@dataclass(frozen=True)
class Matrix:
    ring: object
    rows: tuple
    ncols: int

    def __init__(self, ring, rows: Sequence[Sequence], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise LengthMismatch(f"row of length {len(r)} in a matrix with {ncols} columns")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def drop_column(self, j: int) -> "Matrix":
        return Matrix(self.ring, [r[:j] + r[j + 1:] for r in self.rows], self.ncols - 1)

    def map(self, ring, fn) -> "Matrix":
        return Matrix(ring, [[fn(a) for a in r] for r in self.rows], self.ncols)

    def stack(self, other: "Matrix") -> "Matrix":
        if other.ncols != self.ncols:
            raise LengthMismatch("cannot stack matrices of different widths")
        return Matrix(self.ring, self.rows + other.rows, self.ncols)

    @classmethod
    def identity(cls, ring, n: int) -> "Matrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, ring, nrows: int, ncols: int) -> "Matrix":
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols)

    def fmt(self) -> str:
        return "\n".join(" ".join(self.ring.fmt(a) for a in r) for r in self.rows)


@dataclass(frozen=True)
class HowellForm:
    matrix: Matrix
    pivot_cols: tuple
    pivot_valuations: tuple

    @property
    def rows(self) -> tuple:
        return self.matrix.rows

    def __eq__(self, other):
        if not isinstance(other, HowellForm):
            return NotImplemented
        return self.matrix.rows == other.matrix.rows and self.matrix.ncols == other.matrix.ncols

    def __hash__(self):
        return hash(self.matrix.rows)

    @property
    def is_free(self) -> bool:
        return all(v == 0 for v in self.pivot_valuations)


# -- vector helpers ----------------------------------------------------------


def _check_len(u, v):
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")


def compwise_product(ring, u: Sequence, v: Sequence) -> tuple:
    """(u_0 v_0, ..., u_N v_N)."""
    _check_len(u, v)
    return tuple(ring.mul(a, b) for a, b in zip(u, v))


def inner_product(ring, u: Sequence, v: Sequence):
    _check_len(u, v)
    acc = ring.zero
    for a, b in zip(u, v):
        acc = ring.add(acc, ring.mul(a, b))
    return acc


def vec_add(ring, u, v) -> tuple:
    return tuple(ring.add(a, b) for a, b in zip(u, v))


def vec_sub(ring, u, v) -> tuple:
    return tuple(ring.sub(a, b) for a, b in zip(u, v))


def vec_scale(ring, c, u) -> tuple:
    return tuple(ring.mul(c, a) for a in u)


def vec_is_zero(ring, u) -> bool:
    return all(ring.is_zero(a) for a in u)


def hamming_weight(ring, u) -> int:
    return sum(1 for a in u if not ring.is_zero(a))


def _div_p_power(ring, a, v: int):
    for _ in range(v):
        a = ring.div_p(a)
    return a


def _axpy(ring, row, t, pivot_row):
    """row - t * pivot_row."""
    sub, mul = ring.sub, ring.mul
    return [sub(a, mul(t, b)) for a, b in zip(row, pivot_row)]


# -- Howell form -------------------------------------------------------------


def howell(M: Matrix) -> HowellForm:
    """Howell normal form of the row module of M.

    Pivots are normalized to p^v, entries above a pivot are reduced modulo
    p^v coordinatewise, and for every pivot of valuation v > 0 the row
    multiplied by p^(s-v) is fed back in, which yields the Howell property.
    """
    ring = M.ring
    s = ring.s
    rows = [list(r) for r in M.rows if not vec_is_zero(ring, r)]
    pivots = []
    top = 0
    for c in range(M.ncols):
        best, best_v = None, None
        for i in range(top, len(rows)):
            v = ring.valuation(rows[i][c])
            if v != float("inf") and (best_v is None or v < best_v):
                best, best_v = i, v
                if v == 0:
                    break
        if best is None:
            continue
        rows[top], rows[best] = rows[best], rows[top]
        v = best_v
        unit = _div_p_power(ring, rows[top][c], v)
        u_inv = ring.inv(unit)
        prow = [ring.mul(u_inv, a) for a in rows[top]]
        rows[top] = prow
        for i in range(top + 1, len(rows)):
            e = rows[i][c]
            if ring.is_zero(e):
                continue
            rows[i] = _axpy(ring, rows[i], _div_p_power(ring, e, v), prow)
        if v > 0:
            extra = [ring.scale(ring.p ** (s - v), a) for a in prow]
            if not vec_is_zero(ring, extra):
                rows.append(extra)
        pivots.append((c, v))
        top += 1
    rows = rows[:top]
    for k, (c, v) in enumerate(pivots):
        prow = rows[k]
        for i in range(k):
            e = rows[i][c]
            if ring.is_zero(e):
                continue
            excess = ring.sub(e, ring.rem_p_power(e, v))
            if ring.is_zero(excess):
                continue
            rows[i] = _axpy(ring, rows[i], _div_p_power(ring, excess, v), prow)
    return HowellForm(
        Matrix(ring, rows, M.ncols),
        tuple(c for c, _ in pivots),
        tuple(v for _, v in pivots),
    )


def _as_howell(M) -> HowellForm:
    return M if isinstance(M, HowellForm) else howell(M)


def module_log_size(H: HowellForm) -> int:
    """log_q |row module|, q the residue field size."""
    s = H.matrix.ring.s
    return sum(s - v for v in H.pivot_valuations)


def module_type(M) -> tuple[int, int]:
    """(number of cyclic summands, log_q of the module size)."""
    H = _as_howell(M)
    ring = H.matrix.ring
    size = module_log_size(H)
    pM = howell(Matrix(ring, [[ring.scale(ring.p, a) for a in r] for r in H.rows], H.matrix.ncols))
    return size - module_log_size(pM), size


def rank_free(M) -> int:
    """Rank of a free row module; NotFree otherwise."""
    H = _as_howell(M)
    if H.is_free:
        return len(H.rows)
    summands, size = module_type(H)
    if size != H.matrix.ring.s * summands:
        raise NotFree("row module is not free (a Howell pivot has positive p-valuation)")
    return summands


def span_contains(M, v: Sequence) -> bool:
    H = _as_howell(M)
    ring = H.matrix.ring
    if len(v) != H.matrix.ncols:
        raise LengthMismatch(f"vector of length {len(v)} vs {H.matrix.ncols} columns")
    w = list(v)
    for row, c, pv in zip(H.rows, H.pivot_cols, H.pivot_valuations):
        e = w[c]
        if ring.is_zero(e):
            continue
        if ring.valuation(e) < pv:
            return False
        w = _axpy(ring, w, _div_p_power(ring, e, pv), row)
    return vec_is_zero(ring, w)


def same_row_module(A, B) -> bool:
    return _as_howell(A) == _as_howell(B)


def kernel(M: Matrix) -> Matrix:
    """Generators of {x : M x^T = 0}, via the Howell form of [M^T | I]."""
    ring = M.ring
    k, N = M.nrows, M.ncols
    aug = []
    for j in range(N):
        row = [M.rows[i][j] for i in range(k)]
        row += [ring.one if t == j else ring.zero for t in range(N)]
        aug.append(row)
    H = howell(Matrix(ring, aug, k + N))
    out = [r[k:] for r, c in zip(H.rows, H.pivot_cols) if c >= k]
    return Matrix(ring, out, N)


def invert(M: Matrix) -> Matrix:
    """Inverse of a square matrix with unit determinant."""
    ring = M.ring
    n = M.nrows
    if n != M.ncols:
        raise NotInvertible("matrix is not square")
    aug = [list(r) + [ring.one if i == j else ring.zero for j in range(n)] for i, r in enumerate(M.rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if ring.is_unit(aug[i][c])), None)
        if piv is None:
            raise NotInvertible("determinant is not a unit")
        aug[c], aug[piv] = aug[piv], aug[c]
        u_inv = ring.inv(aug[c][c])
        aug[c] = [ring.mul(u_inv, a) for a in aug[c]]
        for i in range(n):
            if i != c and not ring.is_zero(aug[i][c]):
                aug[i] = _axpy(ring, aug[i], aug[i][c], aug[c])
    return Matrix(ring, [r[n:] for r in aug], n)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    ring = A.ring
    if A.ncols != B.nrows:
        raise LengthMismatch("inner dimensions differ")
    cols = [B.column(j) for j in range(B.ncols)]
    return Matrix(ring, [[inner_product(ring, r, c) for c in cols] for r in A.rows], B.ncols)


def linear_combination(ring, coeffs: Sequence, rows: Sequence, ncols: int) -> tuple:
    acc = [ring.zero] * ncols
    for c, r in zip(coeffs, rows):
        if ring.is_zero(c):
            continue
        acc = [ring.add(a, ring.mul(c, b)) for a, b in zip(acc, r)]
    return tuple(acc)
