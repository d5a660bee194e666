"""Brute-force ground truth: minimum weights, field GRM codes, duality and set equality.

Nothing here relies on the GRM theorems being checked.  Codewords are
enumerated as Z_{p^s}-combinations of the generators w^t * row (w running
over the Z_{p^s}-basis of L), vectorised with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import EnumerationTooLarge, LengthMismatch, NotFree
from .galois_ring import INFINITY, GaloisTower
from .ring_base import IntegersMod, QuotientRing
from .ring_linalg import HowellForm, Matrix, howell, inner_product, module_type, rank_free

DEFAULT_GUARD = 2**24
_LOW_TABLE = 1 << 12  # rows of the tabulated half
_CELLS = 1 << 22  # comparison cells per block of work


@dataclass
class WeightReport:
    min_weight: Optional[int]  # None for the zero code
    enumerated: int
    method: str  # "exhaustive" or "socle"
    distribution: Optional[dict] = field(default=None)
    complete: bool = True  # False if stopped early at the floor


def z_basis(ring) -> list:
    """Basis of the ring as a free Z_{p^s}-module."""
    if isinstance(ring, IntegersMod):
        return [ring.one]
    if isinstance(ring, QuotientRing):
        out = []
        for t in range(ring.degree):
            for b in z_basis(ring.base):
                e = [ring.base.zero] * ring.degree
                e[t] = b
                out.append(tuple(e))
        return out
    raise TypeError(f"unsupported ring {ring!r}")


def _int_generators(M: Matrix, rows) -> np.ndarray:
    ring = M.ring
    gens = []
    for row in rows:
        for b in z_basis(ring):
            gens.append([x for a in row for x in ring.to_ints(ring.mul(b, a))])
    return np.array(gens, dtype=np.int64).reshape(len(gens), M.ncols * ring.flat_dim)


def _combinations(gens: np.ndarray, coeff_base: int, modulus: int, start: int, stop: int) -> np.ndarray:
    """Words for coefficient indices start..stop-1 (base coeff_base, first generator least significant)."""
    K = gens.shape[0]
    idx = np.arange(start, stop, dtype=np.int64)
    powers = coeff_base ** np.arange(K, dtype=np.int64)
    coeffs = (idx[:, None] // powers[None, :]) % coeff_base
    return (coeffs @ gens) % modulus


def _encode(words: np.ndarray, ncols: int, block: int, modulus: int) -> np.ndarray:
    """One integer per coordinate: the block of Z_{p^s} components read in base modulus."""
    place = modulus ** np.arange(block, dtype=np.int64)
    return words.reshape(len(words), ncols, block) @ place


def _enumerate_weights(gens: np.ndarray, coeff_base: int, modulus: int, block: int, ncols: int,
                       floor: Optional[int], want_distribution: bool):
    """Scan all coefficient vectors in [0, coeff_base)^K.

    Returns (min weight, visited, histogram or None, complete, index of a
    minimum-weight combination).

    Meet in the middle: words of the first K_low generators are tabulated once;
    for each combination h of the remaining ones, coordinate j of low + h is
    zero iff low_j = -h_j, so weights come from a single comparison.
    """
    K = gens.shape[0]
    hist = np.zeros(ncols + 1, dtype=np.int64) if want_distribution else None
    if K == 0:
        if hist is not None:
            hist[0] += 1
        return None, 1, hist, True, None
    if K * (coeff_base - 1) * (modulus - 1) >= 2**62 or modulus**block >= 2**62:
        raise EnumerationTooLarge("residues too large for int64 accumulation")
    total = coeff_base**K
    k_low = 0
    while k_low < K and coeff_base ** (k_low + 1) <= _LOW_TABLE:
        k_low += 1
    n_low = coeff_base**k_low
    n_high = total // n_low
    low = _encode(_combinations(gens[:k_low], coeff_base, modulus, 0, n_low), ncols, block, modulus)
    step = max(1, _CELLS // (n_low * ncols))
    best = None
    best_index = None
    visited = 0
    complete = True
    for start in range(0, n_high, step):
        stop = min(start + step, n_high)
        high = _combinations(gens[k_low:], coeff_base, modulus, start, stop)
        neg = _encode((-high) % modulus, ncols, block, modulus)
        weights = ncols - (low[None, :, :] == neg[:, None, :]).sum(axis=2).ravel()
        visited += len(weights)
        if hist is not None:
            hist += np.bincount(weights, minlength=ncols + 1)
        masked = np.where(weights > 0, weights, ncols + 1)
        pos = int(masked.argmin())
        if masked[pos] <= ncols and (best is None or masked[pos] < best):
            best = int(masked[pos])
            best_index = start * n_low + pos
        if floor is not None and best is not None and best <= floor and hist is None:
            complete = visited == total
            break
    return best, visited, hist, complete, best_index


def brute_min_weight(M: Matrix, guard: int = DEFAULT_GUARD, floor: Optional[int] = None,
                     distribution: bool = False) -> WeightReport:
    """Exact minimum nonzero Hamming weight of the row module of M.

    Exhaustive over |L|^k combinations of the Howell rows when that fits the
    guard.  Otherwise, for a free module, the scan is restricted to the socle
    p^{s-1} C (q^k words): for c != 0 pick t with p^t c != 0 = p^{t+1} c, then
    p^t c lies in the socle and supp(p^t c) is contained in supp(c).
    """
    ring = M.ring
    H = howell(M)
    k = len(H.rows)
    block = ring.flat_dim
    modulus = ring.p**ring.s
    count = ring.order**k
    if count <= guard:
        gens = _int_generators(M, H.rows)
        best, visited, hist, complete, _ = _enumerate_weights(gens, modulus, modulus, block, M.ncols,
                                                              floor, distribution)
        method = "exhaustive"
    else:
        if not H.is_free:
            raise EnumerationTooLarge(f"{count} combinations exceed guard {guard} and the module is not free")
        socle_count = ring.residue_order**k
        if socle_count > guard:
            raise EnumerationTooLarge(f"socle enumeration of {socle_count} words exceeds guard {guard}")
        pk = ring.p ** (ring.s - 1)
        gens = (_int_generators(M, H.rows) * pk) % modulus
        best, visited, hist, complete, _ = _enumerate_weights(gens, ring.p, modulus, block, M.ncols,
                                                              floor, distribution)
        method = "socle"
    dist = None
    if hist is not None:
        dist = {w: int(c) for w, c in enumerate(hist) if c}
    return WeightReport(best, visited, method, dist, complete)


def enumerate_codewords(M: Matrix, guard: int = 2**20) -> set:
    """All codewords of the row module, as tuples of ring elements."""
    ring = M.ring
    H = howell(M)
    count = ring.order ** len(H.rows)
    if count > guard:
        raise EnumerationTooLarge(f"{count} codewords exceed guard {guard}")
    elements = list(ring.elements())
    out = set()
    for coeffs in itertools.product(elements, repeat=len(H.rows)):
        word = [ring.zero] * M.ncols
        for c, row in zip(coeffs, H.rows):
            if ring.is_zero(c):
                continue
            word = [ring.add(a, ring.mul(c, b)) for a, b in zip(word, row)]
        out.add(tuple(word))
    return out


def field_grm(tower: GaloisTower, nu: int) -> Matrix:
    """RM_{F_q}(nu, m): monomials of per-variable degree <= q-1 and total <= nu
    evaluated directly over F_q at 0 and at the reduced coordinate vectors b_i."""
    F = tower.residue_field
    L = tower.L
    q, m = tower.q, tower.m
    points = [(F.zero,) * m]
    points += [tuple(L.reduce_p(a) for a in tower.b_table[i]) for i in range(tower.n)]
    exps = [e for e in itertools.product(range(q), repeat=m) if sum(e) <= nu]
    rows = []
    for e in exps:
        row = []
        for pt in points:
            val = F.one
            for x, k in zip(pt, e):
                if k:
                    val = F.mul(val, F.pow(x, k))
            row.append(val)
        rows.append(row)
    return Matrix(F, rows, len(points))


def verify_dual(A: Matrix, B: Matrix) -> bool:
    """All inner products vanish and rank A + rank B = length."""
    if A.ncols != B.ncols:
        raise LengthMismatch(f"lengths {A.ncols} and {B.ncols} differ")
    ring = A.ring
    for a in A.rows:
        for b in B.rows:
            if not ring.is_zero(inner_product(ring, a, b)):
                return False
    try:
        return rank_free(A) + rank_free(B) == A.ncols
    except NotFree:
        return False


def codeword_set_equal(A: Matrix, B: Matrix, guard: int = 2**20) -> bool:
    """Equality of row modules: by codeword enumeration when small, else by Howell form."""
    if A.ncols != B.ncols:
        return False
    HA, HB = howell(A), howell(B)
    ring = A.ring
    if max(ring.order ** len(HA.rows), ring.order ** len(HB.rows)) <= guard:
        return enumerate_codewords(A, guard) == enumerate_codewords(B, guard)
    return HA == HB


def module_size(M) -> int:
    """Number of codewords of the row module."""
    H = M if isinstance(M, HowellForm) else howell(M)
    _, log_size = module_type(H)
    return H.matrix.ring.residue_order**log_size


def field_min_weight_word(F_matrix: Matrix, guard: int = DEFAULT_GUARD) -> tuple[int, tuple]:
    """(weight, word) of a minimum-weight codeword of a code over the residue field."""
    F = F_matrix.ring
    H = howell(F_matrix)
    if F.order ** len(H.rows) > guard:
        raise EnumerationTooLarge("field code too large to enumerate")
    if not H.rows:
        raise ValueError("the zero code has no nonzero codeword")
    gens = _int_generators(F_matrix, H.rows)
    block = F.flat_dim
    best, _, _, _, index = _enumerate_weights(gens, F.p, F.p, block, F_matrix.ncols, None, False)
    flat = _combinations(gens, F.p, F.p, index, index + 1)[0]
    word = tuple(F.from_ints(flat[j * block:(j + 1) * block].tolist()) for j in range(F_matrix.ncols))
    return best, word


def lifted_witness(tower: GaloisTower, genmat: Matrix, guard: int = DEFAULT_GUARD) -> tuple[int, tuple]:
    """p^{s-1} times a lift of a minimum-weight word of the reduced code.

    Returns (field weight, lifted word).  The lift is the same L-combination
    of the rows of ``genmat`` whose reduction realises the field word.
    """
    L = tower.L
    F = tower.residue_field
    F_mat = genmat.map(F, L.reduce_p)
    weight, word = field_min_weight_word(F_mat, guard)
    # coefficients over F on the original rows, then lifted to L
    coeffs = _solve_field_combination(F_mat, word)
    lifted = [L.zero] * genmat.ncols
    for c, row in zip(coeffs, genmat.rows):
        cl = L.lift(c)
        lifted = [L.add(a, L.mul(cl, b)) for a, b in zip(lifted, row)]
    pk = tower.p ** (tower.s - 1)
    return weight, tuple(L.scale(pk, a) for a in lifted)


def _solve_field_combination(F_mat: Matrix, target) -> list:
    """Coefficients c with sum c_i row_i = target over a field (Gauss-Jordan on [rows^T | target])."""
    F = F_mat.ring
    k, N = F_mat.nrows, F_mat.ncols
    aug = [[F_mat.rows[i][j] for i in range(k)] + [target[j]] for j in range(N)]
    pivots = []
    top = 0
    for c in range(k):
        piv = next((i for i in range(top, N) if not F.is_zero(aug[i][c])), None)
        if piv is None:
            continue
        aug[top], aug[piv] = aug[piv], aug[top]
        inv = F.inv(aug[top][c])
        aug[top] = [F.mul(inv, a) for a in aug[top]]
        for i in range(N):
            if i != top and not F.is_zero(aug[i][c]):
                t = aug[i][c]
                aug[i] = [F.sub(a, F.mul(t, b)) for a, b in zip(aug[i], aug[top])]
        pivots.append(c)
        top += 1
    for i in range(top, N):
        if not F.is_zero(aug[i][k]):
            raise ValueError("target is not in the row space")
    coeffs = [F.zero] * k
    for row_idx, c in enumerate(pivots):
        coeffs[c] = aug[row_idx][k]
    return coeffs


def column_label_str(label) -> str:
    return "inf" if label is INFINITY else str(label)
