import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisrm.errors import LengthMismatch, NotFree, NotInvertible
from galoisrm.ring_base import IntegersMod
from galoisrm.ring_linalg import (
    Matrix,
    compwise_product,
    hamming_weight,
    howell,
    inner_product,
    invert,
    kernel,
    linear_combination,
    matmul,
    module_type,
    rank_free,
    same_row_module,
    span_contains,
)

from .conftest import get_genmat

Z4 = IntegersMod(2, 2)
Z8 = IntegersMod(2, 3)
Z9 = IntegersMod(3, 2)


def M(ring, rows, ncols=None):
    return Matrix(ring, rows, ncols)


# --- examples ------------------------------------------------------------

def test_compwise_product_examples():
    u = (0, 1, 0, 3)
    assert compwise_product(Z4, u, (1, 1, 1, 1)) == u
    assert compwise_product(Z4, u, (0, 0, 1, 3)) == (0, 0, 0, 1)
    assert compwise_product(Z4, u, (0, 0, 0, 0)) == (0, 0, 0, 0)
    with pytest.raises(LengthMismatch):
        compwise_product(Z4, u, (1, 1))


def test_howell_examples():
    I = Matrix.identity(Z4, 3)
    assert howell(I).rows == I.rows
    H = howell(M(Z4, [(2, 0), (0, 2), (1, 1)]))
    assert H.rows == ((1, 1), (0, 2))
    assert H.pivot_valuations == (0, 1)


def test_howell_needs_extra_row():
    # (2, 1) generates (0, 2) = 2 * (2, 1) which must appear explicitly
    H = howell(M(Z4, [(2, 1)]))
    assert H.rows == ((2, 1), (0, 2))
    assert span_contains(H, (0, 2))


def test_rank_free_examples():
    assert rank_free(Matrix.zeros(Z4, 2, 3)) == 0
    assert rank_free(get_genmat(2, 2, 1, 3, 1).genmat) == 4
    with pytest.raises(NotFree):
        rank_free(M(Z4, [(2, 2)]))


def test_rank_free_accepts_nonunit_pivot_of_free_module():
    # (2,1),(1,0) spans all of Z4^2 even though a naive echelon form has a pivot 2
    assert rank_free(M(Z4, [(2, 1), (1, 0)])) == 2
    assert module_type(M(Z4, [(2, 0), (0, 1)])) == (2, 3)


def test_span_contains_examples():
    A = M(Z4, [(1, 1)])
    assert span_contains(A, (1, 1))
    assert span_contains(A, (0, 0))
    assert not span_contains(A, (1, 2))


def test_kernel_examples():
    ones = M(Z4, [(1, 1, 1, 1)])
    assert span_contains(kernel(ones), (1, 1, 1, 1))
    assert kernel(Matrix.identity(Z4, 3)).nrows == 0
    G = get_genmat(2, 2, 1, 3, 1).genmat
    assert same_row_module(kernel(kernel(G)), G)


def test_invert_examples():
    I = Matrix.identity(Z4, 3)
    assert invert(I).rows == I.rows
    assert invert(M(Z4, [(1, 1), (0, 1)])).rows == ((1, 3), (0, 1))
    assert invert(M(Z4, [(2, 1), (1, 1)])).rows == ((1, 3), (3, 2))
    with pytest.raises(NotInvertible):
        invert(M(Z4, [(2, 0), (0, 1)]))


def test_hamming_weight():
    assert hamming_weight(Z4, (0, 2, 0, 3)) == 2


def test_matrix_rejects_ragged():
    with pytest.raises(LengthMismatch):
        M(Z4, [(1, 2), (1,)])


# --- properties ----------------------------------------------------------

rings = st.sampled_from([Z4, Z8, Z9])


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    ring = draw(rings)
    k = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    entries = draw(st.lists(st.integers(0, ring.modulus - 1), min_size=k * n, max_size=k * n))
    return M(ring, [entries[i * n:(i + 1) * n] for i in range(k)], n)


def random_unimodular_mix(A: Matrix, rng: random.Random) -> Matrix:
    ring = A.ring
    rows = [list(r) for r in A.rows]
    rng.shuffle(rows)
    for _ in range(3 * len(rows)):
        i, j = rng.sample(range(len(rows)), 2) if len(rows) > 1 else (0, 0)
        if i != j:
            c = rng.randrange(ring.modulus)
            rows[i] = [ring.add(a, ring.mul(c, b)) for a, b in zip(rows[i], rows[j])]
        u = rng.choice([a for a in ring.elements() if ring.is_unit(a)])
        rows[j] = [ring.mul(u, a) for a in rows[j]]
    return M(ring, rows, A.ncols)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_howell_idempotent(A):
    H = howell(A)
    assert howell(H.matrix) == H


@settings(max_examples=200, deadline=None)
@given(matrices(), st.integers(0, 2**32))
def test_howell_canonical_under_row_operations(A, seed):
    B = random_unimodular_mix(A, random.Random(seed))
    assert howell(A) == howell(B)


def enumerate_span(A: Matrix) -> set:
    ring = A.ring
    return {linear_combination(ring, c, A.rows, A.ncols)
            for c in itertools.product(range(ring.modulus), repeat=A.nrows)}


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=4, max_cols=3), st.lists(st.integers(0, 80), min_size=3, max_size=3))
def test_span_contains_matches_enumeration(A, v):
    ring = A.ring
    v = tuple(ring.from_int(x) for x in v[:A.ncols])
    span = enumerate_span(A)
    assert span_contains(A, v) == (v in span)
    for w in list(span)[:10]:
        assert span_contains(A, w)


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=4, max_cols=3))
def test_module_size_matches_enumeration(A):
    span = enumerate_span(A)
    _, log_size = module_type(A)
    assert len(span) == A.ring.p**log_size


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_orthogonal(A):
    ring = A.ring
    K = kernel(A)
    for x in K.rows:
        for a in A.rows:
            assert ring.is_zero(inner_product(ring, a, x))


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=3, max_cols=3))
def test_kernel_is_complete(A):
    # every x with A x^T = 0 lies in span(kernel(A))
    ring = A.ring
    K = howell(kernel(A))
    for x in itertools.product(range(ring.modulus), repeat=A.ncols):
        if all(ring.is_zero(inner_product(ring, a, x)) for a in A.rows):
            assert span_contains(K, x)


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=4, max_cols=4), st.integers(0, 2**32))
def test_invert_roundtrip(A, seed):
    ring = A.ring
    n = A.ncols
    rng = random.Random(seed)
    # unit upper-triangular times a permutation is always invertible
    U = M(ring, [[rng.randrange(ring.modulus) if j > i else (1 if i == j else 0) for j in range(n)]
                 for i in range(n)], n)
    P = M(ring, random.Random(seed + 1).sample(Matrix.identity(ring, n).rows, n), n)
    B = matmul(P, U)
    assert matmul(B, invert(B)).rows == Matrix.identity(ring, n).rows

