import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from csl4.golden import GoldenInt, GoldenRat
from csl4.zmodules import (
    FreeModule,
    NotContained,
    apply_map,
    golden_embed_matrix,
    golden_embed_module,
    golden_embed_vector,
    hnf_rows,
    index_in,
    integer_left_kernel,
    module_intersect,
    module_sum,
)

Z2 = FreeModule([[1, 0], [0, 1]], 2)

entries = st.integers(-7, 7)


def det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(n))


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@st.composite
def full_rank(draw, n=3):
    """Triangular matrix with nonzero diagonal times two unimodular triangular factors."""
    small = st.integers(-3, 3)
    T = [[draw(st.integers(1, 7)) if i == j else (draw(entries) if j > i else 0) for j in range(n)]
         for i in range(n)]
    U = [[1 if i == j else (draw(small) if j > i else 0) for j in range(n)] for i in range(n)]
    L = [[1 if i == j else (draw(small) if j < i else 0) for j in range(n)] for i in range(n)]
    return matmul(matmul(T, U), L)


def brute_index(sub_rows, n):
    """d^n / #(L ∩ [0, d)^n) with d = |det|, since dZ^n ⊆ L; membership by Cramer's rule."""
    d = abs(det(sub_rows))
    inside = 0
    for v in itertools.product(range(d), repeat=n):
        # v = x * rows with x integral  <=>  Cramer numerators divisible by det
        ok = True
        for k in range(n):
            M = [list(r) for r in sub_rows]
            M[k] = list(v)
            if det(M) % d:
                ok = False
                break
        inside += ok
    return d**n // inside


def test_basic_index_and_lattice_ops():
    A = FreeModule([[2, 0], [0, 2]], 2)
    B = FreeModule([[3, 0], [0, 3]], 2)
    assert module_sum(A, B) == Z2
    assert module_intersect(A, B) == FreeModule([[6, 0], [0, 6]], 2)
    assert index_in(A, Z2) == 4
    with pytest.raises(NotContained):
        index_in(Z2, A)
    with pytest.raises(NotContained):
        index_in(FreeModule([[1, 0]], 2), Z2)


def test_canonical_form_is_basis_independent():
    A = FreeModule([[1, 2], [3, 4]], 2)
    B = FreeModule([[1, 2], [3, 4], [4, 6], [0, 0]], 2)
    C = FreeModule([[4, 6], [1, 2]], 2)
    assert A == B == C and hash(A) == hash(C)


def test_rational_module_and_coordinates():
    M = FreeModule([[Fraction(1, 2), Fraction(1, 2)], [0, 1]], 2)
    assert M.denom == 2
    assert [Fraction(1, 2), Fraction(-1, 2)] in M
    assert [Fraction(1, 2), 0] not in M
    assert M.covolume() == Fraction(1, 2)


@given(full_rank(3))
def test_hnf_index_matches_determinant(M):
    L = FreeModule(M, 3)
    assert index_in(L, FreeModule([[int(i == j) for j in range(3)] for i in range(3)], 3)) == abs(det(M))
    H = hnf_rows(M, 3)
    for i, row in enumerate(H):
        assert row[i] > 0
        for k in range(i):
            assert 0 <= H[k][i] < row[i]


@given(full_rank(2), full_rank(2))
def test_intersection_and_sum_index_identity(M, N):
    # [Z^2 : A∩B] * [Z^2 : A+B] == [Z^2 : A] * [Z^2 : B]
    A, B = FreeModule(M, 2), FreeModule(N, 2)
    i, s = module_intersect(A, B), module_sum(A, B)
    assert index_in(i, Z2) * index_in(s, Z2) == index_in(A, Z2) * index_in(B, Z2)
    assert A.contains_module(i) and B.contains_module(i)
    assert s.contains_module(A) and s.contains_module(B)


@pytest.mark.parametrize("rows", [[[2, 1], [0, 3]], [[4, 2], [2, 5]], [[1, 1], [-1, 3]]])
def test_index_against_coset_count(rows):
    assert index_in(FreeModule(rows, 2), Z2) == brute_index(rows, 2)


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=5))
def test_left_kernel(rows):
    for x in integer_left_kernel(rows, 3):
        assert all(sum(c * r[j] for c, r in zip(x, rows)) == 0 for j in range(3))


def test_apply_map_and_json_roundtrip():
    R = [[0, -1], [1, 0]]
    A = FreeModule([[2, 1], [0, 3]], 2)
    img = apply_map(A, R)
    assert index_in(img, Z2) == 6
    with pytest.raises(ValueError):
        apply_map(A, [[1, 1], [1, 1]])
    blob = img.dumps()
    assert FreeModule.from_json(blob) == img
    assert json.loads(blob)["rank"] == 2


def test_golden_embedding():
    x = GoldenRat(GoldenInt(1, 2), 3)
    assert golden_embed_vector([x, 1]) == [Fraction(1, 3), Fraction(2, 3), 1, 0]
    # multiplication by tau, checked on tau itself
    M = golden_embed_matrix([[GoldenInt(0, 1)]])
    v = golden_embed_vector([GoldenInt(0, 1)])
    w = [sum(M[i][j] * v[j] for j in range(2)) for i in range(2)]
    assert w == golden_embed_vector([GoldenInt(1, 1)])
    Zt = golden_embed_module([[1]])
    assert Zt.rank == 2 and index_in(golden_embed_module([[2]]), Zt) == 4
