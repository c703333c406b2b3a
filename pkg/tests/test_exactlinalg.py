import itertools
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from racg_lcs.exactlinalg import (GF2Matrix, IntegerLattice, gf2_nullspace, gf2_rank,
                                  gf2_solve, smith_normal_form)


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def determinantal_divisors(A):
    """Invariant factors from gcds of k x k minors (sympy determinants)."""
    r, c = len(A), len(A[0])
    M = sympy.Matrix(A)
    prev, out = 1, []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = gcd(g, int(M.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return tuple(out)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@pytest.mark.parametrize("A, expected", [
    ([[1, 0], [0, 1]], (1, 1)),
    ([[1, 2], [3, 4]], (1, 2)),
    ([[0, 0], [0, 0]], ()),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
])
def test_snf_examples(A, expected):
    assert smith_normal_form(A) == expected


@given(matrices(4, 4))
def test_snf_matches_minors(A):
    assert smith_normal_form(A) == determinantal_divisors(A)


@given(matrices())
def test_snf_transforms(A):
    d, U, D, V = smith_normal_form(A, transforms=True)
    assert matmul(matmul(U, A), V) == D
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
    assert tuple(diag) == d
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x > 0 for x in d)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_snf_product_is_det(A):
    det = int(sympy.Matrix(A).det())
    d = smith_normal_form(A)
    if det:
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(det)
    else:
        assert len(d) < len(A)


def test_snf_large_entries_stay_exact():
    A = [[10 ** 30 + 1, 10 ** 30], [10 ** 30, 10 ** 30 - 1]]
    assert smith_normal_form(A) == (1, 1)


@given(matrices(5, 5, -4, 4))
def test_lattice_invariants_match_snf(A):
    L = IntegerLattice(len(A[0]))
    for row in A:
        L.add({j: x for j, x in enumerate(row) if x})
    free, torsion = L.invariants()
    d = smith_normal_form(A)
    assert free == len(A[0]) - len(d)
    assert torsion == [x for x in d if x > 1]


@given(matrices(4, 4, -4, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_lattice_membership(A, coeffs):
    n = len(A[0])
    L = IntegerLattice(n)
    for row in A:
        L.add({j: x for j, x in enumerate(row) if x})
    combo = {}
    for k, row in zip(coeffs, A):
        for j, x in enumerate(row):
            combo[j] = combo.get(j, 0) + k * x
    assert not L.normal_form({j: x for j, x in combo.items() if x})


def gf2_matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def span_size(rows):
    n = len(rows[0])
    seen = set()
    for coeffs in itertools.product((0, 1), repeat=len(rows)):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % 2 for j in range(n))
        seen.add(v)
    return len(seen)


def test_gf2_examples():
    assert gf2_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert gf2_rank([[1, 1], [1, 1]]) == 1
    assert gf2_solve([[1, 0], [0, 0]], [1, 1]) is None
    with pytest.raises(ValueError):
        gf2_solve([[1, 0], [0, 1]], [1])


@given(gf2_matrices())
def test_gf2_rank_brute_force(A):
    assert 2 ** gf2_rank(A) == span_size(A)


@given(gf2_matrices())
def test_gf2_rank_nullity(A):
    null = gf2_nullspace(A)
    assert gf2_rank(A) + len(null) == len(A[0])
    for v in null:
        assert all(sum(a * x for a, x in zip(row, v)) % 2 == 0 for row in A)
    if null:
        assert gf2_rank(null) == len(null)


@given(gf2_matrices(), st.data())
def test_gf2_solve(A, data):
    x = data.draw(st.lists(st.integers(0, 1), min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * y for a, y in zip(row, x)) % 2 for row in A]
    sol = gf2_solve(A, b)
    assert sol is not None
    assert [sum(a * y for a, y in zip(row, sol)) % 2 for row in A] == b


def test_gf2_matrix_roundtrip():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert GF2Matrix(rows, 3).to_lists() == rows
