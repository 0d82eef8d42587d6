from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from sympy import ZZ as SZZ
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

from bredon.linalg import hermite_rows, nullspace, rank, rref, smith_normal_form, solve
from bredon.rings import GF, QQ, ZZ


def int_matrices(max_side=5, bound=12):
    return st.integers(0, max_side).flatmap(
        lambda m: st.integers(0, max_side).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m)
            .map(lambda rows, n=n: (rows, n))))


def as_array(rows, n):
    return ZZ.matrix(rows, (len(rows), n))


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).invariants == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    snf = smith_normal_form(np.identity(4, dtype=object).astype(int).tolist())
    assert snf.invariants == (1, 1, 1, 1)


@given(int_matrices())
def test_snf_agrees_with_sympy(data):
    rows, n = data
    snf = smith_normal_form(as_array(rows, n), transforms=True)
    m = len(rows)
    if m and n:
        expected = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=SZZ) if d != 0]
    else:
        expected = []
    assert [abs(d) for d in snf.invariants] == expected
    assert snf.rank == len(expected)
    for a, b in zip(snf.invariants, snf.invariants[1:]):
        assert b % a == 0
    if m and n:
        D = ZZ.matmul(ZZ.matmul(snf.U, as_array(rows, n)), snf.V)
        for i in range(m):
            for j in range(n):
                want = snf.invariants[i] if i == j and i < len(snf.invariants) else 0
                assert abs(D[i, j]) == abs(want)


def test_snf_large_entries():
    a = [[10**30, 3], [7, 10**25]]
    snf = smith_normal_form(a)
    det = abs(10**55 - 21)
    assert snf.invariants[0] * snf.invariants[1] == det


@given(int_matrices(4, 6))
def test_nullspace_over_z(data):
    rows, n = data
    A = as_array(rows, n)
    N = nullspace(A, ZZ)
    assert N.shape[1] == n - rank(A, ZZ)
    if N.size and len(rows):
        assert not np.any(ZZ.matmul(A, N))


@given(int_matrices(4, 6), st.sampled_from([QQ, GF(2), GF(5)]))
def test_nullspace_and_rank_over_fields(data, R):
    rows, n = data
    A = R.reduce(as_array(rows, n).astype(object)) if R.kind == "Fp" else as_array(rows, n)
    A = R.matrix(A.tolist(), (len(rows), n))
    N = nullspace(A, R)
    assert N.shape[1] == n - rank(A, R)
    if N.size and len(rows):
        assert all(x == 0 for x in R.matmul(A, N).flat)


@given(int_matrices(4, 5), st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_solve_over_z(data, coeffs):
    rows, n = data
    if not rows or not n:
        return
    A = as_array(rows, n)
    x = coeffs[:n]
    b = tuple(ZZ.apply(A, tuple(x)))
    sol = solve(A, b, ZZ)
    assert sol is not None
    assert tuple(ZZ.apply(A, sol)) == b


def test_solve_detects_no_integer_solution():
    assert solve(ZZ.matrix([[2]]), (1,), ZZ) is None
    assert solve(QQ.matrix([[2]]), (1,), QQ) == (Fraction(1, 2),)


def test_rref_and_hermite():
    rows, pivots = rref(QQ.matrix([[2, 4], [1, 2]]), QQ)
    assert pivots == [0]
    assert rows[0] == [1, 2]
    H = hermite_rows(ZZ.matrix([[2, 4], [1, 3]]))
    assert H.shape[0] == 2
