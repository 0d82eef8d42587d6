"""Exact linear algebra over Z, Q and F_p.

Matrices come in as anything ``numpy.asarray`` accepts; arithmetic is done
on Python integers / fractions so there is never any overflow.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .rings import ZZ, Ring


def _rows(a) -> list[list]:
    arr = np.asarray(a, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    return [list(r) for r in arr]


def _shape(a) -> tuple[int, int]:
    return np.asarray(a, dtype=object).shape


class SmithForm(NamedTuple):
    invariants: tuple[int, ...]  # nonzero diagonal entries, d1 | d2 | ...
    rank: int
    U: np.ndarray | None  # U @ A @ V == diag
    V: np.ndarray | None


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a, transforms: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    Returns the nonzero invariant factors in divisibility order and the rank.
    With ``transforms=True`` also returns unimodular ``U``, ``V`` such that
    ``U @ a @ V`` is the diagonal form.
    """
    m, n = _shape(a)
    A = [[int(x) for x in row] for row in _rows(a)] if m and n else [[0] * n for _ in range(m)]
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        if V is not None:
            for row in V:
                row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(i, t)
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(j, t)
                        clean = False
            if not clean:
                continue
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1

    invariants = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    if not transforms:
        return SmithForm(invariants, len(invariants), None, None)
    return SmithForm(
        invariants,
        len(invariants),
        np.array(U, dtype=object).reshape(m, m),
        np.array(V, dtype=object).reshape(n, n),
    )


def rref(a, ring: Ring) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    if not ring.is_field:
        raise ValueError("rref needs a field")
    m, n = _shape(a)
    A = [[ring(x) for x in row] for row in _rows(a)] if m and n else [[ring(0)] * n for _ in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = ring.inverse(A[r][c])
        A[r] = [ring(x * inv) for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [ring(x - f * y) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(a, ring: Ring = ZZ) -> int:
    m, n = _shape(a)
    if m == 0 or n == 0:
        return 0
    if ring.kind == "Z":
        return smith_normal_form(a).rank
    return len(rref(a, ring)[1])


def hermite_rows(a) -> np.ndarray:
    """Row-style Hermite normal form of an integer matrix, zero rows dropped."""
    m, n = _shape(a)
    A = [[int(x) for x in row] for row in _rows(a)] if m and n else []
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
            if not any(A[i][c] for i in range(r + 1, m)):
                break
        if r >= m or A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    rows = [row for row in A[:r] if any(row)]
    return np.array(rows, dtype=object).reshape(len(rows), n)


def nullspace(a, ring: Ring = ZZ) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as the columns of an ``n x d`` matrix.

    Over Z the basis is a Z-basis of the (saturated) kernel lattice in
    Hermite normal form, so the result is canonical.
    """
    m, n = _shape(a)
    if n == 0:
        return np.zeros((0, 0), dtype=object)
    if m == 0:
        return ring.identity(n)
    if ring.kind == "Z":
        snf = smith_normal_form(a, transforms=True)
        basis = hermite_rows(snf.V[:, snf.rank:].T)
        return np.array(basis, dtype=object).reshape(basis.shape[0], n).T
    R, pivots = rref(a, ring)
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for f in free:
        v = [ring(0)] * n
        v[f] = ring(1)
        for row, pc in zip(R, pivots):
            v[pc] = ring(-row[f])
        vecs.append(v)
    return np.array(vecs, dtype=object).reshape(len(vecs), n).T


def solve(a, b, ring: Ring = ZZ):
    """A solution ``x`` of ``a x = b`` over the ring, or ``None``."""
    m, n = _shape(a)
    b = [ring(x) for x in b]
    if len(b) != m:
        raise ValueError("dimension mismatch")
    if n == 0:
        return () if all(x == 0 for x in b) else None
    if ring.kind == "Z":
        snf = smith_normal_form(a, transforms=True)
        ub = [sum(int(u) * x for u, x in zip(row, b)) for row in snf.U]
        y = [0] * n
        for i, d in enumerate(snf.invariants):
            if ub[i] % d:
                return None
            y[i] = ub[i] // d
        if any(ub[snf.rank:]):
            return None
        return tuple(sum(int(v) * yy for v, yy in zip(row, y)) for row in snf.V)
    aug = [list(row) + [x] for row, x in zip(_rows(a), b)] if m else []
    if m == 0:
        return tuple(ring(0) for _ in range(n))
    R, pivots = rref(aug, ring)
    if n in pivots:
        return None
    x = [ring(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)
