"""Exact linear algebra over F_p (numpy, vectorized) and Q (Fractions).

Subspaces are always kept in reduced row echelon form, which is a canonical
representation: two subspaces are equal iff their rref bases are identical.
All routines are pure; nothing mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


# ---------------------------------------------------------------------------
# mod-p path (p prime), matrices are 2-D int64 arrays with entries in [0, p)
# ---------------------------------------------------------------------------

def rref_modp(mat, p):
    """Reduced row echelon form over F_p.  Returns (basis, pivots)."""
    A = (np.array(mat, dtype=np.int64) % p).reshape(-1, np.shape(mat)[-1]) if np.size(mat) else np.zeros((0, np.shape(mat)[-1]), dtype=np.int64)
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        rows = np.nonzero(A[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].copy(), tuple(pivots)


def reduce_rows_modp(rows, basis, pivots, p):
    """Eliminate ``rows`` against an rref ``basis``; returns the remainders."""
    R = np.array(rows, dtype=np.int64).reshape(-1, basis.shape[1] if basis.size else np.shape(rows)[-1]) % p
    for ri, c in enumerate(pivots):
        coef = R[:, c]
        nz = np.nonzero(coef)[0]
        if nz.size:
            R[nz] = (R[nz] - np.outer(coef[nz], basis[ri])) % p
    return R


def member_modp(vec, basis, pivots, p):
    rem = reduce_rows_modp(np.asarray(vec, dtype=np.int64).reshape(1, -1), basis, pivots, p)
    return not rem.any()


def merge_modp(basis, pivots, newrows, p):
    """Adjoin rows to an rref basis.  Returns (basis, pivots, grew)."""
    rem = reduce_rows_modp(newrows, basis, pivots, p)
    rem = rem[np.any(rem != 0, axis=1)]
    if rem.shape[0] == 0:
        return basis, pivots, False
    stacked = np.vstack([basis, rem]) if basis.size else rem
    nb, npiv = rref_modp(stacked, p)
    return nb, npiv, True


def kernel_modp(A, p):
    """Right kernel {x : A x = 0} over F_p, returned as rref rows."""
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[1]
    R, pivots = rref_modp(A, p)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    rows = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for ri, c in enumerate(pivots):
            v[c] = (-int(R[ri, f])) % p
        rows.append(v)
    if not rows:
        return np.zeros((0, n), dtype=np.int64), ()
    return rref_modp(np.array(rows), p)


# ---------------------------------------------------------------------------
# rational path, rows are tuples of Fractions
# ---------------------------------------------------------------------------

def _frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref_frac(rows, width=None):
    """Reduced row echelon form over Q.  Returns (rows tuple, pivots)."""
    A = _frac_rows(rows)
    if not A:
        return (), ()
    n = width if width is not None else len(A[0])
    m = len(A)
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        sel = None
        for i in range(r, m):
            if A[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in A[:r]), tuple(pivots)


def reduce_row_frac(vec, basis, pivots):
    v = [Fraction(x) for x in vec]
    for ri, c in enumerate(pivots):
        if v[c] != 0:
            f = v[c]
            row = basis[ri]
            v = [x - f * y for x, y in zip(v, row)]
    return v


def member_frac(vec, basis, pivots):
    return all(x == 0 for x in reduce_row_frac(vec, basis, pivots))


def merge_frac(basis, pivots, newrows):
    fresh = []
    b, pv = list(basis), list(pivots)
    grew = False
    for row in newrows:
        rem = reduce_row_frac(row, b, pv)
        if any(x != 0 for x in rem):
            fresh.append(rem)
            grew = True
    if not grew:
        return tuple(basis), tuple(pivots), False
    nb, npiv = rref_frac(list(basis) + fresh)
    return nb, npiv, True


def kernel_frac(rows, n):
    """Right kernel {x : A x = 0} over Q for the matrix with the given rows."""
    R, pivots = rref_frac(rows, width=n)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for ri, c in enumerate(pivots):
            v[c] = -R[ri][f]
        out.append(v)
    return rref_frac(out, width=n)[0] if out else ()
