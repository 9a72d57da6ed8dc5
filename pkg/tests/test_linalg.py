from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import linalg


def _matrices(p, rows=3, cols=4):
    return st.lists(
        st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
        min_size=1, max_size=rows)


@given(_matrices(5))
@settings(max_examples=60, deadline=None)
def test_rref_modp_idempotent_and_canonical(rows):
    p = 5
    A = np.array(rows, dtype=np.int64)
    R, piv = linalg.rref_modp(A, p)
    R2, piv2 = linalg.rref_modp(R, p)
    assert np.array_equal(R, R2) and piv == piv2
    # pivot columns carry unit vectors
    for ri, c in enumerate(piv):
        col = R[:, c]
        assert col[ri] == 1 and np.count_nonzero(col) == 1
    # row space is preserved: every original row reduces to zero
    rem = linalg.reduce_rows_modp(A, R, piv, p)
    assert not rem.any()


@given(_matrices(3))
@settings(max_examples=60, deadline=None)
def test_kernel_modp(rows):
    p = 3
    A = np.array(rows, dtype=np.int64)
    K, _ = linalg.kernel_modp(A, p)
    assert K.shape[0] == A.shape[1] - len(linalg.rref_modp(A, p)[1])
    for v in K:
        assert not ((A @ v) % p).any()


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_rref_frac_membership(rows):
    R, piv = linalg.rref_frac(rows)
    for row in rows:
        assert linalg.member_frac(row, R, piv)
    for ri, c in enumerate(piv):
        assert R[ri][c] == 1


def test_merge_frac_grows_only_when_new():
    basis, piv = linalg.rref_frac([[1, 0, 0]])
    b2, p2, grew = linalg.merge_frac(basis, piv, [[2, 0, 0]])
    assert not grew
    b3, p3, grew = linalg.merge_frac(basis, piv, [[0, 1, 0]])
    assert grew and len(b3) == 2


def test_kernel_frac():
    rows = [[1, 2, 3], [2, 4, 6]]
    K = linalg.kernel_frac(rows, 3)
    assert len(K) == 2
    for v in K:
        assert sum(Fraction(a) * x for a, x in zip(rows[0], v)) == 0
