"""Finite rings and finite-dimensional algebras with exact arithmetic.

Two representations:

* ``TableRing``: a finite ring given by addition and multiplication tables
  on element indices.  Construction validates, exhaustively, that addition
  is an abelian group and that multiplication distributes on both sides.
  Nothing else is assumed: multiplication may be nonassociative and the
  ring may lack a unit.

* ``StructureAlgebra``: a finite-dimensional algebra over Q or F_p given by
  structure constants c[i][j][k] (basis_i · basis_j = sum_k c[i][j][k]
  basis_k).  Bilinearity makes distributivity automatic; any constants give
  a valid algebra.

Rings and elements are immutable after construction and safe to share;
property probes cache their (idempotent) results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (DistributivityViolation, InfiniteScalarField,
                     NotAbelianGroup, RingMismatch, ShapeMismatch, TooLarge)
from .scalars import GF, IntegersMod, Rationals

DEFAULT_ELEMENT_CAP = 2 ** 20
TABLE_SIZE_CAP = 4096


class Element:
    """An element of a ring: an index (TableRing) or a coordinate tuple."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    def _check(self, other):
        if not isinstance(other, Element) or other.ring is not self.ring:
            raise RingMismatch("elements belong to different rings")

    def __add__(self, other):
        self._check(other)
        return self.ring.add(self, other)

    def __sub__(self, other):
        self._check(other)
        return self.ring.add(self, self.ring.neg(other))

    def __mul__(self, other):
        self._check(other)
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __eq__(self, other):
        return (isinstance(other, Element) and other.ring is self.ring
                and other.data == self.data)

    def __hash__(self):
        return hash((id(self.ring), self.data))

    def is_zero(self):
        return self == self.ring.zero()

    def __repr__(self):
        return f"Element({self.data!r})"


def ring_eval(a: Element, b: Element, op: str) -> Element:
    """Evaluate add/mul/neg on elements of one ring (neg ignores ``b``)."""
    if op == "neg":
        return -a
    if not isinstance(b, Element) or b.ring is not a.ring:
        raise RingMismatch("elements belong to different rings")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


@dataclass
class PropertyReport:
    associative: bool
    associative_witness: tuple | None
    commutative: bool
    commutative_witness: tuple | None
    unital: bool
    unit: Element | None
    size: int | None

    def summary(self):
        return {
            "associative": self.associative,
            "commutative": self.commutative,
            "unital": self.unital,
            "size": self.size,
        }


class Ring:
    is_table = False
    is_algebra = False

    def __init__(self):
        self._props = None

    # -- arithmetic ---------------------------------------------------
    def zero(self) -> Element:
        raise NotImplementedError

    def add(self, a, b) -> Element:
        raise NotImplementedError

    def neg(self, a) -> Element:
        raise NotImplementedError

    def mul(self, a, b) -> Element:
        raise NotImplementedError

    # -- structure ----------------------------------------------------
    def size(self):
        """Number of elements, or None when infinite."""
        raise NotImplementedError

    def spanning_elements(self):
        """A finite additive spanning set (basis, or every element)."""
        raise NotImplementedError

    def enumerate_elements(self, cap=DEFAULT_ELEMENT_CAP):
        raise NotImplementedError

    def probe_properties(self) -> PropertyReport:
        if self._props is None:
            self._props = self._probe()
        return self._props

    def _probe(self) -> PropertyReport:
        raise NotImplementedError

    def opposite(self):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# table-backed rings
# ---------------------------------------------------------------------------

class TableRing(Ring):
    """Finite ring on indices 0..n-1 with explicit operation tables."""

    is_table = True

    def __init__(self, add_table, mul_table, zero_index, _validated=False):
        super().__init__()
        self.add_table = np.ascontiguousarray(add_table, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=np.int32)
        self.n = self.add_table.shape[0]
        self.zero_index = int(zero_index)
        if not _validated:
            _validate_tables(self.add_table, self.mul_table, self.zero_index)
        self.neg_table = np.argmin(
            np.abs(self.add_table - self.zero_index), axis=1
        ).astype(np.int32)
        # argmin trick only valid because each row contains zero exactly once
        self._props = None

    def element(self, idx) -> Element:
        idx = int(idx)
        if not 0 <= idx < self.n:
            raise ShapeMismatch(f"index {idx} out of range for ring of size {self.n}")
        return Element(self, idx)

    def zero(self):
        return Element(self, self.zero_index)

    def add(self, a, b):
        return Element(self, int(self.add_table[a.data, b.data]))

    def neg(self, a):
        return Element(self, int(self.neg_table[a.data]))

    def mul(self, a, b):
        return Element(self, int(self.mul_table[a.data, b.data]))

    def size(self):
        return self.n

    def spanning_elements(self):
        return [Element(self, i) for i in range(self.n)]

    def enumerate_elements(self, cap=DEFAULT_ELEMENT_CAP):
        if self.n > cap:
            raise TooLarge(f"{self.n} elements exceeds cap {cap}")
        order = [self.zero_index] + [i for i in range(self.n) if i != self.zero_index]
        return [Element(self, i) for i in order]

    def _probe(self):
        n, add, mul = self.n, self.add_table, self.mul_table
        assoc, assoc_wit = True, None
        for a in range(n):
            left = mul[mul[a], :]          # (a b) c
            right = mul[a][mul]            # a (b c)
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                assoc, assoc_wit = False, (self.element(a), self.element(int(b)), self.element(int(c)))
                break
        comm = bool(np.array_equal(mul, mul.T))
        comm_wit = None
        if not comm:
            i, j = np.argwhere(mul != mul.T)[0]
            comm_wit = (self.element(int(i)), self.element(int(j)))
        ident = np.arange(n)
        unital, unit = False, None
        for e in range(n):
            if np.array_equal(mul[e], ident) and np.array_equal(mul[:, e], ident):
                unital, unit = True, self.element(e)
                break
        return PropertyReport(assoc, assoc_wit, comm, comm_wit, unital, unit, n)

    def opposite(self):
        return TableRing(self.add_table, self.mul_table.T.copy(), self.zero_index,
                         _validated=True)


def _validate_tables(add, mul, zero):
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise ShapeMismatch("tables must be square and of equal size")
    if n > TABLE_SIZE_CAP:
        raise TooLarge(f"table ring size {n} exceeds cap {TABLE_SIZE_CAP}")
    for t, name in ((add, "addition"), (mul, "multiplication")):
        if t.min() < 0 or t.max() >= n:
            raise ShapeMismatch(f"{name} table entry out of range")
    if not 0 <= zero < n:
        raise ShapeMismatch("zero index out of range")
    ident = np.arange(n)
    if not np.array_equal(add, add.T):
        i, j = np.argwhere(add != add.T)[0]
        raise NotAbelianGroup("addition not commutative", (int(i), int(j)))
    if not np.array_equal(add[zero], ident):
        raise NotAbelianGroup("designated zero is not neutral", zero)
    # every row must reach zero (inverses) and be a permutation
    for a in range(n):
        row = add[a]
        if len(np.unique(row)) != n:
            raise NotAbelianGroup("addition row is not a permutation", a)
    for a in range(n):
        if not np.array_equal(add[add[a], :], add[a][add]):
            bc = np.argwhere(add[add[a], :] != add[a][add])[0]
            raise NotAbelianGroup("addition not associative", (a, int(bc[0]), int(bc[1])))
    for a in range(n):
        row = mul[a]
        left = row[add]                      # a (b + c)
        right = add[row[:, None], row[None, :]]  # a b + a c
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            raise DistributivityViolation((a, int(b), int(c)))
    for c in range(n):
        col = mul[:, c]
        left = col[add]                      # (a + b) c
        right = add[col[:, None], col[None, :]]
        if not np.array_equal(left, right):
            a, b = np.argwhere(left != right)[0]
            raise DistributivityViolation((int(a), int(b), c))


def make_table_ring(add, mul, zero=0) -> TableRing:
    """Build and validate a finite ring from operation tables."""
    return TableRing(add, mul, zero)


def zmod_ring(n: int) -> TableRing:
    """Z_n as a table ring."""
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return TableRing(add, mul, 0, _validated=True)


# ---------------------------------------------------------------------------
# structure-constant algebras
# ---------------------------------------------------------------------------

class StructureAlgebra(Ring):
    """Finite-dimensional algebra over Q or F_p given by structure constants."""

    is_algebra = True

    def __init__(self, field, dim, constants):
        super().__init__()
        if isinstance(field, IntegersMod) and not field.is_field:
            raise ShapeMismatch("structure algebras need a field (Q or F_p)")
        self.field = field
        self.dim = int(dim)
        if self.dim < 1:
            raise ShapeMismatch("dimension must be positive")
        self.modulus = None if isinstance(field, Rationals) else field.n
        if self.modulus is not None:
            C = np.array(constants, dtype=np.int64)
            if C.shape != (self.dim, self.dim, self.dim):
                raise ShapeMismatch(f"constants must have shape {(self.dim,)*3}")
            self.constants = C % self.modulus
        else:
            rows = list(constants)
            if len(rows) != self.dim:
                raise ShapeMismatch("constants must be d x d x d")
            C = []
            for plane in rows:
                plane = list(plane)
                if len(plane) != self.dim:
                    raise ShapeMismatch("constants must be d x d x d")
                C.append(tuple(
                    tuple(Fraction(x) for x in _checked_len(vec, self.dim))
                    for vec in plane))
            self.constants = tuple(C)
        # sparse product table: (i, j) -> [(k, coeff), ...]
        self._pairs = self._build_pairs()
        self._props = None

    def _build_pairs(self):
        pairs = {}
        d = self.dim
        if self.modulus is not None:
            nz = np.argwhere(self.constants != 0)
            for i, j, k in nz:
                pairs.setdefault((int(i), int(j)), []).append((int(k), int(self.constants[i, j, k])))
        else:
            for i in range(d):
                for j in range(d):
                    lst = [(k, c) for k, c in enumerate(self.constants[i][j]) if c != 0]
                    if lst:
                        pairs[(i, j)] = lst
        return pairs

    # -- elements -----------------------------------------------------
    def element(self, coords) -> Element:
        coords = tuple(self.field.coerce(x) for x in coords)
        if len(coords) != self.dim:
            raise ShapeMismatch(f"expected {self.dim} coordinates")
        return Element(self, coords)

    def basis_element(self, i) -> Element:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return Element(self, tuple(coords))

    def zero(self):
        return Element(self, (self.field.zero,) * self.dim)

    def add(self, a, b):
        f = self.field
        return Element(self, tuple(f.add(x, y) for x, y in zip(a.data, b.data)))

    def neg(self, a):
        f = self.field
        return Element(self, tuple(f.neg(x) for x in a.data))

    def mul(self, a, b):
        return Element(self, self.mul_coords(a.data, b.data))

    def mul_coords(self, x, y):
        """Bilinear extension of the structure constants on coordinate tuples."""
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                lst = self._pairs.get((i, j))
                if not lst:
                    continue
                s = f.mul(xi, yj)
                for k, c in lst:
                    out[k] = f.add(out[k], f.mul(s, c))
        return tuple(out)

    def scalar_mul(self, s, a):
        f = self.field
        s = f.coerce(s)
        return Element(self, tuple(f.mul(s, x) for x in a.data))

    # -- structure ----------------------------------------------------
    def size(self):
        return None if self.modulus is None else self.modulus ** self.dim

    def spanning_elements(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def enumerate_elements(self, cap=DEFAULT_ELEMENT_CAP):
        if self.modulus is None:
            raise InfiniteScalarField("cannot enumerate an algebra over Q")
        total = self.modulus ** self.dim
        if total > cap:
            raise TooLarge(f"{total} elements exceeds cap {cap}")
        out = []
        for coords in itertools.product(range(self.modulus), repeat=self.dim):
            out.append(Element(self, coords))
        return out

    def _probe(self):
        assoc, assoc_wit = self._probe_associative()
        comm, comm_wit = self._probe_commutative()
        unit = self.find_unit()
        return PropertyReport(assoc, assoc_wit, comm, comm_wit,
                              unit is not None, unit, self.size())

    def _probe_associative(self):
        # basis triples suffice by trilinearity
        d = self.dim
        if self.modulus is not None:
            C = self.constants
            p = self.modulus
            left = np.einsum("ijm,mkl->ijkl", C, C) % p
            right = np.einsum("jkm,iml->ijkl", C, C) % p
            bad = np.argwhere(np.any(left != right, axis=3))
            if bad.size:
                i, j, k = bad[0]
                return False, (self.basis_element(int(i)), self.basis_element(int(j)),
                               self.basis_element(int(k)))
            return True, None
        for i in range(d):
            for j in range(d):
                ij = self._pairs.get((i, j), [])
                for k in range(d):
                    acc = [Fraction(0)] * d
                    for m, c in ij:
                        for l, c2 in self._pairs.get((m, k), []):
                            acc[l] += c * c2
                    for m, c in self._pairs.get((j, k), []):
                        for l, c2 in self._pairs.get((i, m), []):
                            acc[l] -= c * c2
                    if any(x != 0 for x in acc):
                        return False, (self.basis_element(i), self.basis_element(j),
                                       self.basis_element(k))
        return True, None

    def _probe_commutative(self):
        d = self.dim
        if self.modulus is not None:
            bad = np.argwhere(np.any(self.constants != self.constants.transpose(1, 0, 2), axis=2))
            if bad.size:
                i, j = bad[0]
                return False, (self.basis_element(int(i)), self.basis_element(int(j)))
            return True, None
        for i in range(d):
            for j in range(i + 1, d):
                if self.constants[i][j] != self.constants[j][i]:
                    return False, (self.basis_element(i), self.basis_element(j))
        return True, None

    def find_unit(self):
        """Solve e·basis_j = basis_j = basis_j·e for a two-sided unit."""
        from . import linalg
        d = self.dim
        if self.modulus is not None:
            C = self.constants
            p = self.modulus
            rows, rhs = [], []
            for j in range(d):
                for k in range(d):
                    rows.append(C[:, j, k])
                    rhs.append(1 if j == k else 0)
                    rows.append(C[j, :, k])
                    rhs.append(1 if j == k else 0)
            A = np.array(rows, dtype=np.int64) % p
            b = np.array(rhs, dtype=np.int64).reshape(-1, 1)
            aug, pivots = linalg.rref_modp(np.hstack([A, b]), p)
            if d in pivots:
                return None  # inconsistent
            e = np.zeros(d, dtype=np.int64)
            for ri, c in enumerate(pivots):
                e[c] = aug[ri, d]
            return Element(self, tuple(int(x) for x in e))
        rows, rhs = [], []
        for j in range(d):
            for k in range(d):
                rows.append([self.constants[i][j][k] for i in range(d)] + [Fraction(int(j == k))])
                rows.append([self.constants[j][i][k] for i in range(d)] + [Fraction(int(j == k))])
        R, pivots = linalg.rref_frac(rows)
        if d in pivots:
            return None
        e = [Fraction(0)] * d
        for ri, c in enumerate(pivots):
            e[c] = R[ri][d]
        return Element(self, tuple(e))

    def opposite(self):
        if self.modulus is not None:
            return StructureAlgebra(self.field, self.dim,
                                    self.constants.transpose(1, 0, 2).copy())
        flipped = [[self.constants[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return StructureAlgebra(self.field, self.dim, flipped)


def _checked_len(vec, d):
    vec = list(vec)
    if len(vec) != d:
        raise ShapeMismatch("constants must be d x d x d")
    return vec


def make_structure_algebra(dim, field, constants) -> StructureAlgebra:
    """Build a structure-constant algebra; any d x d x d constants are legal."""
    return StructureAlgebra(field, dim, constants)


def probe_properties(ring: Ring) -> PropertyReport:
    return ring.probe_properties()


def opposite(ring: Ring) -> Ring:
    return ring.opposite()


def enumerate_elements(ring: Ring, cap=DEFAULT_ELEMENT_CAP):
    return ring.enumerate_elements(cap)


# ---------------------------------------------------------------------------
# stock algebras used throughout
# ---------------------------------------------------------------------------

def field_algebra(domain) -> StructureAlgebra:
    """The scalar field itself, as a 1-dimensional algebra."""
    one = domain.one
    return StructureAlgebra(domain, 1, [[[one]]])


_IRREDUCIBLE = {
    # q -> coefficients of a monic irreducible polynomial, constant term first
    4: (1, 1),        # t^2 + t + 1 over F_2
    8: (1, 1, 0),     # t^3 + t + 1 over F_2
    9: (1, 0),        # t^2 + 1 over F_3
    27: (1, 2, 0),    # t^3 + 2t + 1 over F_3
    25: (2, 1),       # t^2 + t + 2 over F_5
}


def gf_extension(q: int):
    """GF(q) for prime-power q, as an algebra over its prime field.

    Returns (algebra, frobenius) where frobenius is the matrix of x -> x^p
    on the power basis 1, t, ..., t^(k-1), rows indexed by input basis.
    """
    p = None
    for cand in (2, 3, 5, 7, 11, 13):
        k = 0
        m = q
        while m % cand == 0:
            m //= cand
            k += 1
        if m == 1 and k >= 1:
            p = cand
            break
    if p is None:
        raise ValueError(f"{q} is not a small prime power")
    k = 0
    m = q
    while m > 1:
        m //= p
        k += 1
    dom = GF(p)
    if k == 1:
        alg = field_algebra(dom)
        return alg, np.eye(1, dtype=np.int64)
    if q not in _IRREDUCIBLE:
        raise ValueError(f"no stock irreducible polynomial for GF({q})")
    low = _IRREDUCIBLE[q]  # t^k = -(low[0] + low[1] t + ...)
    red = [(-c) % p for c in low]

    def reduce_poly(coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > k:
            top = coeffs.pop()
            if top:
                for i, c in enumerate(red):
                    coeffs[len(coeffs) - k + i] = (coeffs[len(coeffs) - k + i] + top * c) % p
        return [c % p for c in coeffs] + [0] * (k - len(coeffs))

    C = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod = [0] * (i + j) + [1]
            C[i, j, :] = reduce_poly(prod)
    alg = StructureAlgebra(dom, k, C)
    frob = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        prod = [0] * (i * p) + [1]
        frob[i, :] = reduce_poly(prod)
    return alg, frob


def truncated_polynomial_ring(p: int, k: int) -> StructureAlgebra:
    """F_p[y]/(y^k) on the basis 1, y, ..., y^(k-1)."""
    C = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i + j < k:
                C[i, j, i + j] = 1
    return StructureAlgebra(GF(p), k, C)


def full_matrix_algebra(n: int, domain) -> StructureAlgebra:
    """M_n over a field, on the matrix-unit basis E_11, E_12, ..., E_nn."""
    d = n * n

    def idx(i, j):
        return i * n + j

    if isinstance(domain, Rationals):
        C = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if j == k:
                            C[idx(i, j)][idx(k, l)][idx(i, l)] = Fraction(1)
        return StructureAlgebra(domain, d, C)
    C = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                C[idx(i, j), idx(j, l), idx(i, l)] = 1
    return StructureAlgebra(domain, d, C)


def direct_sum_algebra(factors):
    """Direct product of structure algebras over one field.

    The result remembers the factor slices (``product_factors``) so that
    structural shortcuts (e.g. ideals of a product of fields) stay available.
    """
    field = factors[0].field
    if any(f.field != field for f in factors):
        raise ShapeMismatch("factors must share the scalar field")
    dims = [f.dim for f in factors]
    d = sum(dims)
    offs = np.cumsum([0] + dims)
    if factors[0].modulus is not None:
        C = np.zeros((d, d, d), dtype=np.int64)
        for t, f in enumerate(factors):
            o = offs[t]
            k = f.dim
            C[o:o + k, o:o + k, o:o + k] = f.constants
    else:
        C = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        for t, f in enumerate(factors):
            o = offs[t]
            for i in range(f.dim):
                for j in range(f.dim):
                    for k in range(f.dim):
                        C[o + i][o + j][o + k] = f.constants[i][j][k]
    alg = StructureAlgebra(field, d, C)
    alg.product_factors = tuple((int(offs[t]), f.dim) for t, f in enumerate(factors))
    return alg


def functions_ring(npoints: int, domain) -> StructureAlgebra:
    """Functions from an npoints set to a field, with pointwise operations."""
    return direct_sum_algebra([field_algebra(domain)] * npoints)


def convert_to_table(alg: StructureAlgebra, cap=TABLE_SIZE_CAP) -> TableRing:
    """Materialize an F_p structure algebra as a table ring (never over Q)."""
    if alg.modulus is None:
        raise InfiniteScalarField("conversion to tables is only defined over F_p")
    total = alg.modulus ** alg.dim
    if total > cap:
        raise TooLarge(f"{total} elements exceeds cap {cap}")
    p, d = alg.modulus, alg.dim
    digits = np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)
    weights = np.array([p ** (d - 1 - i) for i in range(d)], dtype=np.int64)

    def to_index(mat):
        return (np.asarray(mat) % p) @ weights

    add = to_index(digits[:, None, :] + digits[None, :, :]).astype(np.int32)
    mul = np.zeros((total, total), dtype=np.int32)
    C = alg.constants
    for a in range(total):
        prods = np.einsum("j,bjk->bk", digits[a], np.einsum("i,ijk->jk", digits[a], C)[None, ...]) if False else None
        # row a: (x_a · x_b)_k = sum_ij x_a[i] x_b[j] C[i,j,k]
        left = np.tensordot(digits[a], C, axes=(0, 0))  # (j, k)
        mul[a] = to_index(digits @ left)
    return TableRing(add, mul, 0, _validated=True)
