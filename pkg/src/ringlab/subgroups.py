"""Additive subgroups of a ring, in canonical form.

Two flavours behind one interface:

* ``TableSubgroup``: a finite additively-closed subset of a table ring,
  stored as a sorted index tuple.
* ``Subspace``: a linear subspace of a structure algebra, stored as a
  reduced row echelon basis (unique per subspace, so equality and hashing
  are representation equality).

Span arithmetic (products of spanning sets followed by additive closure) is
the engine behind every invariance and associativity predicate; spanning
sets suffice because ring multiplication distributes (is bilinear).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import InfiniteScalarField, RingMismatch, TooLarge
from .rings import Element, StructureAlgebra, TableRing


class AddSubgroup:
    ring = None

    def contains(self, elt) -> bool:
        raise NotImplementedError

    def spanning(self):
        """Additive generators, as Elements."""
        raise NotImplementedError

    def elements(self, cap=1 << 20):
        raise NotImplementedError

    def join(self, other):
        raise NotImplementedError

    def intersect(self, other):
        raise NotImplementedError

    def is_zero(self) -> bool:
        raise NotImplementedError

    def is_full(self) -> bool:
        raise NotImplementedError

    def key(self):
        """Canonical hashable form."""
        raise NotImplementedError

    def measure(self):
        """Size (table) or dimension (subspace)."""
        raise NotImplementedError

    def contains_subgroup(self, other) -> bool:
        return all(self.contains(x) for x in other.spanning())

    def __eq__(self, other):
        return (type(other) is type(self) and other.ring is self.ring
                and other.key() == self.key())

    def __hash__(self):
        return hash((id(self.ring), self.key()))


class TableSubgroup(AddSubgroup):
    def __init__(self, ring: TableRing, members):
        self.ring = ring
        self.members = frozenset(int(m) for m in members)

    def contains(self, elt):
        return elt.data in self.members

    def spanning(self):
        return [self.ring.element(i) for i in sorted(self.members)]

    def elements(self, cap=1 << 20):
        return self.spanning()

    def join(self, other):
        return additive_span(self.ring,
                             self.spanning() + other.spanning())

    def intersect(self, other):
        return TableSubgroup(self.ring, self.members & other.members)

    def is_zero(self):
        return self.members == {self.ring.zero_index}

    def is_full(self):
        return len(self.members) == self.ring.n

    def key(self):
        return tuple(sorted(self.members))

    def measure(self):
        return len(self.members)

    def __repr__(self):
        return f"TableSubgroup({sorted(self.members)})"


class Subspace(AddSubgroup):
    def __init__(self, ring: StructureAlgebra, rows, pivots):
        self.ring = ring
        if ring.modulus is not None:
            self.rows = np.asarray(rows, dtype=np.int64).reshape(-1, ring.dim)
        else:
            self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.pivots)

    def contains(self, elt):
        if elt.ring is not self.ring:
            raise RingMismatch("element of a different ring")
        return self.contains_coords(elt.data)

    def contains_coords(self, coords):
        if self.ring.modulus is not None:
            return linalg.member_modp(np.array(coords, dtype=np.int64),
                                      self.rows, self.pivots, self.ring.modulus)
        return linalg.member_frac(coords, self.rows, self.pivots)

    def coordinates(self, elt):
        """Coefficients of ``elt`` on this rref basis (must be a member)."""
        if self.ring.modulus is not None:
            if not self.contains(elt):
                raise RingMismatch("element outside subspace")
            v = np.array(elt.data, dtype=np.int64)
            return tuple(int(v[c]) for c in self.pivots)
        if not self.contains(elt):
            raise RingMismatch("element outside subspace")
        return tuple(elt.data[c] for c in self.pivots)

    def spanning(self):
        if self.ring.modulus is not None:
            return [Element(self.ring, tuple(int(x) for x in row)) for row in self.rows]
        return [Element(self.ring, row) for row in self.rows]

    def elements(self, cap=1 << 20):
        if self.ring.modulus is None:
            raise InfiniteScalarField("cannot enumerate a Q-subspace")
        p = self.ring.modulus
        r = self.dim
        if p ** r > cap:
            raise TooLarge(f"{p ** r} elements exceeds cap {cap}")
        out = []
        rows = self.rows
        for coeffs in itertools.product(range(p), repeat=r):
            v = np.zeros(self.ring.dim, dtype=np.int64)
            for c, row in zip(coeffs, rows):
                if c:
                    v = (v + c * row) % p
            out.append(Element(self.ring, tuple(int(x) for x in v)))
        return out

    def join(self, other):
        if self.ring.modulus is not None:
            rows, pivots, _ = linalg.merge_modp(self.rows, self.pivots,
                                                other.rows, self.ring.modulus)
            return Subspace(self.ring, rows, pivots)
        rows, pivots, _ = linalg.merge_frac(self.rows, self.pivots, other.rows)
        return Subspace(self.ring, rows, pivots)

    def intersect(self, other):
        # Zassenhaus: rref of [[U U],[W 0]]; rows with zero left half carry
        # the intersection in their right half.
        d = self.ring.dim
        if self.ring.modulus is not None:
            p = self.ring.modulus
            U = self.rows
            W = other.rows
            top = np.hstack([U, U]) if U.size else np.zeros((0, 2 * d), dtype=np.int64)
            bot = np.hstack([W, np.zeros_like(W)]) if W.size else np.zeros((0, 2 * d), dtype=np.int64)
            R, _ = linalg.rref_modp(np.vstack([top, bot]), p)
            inter = [row[d:] for row in R if not row[:d].any()]
            rows, pivots = linalg.rref_modp(np.array(inter, dtype=np.int64) if inter
                                            else np.zeros((0, d), dtype=np.int64), p)
            return Subspace(self.ring, rows, pivots)
        top = [list(r) + list(r) for r in self.rows]
        bot = [list(r) + [Fraction(0)] * d for r in other.rows]
        R, _ = linalg.rref_frac(top + bot, width=2 * d)
        inter = [row[d:] for row in R if all(x == 0 for x in row[:d])]
        rows, pivots = linalg.rref_frac(inter, width=d)
        return Subspace(self.ring, rows, pivots)

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ring.dim

    def key(self):
        if self.ring.modulus is not None:
            return (self.pivots, self.rows.tobytes())
        return (self.pivots, self.rows)

    def measure(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ring.dim})"


# ---------------------------------------------------------------------------
# constructors and span arithmetic
# ---------------------------------------------------------------------------

def zero_subgroup(ring):
    if ring.is_table:
        return TableSubgroup(ring, {ring.zero_index})
    return subspace_from_vectors(ring, [])


def full_subgroup(ring):
    if ring.is_table:
        return TableSubgroup(ring, range(ring.n))
    return subspace_from_vectors(ring, [b.data for b in ring.spanning_elements()])


def subspace_from_vectors(ring: StructureAlgebra, vectors):
    if ring.modulus is not None:
        if isinstance(vectors, np.ndarray):
            mat = vectors.reshape(-1, ring.dim)
        elif len(vectors):
            mat = np.array([list(v) for v in vectors], dtype=np.int64)
        else:
            mat = np.zeros((0, ring.dim), dtype=np.int64)
        rows, pivots = linalg.rref_modp(mat, ring.modulus)
    else:
        rows, pivots = linalg.rref_frac([list(v) for v in vectors], width=ring.dim)
    return Subspace(ring, rows, pivots)


def additive_span(ring, elements) -> AddSubgroup:
    """Smallest additive subgroup containing the given elements."""
    if ring.is_algebra:
        return subspace_from_vectors(ring, [e.data for e in elements])
    return _table_additive_closure(ring, [e.data for e in elements])


def _table_additive_closure(ring, indices):
    # close the index set under addition; negation follows in a finite group
    add = ring.add_table
    current = {ring.zero_index} | {int(i) for i in indices}
    frontier = np.array(sorted(current), dtype=np.int64)
    while True:
        idx = np.array(sorted(current), dtype=np.int64)
        sums = np.unique(add[np.ix_(frontier, idx)])
        fresh = [s for s in sums.tolist() if s not in current]
        if not fresh:
            break
        current.update(fresh)
        frontier = np.array(fresh, dtype=np.int64)
    return TableSubgroup(ring, current)


def product_span(ring, left, right) -> AddSubgroup:
    """Additive span of pairwise products of two spanning sets.

    ``left``/``right`` may be AddSubgroups or element lists; distributivity
    makes the result the full set-product span XY.
    """
    if ring.is_table:
        xi = (sorted(left.members) if isinstance(left, TableSubgroup)
              else [e.data for e in left])
        yi = (sorted(right.members) if isinstance(right, TableSubgroup)
              else [e.data for e in right])
        if not xi or not yi:
            return zero_subgroup(ring)
        prods = np.unique(ring.mul_table[np.ix_(xi, yi)])
        return _table_additive_closure(ring, prods.tolist())
    xs = left.spanning() if isinstance(left, AddSubgroup) else list(left)
    ys = right.spanning() if isinstance(right, AddSubgroup) else list(right)
    if ring.modulus is not None:
        if not xs or not ys:
            return zero_subgroup(ring)
        X = np.array([e.data for e in xs], dtype=np.int64)
        Y = np.array([e.data for e in ys], dtype=np.int64)
        T = np.tensordot(X, ring.constants, axes=(1, 0))       # (m, j, k)
        P = np.einsum("mjk,nj->mnk", T, Y) % ring.modulus      # (m, n, k)
        return subspace_from_vectors(ring, P.reshape(-1, ring.dim))
    prods = [x * y for x in xs for y in ys]
    return additive_span(ring, prods)


def triple_product_span(ring, X, Y, Z) -> AddSubgroup:
    """Span of x(yz) and (x'y')z' combined, the two-sided reading of XYZ."""
    a = product_span(ring, X, product_span(ring, Y, Z))
    b = product_span(ring, product_span(ring, X, Y), Z)
    return a.join(b)
