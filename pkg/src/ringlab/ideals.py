"""Two-sided ideals, centralizers, invariance predicates and simplicity oracles.

"Ideal" always means two-sided ideal.  Ideals of a subring B of A are kept in
the coordinates of the ambient ring A (``of_subring`` records B); ideals of A
itself have ``of_subring=None``.

The quantifier "for every ideal" is realized by join-closure of principal
ideals: every ideal is the join of the principal ideals of its elements, so
the lattice enumeration is exhaustive on finite (or capped F_p) rings.  Over
Q, positive simplicity claims are never made here; they flow through the
certificate pipelines.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (BNotCommutative, InfiniteScalarField, NotAInvariant,
                     NotIdealAssociative, RingMismatch, TooLarge)
from .rings import (DEFAULT_ELEMENT_CAP, StructureAlgebra,
                    TableRing)
from .subgroups import (AddSubgroup, Subspace, TableSubgroup, additive_span,
                        full_subgroup, product_span, subspace_from_vectors,
                        zero_subgroup)

DEFAULT_WITNESS_SAMPLES = 24
DEFAULT_SEED = 0xC0FFEE


class IdealBasis:
    """A two-sided ideal, canonically presented.

    ``span`` is an additively closed subgroup of ``ring`` that absorbs
    multiplication by every element of ``of_subring`` (or of the whole ring
    when ``of_subring`` is None).
    """

    def __init__(self, ring, span: AddSubgroup, of_subring=None, check=True):
        self.ring = ring
        self.span = span
        self.of_subring = of_subring
        if check:
            amb = of_subring.span if of_subring is not None else full_subgroup(ring)
            left = product_span(ring, amb, span)
            right = product_span(ring, span, amb)
            if not (span.contains_subgroup(left) and span.contains_subgroup(right)):
                raise RingMismatch("span is not an ideal")

    def contains(self, elt):
        return self.span.contains(elt)

    def spanning(self):
        return self.span.spanning()

    def is_zero(self):
        return self.span.is_zero()

    def is_full_in(self, subgroup: AddSubgroup):
        return self.span.contains_subgroup(subgroup) and subgroup.contains_subgroup(self.span)

    def measure(self):
        return self.span.measure()

    def key(self):
        return self.span.key()

    def __eq__(self, other):
        return isinstance(other, IdealBasis) and other.ring is self.ring and other.key() == self.key()

    def __hash__(self):
        return hash((id(self.ring), self.key()))

    def __repr__(self):
        return f"IdealBasis({self.span!r})"


class Subring:
    """An additively and multiplicatively closed subset of a ring."""

    def __init__(self, ring, span: AddSubgroup, gens=None, check=True):
        self.ring = ring
        self.span = span
        self.gens = list(gens) if gens is not None else span.spanning()
        if check:
            prod = product_span(ring, span, span)
            if not span.contains_subgroup(prod):
                raise RingMismatch("span is not multiplicatively closed")
        self._as_ring = None

    def contains(self, elt):
        return self.span.contains(elt)

    def spanning(self):
        return self.span.spanning()

    def measure(self):
        return self.span.measure()

    def is_commutative(self):
        xs = self.spanning()
        for i, a in enumerate(xs):
            for b in xs[i + 1:]:
                if a * b != b * a:
                    return False
        return True

    def as_ring(self):
        """The subring as a standalone Ring plus embed/project maps."""
        if self._as_ring is None:
            self._as_ring = _materialize_subring(self.ring, self.span)
        return self._as_ring

    def __eq__(self, other):
        return isinstance(other, Subring) and other.ring is self.ring and other.span == self.span

    def __hash__(self):
        return hash((id(self.ring), self.span.key()))

    def __repr__(self):
        return f"Subring({self.span!r})"


def subring_closure(ring, gens) -> Subring:
    """Close a generating set under addition and internal multiplication."""
    span = additive_span(ring, list(gens))
    while True:
        prod = product_span(ring, span, span)
        new = span.join(prod)
        if new == span:
            break
        span = new
    return Subring(ring, span, gens=list(gens), check=False)


def full_subring(ring) -> Subring:
    return Subring(ring, full_subgroup(ring), check=False)


def _materialize_subring(ring, span):
    if ring.is_table:
        members = sorted(span.members)
        pos = {m: i for i, m in enumerate(members)}
        k = len(members)
        add = np.zeros((k, k), dtype=np.int32)
        mul = np.zeros((k, k), dtype=np.int32)
        for i, a in enumerate(members):
            for j, b in enumerate(members):
                add[i, j] = pos[int(ring.add_table[a, b])]
                mul[i, j] = pos[int(ring.mul_table[a, b])]
        sub = TableRing(add, mul, pos[ring.zero_index], _validated=True)

        def embed(e):
            return ring.element(members[e.data])

        def project(e):
            return sub.element(pos[e.data])

        return sub, embed, project

    rows = span.spanning()
    k = len(rows)
    f = ring.field
    if k == 0:
        raise RingMismatch("cannot materialize the zero subring")
    # structure constants in the rref basis: coordinates are read off pivots
    C = []
    for a in rows:
        plane = []
        for b in rows:
            prod = a * b
            if not span.contains(prod):
                raise RingMismatch("span is not multiplicatively closed")
            plane.append(list(span.coordinates(prod)))
        C.append(plane)
    sub = StructureAlgebra(f, k, C)

    def embed(e):
        acc = ring.zero()
        for coef, row in zip(e.data, rows):
            acc = acc + ring.element(tuple(f.mul(coef, x) for x in row.data))
        return acc

    def project(e):
        return sub.element(span.coordinates(e))

    return sub, embed, project


# ---------------------------------------------------------------------------
# ideal closure
# ---------------------------------------------------------------------------

def ideal_closure(ring, gens, cap=DEFAULT_ELEMENT_CAP, within: Subring | None = None) -> IdealBasis:
    """Smallest ideal (of the ring, or of ``within``) containing ``gens``.

    Fixed-point iteration: adjoin a·x and x·a for a over the multiplier
    spanning set, re-close additively, repeat until stable.
    """
    multipliers = within.spanning() if within is not None else None
    if ring.is_algebra and ring.modulus is not None and within is None:
        seed = (np.array([list(g.data) for g in gens], dtype=np.int64)
                if gens else np.zeros((0, ring.dim), dtype=np.int64))
        rows, pivots = _closure_modp(ring, seed)
        return IdealBasis(ring, Subspace(ring, rows, pivots), of_subring=None, check=False)
    if ring.is_table and within is None:
        span = _table_closure(ring, [g.data for g in gens])
        return IdealBasis(ring, span, of_subring=None, check=False)
    span = additive_span(ring, list(gens))
    mult = multipliers if multipliers is not None else ring.spanning_elements()
    frontier = span.spanning()
    while frontier:
        prods = []
        for a in mult:
            for x in frontier:
                prods.append(a * x)
                prods.append(x * a)
        new = span.join(additive_span(ring, prods))
        if new == span:
            break
        fresh = [e for e in new.spanning() if not span.contains(e)]
        span = new
        frontier = fresh
    return IdealBasis(ring, span, of_subring=within, check=False)


def _table_closure(ring, seed_indices):
    """Numpy fixpoint closure of an index set under global products and sums."""
    from .subgroups import _table_additive_closure
    span = _table_additive_closure(ring, seed_indices)
    mul = ring.mul_table
    while True:
        idx = np.array(sorted(span.members), dtype=np.int64)
        prods = np.unique(np.concatenate([mul[:, idx].ravel(), mul[idx, :].ravel()]))
        fresh = [int(p) for p in prods if p not in span.members]
        if not fresh:
            return span
        span = _table_additive_closure(ring, list(span.members) + fresh)


def _closure_modp(ring, seed_rows):
    """Numpy fixpoint closure of a seed subspace under left/right products."""
    p = ring.modulus
    C = ring.constants
    d = ring.dim
    rows, pivots = linalg.rref_modp(seed_rows, p)
    frontier = rows
    while frontier.shape[0] and len(pivots) < d:
        lefts = np.tensordot(frontier, C, axes=(1, 1)) % p   # (r, i, k): e_i · w
        rights = np.tensordot(frontier, C, axes=(1, 0)) % p  # (r, j, k): w · e_j
        cand = np.concatenate([lefts.reshape(-1, d), rights.reshape(-1, d)])
        rem = linalg.reduce_rows_modp(cand, rows, pivots, p)
        rem = rem[np.any(rem != 0, axis=1)]
        if rem.shape[0] == 0:
            break
        fresh, _ = linalg.rref_modp(rem, p)
        rows, pivots, _ = linalg.merge_modp(rows, pivots, fresh, p)
        frontier = fresh
    return rows, pivots


# ---------------------------------------------------------------------------
# ideal lattice and simplicity
# ---------------------------------------------------------------------------

def _nonzero_vectors_projective(p, d):
    """One representative per line of F_p^d (first nonzero coordinate = 1)."""
    for lead in range(d):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            yield np.array(prefix + tail, dtype=np.int64)


def principal_ideal(ring, elt, cap=DEFAULT_ELEMENT_CAP) -> IdealBasis:
    return ideal_closure(ring, [elt], cap=cap)


def enumerate_ideals(ring, cap=DEFAULT_ELEMENT_CAP):
    """Every two-sided ideal, exactly once, as the join-closure of principal
    ideals.  Requires a finite ring (or F_p algebra under the cap).

    Results are cached on the (immutable) ring; recomputation is idempotent.
    """
    cache = getattr(ring, "_ideal_cache", None)
    if cache is None:
        cache = ring._ideal_cache = {}
    if cap in cache:
        return cache[cap]
    principals = {}
    if ring.is_algebra:
        if ring.modulus is None:
            raise InfiniteScalarField("cannot enumerate ideals over Q")
        if ring.size() > cap:
            raise TooLarge(f"{ring.size()} elements exceeds cap {cap}")
        for vec in _nonzero_vectors_projective(ring.modulus, ring.dim):
            rows, pivots = _closure_modp(ring, vec.reshape(1, -1))
            sub = Subspace(ring, rows, pivots)
            principals.setdefault(sub.key(), sub)
    else:
        if ring.n > cap:
            raise TooLarge(f"{ring.n} elements exceeds cap {cap}")
        for i in range(ring.n):
            if i == ring.zero_index:
                continue
            ib = principal_ideal(ring, ring.element(i))
            principals.setdefault(ib.span.key(), ib.span)
    lattice = {zero_subgroup(ring).key(): zero_subgroup(ring)}
    lattice.update(principals)
    # join-closure: the sum of two ideals is additively closed and absorbing,
    # so a plain join (no re-closure) suffices
    worklist = list(lattice.values())
    while worklist:
        nxt = []
        for a in worklist:
            for b in list(lattice.values()):
                j = a.join(b)
                if j.key() not in lattice:
                    lattice[j.key()] = j
                    nxt.append(j)
        worklist = nxt
    ideals = [IdealBasis(ring, s, check=False) for s in lattice.values()]
    ideals.sort(key=lambda i: (i.measure(), i.key()))
    cache[cap] = ideals
    return ideals


@dataclass
class SimpleVerdict:
    status: str                  # "Simple" | "NotSimple" | "Inconclusive"
    witness: IdealBasis | None = None
    reason: str | None = None

    @property
    def is_simple(self):
        return self.status == "Simple"

    def __repr__(self):
        if self.status == "NotSimple":
            return f"NotSimple({self.witness!r})"
        if self.status == "Inconclusive":
            return f"Inconclusive({self.reason})"
        return "Simple"


def _random_element(ring, rng):
    if ring.is_table:
        return ring.element(rng.randrange(ring.n))
    if ring.modulus is not None:
        return ring.element(tuple(rng.randrange(ring.modulus) for _ in range(ring.dim)))
    # small coordinates keep the exact arithmetic cheap
    return ring.element(tuple(rng.randint(-2, 2) for _ in range(ring.dim)))


def is_simple(ring, cap=DEFAULT_ELEMENT_CAP, seed=DEFAULT_SEED,
              samples=DEFAULT_WITNESS_SAMPLES) -> SimpleVerdict:
    """Brute-force simplicity oracle.

    Finite case (size under cap): Simple iff R·R is nonzero and every nonzero
    principal ideal is the whole ring; the scan over F_p algebras walks one
    representative per scalar line, which covers every principal ideal.
    Otherwise: witness search only (basis elements plus seeded pseudorandom
    elements); a proper nonzero principal ideal refutes, nothing confirms.

    Verdicts are cached on the (immutable) ring per (cap, seed, samples).
    """
    cache = getattr(ring, "_simple_cache", None)
    if cache is None:
        cache = ring._simple_cache = {}
    key = (cap, seed, samples)
    if key in cache:
        return cache[key]
    verdict = _is_simple_uncached(ring, cap, seed, samples)
    cache[key] = verdict
    return verdict


def _is_simple_uncached(ring, cap, seed, samples) -> SimpleVerdict:
    full = full_subgroup(ring)
    rr = product_span(ring, full, full)
    if rr.is_zero():
        return SimpleVerdict("NotSimple", _proper_from_square_zero(ring),
                             reason="R*R = 0")
    size = ring.size()
    if size is not None and size <= cap:
        if ring.is_algebra:
            p, d = ring.modulus, ring.dim
            for vec in _nonzero_vectors_projective(p, d):
                rows, pivots = _closure_modp(ring, vec.reshape(1, -1))
                if len(pivots) < d:
                    sub = Subspace(ring, rows, pivots)
                    return SimpleVerdict("NotSimple", IdealBasis(ring, sub, check=False))
            return SimpleVerdict("Simple")
        for i in range(ring.n):
            if i == ring.zero_index:
                continue
            ib = principal_ideal(ring, ring.element(i))
            if not ib.span.is_full():
                return SimpleVerdict("NotSimple", ib)
        return SimpleVerdict("Simple")
    # witness search
    rng = random.Random(seed)
    candidates = list(ring.spanning_elements())
    candidates += [_random_element(ring, rng) for _ in range(samples)]
    for v in candidates:
        if v.is_zero():
            continue
        ib = principal_ideal(ring, v)
        if not ib.span.is_full():
            return SimpleVerdict("NotSimple", ib)
    reason = ("infinite scalar field; use certify pipelines"
              if (ring.is_algebra and ring.modulus is None)
              else f"size {size} exceeds cap {cap}")
    return SimpleVerdict("Inconclusive", reason=reason)


def _proper_from_square_zero(ring):
    # with R·R = 0 every additive subgroup is an ideal; take a 1-generator one
    if ring.is_table:
        for i in range(ring.n):
            if i != ring.zero_index:
                sub = additive_span(ring, [ring.element(i)])
                if not sub.is_full():
                    return IdealBasis(ring, sub, check=False)
    else:
        sub = subspace_from_vectors(ring, [ring.basis_element(0).data])
        if not sub.is_full():
            return IdealBasis(ring, sub, check=False)
    return IdealBasis(ring, zero_subgroup(ring), check=False)


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------

def centralizer(ring, gens_of_b) -> Subring:
    """C_A(B): everything commuting with B (gens are closed into B first)."""
    B = subring_closure(ring, list(gens_of_b))
    spanning = B.spanning()
    if ring.is_table:
        members = []
        for i in range(ring.n):
            x = ring.element(i)
            if all(x * b == b * x for b in spanning):
                members.append(i)
        span = TableSubgroup(ring, members)
        return Subring(ring, span, check=False)
    d = ring.dim
    f = ring.field
    if ring.modulus is not None:
        C = ring.constants
        p = ring.modulus
        blocks = []
        for b in spanning:
            vb = np.array(b.data, dtype=np.int64)
            right = np.tensordot(C, vb, axes=(1, 0)) % p   # (i,k): e_i · b
            left = np.tensordot(vb, C, axes=(0, 0)) % p    # (i,k): b · e_i
            blocks.append((right - left) % p)
        D = np.hstack(blocks) if blocks else np.zeros((d, 0), dtype=np.int64)
        rows, pivots = linalg.kernel_modp(D.T, p)
        return Subring(ring, Subspace(ring, rows, pivots), check=False)
    eqs = []
    for b in spanning:
        for k in range(d):
            # coefficient of e_k in x·b − b·x, linear in x
            row = []
            for i in range(d):
                xb = ring.mul_coords(ring.basis_element(i).data, b.data)[k]
                bx = ring.mul_coords(b.data, ring.basis_element(i).data)[k]
                row.append(xb - bx)
            eqs.append(row)
    rows = linalg.kernel_frac(eqs, d)
    return Subring(ring, subspace_from_vectors(ring, rows), check=False)


def center(ring) -> Subring:
    return centralizer(ring, ring.spanning_elements())


def is_maximal_commutative(ring, B: Subring) -> bool:
    if not B.is_commutative():
        raise BNotCommutative("B is not commutative")
    return centralizer(ring, B.spanning()).span == B.span


# ---------------------------------------------------------------------------
# invariance and associativity predicates
# ---------------------------------------------------------------------------

def is_A_invariant(ring, B: Subring, I: IdealBasis) -> bool:
    """AI ⊆ IA, both computed as additive spans inside the ambient ring."""
    full = full_subgroup(ring)
    AI = product_span(ring, full, I.span)
    IA = product_span(ring, I.span, full)
    return IA.contains_subgroup(AI)


@dataclass
class ASimpleVerdict:
    status: str                  # "ASimple" | "NotASimple"
    witness: IdealBasis | None = None

    @property
    def holds(self):
        return self.status == "ASimple"

    def __repr__(self):
        return self.status if self.holds else f"NotASimple({self.witness!r})"


def enumerate_subring_ideals(ring, B: Subring, cap=DEFAULT_ELEMENT_CAP):
    """Ideals of B, presented in the coordinates of the ambient ring."""
    sub, embed, _ = B.as_ring()
    out = []
    for ib in enumerate_ideals(sub, cap=cap):
        span = additive_span(ring, [embed(e) for e in ib.spanning()])
        out.append(IdealBasis(ring, span, of_subring=B, check=False))
    out.sort(key=lambda i: (i.measure(), i.key()))
    return out


def is_A_simple(ring, B: Subring, cap=DEFAULT_ELEMENT_CAP) -> ASimpleVerdict:
    """No non-trivial ideal of B is A-invariant."""
    for I in enumerate_subring_ideals(ring, B, cap=cap):
        if I.is_zero() or I.is_full_in(B.span):
            continue
        if is_A_invariant(ring, B, I):
            return ASimpleVerdict("NotASimple", I)
    return ASimpleVerdict("ASimple")


def _parenthesizations(factors, ring):
    """All full parenthesizations of a word of spans, evaluated as spans."""
    n = len(factors)
    if n == 1:
        return [factors[0]]
    out = []
    for split in range(1, n):
        for left in _parenthesizations(factors[:split], ring):
            for right in _parenthesizations(factors[split:], ring):
                out.append(product_span(ring, left, right))
    return out


def check_ideal_associativity(ring, B: Subring, I: IdealBasis, copies=2) -> bool:
    """Does I associate with up to ``copies`` copies of the ambient ring?

    copies=2 checks (IA)A=I(AA), (AI)A=A(IA), (AA)I=A(AI); copies=3 compares
    every parenthesization pair of each word with one I and three A factors.
    """
    if copies < 2 or copies > 3:
        raise ValueError("copies must be 2 or 3")
    A = full_subgroup(ring)
    words = []
    for ncopies in range(2, copies + 1):
        for pos in range(ncopies + 1):
            word = [A] * ncopies
            word.insert(pos, I.span)
            words.append(word)
    for word in words:
        evals = _parenthesizations(word, ring)
        first = evals[0]
        for other in evals[1:]:
            if other != first:
                return False
    return True


def identity_property(I: IdealBasis, B: Subring, side="left") -> bool:
    """BX = X (left) or XB = X (right) for X = I."""
    ring = I.ring
    if side == "left":
        prod = product_span(ring, B.span, I.span)
    elif side == "right":
        prod = product_span(ring, I.span, B.span)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return prod == I.span


def apply_i_and_p(ring, B: Subring, I: IdealBasis, cap=DEFAULT_ELEMENT_CAP):
    """The maps i(I) = IA into ideals of A and p(Y) = B ∩ Y back.

    Requires I to be A-invariant and the extension to associate at two
    copies; asserts that IA really is an ideal of A.
    """
    if not is_A_invariant(ring, B, I):
        raise NotAInvariant("I is not A-invariant")
    if not check_ideal_associativity(ring, B, I, copies=2):
        raise NotIdealAssociative("extension is not ideal associative at two copies")
    A = full_subgroup(ring)
    IA = product_span(ring, I.span, A)
    ideal_IA = IdealBasis(ring, IA, check=True)  # asserts absorption
    back = IA.intersect(B.span)
    return ideal_IA, IdealBasis(ring, back, of_subring=B, check=False)
