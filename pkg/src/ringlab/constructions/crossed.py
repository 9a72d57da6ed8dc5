"""Crossed products over finite categories.

A crossed system assigns a unital base ring B_e to every object, a ring map
(or anti-map) sigma_g: B_d(g) -> B_c(g) to every morphism, a unit alpha_g,h
of B_c(g) to every composable pair, and a per-pair multiplication twist
(straight or opposite).  The crossed product lives on ⊕_g B_c(g)·u_g with

    (a u_g)(b u_h) = (a *_g,h sigma_g(b)) alpha_g,h  u_gh

on composable pairs and zero otherwise.  The canonical grading has
A_g = B_c(g)·u_g and is locally unital with 1_{A_e} = 1_{B_e} u_e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..categories import FiniteCategory
from ..errors import ShapeMismatch, TooLarge, ValidationFailure
from ..gradings import Grading
from ..ideals import IdealBasis, Subring, enumerate_subring_ideals
from ..rings import (Element, Ring, StructureAlgebra, TableRing)
from ..subgroups import TableSubgroup
from ..scalars import Rationals

TABLE_PRODUCT_CAP = 4096


class RingMap:
    """An extensional additive map between rings, possibly anti-multiplicative.

    Structure algebras carry a (source_dim x target_dim) matrix acting on
    coordinate rows; table rings carry an index map.
    """

    def __init__(self, source, target, matrix=None, perm=None, anti=False):
        self.source = source
        self.target = target
        self.anti = bool(anti)
        if matrix is not None:
            if source.modulus is not None:
                self.matrix = np.array(matrix, dtype=np.int64) % source.modulus
            else:
                from fractions import Fraction
                self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
            self.perm = None
        elif perm is not None:
            self.perm = tuple(int(x) for x in perm)
            self.matrix = None
        else:
            raise ShapeMismatch("a map needs a matrix or an index table")

    @classmethod
    def identity(cls, ring):
        if ring.is_table:
            return cls(ring, ring, perm=range(ring.n))
        if ring.modulus is not None:
            return cls(ring, ring, matrix=np.eye(ring.dim, dtype=np.int64))
        from fractions import Fraction
        eye = [[Fraction(int(i == j)) for j in range(ring.dim)] for i in range(ring.dim)]
        return cls(ring, ring, matrix=eye)

    def apply(self, elt: Element) -> Element:
        if elt.ring is not self.source:
            raise ShapeMismatch("element is not in the map's source ring")
        if self.perm is not None:
            return self.target.element(self.perm[elt.data])
        if self.source.modulus is not None:
            v = (np.array(elt.data, dtype=np.int64) @ self.matrix) % self.source.modulus
            return self.target.element(tuple(int(x) for x in v))
        coords = [sum(elt.data[i] * self.matrix[i][j] for i in range(self.source.dim))
                  for j in range(self.target.dim)]
        return self.target.element(coords)

    def compose(self, other: "RingMap") -> "RingMap":
        """self ∘ other (apply ``other`` first)."""
        if other.target is not self.source:
            raise ShapeMismatch("maps do not compose")
        anti = self.anti != other.anti
        if self.perm is not None:
            perm = [self.perm[other.perm[i]] for i in range(other.source.n)]
            return RingMap(other.source, self.target, perm=perm, anti=anti)
        if other.source.modulus is not None:
            m = (np.array(other.matrix) @ np.array(self.matrix)) % other.source.modulus
            return RingMap(other.source, self.target, matrix=m, anti=anti)
        sd, md, td = other.source.dim, self.source.dim, self.target.dim
        m = [[sum(other.matrix[i][k] * self.matrix[k][j] for k in range(md))
              for j in range(td)] for i in range(sd)]
        return RingMap(other.source, self.target, matrix=m, anti=anti)

    def equals(self, other: "RingMap") -> bool:
        if self.perm is not None:
            return other.perm is not None and self.perm == other.perm
        if self.source.modulus is not None:
            return other.matrix is not None and np.array_equal(
                np.array(self.matrix) % self.source.modulus,
                np.array(other.matrix) % self.source.modulus)
        return self.matrix == other.matrix

    def is_identity(self):
        return self.source is self.target and self.equals(RingMap.identity(self.source))

    def is_bijective(self):
        if self.perm is not None:
            return sorted(self.perm) == list(range(self.source.n))
        if self.source.dim != self.target.dim:
            return False
        if self.source.modulus is not None:
            from .. import linalg
            _, piv = linalg.rref_modp(np.array(self.matrix), self.source.modulus)
            return len(piv) == self.source.dim
        from .. import linalg
        _, piv = linalg.rref_frac([list(r) for r in self.matrix])
        return len(piv) == self.source.dim


@dataclass
class CrossedSystem:
    cat: FiniteCategory
    base: dict                       # object -> unital Ring
    sigma: dict                      # morphism -> RingMap
    alpha: dict = field(default_factory=dict)    # (g,h) -> Element of B_c(g)
    twists: dict = field(default_factory=dict)   # (g,h) -> "straight"|"opposite"
    name: str = "crossed product"

    def alpha_at(self, g, h):
        a = self.alpha.get((g, h))
        if a is not None:
            return a
        Bc = self.base[self.cat.cod[g]]
        unit = Bc.probe_properties().unit
        if unit is None:
            raise ValidationFailure([f"base ring at {self.cat.cod[g]!r} has no unit"])
        return unit

    def twist_at(self, g, h):
        return self.twists.get((g, h), "straight")


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _is_unit(ring, a: Element):
    """Two-sided invertibility of ``a`` (exact; works without associativity)."""
    unit = ring.probe_properties().unit
    if unit is None:
        return False
    if ring.is_table:
        row = ring.mul_table[a.data]
        col = ring.mul_table[:, a.data]
        for x in range(ring.n):
            if row[x] == unit.data and col[x] == unit.data:
                return True
        return False
    from .. import linalg
    d = ring.dim
    # one x with a·x = 1 and x·a = 1: stack both linear systems
    if ring.modulus is not None:
        left = np.tensordot(np.array(a.data, dtype=np.int64),
                            ring.constants, axes=(0, 0)) % ring.modulus  # (j,k): a·e_j
        right = np.tensordot(ring.constants, np.array(a.data, dtype=np.int64),
                             axes=(1, 0)) % ring.modulus                 # (i,k): e_i·a
        target = np.array(unit.data, dtype=np.int64)
        A = np.vstack([left.T, right.T])
        b = np.concatenate([target, target]).reshape(-1, 1)
        R, piv = linalg.rref_modp(np.hstack([A, b]), ring.modulus)
        if d in piv:
            return False
        sol = np.zeros(d, dtype=np.int64)
        for ri, c in enumerate(piv):
            sol[c] = R[ri, d]
        x = ring.element(tuple(int(v) for v in sol))
        return (a * x == unit) and (x * a == unit)
    rows = []
    for k in range(d):
        rows.append([ring.mul_coords(a.data, ring.basis_element(i).data)[k]
                     for i in range(d)] + [unit.data[k]])
    for k in range(d):
        rows.append([ring.mul_coords(ring.basis_element(i).data, a.data)[k]
                     for i in range(d)] + [unit.data[k]])
    R, piv = linalg.rref_frac(rows)
    if d in piv:
        return False
    from fractions import Fraction
    sol = [Fraction(0)] * d
    for ri, c in enumerate(piv):
        sol[c] = R[ri][d]
    x = ring.element(sol)
    return (a * x == unit) and (x * a == unit)


def _associates_and_commutes(ring, a: Element) -> bool:
    """alpha(bc) = (b alpha)c = b(alpha c) = (bc)alpha on spanning pairs."""
    span = ring.spanning_elements()
    for b in span:
        if a * b != b * a:
            return False
        for c in span:
            bc = b * c
            if not (a * bc == (b * a) * c == b * (a * c) == bc * a):
                return False
    return True


def validate_crossed_system(sys: CrossedSystem):
    """Itemized validation; returns a list of (check, ok, detail) triples."""
    cat = sys.cat
    report = []
    units = {}
    for e in cat.objects:
        props = sys.base[e].probe_properties()
        ok = props.unital
        units[e] = props.unit
        report.append((f"base ring at {e!r} unital", ok, None))
    for g in cat.morphisms:
        sg = sys.sigma[g]
        src, tgt = sys.base[cat.dom[g]], sys.base[cat.cod[g]]
        if sg.source is not src or sg.target is not tgt:
            report.append((f"sigma[{g!r}] endpoints", False, "wrong source/target"))
            continue
        if sg.perm is not None:
            add_ok = all(
                sg.apply(src.element(a) + src.element(b)) ==
                sg.apply(src.element(a)) + sg.apply(src.element(b))
                for a in range(src.n) for b in range(src.n))
            report.append((f"sigma[{g!r}] additive", add_ok, None))
        mult_ok, witness = True, None
        span = src.spanning_elements()
        for a in span:
            for b in span:
                img = sg.apply(a * b)
                exp = (sg.apply(b) * sg.apply(a)) if sg.anti else (sg.apply(a) * sg.apply(b))
                if img != exp:
                    mult_ok, witness = False, (a, b)
                    break
            if not mult_ok:
                break
        kind = "anti-multiplicative" if sg.anti else "multiplicative"
        report.append((f"sigma[{g!r}] {kind}", mult_ok, witness))
        if units[cat.dom[g]] is not None and units[cat.cod[g]] is not None:
            report.append((f"sigma[{g!r}] unit-preserving",
                           sg.apply(units[cat.dom[g]]) == units[cat.cod[g]], None))
    for e in cat.objects:
        ide = cat.identity[e]
        report.append((f"sigma at identity of {e!r} is the identity map",
                       sys.sigma[ide].is_identity(), None))
    for (g, h) in cat.composable_pairs():
        a = sys.alpha_at(g, h)
        Bc = sys.base[cat.cod[g]]
        report.append((f"alpha[{g!r},{h!r}] unit", _is_unit(Bc, a), a))
        report.append((f"alpha[{g!r},{h!r}] associates and commutes",
                       _associates_and_commutes(Bc, a), a))
    for g in cat.morphisms:
        lc = cat.identity[cat.cod[g]]
        rc = cat.identity[cat.dom[g]]
        u = units[cat.cod[g]]
        norm_ok = (sys.alpha_at(lc, g) == u) and (sys.alpha_at(g, rc) == u)
        report.append((f"alpha normalized at {g!r}", norm_ok, None))
    # functoriality is reported, not enforced (twisted systems may bend it)
    for (g, h) in cat.composable_pairs():
        comp = sys.sigma[g].compose(sys.sigma[h])
        ok = comp.equals(sys.sigma[cat.compose(g, h)]) and \
            comp.anti == sys.sigma[cat.compose(g, h)].anti
        report.append((f"functoriality at ({g!r},{h!r}) [warning only]", ok, None))
    return report


def _hard_failures(report):
    return [(name, wit) for name, ok, wit in report
            if not ok and "warning only" not in name]


# ---------------------------------------------------------------------------
# the construction
# ---------------------------------------------------------------------------

@dataclass
class CrossedProduct:
    ring: Ring
    grading: Grading
    system: CrossedSystem
    kind_tag: str
    offsets: dict                    # morphism -> block offset
    notes: tuple = ()

    def embed(self, g, b: Element) -> Element:
        """b·u_g for b in the base ring at c(g)."""
        A = self.ring
        if A.is_algebra:
            off = self.offsets[g]
            coords = [A.field.zero] * A.dim
            for i, x in enumerate(b.data):
                coords[off + i] = x
            return A.element(coords)
        combo = [self.system.base[self.system.cat.cod[m]].zero_index
                 for m in self.system.cat.morphisms]
        combo[self.grading.order.index(g)] = b.data
        return A.element(self._tuple_to_index(tuple(combo)))

    def project(self, g, a: Element) -> Element:
        """The u_g coordinate of ``a`` as an element of the base at c(g)."""
        comp = self.grading.component_of(a, g)
        B = self.system.base[self.system.cat.cod[g]]
        if self.ring.is_algebra:
            off = self.offsets[g]
            return B.element(comp.data[off:off + B.dim])
        combo = self._index_to_tuple(comp.data)
        return B.element(combo[self.grading.order.index(g)])

    def base_subring(self) -> Subring:
        return self.grading.zero_part_subring()

    def _tuple_to_index(self, combo):
        idx = 0
        for m, c in zip(self.system.cat.morphisms, combo):
            idx = idx * self.system.base[self.system.cat.cod[m]].n + c
        return idx

    def _index_to_tuple(self, idx):
        sizes = [self.system.base[self.system.cat.cod[m]].n
                 for m in self.system.cat.morphisms]
        combo = []
        for s in reversed(sizes):
            combo.append(idx % s)
            idx //= s
        return tuple(reversed(combo))


def crossed_product(sys: CrossedSystem, validate=True, kind_tag="crossed_product",
                    notes=()) -> CrossedProduct:
    if validate:
        report = validate_crossed_system(sys)
        bad = _hard_failures(report)
        if bad:
            raise ValidationFailure(bad)
    cat = sys.cat
    bases = [sys.base[e] for e in cat.objects]
    if all(b.is_algebra for b in bases):
        return _crossed_algebra(sys, kind_tag, notes)
    if all(b.is_table for b in bases):
        return _crossed_table(sys, kind_tag, notes)
    raise ShapeMismatch("base rings must all be table rings or all algebras")


def _twisted_product(Bc, a, b, twist, alpha):
    t = (b * a) if twist == "opposite" else (a * b)
    return t * alpha


def _crossed_algebra(sys, kind_tag, notes):
    cat = sys.cat
    field_dom = None
    for e in cat.objects:
        f = sys.base[e].field
        if field_dom is None:
            field_dom = f
        elif f != field_dom:
            raise ShapeMismatch("base rings must share the scalar field")
    offsets, dims = {}, {}
    at = 0
    for g in cat.morphisms:
        B = sys.base[cat.cod[g]]
        offsets[g] = at
        dims[g] = B.dim
        at += B.dim
    total = at
    use_np = field_dom.name != "Q"
    if use_np:
        C = np.zeros((total, total, total), dtype=np.int64)
    else:
        from fractions import Fraction
        C = [[[Fraction(0)] * total for _ in range(total)] for _ in range(total)]
    for (g, h) in cat.composable_pairs():
        gh = cat.compose(g, h)
        Bc = sys.base[cat.cod[g]]
        Bh = sys.base[cat.cod[h]]
        sg = sys.sigma[g]
        alpha = sys.alpha_at(g, h)
        twist = sys.twist_at(g, h)
        for j in range(Bh.dim):
            sb = sg.apply(Bh.basis_element(j))
            for i in range(Bc.dim):
                prod = _twisted_product(Bc, Bc.basis_element(i), sb, twist, alpha)
                for k, val in enumerate(prod.data):
                    if Bc.field.is_zero(val):
                        continue
                    if use_np:
                        C[offsets[g] + i, offsets[h] + j, offsets[gh] + k] = val
                    else:
                        C[offsets[g] + i][offsets[h] + j][offsets[gh] + k] = val
    A = StructureAlgebra(field_dom, total, C)
    components = {}
    for g in cat.morphisms:
        vecs = []
        for i in range(dims[g]):
            v = [0] * total
            v[offsets[g] + i] = 1
            vecs.append(v)
        from ..subgroups import subspace_from_vectors
        components[g] = subspace_from_vectors(A, vecs)
    grading = Grading(A, cat, components)
    return CrossedProduct(A, grading, sys, kind_tag, offsets, tuple(notes))


def _crossed_table(sys, kind_tag, notes):
    cat = sys.cat
    mors = list(cat.morphisms)
    sizes = [sys.base[cat.cod[g]].n for g in mors]
    total = 1
    for s in sizes:
        total *= s
    if total > TABLE_PRODUCT_CAP:
        raise TooLarge(f"crossed product would have {total} elements")
    combos = list(itertools.product(*(range(s) for s in sizes)))
    pos = {g: t for t, g in enumerate(mors)}
    weights = []
    w = 1
    for s in reversed(sizes):
        weights.append(w)
        w *= s
    weights = list(reversed(weights))
    combos_arr = np.array(combos, dtype=np.int64)       # (N, M)
    add_acc = np.zeros((total, total), dtype=np.int64)
    for t, g in enumerate(mors):
        tbl = sys.base[cat.cod[g]].add_table
        cx = combos_arr[:, t]
        add_acc += weights[t] * tbl[np.ix_(cx, cx)].astype(np.int64)
    zeros = tuple(sys.base[cat.cod[g]].zero_index for g in mors)
    slot_acc = [np.full((total, total), z, dtype=np.int64)
                for z in zeros]
    for (g, h) in cat.composable_pairs():
        Bc = sys.base[cat.cod[g]]
        Bh = sys.base[cat.cod[h]]
        # product table of the (g,h) block, twisted and skewed
        T = np.zeros((Bc.n, Bh.n), dtype=np.int64)
        for a_idx in range(Bc.n):
            a = Bc.element(a_idx)
            for b_idx in range(Bh.n):
                sb = sys.sigma[g].apply(Bh.element(b_idx))
                T[a_idx, b_idx] = _twisted_product(
                    Bc, a, sb, sys.twist_at(g, h), sys.alpha_at(g, h)).data
        contrib = T[np.ix_(combos_arr[:, pos[g]], combos_arr[:, pos[h]])]
        slot = pos[cat.compose(g, h)]
        Bs = sys.base[cat.cod[cat.compose(g, h)]]
        slot_acc[slot] = Bs.add_table[slot_acc[slot], contrib].astype(np.int64)
    mul_acc = np.zeros((total, total), dtype=np.int64)
    for t in range(len(mors)):
        mul_acc += weights[t] * slot_acc[t]
    zero_idx = int(sum(w * z for w, z in zip(weights, zeros)))
    A = TableRing(add_acc.astype(np.int32), mul_acc.astype(np.int32),
                  zero_idx, _validated=True)
    index = {c: i for i, c in enumerate(combos)}
    components = {}
    for g in mors:
        members = []
        for i, c in enumerate(combos):
            if all(c[t] == zeros[t] for t in range(len(mors)) if t != pos[g]):
                members.append(i)
        components[g] = TableSubgroup(A, members)
    grading = Grading(A, cat, components)
    return CrossedProduct(A, grading, sys, kind_tag, {}, tuple(notes))


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def skew_group_ring(B: Ring, G: FiniteCategory, sigma: dict,
                    name=None) -> CrossedProduct:
    """Crossed product with trivial cocycle; sigma must be a group action by
    ring automorphisms."""
    if not G.is_group():
        raise ShapeMismatch("skew group rings need a group")
    e = G.objects[0]
    maps = {}
    for g in G.morphisms:
        sg = sigma[g]
        if not isinstance(sg, RingMap):
            sg = RingMap(B, B, matrix=sg) if B.is_algebra else RingMap(B, B, perm=sg)
        maps[g] = sg
    problems = []
    for g in G.morphisms:
        if maps[g].anti or not maps[g].is_bijective():
            problems.append(f"sigma[{g!r}] is not an automorphism")
    for g in G.morphisms:
        for h in G.morphisms:
            if not maps[g].compose(maps[h]).equals(maps[G.compose(g, h)]):
                problems.append(f"action fails at ({g!r},{h!r})")
    if problems:
        raise ValidationFailure(problems)
    sys = CrossedSystem(G, {e: B}, maps, name=name or f"{G.name}-skew group ring")
    return crossed_product(sys, kind_tag="skew_group_ring")


def twisted_group_ring(B: Ring, G: FiniteCategory, alpha,
                       name=None) -> CrossedProduct:
    """Crossed product with identity maps; ``alpha`` maps (g,h) to a central
    associating unit of B (callable or dict)."""
    if not G.is_group() or not G.is_abelian_group():
        raise ShapeMismatch("twisted group rings here need an abelian group")
    e = G.objects[0]
    maps = {g: RingMap.identity(B) for g in G.morphisms}
    table = {}
    for g in G.morphisms:
        for h in G.morphisms:
            val = alpha(g, h) if callable(alpha) else alpha[(g, h)]
            if not isinstance(val, Element):
                unit = B.probe_properties().unit
                val = B.scalar_mul(val, unit) if B.is_algebra else _int_times(B, val, unit)
            table[(g, h)] = val
    sys = CrossedSystem(G, {e: B}, maps, alpha=table,
                        name=name or f"{G.name}-twisted group ring")
    return crossed_product(sys, kind_tag="twisted_group_ring")


def _int_times(B, k, unit):
    acc = B.zero()
    step = unit if k >= 0 else -unit
    for _ in range(abs(int(k))):
        acc = acc + step
    return acc


# ---------------------------------------------------------------------------
# G-invariance for ideals of the base
# ---------------------------------------------------------------------------

def is_G_invariant(cp: CrossedProduct, I: IdealBasis) -> bool:
    """sigma_g(I_d(g)) ⊆ I_c(g) for every morphism, I an ideal of the base."""
    cat = cp.system.cat
    for g in cat.morphisms:
        e, f = cat.dom[g], cat.cod[g]
        comp_e = cp.grading.components[cat.identity[e]]
        part = I.span.intersect(comp_e)
        for x in part.spanning():
            b = cp.project(cat.identity[e], x)
            img = cp.embed(cat.identity[f], cp.system.sigma[g].apply(b))
            if not I.contains(img):
                return False
    return True


def is_G_simple(cp: CrossedProduct, cap=None):
    """No nontrivial G-invariant ideal of the base; returns (bool, witness)."""
    from ..rings import DEFAULT_ELEMENT_CAP
    B = cp.base_subring()
    for I in enumerate_subring_ideals(cp.ring, B, cap=cap or DEFAULT_ELEMENT_CAP):
        if I.is_zero() or I.is_full_in(B.span):
            continue
        if is_G_invariant(cp, I):
            return False, I
    return True, None
