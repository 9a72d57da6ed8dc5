"""Gradings of rings by finite categories, degree maps, and their checks.

A grading assigns to every morphism g an additive subgroup A_g such that
A = ⊕ A_g, with A_g·A_h inside A_{gh} on composable pairs and zero otherwise.
A_0 denotes the sum of the object components, a subring.  All predicates
work on spanning sets, which is exact by bilinearity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import (FilterViolation, NotDirectSum, PreconditionUnmet)
from .ideals import (DEFAULT_ELEMENT_CAP, IdealBasis, Subring, center,
                     enumerate_ideals, full_subring, is_A_invariant,
                     principal_ideal)
from .rings import Element
from .subgroups import (AddSubgroup, additive_span,
                        full_subgroup, product_span, zero_subgroup)


class Grading:
    """A validated decomposition A = ⊕_g A_g over a finite category."""

    def __init__(self, ring, cat, components):
        self.ring = ring
        self.cat = cat
        self.components = dict(components)
        self.order = list(cat.morphisms)
        self._decomp = self._build_decomposer()
        self._vertex_units = None
        self._zero_part = None

    # -- decomposition --------------------------------------------------
    def _build_decomposer(self):
        ring = self.ring
        if ring.is_algebra:
            rows = []
            slices = {}
            at = 0
            for g in self.order:
                comp = self.components[g]
                k = comp.measure()
                slices[g] = (at, at + k)
                rows.extend(e.data for e in comp.spanning())
                at += k
            if ring.modulus is not None:
                M = np.array([list(r) for r in rows], dtype=np.int64)
                aug = np.hstack([M.T % ring.modulus, np.eye(ring.dim, dtype=np.int64)])
                R, piv = linalg.rref_modp(aug, ring.modulus)
                if len([c for c in piv if c < ring.dim]) != ring.dim:
                    raise NotDirectSum("component bases do not span the ring")
                Minv_T = R[:, ring.dim:]
                # coords c with c @ M = v  <=>  M^T c^T = v^T
                def coords_of(vec):
                    return (Minv_T @ (np.array(vec, dtype=np.int64) % ring.modulus)) % ring.modulus
            else:
                mt = [[Fraction(rows[j][i]) for j in range(len(rows))] for i in range(ring.dim)]

                def coords_of(vec):
                    aug_rows = [mt[i] + [Fraction(vec[i])] for i in range(ring.dim)]
                    R, piv = linalg.rref_frac(aug_rows, width=ring.dim + 1)
                    c = [Fraction(0)] * ring.dim
                    for ri, col in enumerate(piv):
                        c[col] = R[ri][ring.dim]
                    return c
            basis_rows = rows

            def decompose(a):
                c = coords_of(a.data)
                out = {}
                f = ring.field
                for g in self.order:
                    lo, hi = slices[g]
                    acc = [f.zero] * ring.dim
                    nonzero = False
                    for idx in range(lo, hi):
                        coef = c[idx]
                        if not f.is_zero(f.coerce(coef)):
                            nonzero = True
                            row = basis_rows[idx]
                            acc = [f.add(x, f.mul(f.coerce(coef), y)) for x, y in zip(acc, row)]
                    if nonzero:
                        out[g] = Element(ring, tuple(acc))
                return out

            return decompose

        # table ring: tabulate every decomposition once
        lists = [sorted(self.components[g].members) for g in self.order]
        table = {}
        add = ring.add_table
        for combo in itertools.product(*lists):
            s = combo[0]
            for x in combo[1:]:
                s = int(add[s, x])
            table[s] = combo
        if len(table) != ring.n:
            raise NotDirectSum("components do not decompose every element uniquely")
        zero = ring.zero_index

        def decompose(a):
            combo = table[a.data]
            return {g: ring.element(i)
                    for g, i in zip(self.order, combo) if i != zero}

        return decompose

    def decompose(self, a):
        """Nonzero homogeneous components of ``a``, keyed by morphism."""
        return self._decomp(a)

    def component_of(self, a, g):
        return self.decompose(a).get(g, self.ring.zero())

    def support(self, a):
        return frozenset(self.decompose(a).keys())

    # -- derived subrings ------------------------------------------------
    def zero_part_subring(self) -> Subring:
        """A_0: the sum of the object components (a subring)."""
        if self._zero_part is None:
            span = zero_subgroup(self.ring)
            for e in self.cat.objects:
                span = span.join(self.components[self.cat.identity[e]])
            self._zero_part = Subring(self.ring, span, check=False)
        return self._zero_part

    def vertex_subring(self, e) -> Subring:
        span = zero_subgroup(self.ring)
        for g in self.cat.vertex_morphisms(e):
            span = span.join(self.components[g])
        return Subring(self.ring, span, check=False)

    def vertex_unit(self, e):
        """The unit of A_e, or None."""
        units = self.vertex_units()
        return units.get(e)

    def vertex_units(self):
        if self._vertex_units is None:
            out = {}
            for e in self.cat.objects:
                comp = self.components[self.cat.identity[e]]
                if comp.is_zero():
                    out[e] = None
                    continue
                sub = Subring(self.ring, comp, check=False)
                ring_e, embed, _ = sub.as_ring()
                props = ring_e.probe_properties()
                out[e] = embed(props.unit) if props.unital else None
            self._vertex_units = out
        return self._vertex_units

    def homogeneous_spanning(self):
        """Spanning elements of every component, flattened."""
        out = []
        for g in self.order:
            out.extend(self.components[g].spanning())
        return out

    def __repr__(self):
        return f"Grading({self.cat.name} on {len(self.order)} components)"


def validate_grading(ring, cat, components) -> Grading:
    """Check the direct-sum and filter conditions, exhaustively on spans."""
    comps = {}
    for g in cat.morphisms:
        comp = components[g]
        if not isinstance(comp, AddSubgroup):
            comp = additive_span(ring, list(comp))
        comps[g] = comp
    total = zero_subgroup(ring)
    running = 0
    for g in cat.morphisms:
        c = comps[g]
        joined = total.join(c)
        if ring.is_algebra:
            if joined.measure() != total.measure() + c.measure():
                raise NotDirectSum(f"component of {g!r} overlaps the others")
        else:
            if joined.measure() != total.measure() * c.measure():
                raise NotDirectSum(f"component of {g!r} overlaps the others")
        total = joined
        running += c.measure()
    if not total.is_full():
        raise NotDirectSum("components do not span the ring")
    for g in cat.morphisms:
        for h in cat.morphisms:
            prod = product_span(ring, comps[g], comps[h])
            if cat.composable(g, h):
                target = comps[cat.compose(g, h)]
                if not target.contains_subgroup(prod):
                    raise FilterViolation(g, h, prod.spanning()[:1])
            else:
                if not prod.is_zero():
                    raise FilterViolation(g, h, prod.spanning()[:1])
    return Grading(ring, cat, comps)


def support(a, grading: Grading):
    return grading.support(a)


def trivial_grading(ring) -> Grading:
    from .categories import trivial_group
    cat = trivial_group()
    return Grading(ring, cat, {0: full_subgroup(ring)})


# ---------------------------------------------------------------------------
# flags
# ---------------------------------------------------------------------------

@dataclass
class GradingFlags:
    locally_unital: bool
    strongly_graded: bool
    left_nondegenerate: bool | None
    right_nondegenerate: bool | None

    @property
    def nondegenerate_some_side(self):
        return bool(self.left_nondegenerate) or bool(self.right_nondegenerate)


def grading_flags(grading: Grading) -> GradingFlags:
    ring, cat = grading.ring, grading.cat
    units = grading.vertex_units()
    locally_unital = all(units[e] is not None for e in cat.objects) and bool(cat.objects)
    if locally_unital:
        for g in cat.morphisms:
            u_c = units[cat.cod[g]]
            u_d = units[cat.dom[g]]
            for x in grading.components[g].spanning():
                if u_c * x != x or x * u_d != x:
                    locally_unital = False
                    break
            if not locally_unital:
                break
    strongly = True
    for g, h in cat.composable_pairs():
        prod = product_span(ring, grading.components[g], grading.components[h])
        if prod != grading.components[cat.compose(g, h)]:
            strongly = False
            break
    left_nd = right_nd = None
    if cat.is_groupoid:
        left_nd = right_nd = True
        for g in cat.morphisms:
            ginv = cat.inverse[g]
            comp = grading.components[g]
            inv_comp = grading.components[ginv]
            if comp.is_zero():
                continue
            if not _pairing_nondegenerate(ring, comp, inv_comp, side="right"):
                right_nd = False
            if not _pairing_nondegenerate(ring, comp, inv_comp, side="left"):
                left_nd = False
    return GradingFlags(locally_unital, strongly, left_nd, right_nd)


def _pairing_nondegenerate(ring, comp, inv_comp, side):
    """No nonzero x in comp kills all of inv_comp (x·inv = 0, resp. inv·x = 0).

    The offending set is a subgroup, so checking it is zero is exact and
    needs no element enumeration.
    """
    xs = comp.spanning()
    ws = inv_comp.spanning()
    if not ws:
        return False
    if ring.is_table:
        for x in comp.elements():
            if x.is_zero():
                continue
            if side == "right" and all((x * w).is_zero() for w in ws):
                return False
            if side == "left" and all((w * x).is_zero() for w in ws):
                return False
        return True
    f = ring.field
    rows = []
    for s, w in enumerate(ws):
        for k in range(ring.dim):
            row = []
            for b in xs:
                prod = (b * w) if side == "right" else (w * b)
                row.append(prod.data[k])
            rows.append(row)
    if ring.modulus is not None:
        A = np.array(rows, dtype=np.int64) % ring.modulus
        kern, _ = linalg.kernel_modp(A, ring.modulus)
        return kern.shape[0] == 0
    kern = linalg.kernel_frac(rows, len(xs))
    return len(kern) == 0


# ---------------------------------------------------------------------------
# degree maps
# ---------------------------------------------------------------------------

@dataclass
class DegreeMap:
    """A map d: A -> N with d(a) = 0 iff a = 0, plus the commutator-drop data.

    ``X`` is an additive spanning set of the subring B; commuting with X is
    enough to commute with B, so the degree-drop condition (checked against
    X) certifies the ideal-intersection argument.
    """

    ring: object
    B: Subring
    X: list
    d: object                    # callable Element -> int
    description: str
    grading: Grading | None = None

    def degree(self, a):
        return self.d(a)


@dataclass
class DegreeMapVerdict:
    status: str                  # "Valid" | "D1Violation" | "D2Violation"
    witness: object = None

    @property
    def valid(self):
        return self.status == "Valid"

    def __repr__(self):
        return self.status if self.valid else f"{self.status}({self.witness!r})"


def support_degree_map(grading: Grading, b_choice="center_of_A0") -> DegreeMap:
    """d(a) = |Supp(a)| with B = Z(A_0) or B = A spanned by homogeneous
    elements."""
    ring = grading.ring
    if b_choice == "center_of_A0":
        a0 = grading.zero_part_subring()
        sub, embed, _ = a0.as_ring()
        z = center(sub)
        span = additive_span(ring, [embed(e) for e in z.spanning()])
        B = Subring(ring, span, check=False)
        X = B.spanning()
        desc = "support degree map over the center of the object part"
    elif b_choice == "homogeneous_elements":
        B = full_subring(ring)
        X = grading.homogeneous_spanning()
        desc = "support degree map over homogeneous elements"
    else:
        raise ValueError("b_choice must be center_of_A0 or homogeneous_elements")

    def d(a):
        return len(grading.support(a))

    return DegreeMap(ring, B, X, d, desc, grading=grading)


def _d2_candidates(dm: DegreeMap, a):
    """Cheap candidates for the degree-drop witness, tried before the
    exhaustive principal-ideal scan."""
    yield a
    g_hint = dm.grading
    if g_hint is None or not g_hint.cat.is_groupoid:
        return
    comps = g_hint.decompose(a)
    objects = {g_hint.cat.identity[e] for e in g_hint.cat.objects}
    if set(comps) & objects:
        return
    for g in comps:
        ginv = g_hint.cat.inverse[g]
        for c in g_hint.components[ginv].spanning():
            cand = a * c
            if not cand.is_zero():
                yield cand


def verify_degree_map(dm: DegreeMap, cap=DEFAULT_ELEMENT_CAP) -> DegreeMapVerdict:
    """Check (d1) on every element and (d2) with the ideal quantifier reduced
    to principal ideals.

    Reduction soundness: for an ideal I and nonzero a in I, a witness found
    inside <a> also lies in I, and conversely (d2) applied to I at a yields
    a witness valid for <a> evaluated at a.  A qualifying witness found early
    settles the existential; only failures fall back to the full scan.
    """
    ring = dm.ring
    zero = ring.zero()
    if dm.degree(zero) != 0:
        return DegreeMapVerdict("D1Violation", zero)
    elements = ring.enumerate_elements(cap)
    for a in elements:
        da = dm.degree(a)
        if (da == 0) != a.is_zero():
            return DegreeMapVerdict("D1Violation", a)
    for a in elements:
        if a.is_zero():
            continue
        da = dm.degree(a)
        if _find_d2_witness(dm, a, da) is None:
            return DegreeMapVerdict("D2Violation", (principal_ideal(ring, a), a))
    return DegreeMapVerdict("Valid")


def _qualifies(dm, cand, da):
    if cand.is_zero() or dm.degree(cand) > da:
        return False
    for b in dm.X:
        if dm.degree(cand * b - b * cand) >= da:
            return False
    return True


def _find_d2_witness(dm: DegreeMap, a, da):
    # the cheap candidates (a itself, a·c) lie in <a> by construction, so
    # the principal ideal is only materialized for the exhaustive fallback
    ring = dm.ring
    for cand in _d2_candidates(dm, a):
        if _qualifies(dm, cand, da):
            return cand
    ideal = principal_ideal(ring, a)
    for cand in ideal.span.elements():
        if _qualifies(dm, cand, da):
            return cand
    return None


# ---------------------------------------------------------------------------
# intersection property, componentwise invariance, local units
# ---------------------------------------------------------------------------

@dataclass
class IntersectionVerdict:
    status: str                  # "Holds" | "Fails"
    witness: IdealBasis | None = None

    @property
    def holds(self):
        return self.status == "Holds"

    def __repr__(self):
        return self.status if self.holds else f"Fails({self.witness!r})"


def ideal_intersection_property(ring, S, cap=DEFAULT_ELEMENT_CAP) -> IntersectionVerdict:
    """Every nonzero ideal of the ring meets S nontrivially."""
    span = S.span if isinstance(S, (Subring, IdealBasis)) else S
    for I in enumerate_ideals(ring, cap=cap):
        if I.is_zero():
            continue
        if I.span.intersect(span).is_zero():
            return IntersectionVerdict("Fails", I)
    return IntersectionVerdict("Holds")


@dataclass
class ComponentwiseInvariance:
    plain: bool
    conjugation: bool | None
    agreement_checked: bool


def ideal_components(grading: Grading, I: IdealBasis):
    """I_e = I ∩ A_e for each object e."""
    return {e: I.span.intersect(grading.components[grading.cat.identity[e]])
            for e in grading.cat.objects}


def check_invariance_componentwise(grading: Grading, I: IdealBasis,
                                   strict=False) -> ComponentwiseInvariance:
    """Componentwise A-invariance criteria for an ideal of A_0.

    plain: A_g I_d(g) ⊆ I_c(g) A_g for all g (equivalent to A-invariance in
    the locally unital case; the equivalence is asserted).  conjugation:
    A_g I_d(g) A_{g^-1} ⊆ I_c(g), evaluated when the grading is strong over a
    groupoid and graded ideal associativity holds.
    """
    ring, cat = grading.ring, grading.cat
    flags = grading_flags(grading)
    if not flags.locally_unital:
        raise PreconditionUnmet("locally unital grading required")
    comps = ideal_components(grading, I)
    plain = True
    for g in cat.morphisms:
        Ag = grading.components[g]
        lhs = product_span(ring, Ag, comps[cat.dom[g]])
        rhs = product_span(ring, comps[cat.cod[g]], Ag)
        if not rhs.contains_subgroup(lhs):
            plain = False
            break
    direct = is_A_invariant(ring, grading.zero_part_subring(), I)
    if plain != direct:
        raise AssertionError("componentwise criterion disagrees with AI ⊆ IA")
    conjugation = None
    pre_b = cat.is_groupoid and flags.strongly_graded and \
        graded_ideal_associativity(grading, I)
    if pre_b:
        conjugation = True
        for g in cat.morphisms:
            Ag = grading.components[g]
            Aginv = grading.components[cat.inverse[g]]
            lhs1 = product_span(ring, product_span(ring, Ag, comps[cat.dom[g]]), Aginv)
            lhs2 = product_span(ring, Ag, product_span(ring, comps[cat.dom[g]], Aginv))
            lhs = lhs1.join(lhs2)
            if not comps[cat.cod[g]].contains_subgroup(lhs):
                conjugation = False
                break
        if conjugation != plain:
            raise AssertionError("conjugation criterion disagrees with the plain one")
    elif strict:
        raise PreconditionUnmet("strong groupoid grading with graded ideal associativity")
    return ComponentwiseInvariance(plain, conjugation, True)


def graded_ideal_associativity(grading: Grading, I: IdealBasis, max_components=3) -> bool:
    """All parenthesizations agree on words made of one copy of I and up to
    ``max_components`` graded components (every identity the arguments need
    lives inside this window)."""
    from .ideals import _parenthesizations
    ring, cat = grading.ring, grading.cat
    for n in range(1, max_components + 1):
        for tup in itertools.product(cat.morphisms, repeat=n):
            spans = [grading.components[g] for g in tup]
            for pos in range(n + 1):
                word = spans[:pos] + [I.span] + spans[pos:]
                if len(word) < 3:
                    continue
                evals = _parenthesizations(word, ring)
                first = evals[0]
                if any(e != first for e in evals[1:]):
                    return False
    return True


def local_units_full_ideal_test(grading: Grading, I: IdealBasis, part="a") -> bool:
    """Fullness of an ideal of A read off the vertex units.

    part (a): I = A iff every vertex unit lies in I.
    part (b): on a strongly graded connected groupoid, I = A iff some vertex
    unit lies in I.  Both are asserted against the direct equality.
    """
    ring, cat = grading.ring, grading.cat
    flags = grading_flags(grading)
    if not flags.locally_unital:
        raise PreconditionUnmet("locally unital grading required")
    units = grading.vertex_units()
    direct = I.span.is_full()
    if part == "a":
        crit = all(I.contains(units[e]) for e in cat.objects)
    elif part == "b":
        if not (cat.is_groupoid and cat.is_connected() and flags.strongly_graded):
            raise PreconditionUnmet("connected groupoid with strong grading required")
        crit = any(I.contains(units[e]) for e in cat.objects)
    else:
        raise ValueError("part must be 'a' or 'b'")
    if crit != direct:
        raise AssertionError("vertex-unit criterion disagrees with I = A")
    return crit
