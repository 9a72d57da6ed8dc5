"""Cayley-Dickson doublings and the signed cocycle that realizes them as
twisted group rings over XOR groups.

A doubling is the order-two crossed product of a unital ring B with itself:
(a + b·u)(c + d·u) = a*c + (b * sigma(d))·alpha + (a*d + b*sigma(c))·u, with
the classical twist pattern straight/opposite/straight/opposite.  Iterating
from a field with sigma = conjugation and alpha = -1 produces the usual
2^n-dimensional tower; bases concatenate, so basis index p at level n+1 has
its high bit saying which half it came from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..categories import cyclic_group, xor_group
from ..errors import AlphaNotCentralUnit, ShapeMismatch, SigmaNotInvolutive, TooLarge
from ..rings import Element, Ring, StructureAlgebra, field_algebra
from .crossed import (CrossedProduct, CrossedSystem, RingMap,
                      _associates_and_commutes, _is_unit, crossed_product,
                      twisted_group_ring)

CLASSICAL_TWISTS = {(0, 0): "straight", (0, 1): "opposite",
                    (1, 0): "straight", (1, 1): "opposite"}


def bales_alpha(p: int, q: int) -> int:
    """The recursive {+1,-1} cocycle on XOR groups, evaluated exactly.

    Rules, tried in order: boundary alpha(p,0) = alpha(0,q) = 1;
    alpha(2p,2q) = alpha(p,q); alpha(1, odd) = -1; alpha(2p, 2q+1) =
    -alpha(p,q); alpha(2p+1, 2q+1) = alpha(q,p) for p nonzero.  The
    (odd, nonzero even) pair matches none of these and is routed through
    anti-commutativity, alpha(p,q) = -alpha(q,p), into the covered
    (even, odd) case.
    """
    if p < 0 or q < 0:
        raise ValueError("arguments must be non-negative")
    if p == 0 or q == 0:
        return 1
    p_even, q_even = p % 2 == 0, q % 2 == 0
    if p_even and q_even:
        return bales_alpha(p // 2, q // 2)
    if not p_even and not q_even:
        if p == 1:
            return -1
        return bales_alpha(q // 2, p // 2)
    if p_even:
        return -bales_alpha(p // 2, q // 2)
    return -bales_alpha(q, p)


@dataclass
class CayleyDoubling(CrossedProduct):
    base: Ring = None
    sigma: RingMap = None
    alpha: Element = None
    extended_sigma: RingMap = None


def cayley_dickson(B: Ring, sigma: RingMap, alpha: Element,
                   flavor="classical", twists=None) -> CayleyDoubling:
    """Double B along an involutive (anti-)automorphism and a central unit.

    flavor "classical" uses the straight/opposite twist pattern and also
    returns the extension of sigma to the double, sigma(a + b·u) =
    sigma(a) - b·u, asserted to be an anti-automorphism whenever sigma is
    one on B.
    """
    if not sigma.compose(sigma).is_identity():
        raise SigmaNotInvolutive("sigma squared is not the identity")
    if not isinstance(alpha, Element) or alpha.ring is not B:
        raise ShapeMismatch("alpha must be an element of the base ring")
    if not (_is_unit(B, alpha) and _associates_and_commutes(B, alpha)):
        raise AlphaNotCentralUnit("alpha must be a central, associating unit")
    if flavor == "classical":
        twist_map = dict(CLASSICAL_TWISTS)
    elif flavor == "custom":
        twist_map = dict(twists or {})
    else:
        raise ValueError("flavor must be 'classical' or 'custom'")
    G = cyclic_group(2)
    sys = CrossedSystem(G, {"*": B},
                        {0: RingMap.identity(B), 1: sigma},
                        alpha={(1, 1): alpha},
                        twists=twist_map,
                        name="order-two doubling")
    notes = []
    if _char_two(B):
        notes.append("characteristic 2: -1 = 1, the doubling twist degenerates")
    cp = crossed_product(sys, kind_tag="cayley_dickson", notes=tuple(notes))
    result = CayleyDoubling(cp.ring, cp.grading, cp.system, cp.kind_tag,
                            cp.offsets, cp.notes, base=B, sigma=sigma, alpha=alpha)
    if flavor == "classical":
        result.extended_sigma = _extend_conjugation(result)
        if sigma.anti:
            _assert_anti_automorphism(result.ring, result.extended_sigma)
    return result


def _char_two(B):
    if B.is_algebra:
        return B.field.char == 2
    two = B.element(B.zero_index)
    unit = B.probe_properties().unit
    if unit is None:
        return False
    return (unit + unit).is_zero()


def _extend_conjugation(cd: CayleyDoubling) -> RingMap:
    A, B = cd.ring, cd.base
    if A.is_algebra:
        d = B.dim
        if A.modulus is not None:
            M = np.zeros((2 * d, 2 * d), dtype=np.int64)
            M[:d, :d] = np.array(cd.sigma.matrix)
            M[d:, d:] = (-np.eye(d, dtype=np.int64)) % A.modulus
        else:
            from fractions import Fraction
            M = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
            for i in range(d):
                for j in range(d):
                    M[i][j] = cd.sigma.matrix[i][j]
                M[d + i][d + i] = Fraction(-1)
        return RingMap(A, A, matrix=M, anti=True)
    perm = []
    for idx in range(A.n):
        a_idx, b_idx = cd._index_to_tuple(idx)
        sa = cd.sigma.apply(B.element(a_idx))
        nb = -B.element(b_idx)
        perm.append(cd._tuple_to_index((sa.data, nb.data)))
    return RingMap(A, A, perm=perm, anti=True)


def _assert_anti_automorphism(A, m: RingMap):
    for x in A.spanning_elements():
        for y in A.spanning_elements():
            if m.apply(x * y) != m.apply(y) * m.apply(x):
                raise AssertionError("extended map fails to reverse products")


@dataclass
class CayleyTower:
    rings: list
    doublings: list
    notes: tuple = ()


def _diagonal_signs(m: RingMap):
    """The diagonal of a diagonal matrix map, or None."""
    d = m.source.dim
    signs = []
    for i in range(d):
        for j in range(d):
            v = m.matrix[i][j] if m.source.modulus is None else int(m.matrix[i, j])
            if i == j:
                signs.append(v)
            elif v != 0:
                return None
    return signs


def _interleave(cd: CayleyDoubling):
    """Present a doubling on the interleaved basis n_2p = (b_p, 0),
    n_2p+1 = (0, sigma(b_p)).

    With a diagonal conjugation this is a signed reindexing; it is the
    labeling under which the iterated doubling realizes the signed cocycle
    literally (index halving walks down the tower).  Returns the re-based
    ring and the conjugation, which stays diagonal.
    """
    A, B = cd.ring, cd.base
    d = B.dim
    signs = _diagonal_signs(cd.sigma)
    if signs is None:
        raise ShapeMismatch("interleaving expects a diagonal conjugation")
    f = A.field
    # new index 2p -> old p with sign 1; 2p+1 -> old d+p with sign s_p
    old_index = [0] * (2 * d)
    sgn = [f.one] * (2 * d)
    for p in range(d):
        old_index[2 * p] = p
        old_index[2 * p + 1] = d + p
        sgn[2 * p + 1] = f.coerce(signs[p])
    if A.modulus is not None:
        C = np.zeros((2 * d, 2 * d, 2 * d), dtype=np.int64)
        old = A.constants
        for i in range(2 * d):
            for j in range(2 * d):
                row = old[old_index[i], old_index[j]]
                for k in range(2 * d):
                    C[i, j, k] = (sgn[i] * sgn[j] * sgn[k] * row[old_index[k]]) % A.modulus
    else:
        from fractions import Fraction
        old = A.constants
        C = [[[Fraction(0)] * (2 * d) for _ in range(2 * d)] for _ in range(2 * d)]
        for i in range(2 * d):
            for j in range(2 * d):
                row = old[old_index[i]][old_index[j]]
                for k in range(2 * d):
                    # sgn is its own inverse, so it also converts coordinates
                    C[i][j][k] = sgn[i] * sgn[j] * sgn[k] * row[old_index[k]]
    newA = StructureAlgebra(A.field, 2 * d, C)
    # extended conjugation: diagonal sigma ⊕ (-1) interleaves to a diagonal
    diag = []
    for p in range(d):
        diag.append(signs[p])
        diag.append(-1)
    if newA.modulus is not None:
        M = np.diag(np.array(diag, dtype=np.int64)) % newA.modulus
    else:
        from fractions import Fraction
        M = [[Fraction(diag[i]) if i == j else Fraction(0) for j in range(2 * d)]
             for i in range(2 * d)]
    return newA, RingMap(newA, newA, matrix=M, anti=True)


def cayley_tower(field_dom, levels: int, alphas=None, cap=5) -> CayleyTower:
    """Iterated classical doublings of a field: [B_0, ..., B_levels].

    Level k has dimension 2^k, presented on the interleaved basis (so the
    sign tables realize the recursive cocycle literally); conjugation
    extends level by level and the twist defaults to -1 throughout.
    """
    if levels > cap:
        raise TooLarge(f"{levels} levels exceeds cap {cap} (dimension 2^{levels})")
    B = field_algebra(field_dom)
    sigma = RingMap.identity(B)
    sigma.anti = True  # conjugation on the base field is the identity
    rings = [B]
    doublings = []
    notes = ()
    for k in range(levels):
        if alphas is not None:
            a = alphas[k]
            alpha = a if isinstance(a, Element) else B.scalar_mul(a, B.probe_properties().unit)
        else:
            alpha = B.scalar_mul(-1, B.probe_properties().unit)
        cd = cayley_dickson(B, sigma, alpha, flavor="classical")
        notes = notes + cd.notes
        doublings.append(cd)
        B, sigma = _interleave(cd)
        rings.append(B)
    return CayleyTower(rings, doublings, notes)


def bales_twisted_ring(field_dom, nbits: int) -> CrossedProduct:
    """The twisted group ring of the XOR group on n bits with the signed
    recursive cocycle; over Q its table coincides with tower level n."""
    B = field_algebra(field_dom)
    return twisted_group_ring(B, xor_group(nbits),
                              lambda g, h: bales_alpha(g, h),
                              name=f"bales:{nbits}")
