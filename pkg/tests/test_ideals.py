import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import (GF, QQ, cayley_tower, center, centralizer,
                     check_ideal_associativity, enumerate_ideals,
                     enumerate_subring_ideals, field_algebra, full_matrix_algebra,
                     full_subring, ideal_closure, identity_property,
                     is_A_invariant, is_A_simple, is_maximal_commutative,
                     is_simple, apply_i_and_p, make_structure_algebra,
                     subring_closure, zmod_ring)
from ringlab.errors import BNotCommutative, NotAInvariant
from ringlab.ideals import IdealBasis
from ringlab.subgroups import full_subgroup, product_span


def test_ideal_closure_examples():
    r6 = zmod_ring(6)
    assert sorted(ideal_closure(r6, [r6.element(2)]).span.members) == [0, 2, 4]
    assert sorted(ideal_closure(r6, []).span.members) == [0]
    m2 = full_matrix_algebra(2, GF(2))
    e11 = m2.element([1, 0, 0, 0])
    assert ideal_closure(m2, [e11]).span.is_full()


def test_ideal_closure_idempotent_and_monotone():
    r12 = zmod_ring(12)
    s = ideal_closure(r12, [r12.element(4)])
    again = ideal_closure(r12, s.spanning())
    assert again.span == s.span
    bigger = ideal_closure(r12, [r12.element(4), r12.element(6)])
    assert bigger.span.contains_subgroup(s.span)


@given(st.sets(st.integers(0, 11), max_size=4))
@settings(max_examples=40, deadline=None)
def test_ideal_closure_absorbs(gens):
    r12 = zmod_ring(12)
    I = ideal_closure(r12, [r12.element(g) for g in gens])
    full = full_subgroup(r12)
    assert I.span.contains_subgroup(product_span(r12, full, I.span))
    assert I.span.contains_subgroup(product_span(r12, I.span, full))


def test_enumerate_ideals_counts():
    assert len(enumerate_ideals(zmod_ring(6))) == 4
    assert len(enumerate_ideals(zmod_ring(4))) == 3
    assert len(enumerate_ideals(full_matrix_algebra(2, GF(2)))) == 2
    members = sorted(sorted(i.span.members) for i in enumerate_ideals(zmod_ring(6)))
    assert members == [[0], [0, 1, 2, 3, 4, 5], [0, 2, 4], [0, 3]]


def test_every_enumerated_ideal_absorbs():
    for ring in (zmod_ring(6), full_matrix_algebra(2, GF(3))):
        full = full_subgroup(ring)
        for I in enumerate_ideals(ring):
            assert I.span.contains_subgroup(product_span(ring, full, I.span))
            assert I.span.contains_subgroup(product_span(ring, I.span, full))


def test_enumerate_ideals_respects_cap():
    from ringlab.errors import TooLarge, InfiniteScalarField
    o3 = cayley_tower(GF(3), 3).rings[3]
    with pytest.raises(TooLarge):
        enumerate_ideals(o3, cap=100)
    with pytest.raises(InfiniteScalarField):
        enumerate_ideals(cayley_tower(QQ, 2).rings[2])


def test_is_simple_matches_ideal_count():
    for ring in (zmod_ring(4), zmod_ring(6), zmod_ring(5),
                 full_matrix_algebra(2, GF(2)), full_matrix_algebra(2, GF(3))):
        verdict = is_simple(ring)
        assert verdict.is_simple == (len(enumerate_ideals(ring)) == 2)


def test_is_simple_verdicts():
    v = is_simple(zmod_ring(4))
    assert v.status == "NotSimple" and sorted(v.witness.span.members) == [0, 2]
    assert is_simple(full_matrix_algebra(2, GF(2))).is_simple
    sq = cayley_tower(QQ, 4).rings[4]
    assert is_simple(sq).status == "Inconclusive"


def test_zero_multiplication_is_never_simple():
    null = make_structure_algebra(1, GF(2), [[[0]]])
    assert is_simple(null).status == "NotSimple"


def test_centralizers():
    hq = cayley_tower(QQ, 2).rings[2]
    assert center(hq).measure() == 1
    qi = cayley_tower(QQ, 1).rings[1]
    assert center(qi).measure() == 2
    m2 = full_matrix_algebra(2, GF(2))
    diag = centralizer(m2, [m2.element([1, 0, 0, 0]), m2.element([0, 0, 0, 1])])
    assert diag.measure() == 2  # the diagonal itself


def test_maximal_commutative():
    m2 = full_matrix_algebra(2, GF(2))
    scalars = subring_closure(m2, [m2.element([1, 0, 0, 1])])
    assert not is_maximal_commutative(m2, scalars)
    diag = subring_closure(m2, [m2.element([1, 0, 0, 0]), m2.element([0, 0, 0, 1])])
    assert is_maximal_commutative(m2, diag)
    r6 = zmod_ring(6)
    assert is_maximal_commutative(r6, full_subring(r6))
    with pytest.raises(BNotCommutative):
        is_maximal_commutative(m2, full_subring(m2))


def test_a_invariance_trivial_cases():
    r6 = zmod_ring(6)
    B = full_subring(r6)
    zero = ideal_closure(r6, [])
    assert is_A_invariant(r6, B, zero)
    whole = IdealBasis(r6, B.span, of_subring=B, check=False)
    assert is_A_invariant(r6, B, whole)


def test_a_simplicity():
    r4 = zmod_ring(4)
    v = is_A_simple(r4, full_subring(r4))
    assert not v.holds and sorted(v.witness.span.members) == [0, 2]
    f5 = zmod_ring(5)
    assert is_A_simple(f5, full_subring(f5)).holds


def test_ideal_associativity_associative_ring():
    m2 = full_matrix_algebra(2, GF(3))
    B = full_subring(m2)
    for I in enumerate_ideals(m2):
        assert check_ideal_associativity(m2, B, I, copies=2)
        assert check_ideal_associativity(m2, B, I, copies=3)


def test_ideal_associativity_octonions_full_ideal():
    o3 = cayley_tower(GF(3), 3).rings[3]
    B = full_subring(o3)
    whole = IdealBasis(o3, full_subgroup(o3), check=False)
    assert check_ideal_associativity(o3, B, whole, copies=2)


def test_ideal_associativity_violation():
    # e0*e1 = e0, all other products zero: (IA)A = span{e0} but I(AA) = 0
    R = make_structure_algebra(2, GF(2), [[[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    assert not R.probe_properties().associative
    B = full_subring(R)
    I = ideal_closure(R, [R.basis_element(0)])
    assert not I.span.is_full()
    assert not check_ideal_associativity(R, B, I, copies=2)


def test_identity_property():
    r6 = zmod_ring(6)
    B = full_subring(r6)
    for I in enumerate_ideals(r6):
        assert identity_property(I, B, side="left")
        assert identity_property(I, B, side="right")
    r8 = zmod_ring(8)
    evens = subring_closure(r8, [r8.element(2)])
    I = IdealBasis(r8, evens.span, of_subring=evens, check=False)
    assert not identity_property(I, evens, side="left")
    zero = ideal_closure(r8, [])
    assert identity_property(zero, evens, side="left")


def test_apply_i_and_p():
    r6 = zmod_ring(6)
    B = full_subring(r6)
    zero = ideal_closure(r6, [])
    ia, back = apply_i_and_p(r6, B, zero)
    assert ia.is_zero() and back.is_zero()
    two = ideal_closure(r6, [r6.element(2)])
    ia, back = apply_i_and_p(r6, B, two)
    assert back.span == two.span
    # a non-invariant ideal is rejected
    m2 = full_matrix_algebra(2, GF(2))
    diag = subring_closure(m2, [m2.element([1, 0, 0, 0]), m2.element([0, 0, 0, 1])])
    first = [I for I in enumerate_subring_ideals(m2, diag) if I.measure() == 1][0]
    with pytest.raises(NotAInvariant):
        apply_i_and_p(m2, diag, first)


def test_subring_ideals_of_diagonal():
    m2 = full_matrix_algebra(2, GF(2))
    diag = subring_closure(m2, [m2.element([1, 0, 0, 0]), m2.element([0, 0, 0, 1])])
    ideals = enumerate_subring_ideals(m2, diag)
    assert [i.measure() for i in ideals] == [0, 1, 1, 2]
    assert is_A_simple(m2, diag).holds
