import numpy as np
import pytest

from ringlab import (GF, QQ, cayley_tower, enumerate_elements,
                     make_structure_algebra, make_table_ring, opposite,
                     probe_properties, ring_eval, zmod_ring)
from ringlab.errors import (DistributivityViolation, InfiniteScalarField,
                            NotAbelianGroup, RingMismatch, ShapeMismatch)


def _zn_tables(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def test_make_table_ring_zn():
    add, mul = _zn_tables(4)
    r4 = make_table_ring(add, mul, 0)
    assert r4.n == 4
    add6, mul6 = _zn_tables(6)
    r6 = make_table_ring(add6, mul6, 0)
    p = probe_properties(r6)
    assert p.commutative and p.unital and p.unit.data == 1


def test_make_table_ring_rejects_broken_mul():
    add, mul = _zn_tables(4)
    mul = mul.copy()
    mul[1, 2] = 3  # 1*2 should be 2
    with pytest.raises(DistributivityViolation):
        make_table_ring(add, mul, 0)


def test_make_table_ring_rejects_broken_add():
    add, mul = _zn_tables(4)
    add = add.copy()
    add[1, 2] = 0  # breaks symmetry/permutation structure
    with pytest.raises(NotAbelianGroup):
        make_table_ring(add, mul, 0)


def test_structure_algebra_shapes():
    one_dim = make_structure_algebra(1, QQ, [[[1]]])
    e = one_dim.basis_element(0)
    assert (e * e) == e
    with pytest.raises(ShapeMismatch):
        make_structure_algebra(2, QQ, [[[1]]])


def test_gaussian_integers_product():
    # basis 1, i with i^2 = -1
    qi = make_structure_algebra(2, QQ, [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])
    one_plus_i = qi.element([1, 1])
    one_minus_i = qi.element([1, -1])
    assert ring_eval(one_plus_i, one_minus_i, "mul") == qi.element([2, 0])
    p = probe_properties(qi)
    assert p.associative and p.commutative and p.unital


def test_ring_eval_and_mismatch():
    r6 = zmod_ring(6)
    assert ring_eval(r6.element(4), r6.element(5), "add").data == 3
    assert ring_eval(r6.element(2), None, "neg").data == 4
    other = zmod_ring(6)
    with pytest.raises(RingMismatch):
        ring_eval(r6.element(1), other.element(1), "add")


def test_quaternions_match_doubling():
    tower = cayley_tower(GF(3), 2)
    h3 = tower.rings[2]
    assert h3.size() == 81
    u1, u2, u3 = (h3.basis_element(i) for i in (1, 2, 3))
    assert u1 * u2 == u3
    assert u2 * u1 == -u3
    p = probe_properties(h3)
    assert p.associative and not p.commutative


def test_probe_witnesses():
    tower = cayley_tower(QQ, 3)
    octonions = tower.rings[3]
    p = probe_properties(octonions)
    assert not p.associative
    a, b, c = p.associative_witness
    assert (a * b) * c != a * (b * c)


def test_opposite_is_an_involution():
    r6 = zmod_ring(6)
    opp = opposite(opposite(r6))
    assert np.array_equal(opp.mul_table, r6.mul_table)
    assert np.array_equal(opposite(r6).mul_table, r6.mul_table)  # commutative
    h3 = cayley_tower(GF(3), 2).rings[2]
    opp = opposite(h3)
    u1, u2 = opp.basis_element(1), opp.basis_element(2)
    assert u1 * u2 == -opp.basis_element(3)
    back = opposite(opp)
    assert np.array_equal(np.asarray(back.constants), np.asarray(h3.constants))


def test_enumerate_elements():
    r4 = zmod_ring(4)
    els = enumerate_elements(r4)
    assert len(els) == 4 and els[0].is_zero()
    h3 = cayley_tower(GF(3), 2).rings[2]
    assert len(enumerate_elements(h3)) == 81
    hq = cayley_tower(QQ, 2).rings[2]
    with pytest.raises(InfiniteScalarField):
        enumerate_elements(hq)


def test_convert_to_table():
    from ringlab.rings import convert_to_table
    from ringlab.ideals import enumerate_ideals
    h3 = cayley_tower(GF(3), 2).rings[2]
    table = convert_to_table(h3)
    assert table.n == 81
    assert probe_properties(table).associative
    assert len(enumerate_ideals(table)) == 2  # matches the algebra view
    hq = cayley_tower(QQ, 2).rings[2]
    with pytest.raises(InfiniteScalarField):
        convert_to_table(hq)
    o3 = cayley_tower(GF(3), 3).rings[3]
    from ringlab.errors import TooLarge
    with pytest.raises(TooLarge):
        convert_to_table(o3, cap=100)


def test_table_distributivity_holds_exhaustively():
    r6 = zmod_ring(6)
    for a in range(6):
        for b in range(6):
            for c in range(6):
                ea, eb, ec = r6.element(a), r6.element(b), r6.element(c)
                assert ea * (eb + ec) == ea * eb + ea * ec
                assert (ea + eb) * ec == ea * ec + eb * ec
