"""Finite rings two ways: operation tables and structure constants.

Build Z_6 from its tables, the Gaussian rationals from structure constants,
and probe associativity / commutativity / units.
"""

from ringlab import (QQ, make_structure_algebra, probe_properties, ring_eval,
                     zmod_ring, opposite, enumerate_elements)

r6 = zmod_ring(6)
props = probe_properties(r6)
print("Z_6:", props.summary(), "unit =", props.unit.data)
print("4 + 5 =", ring_eval(r6.element(4), r6.element(5), "add").data)

# basis 1, i with i^2 = -1
qi = make_structure_algebra(2, QQ, [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])
x = qi.element([1, 1])       # 1 + i
y = qi.element([1, -1])      # 1 - i
print("(1+i)(1-i) =", (x * y).data)

# the opposite ring reverses multiplication and is an involution
r6op = opposite(opposite(r6))
print("opposite is involutive:", (r6op.mul_table == r6.mul_table).all())

print("elements of Z_4, zero first:",
      [e.data for e in enumerate_elements(zmod_ring(4))])
