"""The ideal laboratory: closures, full lattices, brute-force simplicity.

Every quantifier over ideals is realized exactly: an ideal is the join of
the principal ideals of its elements, so enumerating principal ideals and
closing under joins walks the whole lattice.
"""

from ringlab import (GF, center, centralizer, enumerate_ideals,
                     full_matrix_algebra, ideal_closure, is_simple,
                     is_maximal_commutative, subring_closure, zmod_ring)

r6 = zmod_ring(6)
print("ideal generated by 2 in Z_6:",
      sorted(ideal_closure(r6, [r6.element(2)]).span.members))
print("all ideals of Z_6:",
      [sorted(i.span.members) for i in enumerate_ideals(r6)])

m2 = full_matrix_algebra(2, GF(2))
print("M_2(F_2) ideal count:", len(enumerate_ideals(m2)))
print("M_2(F_2) simple?", is_simple(m2))
print("Z_4 simple?", is_simple(zmod_ring(4)))

# centralizers and maximal commutativity
diag = subring_closure(m2, [m2.element([1, 0, 0, 0]), m2.element([0, 0, 0, 1])])
print("centralizer of the diagonal is the diagonal:",
      centralizer(m2, diag.spanning()).span == diag.span)
print("diagonal maximal commutative?", is_maximal_commutative(m2, diag))
print("center of M_2(F_2) has dimension", center(m2).measure())
