"""
A GF(2) Lie algebra mapping onto L(RC_K)
========================================

Quotient the free Lie algebra by the edge brackets and by
[x_i, x_j, x_j] = [x_i, x_j, x_i], then compare dimensions with the lower
central series of the group.
"""
from racg_lcs import lie2
from racg_lcs.complex import SimplicialComplex

# the free Lie algebra: Lyndon words, counted by the Witt formula
print([len(lie2.free_lie_basis(3, d)) for d in range(1, 6)])
print([lie2.witt_number(3, d) for d in range(1, 6)])

for m in (3, 4):
    rows = lie2.compare_with_group(SimplicialComplex.discrete(m), 4)
    print(f"{m} points:", [(r["dim_F"], r["dim_L"]) for r in rows])

# a relation that follows from the squares in degree 4, but not in the free algebra
sq = lie2.square_relations(3)
print(lie2.check_derived_relation(3, [], sq, (1, 2, 1, 1), (1, 2, 1, 2)))
print(lie2.check_derived_relation(3, [], [], (1, 2, 1, 1), (1, 2, 1, 2)))
