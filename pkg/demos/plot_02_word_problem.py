"""
Normal forms in a right-angled Coxeter group
============================================

Generators are involutions; two of them commute exactly when they span an
edge.  Every word has a canonical shortest representative.
"""
from racg_lcs import racg
from racg_lcs.complex import SimplicialComplex, flag_complex_of_graph

# g1, g2 commute; g3 is free
K = flag_complex_of_graph(3, [(1, 2)])

for w in [(1, 1), (1, 2, 1), (3, 1, 3, 1), (2, 3, 1, 2, 1, 3)]:
    print(w, "->", racg.normal_form(K, w))

# the commutator (g1, g3) has infinite order: its powers never collapse
c = racg.commutator((1,), (3,))
print([len(racg.normal_form(K, racg.power(c, n))) for n in range(1, 5)])

# square and degree-4 identities hold for every pair in every complex
D = SimplicialComplex.discrete(3)
print("identities hold:", racg.racg_identity_report(D)["ok"])
