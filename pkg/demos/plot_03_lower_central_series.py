"""
Lower central series via nilpotent quotients
============================================

The nilpotent quotient engine builds a consistent polycyclic presentation of
G / gamma_{c+1}.  Each layer gamma_k / gamma_{k+1} is an abelian group; for a
right-angled Coxeter group it is a GF(2) vector space.
"""
from racg_lcs import nq
from racg_lcs.complex import SimplicialComplex, flag_complex_of_graph

for name, K in [("2 points", SimplicialComplex.discrete(2)),
                ("3 points", SimplicialComplex.discrete(3)),
                ("one edge", flag_complex_of_graph(3, [(1, 2)])),
                ("4 points", SimplicialComplex.discrete(4))]:
    pc = nq.racg_quotient(K, 4)
    print(f"{name:9s} dims {pc.dims}  ({pc.n} pc-generators)")

# free groups run through the same engine: layer ranks are the Witt numbers
F3 = nq.free_quotient(3, 4)
print("F_3 ranks", [inv.free_rank for inv in F3.layer_invariants])

# coordinates of a commutator in L^4 for three points
pc = nq.racg_quotient(SimplicialComplex.discrete(3), 4)
print("(1,2,1,1) ->", pc.express(nq.nested_word((1, 2, 1, 1)), 4))
print("(1,2,1,2) ->", pc.express(nq.nested_word((1, 2, 1, 2)), 4))
print("(1)       ->", nq.express(pc, (1,), 2))
