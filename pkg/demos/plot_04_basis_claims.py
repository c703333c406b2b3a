"""
Checking generating sets of L^4
===============================

A list of left-nested commutators is a basis of L^k exactly when its GF(2)
coordinate matrix has full rank equal to dim L^k.
"""
import itertools

from racg_lcs import nq, verify
from racg_lcs.complex import SimplicialComplex

D3 = SimplicialComplex.discrete(3)
print("8 brackets, 3 points:", nq.verify_basis_claim(D3, 4, verify.FREE3_L4))
print("rank / dim:", nq.claim_rank(D3, 4, verify.FREE3_L4))

# every relabelling of the vertices gives another basis
print(all(nq.verify_basis_claim(D3, 4, verify.free3_family(*p))
          for p in itertools.permutations((1, 2, 3))))

# dropping any bracket loses the property
fam = verify.FREE3_L4
print([nq.verify_basis_claim(D3, 4, fam[:r] + fam[r + 1:]) for r in range(len(fam))])

# four points: 32 brackets
D4 = SimplicialComplex.discrete(4)
print("32 brackets, 4 points:", nq.verify_basis_claim(D4, 4, verify.free4_family(1, 2, 3, 4)))

# the whole encoded suite
for report in verify.run_all(["dims-3", "commcox3", "homology"]):
    print(report.status, report.claim)
