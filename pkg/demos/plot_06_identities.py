"""
Commutator identities in free groups
====================================

Hall-Witt type identities and the triple-commutator expansions hold verbatim
in a free group, so free reduction alone confirms them.
"""
import random

from racg_lcs import freegroup as fg
from racg_lcs import nq

a, b, c = fg.gen(1), fg.gen(2), fg.gen(3)
for lhs, rhs in fg.hall_witt_identities(a, b, c):
    print(len(lhs), len(rhs), lhs == rhs)

rng = random.Random(1)
x, y, z = (fg.random_word(rng, 4, 6) for _ in range(3))
print(fg.verify_hall_witt(x, y, z), fg.verify_triple_lemma(x, y, z))
print(fg.run_identity_suite(100, seed=0)["failures"])

# congruences only hold modulo a term of the lower central series
for name, lhs, rhs, mod in nq.congruence_cases(a, b, c, 1, 1, 1):
    print(f"{name:17s} mod gamma_{mod}: {nq.verify_congruence(lhs, rhs, mod, 3)}")
