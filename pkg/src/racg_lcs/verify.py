"""Executable checks of the dimension, basis and identity statements.

Each claim is a row of data (complex, degree, expected dimension, generator
families); :func:`run_all` evaluates the rows and returns one
:class:`ClaimReport` per claim.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import freegroup as fg
from . import lie2, nq, racg
from .complex import (SimplicialComplex, all_complexes, flag_complex_of_graph,
                      graphs_up_to_isomorphism, gscox_generators, rmk_homology)

DEFAULT_SEED = 20240601


@dataclass
class ClaimReport:
    claim: str
    status: str
    witness: dict = field(default_factory=dict)
    statement: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"claim": self.claim, "status": self.status, "statement": self.statement,
                "witness": self.witness}


# -- generator families (left-nested index sequences) -------------------------

FREE3_L4 = [(1, 2, 1, 1), (1, 3, 1, 1), (2, 3, 2, 1), (1, 3, 2, 1), (1, 3, 1, 2),
            (2, 3, 2, 2), (2, 3, 1, 2), (1, 3, 2, 3)]

FREE3_L3 = [(1, 2, 1), (1, 3, 1), (1, 3, 2), (2, 3, 1), (2, 3, 2)]

FREE4_L3 = [(1, 2, 2), (1, 3, 3), (1, 4, 4), (2, 3, 3), (2, 4, 4), (3, 4, 4),
            (1, 3, 2), (1, 4, 2), (1, 4, 3), (2, 4, 1), (2, 4, 3),
            (3, 4, 1), (3, 4, 2), (2, 3, 1)]


def free3_family(i: int, j: int, k: int) -> list[tuple[int, ...]]:
    """Eight-element basis of L^4 for three discrete points, indices relabelled."""
    return [(j, i, i, i), (k, i, i, i), (k, j, j, i), (k, i, j, i), (k, i, i, j),
            (k, j, j, j), (k, j, i, j), (k, i, j, k)]


def free4_family(i: int, j: int, k: int, l: int) -> list[tuple[int, ...]]:
    """Thirty-two element basis of L^4 for four discrete points (A_i, A_j, A_k, A_l, B)."""
    a_i = [(k, j, j, i), (k, i, j, i), (k, i, i, j), (k, j, i, j), (k, i, j, k)]
    a_j = [(j, i, i, i), (l, j, j, i), (l, i, j, i), (l, i, i, j), (l, j, i, j), (l, i, j, l)]
    a_k = [(k, i, i, i), (l, i, i, i), (l, k, k, i), (l, i, k, i), (l, i, i, k),
           (l, k, i, k), (l, i, k, l)]
    a_l = [(k, j, j, j), (l, j, j, j), (l, k, k, j), (l, j, k, j), (l, j, j, k),
           (l, k, k, k), (l, k, j, k), (l, j, k, l)]
    b = [(j, l, k, i), (i, l, k, j), (i, l, j, k), (j, l, i, k), (k, l, i, j), (k, l, j, i)]
    return a_i + a_j + a_k + a_l + b


def two_edge_family(i: int, j: int) -> list[tuple[int, ...]]:
    return [(i, j, i, i)]


def one_edge_family(i: int, j: int, k: int) -> list[tuple[int, ...]]:
    return [(i, k, i, i), (k, j, k, k), (k, j, k, i), (k, j, i, k)]


def low_degree_basis(K: SimplicialComplex) -> dict[int, list[tuple[int, ...]]]:
    """Commutator bases of L^1, L^2, L^3 read off the complex."""
    from .complex import components_of_mask, mask_of

    m = K.m
    b1 = [(i,) for i in range(1, m + 1)]
    b2 = [(i, j) for i, j in K.non_edges]
    b3 = [(i, j, j) for i, j in K.non_edges]
    for j in range(1, m + 1):
        for i in range(1, j):
            for k in range(1, j):
                if k == i:
                    continue
                comp = next(c for c in components_of_mask(K.adjacency, mask_of((i, j, k)))
                            if c >> (i - 1) & 1)
                if not comp >> (j - 1) & 1 and not comp & ((1 << (i - 1)) - 1):
                    b3.append((i, j, k))
    return {1: b1, 2: b2, 3: b3}


def _swap_first_two(family):
    return [(w[1], w[0]) + tuple(w[2:]) for w in family]


def symmetry_check(K: SimplicialComplex, claimed_family: Sequence[Sequence[int]],
                   permutation: dict[int, int] | Sequence[int] | str, degree: int | None = None) -> bool:
    """Relabel the family by a vertex permutation preserving ``K``; still a basis?

    ``permutation="swap-first-two"`` instead swaps the first two entries of
    every bracket.
    """
    family = [tuple(w) for w in claimed_family]
    degree = degree or len(family[0])
    if permutation == "swap-first-two":
        return nq.verify_basis_claim(K, degree, _swap_first_two(family))
    if not isinstance(permutation, dict):
        permutation = {v + 1: p for v, p in enumerate(permutation)}
    if sorted(permutation) != list(range(1, K.m + 1)) or sorted(permutation.values()) != list(range(1, K.m + 1)):
        raise ValueError(f"{permutation} is not a permutation of 1..{K.m}")
    if K.permuted(permutation) != K:
        raise ValueError(f"permutation {permutation} does not preserve the complex")
    moved = [tuple(permutation[x] for x in w) for w in family]
    return nq.verify_basis_claim(K, degree, moved)


def _drop_one_fails(K, k, family) -> bool:
    return not any(nq.verify_basis_claim(K, k, family[:r] + family[r + 1:]) for r in range(len(family)))


# -- claims -----------------------------------------------------------------

def _claim_dims_3():
    cases = {
        "discrete": (SimplicialComplex.discrete(3), [3, 3, 5, 8]),
        "one-edge": (flag_complex_of_graph(3, [(1, 2)]), [3, 2, 3, 4]),
        "two-edges": (flag_complex_of_graph(3, [(1, 3), (2, 3)]), [3, 1, 1, 1]),
        "triangle": (flag_complex_of_graph(3, [(1, 2), (1, 3), (2, 3)]), [3, 0, 0, 0]),
    }
    got = {name: nq.lcs_dims(K, 4) for name, (K, _) in cases.items()}
    ok = all(got[name] == exp for name, (_, exp) in cases.items())
    return ok, {"dims": got}


def _claim_free3_l4():
    K = SimplicialComplex.discrete(3)
    dims = nq.lcs_dims(K, 4)
    basis = nq.verify_basis_claim(K, 4, FREE3_L4)
    degree3 = nq.verify_basis_claim(K, 3, FREE3_L3)
    minimal = _drop_one_fails(K, 4, FREE3_L4)
    return dims[3] == 8 and basis and degree3 and minimal, {
        "dim_L4": dims[3], "basis": basis, "degree3_basis": degree3, "drop_one_fails": minimal}


def _claim_cor_free3():
    K = SimplicialComplex.discrete(3)
    perms = {"".join(map(str, p)): nq.verify_basis_claim(K, 4, free3_family(*p))
             for p in itertools.permutations((1, 2, 3))}
    swapped = symmetry_check(K, FREE3_L4, "swap-first-two")
    relabel = symmetry_check(K, FREE3_L4, {1: 2, 2: 1, 3: 3})
    return all(perms.values()) and swapped and relabel, {
        "relabellings": perms, "swap_first_two": swapped, "swap_1_2": relabel}


def _claim_commcox3():
    out = {}
    tri = flag_complex_of_graph(3, [(1, 2), (1, 3), (2, 3)])
    out["a"] = {"dim": nq.lcs_dims(tri, 4)[3], "basis": nq.verify_basis_claim(tri, 4, [])}
    b = {}
    for k in (1, 2, 3):
        i, j = [v for v in (1, 2, 3) if v != k]
        K = flag_complex_of_graph(3, [(i, k), (j, k)])
        b[f"edges {i}{k},{j}{k}"] = {"dim": nq.lcs_dims(K, 4)[3],
                                     "basis": nq.verify_basis_claim(K, 4, two_edge_family(i, j))}
    out["b"] = b
    c = {}
    for i, j in itertools.combinations((1, 2, 3), 2):
        k = 6 - i - j
        K = flag_complex_of_graph(3, [(i, j)])
        c[f"edge {i}{j}"] = {"dim": nq.lcs_dims(K, 4)[3],
                             "basis": nq.verify_basis_claim(K, 4, one_edge_family(i, j, k))}
    out["c"] = c
    D = SimplicialComplex.discrete(3)
    out["d"] = {"dim": nq.lcs_dims(D, 4)[3],
                "basis": all(nq.verify_basis_claim(D, 4, free3_family(*p))
                             for p in itertools.permutations((1, 2, 3)))}
    ok = (out["a"]["dim"] == 0 and out["a"]["basis"]
          and all(v["dim"] == 1 and v["basis"] for v in b.values())
          and all(v["dim"] == 4 and v["basis"] for v in c.values())
          and out["d"]["dim"] == 8 and out["d"]["basis"])
    return ok, out


def _claim_free4_l4():
    K = SimplicialComplex.discrete(4)
    dims = nq.lcs_dims(K, 4)
    fam = free4_family(1, 2, 3, 4)
    basis = nq.verify_basis_claim(K, 4, fam)
    minimal = _drop_one_fails(K, 4, fam)
    perms = {"".join(map(str, p)): nq.verify_basis_claim(K, 4, free4_family(*p))
             for p in itertools.permutations((1, 2, 3, 4))}
    cycle = symmetry_check(K, fam, {1: 2, 2: 3, 3: 4, 4: 1})
    swapped = symmetry_check(K, fam, "swap-first-two")
    deg3 = nq.verify_basis_claim(K, 3, FREE4_L3)
    ok = dims == [4, 6, 14, 32] and basis and minimal and all(perms.values()) and cycle and swapped and deg3
    return ok, {"dims": dims, "basis": basis, "drop_one_fails": minimal,
                "relabellings_passed": sum(perms.values()), "relabellings": len(perms),
                "four_cycle": cycle, "swap_first_two": swapped, "degree3_list_basis": deg3}


def random_flag_complexes(count: int, seed: int, max_m: int = 5) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(2, max_m)
        edges = [e for e in itertools.combinations(range(1, m + 1), 2) if rng.random() < 0.4]
        out.append(flag_complex_of_graph(m, edges))
    return out


def _claim_low_degree(seed: int):
    rows = []
    ok = True
    for K in random_flag_complexes(20, seed):
        got = nq.lcs_dims(K, 3)
        expected = list(nq.combinatorial_dims(K))
        bases = low_degree_basis(K)
        pc = nq.racg_quotient(K, 3)
        basis_ok = all(nq.verify_basis_claim(K, k, bases[k], pc) for k in (1, 2, 3))
        ok &= got == expected and basis_ok
        rows.append({"m": K.m, "edges": sorted(K.edges), "nq": got, "combinatorial": expected,
                     "bases": basis_ok})
    return ok, {"complexes": rows}


def _claim_identities(seed: int):
    free = fg.run_identity_suite(100, seed)
    bad_pairs = []
    count = 0
    for m in range(2, 5):
        for K in all_complexes(m):
            for i, j in itertools.permutations(range(1, m + 1), 2):
                count += 1
                if not (racg.verify_square_identity(K, i, j) and racg.verify_degree4_expansion(K, i, j)):
                    bad_pairs.append((m, sorted(K.edges), i, j))
    return not free["failures"] and not bad_pairs, {
        "free_trials": free["trials"], "free_failures": len(free["failures"]),
        "racg_pairs_checked": count, "racg_failures": bad_pairs}


def _claim_congruences():
    g = [(1,), (2,), (3,), (4,)]
    subs = [
        ("generators", g[0], g[1], g[2], (1, 1, 1)),
        ("a=(g1,g2)", fg.commutator(g[0], g[1]), g[2], g[3], (2, 1, 1)),
        ("b=(g1,g2)", g[2], fg.commutator(g[0], g[1]), g[3], (1, 2, 1)),
        ("c=(g1,g2)", g[2], g[3], fg.commutator(g[0], g[1]), (1, 1, 2)),
    ]
    results = {}
    for name, a, b, c, (wa, wb, wc) in subs:
        for label, lhs, rhs, mod in nq.congruence_cases(a, b, c, wa, wb, wc):
            results[f"{name}: {label} mod gamma_{mod}"] = nq.verify_congruence(lhs, rhs, mod, 4)
    return all(results.values()), results


def _claim_structure(seed: int):
    rows = []
    ok = True
    graphs = [K for m in range(2, 5) for K in graphs_up_to_isomorphism(m)]
    for K in graphs:
        pc = nq.racg_quotient(K, 5)
        elem = nq.elementary_abelian_layers(pc)
        cons = not pc.consistency_failures(weighted=True)
        sq = not nq.squares_descend(pc, 50, seed)
        ok &= elem and cons and sq
        if not (elem and cons and sq):
            rows.append({"m": K.m, "edges": sorted(K.edges), "elementary": elem,
                         "consistent": cons, "squares": sq})
    return ok, {"graphs": len(graphs), "failures": rows}


def _claim_homology():
    out = {}
    ok = True
    for m in (3, 4):
        K = SimplicialComplex.discrete(m)
        h1 = rmk_homology(K, 1)
        gens = len(gscox_generators(K))
        out[f"discrete-{m}"] = {"H1": h1.to_list().count(0), "torsion": list(h1.torsion),
                                "generators": gens}
        ok &= h1.free_rank == gens and not h1.torsion
    ok &= out["discrete-3"]["H1"] == 5 and out["discrete-4"]["H1"] == 17
    return ok, out


def _claim_lie():
    rows = {}
    ok = True
    for m in (3, 4):
        K = SimplicialComplex.discrete(m)
        cmp = lie2.compare_with_group(K, 4)
        rows[f"discrete-{m}"] = cmp
        ok &= all(r["kernel"] == 0 for r in cmp[:3]) and all(r["kernel"] >= 0 for r in cmp)
    rel = lie2.check_derived_relation(3, [], lie2.square_relations(3), (1, 2, 1, 1), (1, 2, 1, 2))
    free = lie2.check_derived_relation(3, [], [], (1, 2, 1, 1), (1, 2, 1, 2))
    ok &= rel and not free
    return ok, {"compare": rows, "degree4_relation": rel, "free_algebra_distinguishes": not free}


CLAIMS: dict[str, tuple[str, Callable]] = {
    "dims-3": ("L^1..L^4 of RC_K for the four graphs on 3 vertices", lambda s: _claim_dims_3()),
    "free3-L4": ("Z2*Z2*Z2: L^4 = Z2^8 with the listed eight brackets as basis",
                 lambda s: _claim_free3_l4()),
    "cor-free3": ("the eight-element basis survives every relabelling of {1,2,3}",
                  lambda s: _claim_cor_free3()),
    "commcox3": ("3 vertices: L^4 has dimension 0, 1, 4, 8 for 3, 2, 1, 0 edges with the listed generators",
                 lambda s: _claim_commcox3()),
    "free4-L4": ("Z2*Z2*Z2*Z2: L^4 = Z2^32 with A_1..A_4, B as basis, for every relabelling",
                 lambda s: _claim_free4_l4()),
    "low-degree": ("L^1..L^3 bases from the complex, 20 random flag complexes",
                   _claim_low_degree),
    "identities": ("Hall-Witt, triple-commutator expansions, (i,j,i)=(i,j,j), (i,j,i,i)=(i,j)^4=(i,j,i,j)",
                   _claim_identities),
    "congruences": ("triple-commutator congruences in free nilpotent quotients",
                    lambda s: _claim_congruences()),
    "structure": ("LCS factors elementary abelian, consistency, squares descend (graphs on <= 4 vertices, class 5)",
                  _claim_structure),
    "homology": ("H_1(R_K) free of rank equal to the number of nested-commutator generators",
                 lambda s: _claim_homology()),
    "lie": ("F^i = L^i for i <= 3, degree-4 relation in F, dim F^d >= dim L^d",
            lambda s: _claim_lie()),
}


def run_all(scope: str | Sequence[str] | None = None, seed: int = DEFAULT_SEED) -> list[ClaimReport]:
    """Evaluate the selected claims (all by default)."""
    if scope is None:
        ids = list(CLAIMS)
    elif isinstance(scope, str):
        ids = [scope]
    else:
        ids = list(scope)
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claim id(s): {', '.join(unknown)}")
    reports = []
    for cid in ids:
        statement, fn = CLAIMS[cid]
        ok, witness = fn(seed)
        reports.append(ClaimReport(cid, "pass" if ok else "fail", witness, statement))
    return reports
