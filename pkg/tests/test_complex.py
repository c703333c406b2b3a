import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from racg_lcs.complex import (AbelianInvariants, CommutatorPattern, SimplicialComplex,
                              all_complexes, complex_from_json, components_of_mask,
                              connected_components, cubical_rmk_homology, flag_complex_of_graph,
                              full_subcomplex, graphs_up_to_isomorphism, gscox_generators,
                              mask_of, reduced_homology, rmk_homology, vertices_of)


def faces_as_sets(K):
    return {frozenset(vertices_of(f)) for f in K.faces}


@st.composite
def complexes(draw, max_m=5):
    m = draw(st.integers(1, max_m))
    faces = draw(st.lists(st.sets(st.integers(1, m), min_size=1, max_size=m), max_size=6))
    return SimplicialComplex.from_faces(m, faces)


@st.composite
def flag_complexes(draw, max_m=5):
    m = draw(st.integers(1, max_m))
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    return flag_complex_of_graph(m, edges)


def hollow_triangle():
    return SimplicialComplex.from_faces(3, [(1, 2), (1, 3), (2, 3)])


# -- construction -------------------------------------------------------------

def test_flag_examples():
    assert faces_as_sets(flag_complex_of_graph(3, [])) == {frozenset(), frozenset({1}),
                                                            frozenset({2}), frozenset({3})}
    assert flag_complex_of_graph(3, [(1, 2), (1, 3), (2, 3)]) == SimplicialComplex.simplex(3)
    K = flag_complex_of_graph(4, [(1, 2), (2, 3)])
    assert K.facets() == [(4,), (1, 2), (2, 3)] or sorted(K.facets()) == [(1, 2), (2, 3), (4,)]
    assert K.dimension == 1


@pytest.mark.parametrize("edges", [[(1, 5)], [(0, 1)], [(2, 2)]])
def test_flag_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        flag_complex_of_graph(4, edges)


def test_faces_closed_and_contain_singletons():
    K = SimplicialComplex.from_faces(4, [(1, 2, 3)])
    sets = faces_as_sets(K)
    assert frozenset() in sets and all(frozenset({i}) in sets for i in range(1, 5))
    assert frozenset({1, 3}) in sets
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces(3, [(1, 4)])


@given(flag_complexes())
def test_flag_faces_are_cliques(K):
    for f in range(1 << K.m):
        vs = vertices_of(f)
        clique = all(K.has_edge(a, b) for a, b in itertools.combinations(vs, 2))
        assert (f in K.faces) == clique


def test_json_ingestion():
    K = complex_from_json('{"m": 4, "faces": [[1, 2], [2, 3]]}')
    assert K.edges == {(1, 2), (2, 3)}
    F = complex_from_json({"m": 3, "edges": [[1, 2], [2, 3], [1, 3]], "flag": True})
    assert F == SimplicialComplex.simplex(3)
    assert complex_from_json(json.dumps(K.to_json())) == K


def test_full_subcomplex_examples():
    S = SimplicialComplex.simplex(3)
    E = full_subcomplex(S, [1, 2])
    assert faces_as_sets(E) == {frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})}
    D = full_subcomplex(SimplicialComplex.discrete(3), [1, 3])
    assert D.edges == frozenset() and len(connected_components(D)) == 2
    P = full_subcomplex(flag_complex_of_graph(4, [(1, 2), (2, 3)]), [1, 3])
    assert P.edges == frozenset()
    with pytest.raises(ValueError):
        full_subcomplex(S, [1, 4])


@given(complexes(), st.data())
def test_full_subcomplex_restriction(K, data):
    full = mask_of(range(1, K.m + 1))
    assert faces_as_sets(full_subcomplex(K, full)) == faces_as_sets(K)
    J = data.draw(st.integers(0, full))
    J2 = data.draw(st.integers(0, full)) & J
    nested = full_subcomplex(full_subcomplex(K, J), J2)
    assert faces_as_sets(nested) == faces_as_sets(full_subcomplex(K, J2))


def test_components_examples():
    assert sorted(connected_components(SimplicialComplex.discrete(3))) == [(1,), (2,), (3,)]
    assert sorted(connected_components(flag_complex_of_graph(3, [(1, 3)]))) == [(1, 3), (2,)]
    assert connected_components(SimplicialComplex.simplex(4)) == [(1, 2, 3, 4)]


@given(flag_complexes())
def test_components_partition(K):
    comps = components_of_mask(K.adjacency, mask_of(range(1, K.m + 1)))
    assert sum(comps) == (1 << K.m) - 1
    for a, b in itertools.combinations(comps, 2):
        assert not a & b


# -- homology ----------------------------------------------------------------

def test_reduced_homology_examples():
    assert reduced_homology(SimplicialComplex.discrete(2), 0) == AbelianInvariants(1, ())
    assert reduced_homology(hollow_triangle(), 1) == AbelianInvariants(1, ())
    assert reduced_homology(SimplicialComplex.simplex(3), 1).is_trivial


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sphere_homology(n):
    # boundary of the (n-1)-simplex is an (n-2)-sphere
    K = SimplicialComplex.from_faces(n, itertools.combinations(range(1, n + 1), n - 1))
    for k in range(-1, n):
        expected = 1 if k == n - 2 else 0
        assert reduced_homology(K, k).free_rank == expected


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cone_is_acyclic(m):
    S = SimplicialComplex.simplex(m)
    assert all(reduced_homology(S, k).is_trivial for k in range(-1, m + 1))


def test_empty_complex_degree_minus_one():
    empty = full_subcomplex(SimplicialComplex.discrete(2), 0)
    assert reduced_homology(empty, -1) == AbelianInvariants(1, ())
    assert reduced_homology(SimplicialComplex.discrete(2), -1).is_trivial


def test_projective_plane_torsion():
    # minimal 6-vertex triangulation of RP^2
    tri = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5),
           (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    K = SimplicialComplex.from_faces(6, tri)
    assert reduced_homology(K, 1) == AbelianInvariants(0, (2,))
    assert reduced_homology(K, 2).is_trivial


def test_rmk_examples():
    D3 = SimplicialComplex.discrete(3)
    assert rmk_homology(D3, 1).free_rank == 5
    assert cubical_rmk_homology(D3, 1).free_rank == 5
    assert rmk_homology(SimplicialComplex.simplex(3), 1).is_trivial
    point = SimplicialComplex.discrete(1)
    assert cubical_rmk_homology(point, 0).free_rank == 1
    assert cubical_rmk_homology(point, 1).is_trivial
    H = hollow_triangle()
    assert rmk_homology(H, 2) == cubical_rmk_homology(H, 2)


@given(complexes())
def test_rmk_degree_zero(K):
    assert rmk_homology(K, 0) == AbelianInvariants(1, ())


@given(complexes(max_m=4))
def test_rmk_matches_cubical(K):
    for k in range(K.m + 1):
        assert rmk_homology(K, k) == cubical_rmk_homology(K, k)


def test_cubical_cap():
    with pytest.raises(ValueError):
        cubical_rmk_homology(SimplicialComplex.discrete(13), 1)


def test_abelian_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianInvariants(-1, ())
    assert AbelianInvariants(0, (4, 2)).torsion == (2, 4)
    assert AbelianInvariants.from_cyclic([2, 3, 0]) == AbelianInvariants(1, (6,))


# -- generator patterns ------------------------------------------------------

def brute_force_patterns(K):
    """All (i, j, k_1, ...) satisfying the component condition, by exhaustion."""
    out = set()
    m = K.m
    for j in range(1, m + 1):
        for i in range(1, j):
            rest = [k for k in range(1, j) if k != i]
            for r in range(len(rest) + 1):
                for ks in itertools.combinations(rest, r):
                    J = mask_of((i, j) + ks)
                    comp = next(c for c in components_of_mask(K.adjacency, J) if c >> (i - 1) & 1)
                    if comp >> (j - 1) & 1:
                        continue
                    if comp & ((1 << (i - 1)) - 1):
                        continue
                    out.add((i, j) + tuple(sorted(ks, reverse=True)))
    return out


def test_gscox_examples():
    pats = [p.letters for p in gscox_generators(SimplicialComplex.discrete(3))]
    assert pats == [(1, 2), (1, 3), (2, 3), (1, 3, 2), (2, 3, 1)]
    assert gscox_generators(SimplicialComplex.simplex(3)) == []
    assert len(gscox_generators(SimplicialComplex.discrete(4))) == 17


@given(flag_complexes())
def test_gscox_matches_brute_force(K):
    pats = gscox_generators(K)
    assert {p.letters for p in pats} == brute_force_patterns(K)
    assert len(pats) == len({p.letters for p in pats})


@given(complexes())
def test_gscox_count_is_h1(K):
    h1 = rmk_homology(K, 1)
    assert not h1.torsion
    assert len(gscox_generators(K)) == h1.free_rank


@pytest.mark.parametrize("bad", [(1,), (2, 1), (1, 3, 4), (1, 3, 1), (1, 4, 2, 3)])
def test_pattern_validation(bad):
    with pytest.raises(ValueError):
        CommutatorPattern(bad)


def test_enumerations():
    assert sum(1 for _ in all_complexes(3)) == 9
    assert [len(graphs_up_to_isomorphism(m)) for m in range(1, 6)] == [1, 2, 4, 11, 34]


def test_permuted_complex():
    K = flag_complex_of_graph(3, [(1, 2)])
    assert K.permuted({1: 3, 2: 2, 3: 1}).edges == {(2, 3)}


@given(complexes(max_m=4))
def test_all_degree_variants_agree(K):
    from racg_lcs.complex import cubical_rmk_homology_all, reduced_homology_all, rmk_homology_all
    assert rmk_homology_all(K) == [rmk_homology(K, k) for k in range(K.m + 1)]
    assert cubical_rmk_homology_all(K) == rmk_homology_all(K)
    red = reduced_homology_all(K)
    assert all(red[k] == reduced_homology(K, k) for k in red)
