import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from racg_lcs import lie2
from racg_lcs.complex import SimplicialComplex, flag_complex_of_graph


def necklace_count(m, d):
    """Aperiodic necklaces by brute force: rotation classes of primitive words."""
    seen = set()
    count = 0
    for w in itertools.product(range(m), repeat=d):
        rots = {w[r:] + w[:r] for r in range(d)}
        if len(rots) < d:
            continue
        key = min(rots)
        if key not in seen:
            seen.add(key)
            count += 1
    return count


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_lyndon_counts(m, d):
    words = lie2.free_lie_basis(m, d)
    assert len(words) == lie2.witt_number(m, d) == necklace_count(m, d)
    assert words == sorted(words)
    for w in words:
        assert all(w < w[r:] + w[:r] for r in range(1, d))


def test_free_basis_examples():
    assert len(lie2.free_lie_basis(3, 1)) == 3
    assert len(lie2.free_lie_basis(3, 3)) == 8
    assert len(lie2.free_lie_basis(4, 4)) == 60


@pytest.mark.parametrize("m", [2, 3, 4])
def test_free_quotient_has_witt_dims(m):
    assert lie2.quotient_dims(m, d_max=5) == [lie2.witt_number(m, d) for d in range(1, 6)]


def test_lyndon_brackets_independent():
    m, d = 3, 4
    coords = [lie2.lyndon_coordinates(lie2.lyndon_bracket(w, m), m, d) for w in lie2.free_lie_basis(m, d)]
    # standard bracketing is unitriangular against the Lyndon basis
    assert all(c == [w] for c, w in zip(coords, lie2.free_lie_basis(m, d)))


def test_bracket_in_tensor_algebra():
    m = 2
    x, y = lie2.generator(1, m), lie2.generator(2, m)
    xy = lie2.bracket(x, 1, y, 1, m)
    assert xy == (1 << lie2.word_index((1, 2), m)) | (1 << lie2.word_index((2, 1), m))
    assert lie2.bracket(x, 1, x, 1, m) == 0
    assert lie2.nested((1, 2, 1), m) == lie2.bracket(xy, 2, x, 1, m)


def test_quotient_examples():
    sq = lie2.square_relations(3)
    assert lie2.quotient_dims(3, [], sq, 3) == [3, 3, 5]
    assert lie2.quotient_dims(3, [(1, 2), (1, 3), (2, 3)], [], 3) == [3, 0, 0]
    assert lie2.quotient_dims(3, [], sq, 4)[3] >= 8


def test_derived_relation_examples():
    sq = lie2.square_relations(3)
    assert lie2.check_derived_relation(3, [], sq, (1, 2, 1, 1), (1, 2, 1, 2))
    assert not lie2.check_derived_relation(3, [], [], (1, 2, 1, 1), (1, 2, 1, 2))
    assert lie2.check_derived_relation(3, [], [], (1, 3, 2, 1), (1, 3, 2, 1))
    with pytest.raises(ValueError):
        lie2.check_derived_relation(3, [], sq, (1, 2, 1), (1, 2, 1, 2))


@pytest.mark.parametrize("K", [SimplicialComplex.discrete(3), SimplicialComplex.simplex(3),
                               flag_complex_of_graph(3, [(1, 2)]), SimplicialComplex.discrete(4)])
def test_compare_with_group(K):
    rows = lie2.compare_with_group(K, 4)
    assert all(r["kernel"] >= 0 for r in rows)
    assert all(r["kernel"] == 0 for r in rows[:3])
    if K.edges == frozenset(itertools.combinations(range(1, K.m + 1), 2)):
        assert all(r["dim_F"] == 0 for r in rows[1:])


def test_degree_four_kernels():
    # recorded values, no claim attached: F^4 exceeds L^4 for discrete complexes
    assert [r["kernel"] for r in lie2.compare_with_group(SimplicialComplex.discrete(3), 4)] == [0, 0, 0, 1]
    assert [r["kernel"] for r in lie2.compare_with_group(SimplicialComplex.discrete(4), 4)] == [0, 0, 0, 4]


@pytest.mark.parametrize("rels", ["none", "squares", "edges"])
def test_axioms(rels):
    m = 3
    relations = {"squares": lie2.square_relations(m), "edges": lie2.edge_relations([(1, 2)]), }.get(rels, [])
    relations = relations if rels != "none" else []
    alg = lie2.GradedLie2(m, relations, 5 if rels != "none" else 4)
    assert alg.check_axioms() == []


@settings(max_examples=30)
@given(st.integers(2, 3), st.data())
def test_adding_relations_never_increases_dims(m, data):
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    edges = [p for p in pairs if data.draw(st.booleans())]
    more = edges + [p for p in pairs if p not in edges and data.draw(st.booleans())]
    base = lie2.quotient_dims(m, edges, [], 4)
    assert all(a >= b for a, b in zip(base, lie2.quotient_dims(m, more, [], 4)))
    assert all(a >= b for a, b in zip(base, lie2.quotient_dims(m, edges, lie2.square_relations(m), 4)))


def test_degree_cap():
    with pytest.raises(ValueError):
        lie2.GradedLie2(2, [], 6)
