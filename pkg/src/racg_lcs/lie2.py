"""Graded Lie algebras over GF(2) given by generators and homogeneous relations.

Lie elements live inside the free associative algebra: a homogeneous element of
degree ``d`` over ``m`` letters is an int bitset indexed by words, where the
word ``(w_1, ..., w_d)`` sits at bit ``sum (w_r - 1) m^(d - r)``.  For words of
equal length this index order is the lexicographic order, so the standard
bracketing of a Lyndon word ``w`` has ``w`` as its lowest set bit.

The ideal generated by relations is spanned degree by degree:
``I_d = [I_{d-1}, V] + span(relations of degree d)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

MAX_DEGREE = 5


def word_index(word: Sequence[int], m: int) -> int:
    idx = 0
    for x in word:
        idx = idx * m + (x - 1)
    return idx


def index_word(idx: int, m: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        idx, r = divmod(idx, m)
        out.append(r + 1)
    return tuple(reversed(out))


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bracket(x: int, p: int, y: int, q: int, m: int) -> int:
    """``[x, y] = xy + yx`` for homogeneous ``x`` of degree ``p``, ``y`` of degree ``q``."""
    sp, sq = m ** p, m ** q
    out = 0
    ys = list(_bits(y))
    for a in _bits(x):
        for b in ys:
            out ^= (1 << (a * sq + b)) ^ (1 << (b * sp + a))
    return out


def generator(i: int, m: int) -> int:
    return 1 << (i - 1)


def nested(letters: Sequence[int], m: int) -> int:
    """Left-nested bracket ``[mu_{i_1}, ..., mu_{i_k}]``."""
    acc = generator(letters[0], m)
    for d, x in enumerate(letters[1:], start=1):
        acc = bracket(acc, d, generator(x, m), 1, m)
    return acc


def lyndon_words(m: int, d: int) -> list[tuple[int, ...]]:
    """Lyndon words of length ``d`` over ``1..m`` in lexicographic order (Duval)."""
    if d < 1:
        raise ValueError("degree must be positive")
    out = []
    w = [0]
    while w:
        if len(w) == d:
            out.append(tuple(x + 1 for x in w))
        # next Lyndon word of length <= d
        k = len(w)
        w = [w[i % k] for i in range(d)]
        while w and w[-1] == m - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_number(m: int, d: int) -> int:
    """Dimension of the degree-``d`` part of the free Lie algebra on ``m`` generators."""
    return sum(_mobius(e) * m ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


def standard_factorization(w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``w = uv`` with ``v`` the longest proper Lyndon suffix."""
    w = tuple(w)
    for s in range(1, len(w)):
        v = w[s:]
        if _is_lyndon(v):
            return w[:s], v
    raise ValueError(f"{w} has no proper Lyndon suffix")


def _is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    return all(w < w[s:] + w[:s] for s in range(1, len(w))) if len(w) > 1 else len(w) == 1


@lru_cache(maxsize=None)
def lyndon_bracket(w: tuple[int, ...], m: int) -> int:
    """Standard bracketing of a Lyndon word as a tensor-algebra bitset."""
    if len(w) == 1:
        return generator(w[0], m)
    u, v = standard_factorization(w)
    return bracket(lyndon_bracket(u, m), len(u), lyndon_bracket(v, m), len(v), m)


def free_lie_basis(m: int, d: int) -> list[tuple[int, ...]]:
    return lyndon_words(m, d)


def lyndon_coordinates(x: int, m: int, d: int) -> list[tuple[int, ...]]:
    """Express a Lie element in the Lyndon basis (triangular elimination)."""
    out = []
    while x:
        w = index_word((x & -x).bit_length() - 1, m, d)
        if not _is_lyndon(w):
            raise ValueError(f"element is not a Lie polynomial (leading word {w})")
        out.append(w)
        x ^= lyndon_bracket(w, m)
    return out


class _Echelon:
    """GF(2) echelon basis keyed by lowest bit, with tag bits tracking combinations."""

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        while v:
            low = v & -v
            row = self.rows.get(low)
            if row is None:
                break
            v ^= row[0]
            tag ^= row[1]
        return v, tag

    def full_reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        # clear every pivot position, not just the leading one
        changed = True
        while changed:
            changed = False
            for low, (r, t) in self.rows.items():
                if v & low:
                    v ^= r
                    tag ^= t
                    changed = True
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.rows[v & -v] = (v, tag)
        return True

    def __len__(self):
        return len(self.rows)


Relation = tuple  # (lhs letters, rhs letters)


def square_relations(m: int) -> list[Relation]:
    """``[mu_i, mu_j, mu_j] = [mu_i, mu_j, mu_i]`` for all ``i < j``."""
    return [((i, j, j), (i, j, i)) for i, j in itertools.combinations(range(1, m + 1), 2)]


def edge_relations(edges: Iterable[Sequence[int]]) -> list[Relation]:
    return [((i, j), ()) for i, j in (sorted(e) for e in edges)]


def relation_element(rel, m: int) -> tuple[int, int]:
    """``(degree, bitset)`` of ``lhs - rhs``; an empty side means zero."""
    lhs, rhs = rel
    if lhs and rhs and len(lhs) != len(rhs):
        raise ValueError(f"relation {rel} is not homogeneous")
    d = len(lhs or rhs)
    x = nested(lhs, m) if lhs else 0
    y = nested(rhs, m) if rhs else 0
    return d, x ^ y


@dataclass
class GradedLie2:
    """``FL<mu_1..mu_m> / (relations)`` over GF(2), truncated at ``d_max``.

    ``basis[d]`` lists Lyndon words whose standard bracketings form a basis of
    the degree-``d`` quotient; ``ideal[d]`` spans the relation ideal there.
    """

    m: int
    relations: list = field(default_factory=list)
    d_max: int = 4

    def __post_init__(self):
        if self.d_max > MAX_DEGREE:
            raise ValueError(f"degree cap is {MAX_DEGREE}, asked for {self.d_max}")
        m = self.m
        rel_by_deg: dict[int, list[int]] = {}
        for rel in self.relations:
            d, x = relation_element(rel, m)
            if x:
                rel_by_deg.setdefault(d, []).append(x)
        self.ideal: dict[int, _Echelon] = {}
        self.basis: dict[int, list[tuple[int, ...]]] = {}
        self._coords: dict[int, _Echelon] = {}
        prev: list[int] = []
        for d in range(1, self.d_max + 1):
            ech = _Echelon()
            for x in prev:
                for i in range(1, m + 1):
                    ech.add(bracket(x, d - 1, generator(i, m), 1, m))
            for x in rel_by_deg.get(d, []):
                ech.add(x)
            self.ideal[d] = ech
            prev = [r for r, _ in ech.rows.values()]
            # quotient basis with tags for coordinates
            coords = _Echelon()
            for r, _ in ech.rows.values():
                coords.add(r)
            chosen = []
            for w in lyndon_words(m, d):
                if coords.add(lyndon_bracket(w, m), 1 << len(chosen)):
                    chosen.append(w)
            self.basis[d] = chosen
            self._coords[d] = coords

    @property
    def dims(self) -> list[int]:
        return [len(self.basis[d]) for d in range(1, self.d_max + 1)]

    def coordinates(self, x: int, d: int) -> int:
        """Packed coordinates of the class of Lie element ``x`` in ``basis[d]``."""
        v, tag = self._coords[d].reduce(x)
        if v:
            raise ValueError("not a Lie element of this degree")
        return tag

    def in_ideal(self, x: int, d: int) -> bool:
        return self.ideal[d].reduce(x)[0] == 0

    def element(self, coords: int, d: int) -> int:
        x = 0
        for r in _bits(coords):
            x ^= lyndon_bracket(self.basis[d][r], self.m)
        return x

    def structure_constants(self) -> dict[tuple[int, int, int, int], int]:
        """``[(p, a, q, b)] -> coords`` of ``[basis[p][a], basis[q][b]]``, ``p + q <= d_max``."""
        m = self.m
        table = {}
        for p in range(1, self.d_max):
            for q in range(1, self.d_max - p + 1):
                for a, u in enumerate(self.basis[p]):
                    x = lyndon_bracket(u, m)
                    for b, v in enumerate(self.basis[q]):
                        y = lyndon_bracket(v, m)
                        table[(p, a, q, b)] = self.coordinates(bracket(x, p, y, q, m), p + q)
        return table

    def check_axioms(self) -> list[tuple]:
        """Alternation and Jacobi on basis elements, computed from the structure constants."""
        table = self.structure_constants()

        def br(p, xc, q, yc):
            out = 0
            for a in _bits(xc):
                for b in _bits(yc):
                    out ^= table[(p, a, q, b)]
            return out

        failures = []
        for p in range(1, self.d_max // 2 + 1):
            for a in range(len(self.basis[p])):
                if table.get((p, a, p, a), 0):
                    failures.append(("alternation", p, a))
        for p, q, r in itertools.product(range(1, self.d_max + 1), repeat=3):
            if p + q + r > self.d_max:
                continue
            for a, b, c in itertools.product(range(len(self.basis[p])), range(len(self.basis[q])),
                                             range(len(self.basis[r]))):
                x, y, z = 1 << a, 1 << b, 1 << c
                j = (br(p + q, br(p, x, q, y), r, z)
                     ^ br(q + r, br(q, y, r, z), p, x)
                     ^ br(r + p, br(r, z, p, x), q, y))
                if j:
                    failures.append(("jacobi", (p, a), (q, b), (r, c)))
        return failures


def quotient_dims(m: int, edges: Iterable[Sequence[int]] = (), extra_relations: Iterable = (),
                  d_max: int = 4) -> list[int]:
    """Dimensions of ``FL / (edge brackets, extra relations)`` in degrees ``1..d_max``."""
    rels = edge_relations(edges) + list(extra_relations)
    return GradedLie2(m, rels, d_max).dims


def check_derived_relation(m: int, edges: Iterable[Sequence[int]], relations: Iterable,
                           lhs: Sequence[int], rhs: Sequence[int], d: int | None = None) -> bool:
    """True iff ``[lhs] - [rhs]`` lies in the ideal generated by the relations."""
    d = len(lhs) if d is None else d
    if len(lhs) != d or (rhs and len(rhs) != d):
        raise ValueError(f"lhs {tuple(lhs)} and rhs {tuple(rhs)} are not both of degree {d}")
    alg = GradedLie2(m, edge_relations(edges) + list(relations), d)
    x = nested(lhs, m) ^ (nested(rhs, m) if rhs else 0)
    return alg.in_ideal(x, d)


def comparison_algebra(K, d_max: int) -> GradedLie2:
    """Graph algebra of ``K`` with the square relations added."""
    return GradedLie2(K.m, edge_relations(K.edges) + square_relations(K.m), d_max)


def compare_with_group(K, d_max: int) -> list[dict]:
    """Per degree: ``dim F^d``, ``dim L^d(RC_K)`` and their difference."""
    from .nq import lcs_dims

    f_dims = comparison_algebra(K, d_max).dims
    l_dims = lcs_dims(K, d_max)
    return [{"degree": d + 1, "dim_F": f, "dim_L": l, "kernel": f - l}
            for d, (f, l) in enumerate(zip(f_dims, l_dims))]
