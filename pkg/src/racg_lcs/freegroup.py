"""Words in free groups and the universal commutator identities.

A word is a tuple of nonzero ints: ``i`` stands for ``g_i`` and ``-i`` for its
inverse.  Every function returns freely reduced words, so equality of group
elements is equality of tuples.

Conventions: ``(a, b) = a^-1 b^-1 a b`` and ``a^b = b^-1 a b``.
"""
from __future__ import annotations

import random
from typing import Iterable, Sequence

Word = tuple[int, ...]

__all__ = [
    "Word", "reduce", "mul", "inverse", "power", "conj", "commutator",
    "simple_nested", "gen", "hall_witt_identities", "triple_lemma_identities",
    "verify_hall_witt", "verify_triple_lemma", "random_word", "run_identity_suite",
]


def reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for x in w:
        if x == 0:
            raise ValueError("letter 0 is not a generator")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def gen(i: int) -> Word:
    return (i,)


def mul(*words: Sequence[int]) -> Word:
    return reduce(x for w in words for x in w)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        w, n = inverse(w), -n
    return reduce(tuple(w) * n)


def conj(a: Sequence[int], b: Sequence[int]) -> Word:
    """``a^b = b^-1 a b``."""
    return mul(inverse(b), a, b)


def commutator(a: Sequence[int], b: Sequence[int]) -> Word:
    return mul(inverse(a), inverse(b), a, b)


def simple_nested(items: Sequence[Sequence[int]]) -> Word:
    """Left-nested commutator ``(...((q_1, q_2), q_3), ..., q_k)``."""
    if len(items) < 2:
        raise ValueError("a nested commutator needs at least two entries")
    acc = reduce(items[0])
    for q in items[1:]:
        acc = commutator(acc, q)
    return acc


def hall_witt_identities(a, b, c) -> list[tuple[Word, Word]]:
    """The three Hall-Witt identities as (lhs, rhs) pairs."""
    C = commutator
    abc = simple_nested([a, b, c])
    return [
        (C(a, mul(b, c)), mul(C(a, c), C(a, b), abc)),
        (C(mul(a, b), c), mul(C(a, c), simple_nested([a, c, b]), C(b, c))),
        (
            mul(abc, simple_nested([b, c, a]), simple_nested([c, a, b])),
            mul(C(b, a), C(c, a), conj(C(c, b), a), C(a, b), conj(C(a, c), b),
                conj(C(b, c), a), C(a, c), conj(C(c, a), b)),
        ),
    ]


def triple_lemma_identities(a, b, c) -> list[tuple[Word, Word]]:
    """The two eight-factor expansions of ``(a, (b, c))`` and ``((a, b), c)``."""
    C = commutator
    return [
        (C(a, C(b, c)),
         mul(C(a, c), C(c, C(b, a)), C(a, b), C(c, b), C(b, C(a, c)), C(c, a), C(b, a), C(b, c))),
        (C(C(a, b), c),
         mul(C(b, a), C(c, a), C(c, b), C(C(c, b), a), C(a, b), C(a, c), C(C(a, c), b), C(b, c))),
    ]


def verify_hall_witt(a, b, c) -> bool:
    a, b, c = reduce(a), reduce(b), reduce(c)
    return all(lhs == rhs for lhs, rhs in hall_witt_identities(a, b, c))


def verify_triple_lemma(a, b, c) -> bool:
    a, b, c = reduce(a), reduce(b), reduce(c)
    return all(lhs == rhs for lhs, rhs in triple_lemma_identities(a, b, c))


def random_word(rng: random.Random, rank: int, max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return reduce(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(n))


def run_identity_suite(trials: int = 100, seed: int = 0, rank: int = 4, max_len: int = 6) -> dict:
    """Fuzz both identity families on seeded random triples in ``F_rank``."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        a, b, c = (random_word(rng, rank, max_len) for _ in range(3))
        if not verify_hall_witt(a, b, c):
            failures.append({"trial": t, "identity": "hall-witt", "words": [a, b, c]})
        if not verify_triple_lemma(a, b, c):
            failures.append({"trial": t, "identity": "triple-lemma", "words": [a, b, c]})
    return {"trials": trials, "seed": seed, "failures": failures}
