"""Nilpotent quotients of finitely presented groups.

``nilpotent_quotient`` builds a weighted polycyclic presentation of
``G / gamma_{c+1}(G)`` one class at a time.  Going from class ``c - 1`` to
``c``:

1. every relation of the current presentation that is not the *definition*
   of a pc-generator gets a new central unknown (a tail): power relations,
   commutator relations ``[a_j, a_i]`` with ``w_i + w_j <= c``, and images of
   group generators;
2. the consistency test words and the group relators are collected in this
   extension, each giving an integer relation among the tails;
3. the tail lattice is put in Hermite form; surviving tails become the
   weight-``c`` generators and the quotient is ``gamma_c / gamma_{c+1}``.

Since every pc-generator is the image of a group generator or equals (up to
lower terms) the relation that defines it, the extension is generated by the
images of the group generators, which is what makes step 3 compute exactly the
next lower central factor.

Right-angled Coxeter groups and free groups are the two families used
elsewhere in the package, but any finite presentation works.
"""
from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import freegroup as fg
from .collector import Collector, add_tails, invert_letters
from .complex import AbelianInvariants, SimplicialComplex, components_of_mask, mask_of
from .exactlinalg import IntegerLattice, gf2_rank

MAX_CLASS = 5
MAX_VERTICES = 5
MAX_PC_GENERATORS = 512


class CapExceeded(ValueError):
    """A desk-scale resource cap was hit."""


def class_cap() -> int:
    """Class cap, optionally lowered (never raised) by ``RACG_LCS_MAX_CLASS``."""
    env = os.environ.get("RACG_LCS_MAX_CLASS")
    if env:
        try:
            return max(1, min(MAX_CLASS, int(env)))
        except ValueError:
            raise CapExceeded(f"RACG_LCS_MAX_CLASS={env!r} is not an integer") from None
    return MAX_CLASS


class NotInTerm(Exception):
    """Raised by :meth:`PcPresentation.express` when a word is not in gamma_k."""


@dataclass
class PcPresentation:
    """Weighted consistent pc-presentation of a class-``cls`` nilpotent quotient.

    ``power[i]`` and ``comm[(j, i)]`` hold normal words as ``{gen: exp}``
    dicts; missing entries are trivial.  ``images[l]`` is the normal word of
    group generator ``l + 1``.
    """

    ngroup: int
    weight: list[int] = field(default_factory=list)
    order: list[int] = field(default_factory=list)
    power: dict = field(default_factory=dict)
    comm: dict = field(default_factory=dict)
    definitions: dict = field(default_factory=dict)
    images: list = field(default_factory=list)
    cls: int = 0
    layer_invariants: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.weight)

    def layer(self, k: int) -> list[int]:
        return [g for g, w in enumerate(self.weight) if w == k]

    @property
    def dims(self) -> list[int]:
        """Number of cyclic factors of each gamma_k / gamma_{k+1}."""
        return [len(inv.to_list()) for inv in self.layer_invariants]

    @cached_property
    def collector(self) -> Collector:
        top = next((g for g, w in enumerate(self.weight) if w == self.cls), self.n)
        return Collector(
            self.order,
            {i: sorted(w.items()) for i, w in self.power.items()},
            {k: sorted(w.items()) for k, w in self.comm.items()},
            central_from=top,
        )

    def collect(self, letters: Iterable[tuple[int, int]]) -> list[int]:
        exps, _ = self.collector.collect(list(letters))
        return exps

    def letters_of(self, word: Sequence[int]) -> list[tuple[int, int]]:
        """Pc-letters of a group word (signed 1-based generator indices)."""
        out = []
        for x in word:
            img = sorted(self.images[abs(x) - 1].items())
            out.extend(img if x > 0 else invert_letters(img))
        return out

    def evaluate(self, word: Sequence[int]) -> list[int]:
        return self.collect(self.letters_of(word))

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Product of two normal forms (exponent vectors)."""
        exps, _ = self.collector.collect(self.collector.normal_letters(b), list(a))
        return exps

    def inverse(self, a: Sequence[int]) -> list[int]:
        return self.collect(invert_letters(self.collector.normal_letters(a)))

    def commutator(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """``a^-1 b^-1 a b`` on normal forms."""
        return self.multiply(self.inverse(self.multiply(b, a)), self.multiply(a, b))

    def coordinates(self, exps: Sequence[int], k: int) -> tuple[int, ...]:
        """Like :meth:`express` but for an exponent vector."""
        low = [g for g, x in enumerate(exps) if x and self.weight[g] < k]
        if low:
            raise NotInTerm(f"element has a component of weight {self.weight[low[0]]} < {k}")
        return tuple(exps[g] for g in self.layer(k))

    def express(self, word: Sequence[int], k: int) -> tuple[int, ...]:
        """Coordinates of the class of ``word`` in gamma_k / gamma_{k+1}.

        Raises :class:`NotInTerm` if the word has a nonzero component of weight
        below ``k``.
        """
        if not 1 <= k <= self.cls:
            raise ValueError(f"degree {k} outside 1..{self.cls}")
        exps = self.evaluate(word)
        low = [g for g, x in enumerate(exps) if x and self.weight[g] < k]
        if low:
            raise NotInTerm(f"word has a component of weight {self.weight[low[0]]} < {k}")
        return tuple(exps[g] for g in self.layer(k))

    def is_trivial(self, word: Sequence[int]) -> bool:
        return not any(self.evaluate(word))

    def consistency_failures(self, weighted: bool = False) -> list[tuple]:
        """Collect every consistency test word; return the ones that disagree."""
        return [t for t, a, b in _consistency_pairs(self, self.collector, self.cls if weighted else None)
                if a != b]


def _consistency_pairs(pc: PcPresentation, col: Collector, c: int | None):
    """Yield ``(label, lhs, rhs)`` collected pairs of the standard test words.

    With ``c`` given only the tests of total weight ``<= c`` are produced.
    """
    n = pc.n
    w = pc.weight
    order = pc.order

    def run(*parts):
        exps, tails = None, None
        for part in parts:
            exps, tails = col.collect(part, exps, tails)
        return exps, tails

    def power_word(i):
        return sorted(pc.power.get(i, {}).items())

    def pair_word(j, i):
        # normal form of a_j a_i
        e, t = col.collect([(j, 1), (i, 1)])
        return e, t

    def as_letters(e):
        return [(g, x) for g, x in enumerate(e) if x]

    for k, j, i in itertools.combinations(range(n - 1, -1, -1), 3):
        if c is not None and w[i] + w[j] + w[k] > c:
            continue
        lhs = run([(k, 1), (j, 1)], [(i, 1)])
        e, t = pair_word(j, i)
        rhs = run([(k, 1)], as_letters(e))
        add_tails(rhs[1], t)
        yield ("kji", k, j, i), lhs, rhs
    for j, i in itertools.combinations(range(n - 1, -1, -1), 2):
        if c is not None and w[i] + w[j] > c:
            continue
        if order[j]:
            lhs = run(power_word(j))
            add_tails(lhs[1], col.power_tail.get(j))
            lhs = col.collect([(i, 1)], lhs[0], lhs[1])
            e, t = pair_word(j, i)
            rhs = run([(j, order[j] - 1)], as_letters(e))
            add_tails(rhs[1], t)
            yield ("jpi", j, i), lhs, rhs
        if order[i]:
            pw, pt = run(power_word(i))
            add_tails(pt, col.power_tail.get(i))
            lhs = run([(j, 1)], as_letters(pw))
            add_tails(lhs[1], pt)
            rhs = run([(j, 1), (i, 1)], [(i, order[i] - 1)])
            yield ("jip", j, i), lhs, rhs
        else:
            lhs = run([(j, 1), (i, -1)], [(i, 1)])
            yield ("jIi", j, i), lhs, run([(j, 1)])
            if not order[j]:
                lhs = run([(j, -1), (i, -1)], [(i, 1)])
                yield ("JIi", j, i), lhs, run([(j, -1)])
        if not order[j]:
            e, t = pair_word(j, i)
            lhs = run([(j, -1)], as_letters(e))
            add_tails(lhs[1], t)
            yield ("Jji", j, i), lhs, run([(i, 1)])
    for i in range(n):
        if order[i]:
            pw, pt = run(power_word(i))
            add_tails(pt, col.power_tail.get(i))
            lhs = run([(i, 1)], as_letters(pw))
            add_tails(lhs[1], pt)
            rhs = run(as_letters(pw), [(i, 1)])
            add_tails(rhs[1], pt)
            yield ("iip", i), lhs, rhs


def _trivial_presentation(ngroup: int) -> PcPresentation:
    return PcPresentation(ngroup=ngroup, images=[{} for _ in range(ngroup)])


def _next_class(Q: PcPresentation, relators: Sequence[Sequence[int]], c: int) -> PcPresentation:
    n = Q.n
    defined = set(Q.definitions.values())
    # tail columns, ordered so that the natural new generators (commutators
    # with a weight-1 generator on the right) are eliminated last
    keys = []
    keys += [("image", l) for l in range(Q.ngroup) if ("image", l) not in defined]
    keys += [("power", i) for i in range(n) if Q.order[i] and ("power", i) not in defined]
    comm_keys = [("comm", j, i) for j in range(n) for i in range(j)
                 if Q.weight[i] + Q.weight[j] <= c and ("comm", j, i) not in defined]
    comm_keys.sort(key=lambda k: (Q.weight[k[2]] == 1 and Q.weight[k[1]] == c - 1, k[1], k[2]))
    keys += comm_keys
    col_of = {k: t for t, k in enumerate(keys)}

    col = Collector(
        Q.order,
        {i: sorted(w.items()) for i, w in Q.power.items()},
        {k: sorted(w.items()) for k, w in Q.comm.items()},
        power_tail={k[1]: {t: 1} for k, t in col_of.items() if k[0] == "power"},
        comm_tail={(k[1], k[2]): {t: 1} for k, t in col_of.items() if k[0] == "comm"},
    )
    lattice = IntegerLattice(len(keys))

    for label, (e1, t1), (e2, t2) in _consistency_pairs(Q, col, c):
        if e1 != e2:
            raise AssertionError(f"presentation of class {c - 1} is inconsistent at {label}")
        diff = dict(t1)
        add_tails(diff, t2, -1)
        if diff:
            lattice.add(diff)

    for rel in relators:
        exps, tails = None, {}
        for x in rel:
            l = abs(x) - 1
            img = sorted(Q.images[l].items())
            t = col_of.get(("image", l))
            if x > 0:
                exps, tails = col.collect(img, exps, tails)
                if t is not None:
                    add_tails(tails, {t: 1})
            else:
                exps, tails = col.collect(invert_letters(img), exps, tails)
                if t is not None:
                    add_tails(tails, {t: -1})
        if exps is not None and any(exps):
            raise AssertionError(f"relator {rel} does not vanish in the class-{c - 1} quotient")
        if tails:
            lattice.add(tails)

    lattice.reduce_rows()
    pivots = lattice.pivots()
    survivors = [t for t in range(len(keys)) if pivots.get(t, 0) != 1]
    if n + len(survivors) > MAX_PC_GENERATORS:
        raise CapExceeded(f"more than {MAX_PC_GENERATORS} pc-generators at class {c}")
    new_index = {t: n + r for r, t in enumerate(survivors)}

    def tail_word(t: int) -> dict[int, int]:
        nf = lattice.normal_form({t: 1})
        return {new_index[s]: x for s, x in nf.items()}

    P = PcPresentation(
        ngroup=Q.ngroup,
        weight=Q.weight + [c] * len(survivors),
        order=Q.order + [pivots.get(t, 0) for t in survivors],
        power={i: dict(w) for i, w in Q.power.items()},
        comm={k: dict(w) for k, w in Q.comm.items()},
        definitions=dict(Q.definitions),
        images=[dict(w) for w in Q.images],
        cls=c,
        layer_invariants=list(Q.layer_invariants),
    )
    for key, t in col_of.items():
        extra = tail_word(t)
        if key[0] == "image":
            target = P.images[key[1]]
        elif key[0] == "power":
            target = P.power.setdefault(key[1], {})
        else:
            target = P.comm.setdefault((key[1], key[2]), {})
        target.update(extra)
        if t in new_index:
            P.definitions[new_index[t]] = key
    for t in survivors:
        d = pivots.get(t, 0)
        if d:
            nf = lattice.normal_form({t: d})
            if nf:
                P.power[new_index[t]] = {new_index[s]: x for s, x in nf.items()}
    P.power = {i: w for i, w in P.power.items() if w}
    P.comm = {k: w for k, w in P.comm.items() if w}
    free, torsion = lattice.invariants()
    P.layer_invariants.append(AbelianInvariants(free, tuple(torsion)))
    return P


def nilpotent_quotient(ngens: int, relators: Sequence[Sequence[int]], c: int,
                       cap: int | None = None) -> PcPresentation:
    """Consistent weighted pc-presentation of ``G / gamma_{c+1}(G)``.

    ``G = <g_1, ..., g_ngens | relators>`` with relators as signed-index words.
    """
    cap = class_cap() if cap is None else cap
    if c < 1:
        raise ValueError("class must be at least 1")
    if c > cap:
        raise CapExceeded(f"class {c} exceeds the cap {cap}")
    P = _trivial_presentation(ngens)
    for k in range(1, c + 1):
        P = _next_class(P, relators, k)
    return P


def racg_relators(K: SimplicialComplex) -> list[tuple[int, ...]]:
    rels = [(i, i) for i in range(1, K.m + 1)]
    rels += [fg.commutator((i,), (j,)) for i, j in sorted(K.edges)]
    return rels


@lru_cache(maxsize=256)
def _racg_quotient(m: int, edges: frozenset, c: int) -> PcPresentation:
    K = SimplicialComplex.from_faces(m, edges)
    return nilpotent_quotient(m, racg_relators(K), c)


def racg_quotient(K: SimplicialComplex, c: int) -> PcPresentation:
    """Pc-presentation of ``RC_K / gamma_{c+1}``, cached on the 1-skeleton."""
    if K.m > MAX_VERTICES:
        raise CapExceeded(f"m = {K.m} exceeds the cap {MAX_VERTICES}")
    cap = class_cap()
    if c > cap:
        raise CapExceeded(f"class {c} exceeds the cap {cap}")
    return _racg_quotient(K.m, frozenset(K.edges), c)


@lru_cache(maxsize=32)
def free_quotient(rank: int, c: int) -> PcPresentation:
    """Pc-presentation of the free nilpotent group ``F_rank / gamma_{c+1}``."""
    return nilpotent_quotient(rank, [], c)


def lcs_dims(K: SimplicialComplex, c: int) -> list[int]:
    """``dim L^k(RC_K)`` over GF(2) for ``k = 1..c``."""
    return racg_quotient(K, c).dims


def combinatorial_dims(K: SimplicialComplex) -> tuple[int, int, int]:
    """Basis sizes of L^1, L^2, L^3 from the commutator description of the bases."""
    non_edges = K.non_edges
    d3 = len(non_edges)
    for j in range(1, K.m + 1):
        for i in range(1, j):
            for k in range(1, j):
                if k == i:
                    continue
                J = mask_of((i, j, k))
                comp = next(cc for cc in components_of_mask(K.adjacency, J) if cc >> (i - 1) & 1)
                if not comp >> (j - 1) & 1 and not comp & ((1 << (i - 1)) - 1):
                    d3 += 1
    return K.m, len(non_edges), d3


# -- words and brackets -------------------------------------------------------

def nested_word(letters: Sequence[int]) -> fg.Word:
    """Group word of the left-nested commutator ``(g_{i_1}, ..., g_{i_k})``."""
    if len(letters) == 1:
        return (letters[0],)
    return fg.simple_nested([(x,) for x in letters])


def express(pc: PcPresentation, word: Sequence[int], k: int):
    """Coordinates of ``word`` in ``L^k`` or the string ``"not in gamma_k"``."""
    try:
        return pc.express(word, k)
    except NotInTerm:
        return "not in gamma_k"


def gf2_coordinates(pc: PcPresentation, word: Sequence[int], k: int) -> int:
    """Weight-``k`` coordinates packed into an int (bit r = r-th generator of the layer)."""
    coords = pc.express(word, k)
    return sum(1 << r for r, x in enumerate(coords) if x % 2)


def verify_basis_claim(K: SimplicialComplex, k: int, claimed: Sequence[Sequence[int]],
                       pc: PcPresentation | None = None) -> bool:
    """True iff the claimed commutators form a GF(2) basis of ``L^k(RC_K)``."""
    pc = pc or racg_quotient(K, k)
    rows = []
    for letters in claimed:
        if len(letters) != k:
            raise ValueError(f"{tuple(letters)} has length {len(letters)}, expected {k}")
        rows.append(gf2_coordinates(pc, nested_word(letters), k))
    dim = len(pc.layer(k))
    return len(rows) == dim and gf2_rank(rows) == dim


def claim_rank(K: SimplicialComplex, k: int, claimed: Sequence[Sequence[int]]) -> tuple[int, int]:
    """``(rank of the claimed family, dim L^k)``."""
    pc = racg_quotient(K, k)
    rows = [gf2_coordinates(pc, nested_word(w), k) for w in claimed]
    return gf2_rank(rows), len(pc.layer(k))


def verify_congruence(lhs: Sequence[int], rhs: Sequence[int], modulo: int, rank: int | None = None) -> bool:
    """``lhs == rhs mod gamma_modulo`` in the free group of the given rank."""
    if rank is None:
        rank = max((abs(x) for x in list(lhs) + list(rhs)), default=1)
    if modulo <= 1:
        return True
    pc = free_quotient(rank, modulo - 1)
    return pc.is_trivial(fg.mul(lhs, fg.inverse(rhs)))


def congruence_cases(a, b, c, wa: int, wb: int, wc: int) -> list[tuple[str, fg.Word, fg.Word, int]]:
    """The triple-commutator congruences for ``a, b, c`` of weights ``wa, wb, wc``.

    Returns ``(name, lhs, rhs, modulus)``: ``lhs == rhs mod gamma_modulus``.
    """
    C = fg.commutator
    total = wa + wb + wc
    low = min(2 * wa + wb + wc, wa + 2 * wb + wc, wa + wb + 2 * wc)
    abc = fg.simple_nested([a, b, c])
    return [
        ("inverse-swap", fg.inverse(abc), fg.simple_nested([b, a, c]), total + 1),
        ("reversed-nesting", abc, C(c, C(b, a)), total + 1),
        ("right-jacobi", C(a, C(b, c)), fg.mul(C(c, C(b, a)), C(b, C(a, c))), low),
        ("left-jacobi", C(C(a, b), c), fg.mul(C(C(c, b), a), C(C(a, c), b)), low),
    ]


# -- structural checks ---------------------------------------------------------

def elementary_abelian_layers(pc: PcPresentation) -> bool:
    """Every lower central factor is a direct sum of copies of Z/2."""
    return all(inv.free_rank == 0 and all(t == 2 for t in inv.torsion)
               for inv in pc.layer_invariants)


def random_racg_word(rng: random.Random, m: int, length: int) -> tuple[int, ...]:
    return tuple(rng.randint(1, m) for _ in range(length))


def random_gamma_element(rng: random.Random, m: int, k: int, pieces: int = 3) -> fg.Word:
    """Random product of ``k``-fold nested commutators of random words (lies in gamma_k)."""
    word: fg.Word = ()
    for _ in range(pieces):
        entries = [random_racg_word(rng, m, rng.randint(1, 3)) for _ in range(k)]
        term = entries[0] if k == 1 else fg.simple_nested(entries)
        if rng.random() < 0.5:
            term = fg.inverse(term)
        word = word + term
    return word


def squares_descend(pc: PcPresentation, samples: int = 50, seed: int = 0) -> list[tuple]:
    """Check ``w in gamma_k => w^2 in gamma_{k+1}`` on random elements; return failures.

    Elements are products of ``k``-fold commutators of random words, built
    directly on normal forms so that long words never have to be collected.
    """
    rng = random.Random(seed)
    failures = []
    m = pc.ngroup
    for k in range(1, pc.cls + 1):
        for _ in range(samples):
            x = [0] * pc.n
            for _ in range(3):
                entries = [pc.evaluate(random_racg_word(rng, m, rng.randint(1, 3))) for _ in range(k)]
                term = entries[0]
                for e in entries[1:]:
                    term = pc.commutator(term, e)
                if rng.random() < 0.5:
                    term = pc.inverse(term)
                x = pc.multiply(x, term)
            try:
                pc.coordinates(x, k)
            except NotInTerm:
                failures.append(("not in gamma_k", k, tuple(x)))
                continue
            sq = pc.multiply(x, x)
            if k < pc.cls:
                try:
                    pc.coordinates(sq, k + 1)
                except NotInTerm:
                    failures.append(("square not in gamma_k+1", k, tuple(x)))
            elif any(pc.coordinates(sq, k)):
                failures.append(("square nonzero in top layer", k, tuple(x)))
    return failures


def structure_constants(pc: PcPresentation) -> dict[tuple[int, int], int]:
    """GF(2) bracket of pc-generator classes: ``{(p, q): packed coordinates}``.

    Only pairs with ``w_p + w_q <= cls`` are listed; ``(p, q)`` with ``p > q``.
    """
    out = {}
    for p in range(pc.n):
        for q in range(p):
            k = pc.weight[p] + pc.weight[q]
            if k > pc.cls:
                continue
            exps = pc.collect([(p, -1), (q, -1), (p, 1), (q, 1)])
            assert not any(x for g, x in enumerate(exps) if x and pc.weight[g] < k)
            out[(p, q)] = sum(1 << r for r, g in enumerate(pc.layer(k)) if exps[g] % 2)
    return out
