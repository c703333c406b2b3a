"""Collection from the left in a polycyclic presentation with central tails.

Generators are ``0 .. n-1``.  A *normal word* is an exponent vector; we pass
them around as lists of ``(generator, exponent)`` pairs in increasing
generator order.  Besides the pc-generators the collector tracks a free
abelian group of central *tails* (sparse ``{tail: coefficient}`` dicts) that
ride along with power and commutator relations.  With no tails this is an
ordinary collector.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Letters = list  # list[tuple[int, int]]
Tails = dict    # dict[int, int]


def add_tails(acc: Tails, extra: Tails | None, k: int = 1) -> None:
    if not extra or not k:
        return
    for t, x in extra.items():
        y = acc.get(t, 0) + k * x
        if y:
            acc[t] = y
        else:
            acc.pop(t, None)


def invert_letters(word: Sequence[tuple[int, int]]) -> Letters:
    return [(g, -e) for g, e in reversed(word)]


class Collector:
    """Collector for a consistent (or candidate) polycyclic presentation.

    Parameters
    ----------
    order : relative orders, 0 meaning infinite.
    power : ``power[i]`` is the normal word for ``a_i^{order[i]}`` (finite i).
    comm : ``comm[(j, i)]`` for ``j > i`` is the normal word for ``[a_j, a_i]``.
    power_tail, comm_tail : central tail vectors attached to those relations.
    central_from : generators with index ``>= central_from`` are central.
    """

    def __init__(self, order: Sequence[int], power: dict, comm: dict,
                 power_tail: dict | None = None, comm_tail: dict | None = None,
                 central_from: int | None = None):
        self.n = n = len(order)
        self.order = list(order)
        self.power = {i: list(w) for i, w in power.items()}
        self.power_tail = dict(power_tail or {})
        comm_tail = comm_tail or {}
        self.central_from = n if central_from is None else central_from
        # conj[g][j] = (letters c, tails t) with a_j^{a_g} = a_j c t
        self.conj: list[dict[int, tuple[Letters, Tails | None]]] = [dict() for _ in range(n)]
        for (j, i), w in comm.items():
            t = comm_tail.get((j, i))
            if w or t:
                self.conj[i][j] = (list(w), t)
        for (j, i), t in comm_tail.items():
            if t and j not in self.conj[i]:
                self.conj[i][j] = ([], t)
        self.inv_conj: list[dict[int, tuple[Letters, Tails | None]]] = [dict() for _ in range(n)]
        self._build_inverse_tables()

    # -- inverse conjugates for infinite generators -------------------------
    def _build_inverse_tables(self) -> None:
        """Tabulate ``a_j^{a_g^{-1}} = a_j d t`` for infinite ``a_g``, ``j > g``.

        With ``phi`` = conjugation by ``a_g^{-1}`` and ``a_j^{a_g} = a_j c t`` we
        get ``phi(a_j) = a_j t^{-1} phi(c)^{-1}``; ``c`` only involves
        generators above ``j`` so working downwards from the top is enough.
        """
        for g in range(self.n - 1, -1, -1):
            if self.order[g] or not self.conj[g]:
                continue
            images: dict[int, tuple[Letters, Tails]] = {}
            for j in range(self.n - 1, g, -1):
                entry = self.conj[g].get(j)
                if entry is None:
                    continue
                c, t = entry
                word: Letters = [(j, 1)]
                acc_t: Tails = {}
                add_tails(acc_t, t, -1)
                for k, e in reversed(c):
                    # phi(a_k^{-e})
                    img = images.get(k)
                    if img is None:
                        word.append((k, -e))
                        continue
                    d, dt = img
                    unit = [(k, 1)] + d
                    if e > 0:
                        for _ in range(e):
                            word.extend(invert_letters(unit))
                        add_tails(acc_t, dt, -e)
                    else:
                        for _ in range(-e):
                            word.extend(unit)
                        add_tails(acc_t, dt, -e)
                exps, tails = self.collect(word)
                add_tails(tails, acc_t)
                assert exps[j] == 1 and not any(exps[: j])
                d = [(k, x) for k, x in enumerate(exps) if x and k > j]
                images[j] = (d, tails)
                if d or tails:
                    self.inv_conj[g][j] = (d, tails or None)

    # -- collection ---------------------------------------------------------
    def collect(self, word: Iterable[tuple[int, int]], exps: list[int] | None = None,
                tails: Tails | None = None) -> tuple[list[int], Tails]:
        """Multiply the normal word ``exps`` (default: identity) by ``word``."""
        n = self.n
        exps = [0] * n if exps is None else exps
        tails = {} if tails is None else tails
        order = self.order
        power = self.power
        power_tail = self.power_tail
        conj = self.conj
        inv_conj = self.inv_conj
        cf = self.central_from
        stack = list(word)
        stack.reverse()
        while stack:
            g, e = stack.pop()
            if not e:
                continue
            o = order[g]
            if o and not 0 <= e < o:
                q, e = divmod(e, o)
                add_tails(tails, power_tail.get(g), q)
                w = power.get(g, [])
                if q > 0:
                    for _ in range(q):
                        stack.extend(reversed(w))
                else:
                    inv = invert_letters(w)
                    for _ in range(-q):
                        stack.extend(reversed(inv))
                if not e:
                    continue
                stack.append((g, e))
                continue
            if g >= cf:
                x = exps[g] + e
                if o and x >= o:
                    q, x = divmod(x, o)
                    add_tails(tails, power_tail.get(g), q)
                    for _ in range(q):
                        stack.extend(reversed(power.get(g, [])))
                exps[g] = x
                continue
            table = conj[g] if e > 0 else inv_conj[g]
            suffix = [j for j in range(g + 1, cf) if exps[j]]
            if not any(j in table for j in suffix):
                x = exps[g] + e
                if o and x >= o:
                    x -= o
                    exps[g] = x
                    add_tails(tails, power_tail.get(g))
                    # a_g^o commutes with a_g; its normal word is pushed as-is
                    # but must still be collected past the suffix
                    suffix_letters = [(j, exps[j]) for j in range(g + 1, cf) if exps[j]]
                    for j, _ in suffix_letters:
                        exps[j] = 0
                    stack.extend(reversed(suffix_letters))
                    stack.extend(reversed(power.get(g, [])))
                else:
                    exps[g] = x
                continue
            s = 1 if e > 0 else -1
            if e != s:
                stack.append((g, e - s))
            conj_letters: Letters = []
            for j in suffix:
                ej = exps[j]
                exps[j] = 0
                entry = table.get(j)
                if entry is None:
                    conj_letters.append((j, ej))
                    continue
                c, t = entry
                add_tails(tails, t, ej)
                if ej > 0:
                    unit = [(j, 1)] + c
                else:
                    unit = invert_letters(c) + [(j, -1)]
                for _ in range(abs(ej)):
                    conj_letters.extend(unit)
            stack.extend(reversed(conj_letters))
            x = exps[g] + s
            if o and x == o:
                x = 0
                add_tails(tails, power_tail.get(g))
                stack.extend(reversed(power.get(g, [])))
            exps[g] = x
        return exps, tails

    def normal_letters(self, exps: Sequence[int]) -> Letters:
        return [(g, x) for g, x in enumerate(exps) if x]
