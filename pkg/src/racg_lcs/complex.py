"""Simplicial complexes on ``[m] = {1, ..., m}`` and their homology.

Faces are stored as bitmasks (vertex ``i`` is bit ``i - 1``).  Besides ordinary
reduced homology this module computes the homology of the real moment-angle
complex in two independent ways: by summing reduced homology of full
subcomplexes, and directly from the cubical cell structure inside the
``m``-cube.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .exactlinalg import smith_normal_form

CUBICAL_MAX_VERTICES = 12


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/t_1 + Z/t_2 + ...`` with ``t_1 | t_2 | ...``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(sorted(self.torsion))
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    def __add__(self, other: "AbelianInvariants") -> "AbelianInvariants":
        return AbelianInvariants.from_cyclic(
            [0] * (self.free_rank + other.free_rank) + list(self.torsion + other.torsion)
        )

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> "AbelianInvariants":
        """Normalise a direct sum of cyclic groups (0 = infinite cyclic)."""
        orders = list(orders)
        free = sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(free, ())
        d = smith_normal_form([[o if i == j else 0 for j in range(len(finite))]
                               for i, o in enumerate(finite)])
        return cls(free, tuple(x for x in d if x > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_list(self) -> list[int]:
        """Compact encoding: ``0`` per free summand, then the torsion orders."""
        return [0] * self.free_rank + list(self.torsion)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``[m]`` containing the empty face and every vertex.

    ``support`` is the vertex mask (all of ``[m]`` by default; smaller for full
    subcomplexes, which keep their original labels).  ``faces`` is a frozenset of bitmasks.  Use :meth:`from_faces` or
    :func:`flag_complex_of_graph` rather than building one by hand; those take
    the downward closure of what they are given.
    """

    m: int
    faces: frozenset = field(repr=False)
    support: int = -1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a complex needs at least one vertex")
        full = (1 << self.m) - 1
        if self.support == -1:
            object.__setattr__(self, "support", full)
        elif self.support & ~full or self.support < 0:
            raise ValueError(f"support {vertices_of(self.support)} leaves [1, {self.m}]")
        faces = set(self.faces)
        for f in faces:
            if f & ~self.support:
                raise ValueError(f"face {vertices_of(f)} leaves the vertex set {vertices_of(self.support)}")
        faces.add(0)
        faces.update(1 << i for i in range(self.m) if self.support >> i & 1)
        # downward closure
        todo = list(faces)
        while todo:
            f = todo.pop()
            g = f
            while g:
                low = g & -g
                sub = f & ~low
                if sub not in faces:
                    faces.add(sub)
                    todo.append(sub)
                g &= ~low
        object.__setattr__(self, "faces", frozenset(faces))

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = []
        for face in faces:
            face = list(face)
            for v in face:
                if not 1 <= v <= m:
                    raise ValueError(f"vertex {v} out of range 1..{m}")
            masks.append(mask_of(face))
        return cls(m, frozenset(masks))

    @classmethod
    def discrete(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset())

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset([(1 << m) - 1]))

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(vertices_of(f) for f in self.faces if bin(f).count("1") == 2)

    def has_edge(self, i: int, j: int) -> bool:
        return (mask_of((i, j)) in self.faces) if i != j else False

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """``adjacency[i - 1]`` is the bitmask of neighbours of vertex ``i``."""
        adj = [0] * self.m
        for i, j in self.edges:
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return tuple(adj)

    @property
    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in itertools.combinations(range(1, self.m + 1), 2)
                if not self.has_edge(i, j)]

    def faces_of_dim(self, k: int) -> list[int]:
        """Faces with ``k + 1`` vertices, sorted by vertex tuple."""
        return sorted((f for f in self.faces if bin(f).count("1") == k + 1),
                      key=vertices_of)

    @property
    def dimension(self) -> int:
        return max(bin(f).count("1") for f in self.faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        out = []
        for f in self.faces:
            if not any(g != f and g & f == f for g in self.faces):
                out.append(vertices_of(f))
        return sorted(out)

    def to_json(self) -> dict:
        return {"m": self.m, "faces": [list(f) for f in self.facets() if len(f) > 1]}

    def permuted(self, perm: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            self.m,
            frozenset(mask_of(perm[v] for v in vertices_of(f)) for f in self.faces),
            mask_of(perm[v] for v in vertices_of(self.support)),
        )

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={self.facets()})"


def complex_from_json(data: dict | str) -> SimplicialComplex:
    """Parse ``{"m": 4, "faces": [[1, 2]]}`` or ``{"m": 4, "edges": [...], "flag": true}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        m = int(data["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("complex JSON needs an integer field 'm'") from exc
    if data.get("flag"):
        return flag_complex_of_graph(m, [tuple(e) for e in data.get("edges", [])])
    faces = list(data.get("faces", []))
    faces += [tuple(e) for e in data.get("edges", [])]
    return SimplicialComplex.from_faces(m, faces)


def flag_complex_of_graph(m: int, edges: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The flag complex whose faces are the cliques of the graph on ``[m]``."""
    adj = [0] * m
    for e in edges:
        e = tuple(e)
        if len(e) != 2:
            raise ValueError(f"edge {e} must have two endpoints")
        i, j = e
        for v in (i, j):
            if not 1 <= v <= m:
                raise ValueError(f"edge endpoint {v} out of range 1..{m}")
        if i == j:
            raise ValueError(f"loop edge {{{i},{i}}}")
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    cliques = set()

    def grow(clique: int, candidates: int):
        cliques.add(clique)
        c = candidates
        while c:
            low = c & -c
            v = low.bit_length() - 1
            grow(clique | low, candidates & adj[v] & ~((low << 1) - 1))
            c &= ~low

    grow(0, (1 << m) - 1)
    return SimplicialComplex(m, frozenset(cliques))


def full_subcomplex(K: SimplicialComplex, J: Iterable[int] | int) -> SimplicialComplex:
    """``K_J = {I in K : I subset of J}``, keeping the original vertex labels.

    The result lives on the same ``[m]`` with ``support == J``.  ``J`` may be an iterable of vertices or a bitmask.
    """
    Jm = J if isinstance(J, int) else mask_of(J)
    if Jm & ~((1 << K.m) - 1) or Jm < 0:
        raise ValueError(f"vertex set {vertices_of(Jm)} leaves [1, {K.m}]")
    return SimplicialComplex(K.m, frozenset(f for f in K.faces if f & ~Jm == 0), Jm)


def support(K: SimplicialComplex) -> tuple[int, ...]:
    """Vertex set the complex lives on (``[m]`` unless it is a full subcomplex)."""
    return vertices_of(K.support)


def components_of_mask(adjacency: Iterable[int], J: int) -> list[int]:
    """Connected components of the graph induced on vertex mask ``J``."""
    adj = list(adjacency)
    comps = []
    rest = J
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier &= ~low
            new = adj[low.bit_length() - 1] & J & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(K: SimplicialComplex) -> list[tuple[int, ...]]:
    """Partition of the vertex set by connectivity of the 1-skeleton."""
    comps = components_of_mask(K.adjacency, K.support)
    return sorted((vertices_of(c) for c in comps), key=lambda c: c[0])


def _boundary_matrix(lower: list[int], upper: list[int]) -> list[list[int]]:
    index = {f: r for r, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for c, f in enumerate(upper):
        verts = vertices_of(f)
        for pos, v in enumerate(verts):
            mat[index[f & ~(1 << (v - 1))]][c] = -1 if pos % 2 else 1
    return mat


def _homology_from_chain(sizes, boundaries, k) -> AbelianInvariants:
    """H_k of a chain complex given cell counts and boundary matrices.

    ``boundaries[k]`` maps k-chains to (k-1)-chains (``None`` when either side
    is empty).
    """
    n_k = sizes.get(k, 0)
    if n_k == 0:
        return AbelianInvariants()
    d_k = boundaries.get(k)
    d_k1 = boundaries.get(k + 1)
    rank_k = len(smith_normal_form(d_k)) if d_k else 0
    div = smith_normal_form(d_k1) if d_k1 else ()
    return AbelianInvariants(n_k - rank_k - len(div), tuple(x for x in div if x > 1))


def _homology_all(sizes: dict[int, int], boundaries: dict) -> dict[int, AbelianInvariants]:
    """Every homology group of a chain complex, one Smith form per boundary map."""
    snf = {d: smith_normal_form(mat) for d, mat in boundaries.items() if mat}
    out = {}
    for k, n_k in sizes.items():
        rank_k = len(snf.get(k, ()))
        div = snf.get(k + 1, ())
        out[k] = AbelianInvariants(n_k - rank_k - len(div), tuple(x for x in div if x > 1))
    return out


def _simplicial_chain(K: SimplicialComplex, degrees=None):
    by_dim: dict[int, list[int]] = {}
    for f in K.faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=vertices_of)
    sizes = {d: len(v) for d, v in by_dim.items()}
    boundaries = {}
    for d in by_dim if degrees is None else degrees:
        if d >= 0 and d in by_dim and d - 1 in by_dim:
            boundaries[d] = _boundary_matrix(by_dim[d - 1], by_dim[d])
    return sizes, boundaries


def reduced_homology_all(K: SimplicialComplex) -> dict[int, AbelianInvariants]:
    """``{k: H~_k(K)}`` for ``k = -1 .. dim K`` (zero groups included)."""
    return _homology_all(*_simplicial_chain(K))


def reduced_homology(K: SimplicialComplex, k: int) -> AbelianInvariants:
    """Reduced simplicial homology ``H~_k(K; Z)``, ``k >= -1``.

    The empty complex (only the empty face) has ``H~_{-1} = Z``; every other
    complex has ``H~_{-1} = 0``.
    """
    if k < -1:
        return AbelianInvariants()
    sizes, boundaries = _simplicial_chain(K, (k, k + 1))
    return _homology_from_chain(sizes, boundaries, k)


def rmk_homology(K: SimplicialComplex, k: int) -> AbelianInvariants:
    """``H_k(R_K) = sum over J of H~_{k-1}(K_J)``."""
    total = AbelianInvariants()
    for J in range(1 << K.m):
        total = total + reduced_homology(full_subcomplex(K, J), k - 1)
    return total


def rmk_homology_all(K: SimplicialComplex) -> list[AbelianInvariants]:
    """``[H_0(R_K), ..., H_m(R_K)]`` via the full-subcomplex formula."""
    total = [AbelianInvariants() for _ in range(K.m + 1)]
    for J in range(1 << K.m):
        for k, h in reduced_homology_all(full_subcomplex(K, J)).items():
            if 0 <= k + 1 <= K.m:
                total[k + 1] = total[k + 1] + h
    return total


def _cubical_cells(K: SimplicialComplex):
    """Cells ``(I, eps)`` of R_K grouped by dimension.

    ``I`` is a face mask, ``eps`` is the mask of coordinates off ``I`` sitting
    at ``+1`` (the others sit at ``-1``).
    """
    full = (1 << K.m) - 1
    cells: dict[int, list[tuple[int, int]]] = {}
    for I in K.faces:
        off = full & ~I
        sub = off
        while True:
            cells.setdefault(bin(I).count("1"), []).append((I, sub))
            if sub == 0:
                break
            sub = (sub - 1) & off
    for v in cells.values():
        v.sort()
    return cells


def cubical_rmk_homology(K: SimplicialComplex, k: int) -> AbelianInvariants:
    """Homology of R_K computed directly from its cube decomposition.

    ``d(I, eps) = sum_r (-1)^r [(I - i_r, eps + i_r) - (I - i_r, eps)]`` where
    ``i_1 < i_2 < ...`` are the vertices of ``I``.
    """
    if K.m > CUBICAL_MAX_VERTICES:
        raise ValueError(f"cubical model capped at m <= {CUBICAL_MAX_VERTICES}, got m = {K.m}")
    sizes, boundaries = _cubical_chain(K, (k, k + 1))
    return _homology_from_chain(sizes, boundaries, k)


def cubical_rmk_homology_all(K: SimplicialComplex) -> list[AbelianInvariants]:
    """``[H_0(R_K), ..., H_m(R_K)]`` from the cube decomposition."""
    if K.m > CUBICAL_MAX_VERTICES:
        raise ValueError(f"cubical model capped at m <= {CUBICAL_MAX_VERTICES}, got m = {K.m}")
    groups = _homology_all(*_cubical_chain(K))
    return [groups.get(k, AbelianInvariants()) for k in range(K.m + 1)]


def _cubical_chain(K: SimplicialComplex, degrees=None):
    cells = _cubical_cells(K)
    sizes = {d: len(v) for d, v in cells.items()}
    boundaries = {}
    for d in cells if degrees is None else degrees:
        if d >= 1 and d in cells:
            index = {c: r for r, c in enumerate(cells[d - 1])}
            mat = [[0] * len(cells[d]) for _ in cells[d - 1]]
            for col, (I, eps) in enumerate(cells[d]):
                for pos, v in enumerate(vertices_of(I)):
                    bit = 1 << (v - 1)
                    sign = -1 if pos % 2 else 1
                    mat[index[(I & ~bit, eps | bit)]][col] += sign
                    mat[index[(I & ~bit, eps)]][col] -= sign
            boundaries[d] = mat
    return sizes, boundaries


@dataclass(frozen=True)
class CommutatorPattern:
    """Index pattern ``(i, j, k_1, ..., k_{l-2})`` of a left-nested commutator."""

    letters: tuple[int, ...]

    def __post_init__(self):
        w = self.letters
        if len(w) < 2:
            raise ValueError("a commutator pattern has at least two letters")
        i, j, ks = w[0], w[1], w[2:]
        chain = (j,) + ks
        if not (i < j and all(a > b for a, b in zip(chain, chain[1:])) and i not in ks):
            raise ValueError(f"{w} violates i < j > k_1 > ... and k_s != i")

    def __len__(self):
        return len(self.letters)


def gscox_generators(K: SimplicialComplex) -> list[CommutatorPattern]:
    """Minimal generators of the commutator subgroup of RC_K as index patterns.

    A pattern ``(i, j, k_1, ..., k_{l-2})`` with ``i < j > k_1 > ...`` and
    ``k_s != i`` is emitted when ``i`` is the smallest vertex of a connected
    component of ``K_{k_1, ..., k_{l-2}, j, i}`` that does not contain ``j``.
    Output is sorted by (length, j, i, k_1, ...).
    """
    adj = K.adjacency
    out = []
    for j in range(2, K.m + 1):
        below = [v for v in range(1, j)]
        for i in below:
            others = [v for v in below if v != i]
            for r in range(len(others) + 1):
                for ks in itertools.combinations(others, r):
                    J = mask_of((i, j) + ks)
                    comp = next(c for c in components_of_mask(adj, J) if c >> (i - 1) & 1)
                    if comp >> (j - 1) & 1:
                        continue
                    if comp & ((1 << (i - 1)) - 1):
                        continue  # i is not the smallest vertex of its component
                    out.append(CommutatorPattern((i, j) + tuple(sorted(ks, reverse=True))))
    out.sort(key=lambda p: (len(p), p.letters[1], p.letters[0], p.letters[2:]))
    return out


def all_complexes(m: int) -> Iterable[SimplicialComplex]:
    """Every simplicial complex on ``[m]`` that contains all vertices."""
    bigger = sorted((f for f in range(1 << m) if bin(f).count("1") >= 2),
                    key=lambda f: (bin(f).count("1"), f))

    def rec(idx: int, faces: set):
        if idx == len(bigger):
            yield SimplicialComplex(m, frozenset(faces))
            return
        f = bigger[idx]
        yield from rec(idx + 1, faces)
        if all((f & ~(1 << b)) in faces for b in range(m) if f >> b & 1):
            faces.add(f)
            yield from rec(idx + 1, faces)
            faces.discard(f)

    base = {0} | {1 << i for i in range(m)}
    yield from rec(0, base)


def graphs_up_to_isomorphism(m: int) -> list[SimplicialComplex]:
    """Flag complexes of one representative per isomorphism class of graphs on ``[m]``."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    perms = list(itertools.permutations(range(1, m + 1)))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        edges = [p for b, p in enumerate(pairs) if bits >> b & 1]
        canon = min(tuple(sorted(tuple(sorted((pi[a - 1], pi[b - 1]))) for a, b in edges)) for pi in perms)
        if canon not in seen:
            seen.add(canon)
            out.append(flag_complex_of_graph(m, canon))
    return out
