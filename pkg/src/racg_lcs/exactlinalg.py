"""Exact linear algebra over the integers and over GF(2).

Integer matrices are plain lists of lists of Python ints, so entries never
overflow.  GF(2) matrices pack each row into a single Python int (bit ``j``
is column ``j``).
"""
from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "smith_normal_form",
    "elementary_divisors",
    "IntegerLattice",
    "GF2Matrix",
    "gf2_rank",
    "gf2_solve",
    "gf2_nullspace",
]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]], transforms: bool = False):
    """Smith normal form of an integer matrix.

    Returns the nonzero diagonal entries ``d_1 | d_2 | ...`` as a tuple.  With
    ``transforms=True`` returns ``(d, U, D, V)`` where ``U`` and ``V`` are
    unimodular and ``U @ A @ V == D``.

    Pivots are chosen as the entry of smallest absolute value in the active
    block, which keeps intermediate entries small on the matrices we meet.
    """
    M = [list(map(int, row)) for row in A]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    U = _identity(nrows) if transforms else None
    V = _identity(ncols) if transforms else None

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        rs, rd = M[src], M[dst]
        for c in range(ncols):
            if rs[c]:
                rd[c] += q * rs[c]
        if U is not None:
            us, ud = U[src], U[dst]
            for c in range(nrows):
                if us[c]:
                    ud[c] += q * us[c]

    def add_col(src, dst, q):
        for row in M:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # smallest nonzero entry of the active block
        best = None
        for i in range(t, nrows):
            for j, x in enumerate(M[i][t:], start=t):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if M[i][t]:
                    add_row(t, i, -(M[i][t] // p))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if M[t][j]:
                    add_col(t, j, -(M[t][j] // p))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # a remainder survived: move the smallest one into the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t + 1, nrows) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t + 1, ncols) if M[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            if abs(p) == 1:
                break
            # divisibility of the rest of the block by the pivot
            bad = next(
                (i for i in range(t + 1, nrows) for x in M[i][t + 1:] if x % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1

    d = tuple(M[i][i] for i in range(min(nrows, ncols)) if M[i][i])
    if transforms:
        return d, U, M, V
    return d


def elementary_divisors(A: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero Smith invariants of ``A`` (alias kept for readability)."""
    return smith_normal_form(A)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class IntegerLattice:
    """Incrementally maintained Hermite basis of a sublattice of ``Z^n``.

    Vectors are sparse dicts ``{column: value}``.  Rows are kept echelon by
    leading column with a positive leading entry; :meth:`normal_form` gives the
    canonical representative of a vector modulo the lattice, so the quotient
    ``Z^n / L`` can be read off as a polycyclic sequence: free columns carry no
    pivot, torsion columns carry a pivot ``d > 1``, and pivot-1 columns are
    eliminated.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}

    def add(self, vec: dict[int, int]) -> None:
        v = {c: x for c, x in vec.items() if x}
        while v:
            p = min(v)
            a = v[p]
            r = self.rows.get(p)
            if r is None:
                if a < 0:
                    v = {c: -x for c, x in v.items()}
                self.rows[p] = v
                return
            b = r[p]
            if a % b == 0:
                v = _axpy(v, r, -(a // b))
                continue
            g, x, y = _xgcd(b, a)
            # unimodular 2x2 step: (r, v) -> (x r + y v, (a/g) r - (b/g) v)
            new_r = _axpy(_scale(r, x), v, y)
            v = _axpy(_scale(r, a // g), v, -(b // g))
            if new_r[p] < 0:
                new_r = _scale(new_r, -1)
            self.rows[p] = new_r

    def reduce_rows(self) -> None:
        """Bring the basis to reduced Hermite form (entries above pivots in [0, d))."""
        for q in sorted(self.rows):
            row = self.rows[q]
            for p in sorted(c for c in row if c > q and c in self.rows):
                x = row.get(p, 0)
                if x:
                    d = self.rows[p][p]
                    f = x // d
                    if f:
                        row = _axpy(row, self.rows[p], -f)
            self.rows[q] = row

    def normal_form(self, vec: dict[int, int]) -> dict[int, int]:
        v = {c: x for c, x in vec.items() if x}
        for p in sorted(self.rows):
            x = v.get(p, 0)
            if x:
                r = self.rows[p]
                f = x // r[p]
                if f:
                    v = _axpy(v, r, -f)
        return v

    def pivots(self) -> dict[int, int]:
        return {p: r[p] for p, r in self.rows.items()}

    def invariants(self) -> tuple[int, list[int]]:
        """``(free_rank, torsion)`` of the quotient ``Z^n / L``."""
        mat = [[self.rows[p].get(c, 0) for c in range(self.ncols)] for p in sorted(self.rows)]
        d = smith_normal_form(mat) if mat else ()
        torsion = [x for x in d if x > 1]
        return self.ncols - len(d), torsion


def _scale(v: dict[int, int], k: int) -> dict[int, int]:
    return {c: k * x for c, x in v.items()} if k else {}


def _axpy(v: dict[int, int], r: dict[int, int], k: int) -> dict[int, int]:
    """``v + k * r`` with zero entries dropped."""
    out = dict(v)
    for c, x in r.items():
        y = out.get(c, 0) + k * x
        if y:
            out[c] = y
        else:
            out.pop(c, None)
    return out


class GF2Matrix:
    """Dense GF(2) matrix with rows packed into ints."""

    def __init__(self, rows: Iterable, ncols: int | None = None):
        packed = []
        width = 0
        for row in rows:
            if isinstance(row, int):
                packed.append(row)
            else:
                bits = list(row)
                width = max(width, len(bits))
                packed.append(sum(1 << j for j, b in enumerate(bits) if b & 1))
        self.rows = packed
        if ncols is None:
            ncols = max([width] + [r.bit_length() for r in packed])
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]


def _as_gf2(A) -> GF2Matrix:
    return A if isinstance(A, GF2Matrix) else GF2Matrix(A)


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    """Echelon basis keyed by lowest set bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            b = basis.get(low)
            if b is None:
                basis[low] = r
                break
            r ^= b
    return basis


def gf2_rank(A) -> int:
    return len(_echelon(_as_gf2(A).rows))


def gf2_solve(A, b: Sequence[int]):
    """Solve ``A x = b`` over GF(2).  Returns a 0/1 list or ``None``."""
    A = _as_gf2(A)
    if len(b) != A.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.nrows}")
    n = A.ncols
    # augmented columns as row vectors of the transpose: work on rows with
    # the rhs bit stored at position n
    aug = [r | ((bi & 1) << n) for r, bi in zip(A.rows, b)]
    pivots: list[tuple[int, int]] = []  # (column, row)
    rows = aug
    r = 0
    for c in range(n):
        bit = 1 << c
        sel = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append((c, r))
        r += 1
    if any(rows[i] >> n & 1 for i in range(r, len(rows))):
        return None
    x = [0] * n
    for c, i in pivots:
        x[c] = rows[i] >> n & 1
    return x


def gf2_nullspace(A) -> list[list[int]]:
    """Basis of ``{x : A x = 0}`` as 0/1 lists."""
    A = _as_gf2(A)
    n = A.ncols
    rows = list(A.rows)
    pivcols = []
    r = 0
    for c in range(n):
        bit = 1 << c
        sel = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivcols.append(c)
        r += 1
    free = [c for c in range(n) if c not in set(pivcols)]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for i, c in enumerate(pivcols):
            if rows[i] >> f & 1:
                x[c] = 1
        basis.append(x)
    return basis
