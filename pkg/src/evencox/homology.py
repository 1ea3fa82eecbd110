"""Integer homology of simplicial complexes given by their simplices.

Simplices are tuples of mutually comparable vertices listed in increasing
order; for an order complex this is the chain order of the poset.  Betti
numbers and torsion come from Smith normal form of the boundary matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Simplex = tuple


@dataclass
class ChainComplex:
    """Simplicial chain complex: ``basis[k]`` is the sorted list of k-simplices.

    ``boundaries[k]`` is the sparse matrix of the boundary map from degree k
    to degree k-1, stored as ``{column: {row: coefficient}}``; degree 0 maps
    to zero.
    """

    basis: list[list[Simplex]]
    boundaries: list[dict[int, dict[int, int]]] = field(repr=False)

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    def matrix(self, k: int) -> list[list[int]]:
        """Dense boundary matrix of degree k (rows: (k-1)-simplices)."""
        rows = len(self.basis[k - 1]) if k >= 1 else 0
        cols = len(self.basis[k]) if 0 <= k < len(self.basis) else 0
        dense = [[0] * cols for _ in range(rows)]
        if k >= 1 and k < len(self.basis):
            for c, col in self.boundaries[k].items():
                for r, v in col.items():
                    dense[r][c] = v
        return dense

    def is_complex(self) -> bool:
        """True iff every composite of consecutive boundary maps vanishes."""
        for k in range(2, len(self.basis)):
            outer = self.boundaries[k - 1]
            for col in self.boundaries[k].values():
                acc: dict[int, int] = {}
                for mid, v in col.items():
                    for r, u in outer.get(mid, {}).items():
                        acc[r] = acc.get(r, 0) + u * v
                if any(acc.values()):
                    return False
        return True


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def close_downward(simplices: Iterable[Sequence]) -> set[Simplex]:
    out: set[Simplex] = set()
    stack = [tuple(s) for s in simplices]
    while stack:
        s = stack.pop()
        if not s or s in out:
            continue
        out.add(s)
        if len(s) > 1:
            stack.extend(s[:i] + s[i + 1:] for i in range(len(s)))
    return out


def chain_complex(simplices: Iterable[Sequence], key=None) -> ChainComplex:
    """Chain complex of the simplicial complex generated by ``simplices``.

    Missing faces are added.  The basis of each degree is sorted
    lexicographically (optionally through ``key`` applied to vertices) and the
    boundary of a simplex is the alternating sum of its facets, signed by the
    position of the deleted vertex.
    """
    faces = close_downward(simplices)
    top = max((len(s) for s in faces), default=0) - 1
    sort_key = None if key is None else (lambda s: tuple(key(v) for v in s))
    basis = [sorted((s for s in faces if len(s) == k + 1), key=sort_key) for k in range(top + 1)]
    position = [{s: i for i, s in enumerate(b)} for b in basis]
    boundaries: list[dict[int, dict[int, int]]] = [{}]
    for k in range(1, top + 1):
        below = position[k - 1]
        bd: dict[int, dict[int, int]] = {}
        for c, s in enumerate(basis[k]):
            bd[c] = {below[s[:i] + s[i + 1:]]: (-1) ** i for i in range(k + 1)}
        boundaries.append(bd)
    return ChainComplex(basis, boundaries)


def elementary_divisors(columns: dict[int, dict[int, int]]) -> list[int]:
    """Nonzero Smith normal form diagonal of a sparse integer matrix.

    Unit pivots are eliminated sparsely first; whatever is left is reduced
    densely.  Python integers keep the arithmetic exact.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for c, col in columns.items():
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
                cols.setdefault(c, set()).add(r)
    divisors: list[int] = []
    progress = True
    while progress:
        progress = False
        for r in list(rows):
            row = rows.get(r)
            if not row:
                rows.pop(r, None)
                continue
            units = [c for c, v in row.items() if v in (1, -1)]
            if not units:
                continue
            c = min(units, key=lambda x: len(cols[x]))
            v = row[c]
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                other = rows[r2]
                factor = other[c] * v
                for c2, u in row.items():
                    nv = other.get(c2, 0) - factor * u
                    if nv:
                        if c2 not in other:
                            cols[c2].add(r2)
                        other[c2] = nv
                    elif c2 in other:
                        del other[c2]
                        cols[c2].discard(r2)
                if not other:
                    del rows[r2]
            for c2 in row:
                cols[c2].discard(r)
            del rows[r]
            del cols[c]
            divisors.append(1)
            progress = True
    if rows:
        live_cols = sorted({c for row in rows.values() for c in row})
        col_pos = {c: i for i, c in enumerate(live_cols)}
        dense = []
        for row in rows.values():
            line = [0] * len(live_cols)
            for c, v in row.items():
                line[col_pos[c]] = v
            dense.append(line)
        divisors.extend(_dense_diagonal(dense))
    return sorted(divisors)


def _dense_diagonal(A: list[list[int]]) -> list[int]:
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    dirty |= A[t][j] != 0
            if dirty:
                # Move the smallest remaining entry of row/column t to the pivot.
                cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, i, j = min(cands)
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _homology_of(dims: list[int], boundaries: list[dict]) -> HomologyResult:
    divs = [[] for _ in dims] + [[]]
    for k in range(1, len(dims)):
        divs[k] = elementary_divisors(boundaries[k])
    betti = tuple(dims[k] - len(divs[k]) - len(divs[k + 1]) for k in range(len(dims)))
    torsion = tuple(tuple(d for d in divs[k + 1] if d > 1) for k in range(len(dims)))
    return HomologyResult(betti, torsion)


def homology(X: ChainComplex) -> HomologyResult:
    return _homology_of(X.dims, X.boundaries)


def relative_homology(X: ChainComplex, A) -> HomologyResult:
    """Homology of the quotient complex X/A (A given by its simplices or as a ChainComplex)."""
    sub = {s for b in A.basis for s in b} if isinstance(A, ChainComplex) else {tuple(s) for s in A}
    if sub != close_downward(sub):
        raise ValueError("A is not closed under taking faces")
    keep = []
    for k, b in enumerate(X.basis):
        present = {s for s in b if s in sub}
        keep.append([i for i, s in enumerate(b) if s not in present])
    missing = sub - {s for b in X.basis for s in b}
    if missing:
        raise ValueError("A is not a subcomplex of X")
    new_pos = [{old: new for new, old in enumerate(kk)} for kk in keep]
    boundaries: list[dict] = [{}]
    for k in range(1, len(X.basis)):
        bd = {}
        for old_c, col in X.boundaries[k].items():
            c = new_pos[k].get(old_c)
            if c is None:
                continue
            bd[c] = {new_pos[k - 1][r]: v for r, v in col.items() if r in new_pos[k - 1]}
        boundaries.append(bd)
    return _homology_of([len(kk) for kk in keep], boundaries)


def euler_characteristic(X: ChainComplex) -> int:
    return sum((-1) ** k * d for k, d in enumerate(X.dims))


def orbihedral_euler(W) -> Fraction:
    """Sum over spherical T (including the empty set) of (-1)^|T| / |W_T|."""
    poset = W.spherical_poset()
    return sum((Fraction((-1) ** len(T), poset.order_of[T]) for T in poset), Fraction(0))


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
