"""Finite truncations of the Davis complex as posets of spherical cosets.

A cell of type T is the spherical coset ``w W_T``, recorded by its
(∅,T)-reduced representative.  Inside a ball complex representatives are
integer ids into the BFS enumeration and a cell is the pair ``(id, T)``.
A coset is kept only when every one of its elements lies in the ball.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable

import numpy as np

from .coxeter import CoxeterError, CoxeterGroup, Element, NotSphericalError, _mask, ball_data, subset_key
from .nerve import SimplicialComplex

Cell = tuple[int, frozenset]


@dataclass(frozen=True)
class SphericalCoset:
    rep: Element
    type: frozenset[int]

    @property
    def key(self) -> tuple:
        return (subset_key(self.type), self.rep.key)

    def describe(self, W: CoxeterGroup) -> dict:
        return {"rep": W.format(self.rep), "type": W.names(self.type)}


def canonical_coset(W: CoxeterGroup, w: Element, T: Iterable[int]) -> SphericalCoset:
    T = W.gens(T)
    if not W.is_spherical(T):
        raise NotSphericalError(f"{W.names(T)} is not spherical")
    return SphericalCoset(W.coset_min_rep(w, T), T)


def ruin_filter_types(W: CoxeterGroup, U: Iterable[int], t) -> list[frozenset]:
    """Spherical T lying under some T' ⊆ U with t ∈ T' (the cell types of a one-letter ruin)."""
    U, t = W.gens(U), W.gen(t)
    poset = W.spherical_poset()
    tops = poset.at_least({t}, within=U)
    return [T for T in poset if any(T <= top for top in tops)]


def chamber(W: CoxeterGroup, w: Element, filter: tuple | None = None) -> set[SphericalCoset]:
    """The cosets (0-simplices) of the translated chamber wK, optionally cut down to wK(U)."""
    types = list(W.spherical_poset()) if filter is None else ruin_filter_types(W, *filter)
    return {canonical_coset(W, w, T) for T in types}


class BallComplex:
    """Cells of the Davis complex of W_V whose vertices all have length <= radius."""

    def __init__(self, W: CoxeterGroup, radius: int, generators: Iterable[int] | None = None):
        data = ball_data(W, radius, generators)
        self.group = W
        self.radius = radius
        self.generators = frozenset(data.generators)
        self.words = data.words
        self.index = data.index
        self.right = data.right
        self.descent_list = data.descents
        self.descents = np.array(data.descents, dtype=np.int64)
        self.lengths = np.array([len(w) for w in data.words], dtype=np.int64)
        poset = W.spherical_poset()
        self.types = [T for T in poset if T <= self.generators]
        self.type_length = {T: W.longest_length(T) for T in self.types}
        self.type_mask = {T: _mask(T) for T in self.types}
        self.D = max(self.type_length.values())

    def __len__(self) -> int:
        return len(self.words)

    def __repr__(self) -> str:
        return f"BallComplex(radius={self.radius}, vertices={len(self)}, gens={self.group.names(self.generators)})"

    # -- vertices -------------------------------------------------------------

    def element(self, i: int) -> Element:
        return Element(self.words[i])

    def id_of(self, w) -> int:
        word = w.word if isinstance(w, Element) else self.group.normal_form(w).word
        try:
            return self.index[word]
        except KeyError:
            raise CoxeterError(f"{self.group.format(word)} is outside the ball") from None

    def length(self, i: int) -> int:
        return len(self.words[i])

    def mul(self, i: int, word: Iterable[int]) -> int:
        """Id of (element i)·word, or -1 once the path leaves the ball."""
        for s in word:
            i = self.right[i][s]
            if i < 0:
                return -1
        return i

    def coset_rep(self, i: int, T: frozenset) -> int:
        d = self.descent_list[i] & self.type_mask[T]
        while d:
            s = (d & -d).bit_length() - 1
            i = self.right[i][s]
            d = self.descent_list[i] & self.type_mask[T]
        return i

    def is_safe(self, i: int) -> bool:
        return self.length(i) + self.D <= self.radius

    # -- cells ----------------------------------------------------------------

    def has_cell(self, i: int, T: frozenset) -> bool:
        """(i, T) is a cell: i is (∅,T)-reduced and the whole coset fits in the ball."""
        return (
            T in self.type_mask
            and not self.descent_list[i] & self.type_mask[T]
            and len(self.words[i]) + self.type_length[T] <= self.radius
        )

    def cell_of(self, i: int, T: frozenset) -> Cell | None:
        """The cell of type T containing vertex i, if it lies in the ball."""
        rep = self.coset_rep(i, T)
        return (rep, T) if self.has_cell(rep, T) else None

    def cell_reps(self, T: frozenset) -> np.ndarray:
        ok = (self.descents & self.type_mask[T]) == 0
        ok &= self.lengths + self.type_length[T] <= self.radius
        return np.flatnonzero(ok)

    def cells(self, types: Iterable[frozenset] | None = None) -> list[Cell]:
        out = []
        for T in (self.types if types is None else types):
            out.extend((int(i), T) for i in self.cell_reps(T))
        return out

    def cells_by_type(self) -> dict[frozenset, int]:
        return {T: len(self.cell_reps(T)) for T in self.types}

    def coset(self, cell: Cell) -> SphericalCoset:
        return SphericalCoset(self.element(cell[0]), cell[1])

    def vertices_of(self, cell: Cell) -> list[int]:
        i, T = cell
        return [self.mul(i, u) for u in self.group.parabolic(T).words]

    def vertices_with_offsets(self, cell: Cell) -> list[tuple[int, int]]:
        """Pairs (vertex id, index of u in W_T) with vertex = rep·u."""
        i, T = cell
        par = self.group.parabolic(T)
        return [(self.mul(i, u), k) for k, u in enumerate(par.words)]

    def faces_of(self, cell: Cell, strict: bool = True) -> set[Cell]:
        """All cells contained in ``cell`` (they are automatically in the ball)."""
        i, T = cell
        par = self.group.parabolic(T)
        out = set()
        for V in self.types:
            if not V <= T or (strict and V == T):
                continue
            for k in _min_coset_reps(par, V):
                out.add((self.mul(i, par.words[k]), V))
        return out

    def leq(self, a: Cell, b: Cell) -> bool:
        """Coset containment a ⊆ b."""
        return a[1] <= b[1] and self.coset_rep(a[0], b[1]) == b[0]

    def cube(self, i: int, T: frozenset) -> set[Cell]:
        if not self.has_cell(i, T):
            raise CoxeterError("no such cell in the ball")
        return {(self.coset_rep(i, V), V) for V in self.types if V <= T}

    def vertex_link(self, i: int) -> SimplicialComplex:
        """Link of a vertex: faces are the types T of cells containing it."""
        if not self.is_safe(i):
            raise CoxeterError(
                f"vertex {self.group.format(self.words[i])} is not safe: "
                f"length {self.length(i)} + {self.D} > radius {self.radius}"
            )
        faces = [T for T in self.types if T and self.cell_of(i, T) is not None]
        return SimplicialComplex(frozenset(self.generators), frozenset(faces))

    def cayley_edges(self) -> set[frozenset]:
        """Vertex pairs joined by an edge cell (type of size one)."""
        out = set()
        for T in self.types:
            if len(T) == 1:
                for i in self.cell_reps(T):
                    i = int(i)
                    out.add(frozenset((i, self.mul(i, T))))
        return out

    def cell_key(self, cell: Cell) -> tuple:
        return (subset_key(cell[1]), len(self.words[cell[0]]), self.words[cell[0]])


def build_ball_complex(W: CoxeterGroup, radius: int, generators: Iterable[int] | None = None) -> BallComplex:
    return BallComplex(W, radius, generators)


def _min_coset_reps(par, V: frozenset) -> list[int]:
    cache = par.__dict__.setdefault("_min_reps", {})
    if V not in cache:
        cache[V] = [k for k in range(len(par)) if par.coset_rep(k, V) == k]
    return cache[V]


@dataclass
class OrderComplex:
    """Chains of a finite poset; ``simplices`` index into ``elements``."""

    elements: list
    simplices: list[tuple[int, ...]]

    def f_vector(self) -> list[int]:
        top = max((len(s) for s in self.simplices), default=0)
        return [sum(1 for s in self.simplices if len(s) == k + 1) for k in range(top)]

    def sub(self, keep: Callable[[Hashable], bool]) -> list[tuple[int, ...]]:
        """Simplices all of whose vertices satisfy ``keep`` (a full subcomplex)."""
        ok = [keep(e) for e in self.elements]
        return [s for s in self.simplices if all(ok[i] for i in s)]


def order_complex(elements: Iterable, below: Callable[[Hashable], Iterable], key=None) -> OrderComplex:
    """All chains c0 < c1 < ... < ck of the poset.

    ``below(c)`` lists the elements strictly below c (restricted to the given
    elements).  Elements are indexed along a linear extension, so each chain
    is an increasing index tuple.
    """
    elems = list(elements)
    members = set(elems)
    down = {c: [b for b in below(c) if b in members] for c in elems}
    height: dict = {}

    def h(c):
        if c not in height:
            height[c] = 1 + max((h(b) for b in down[c]), default=0)
        return height[c]

    elems.sort(key=lambda c: (h(c), key(c) if key else c))
    pos = {c: i for i, c in enumerate(elems)}
    chains: dict = {}

    def ending_at(c):
        if c not in chains:
            out = [(pos[c],)]
            for b in down[c]:
                out.extend(ch + (pos[c],) for ch in ending_at(b))
            chains[c] = out
        return chains[c]

    simplices = [ch for c in elems for ch in ending_at(c)]
    simplices.sort(key=lambda s: (len(s), s))
    return OrderComplex(elems, simplices)


def chain_counts(elements: Iterable, below: Callable[[Hashable], Iterable]) -> list[int]:
    """f-vector of the order complex without listing chains."""
    elems = list(elements)
    members = set(elems)
    memo: dict = {}

    def counts(c):
        if c not in memo:
            acc = [1]
            for b in below(c):
                if b not in members:
                    continue
                for k, v in enumerate(counts(b)):
                    if k + 1 >= len(acc):
                        acc.append(0)
                    acc[k + 1] += v
            memo[c] = acc
        return memo[c]

    total: list[int] = []
    for c in elems:
        for k, v in enumerate(counts(c)):
            if k >= len(total):
                total.append(0)
            total[k] += v
    return total


def ball_order_complex(B: BallComplex, cells: Iterable[Cell] | None = None) -> OrderComplex:
    cells = B.cells() if cells is None else list(cells)
    return order_complex(cells, B.faces_of, key=B.cell_key)


def chamber_order_complex(W: CoxeterGroup) -> OrderComplex:
    """Order complex of the spherical poset: the chamber K."""
    poset = W.spherical_poset()
    return order_complex(list(poset), lambda T: poset.below(T, strict=True), key=subset_key)


def chambers_meet(W: CoxeterGroup, w: Element, w2: Element) -> bool:
    return bool(chamber(W, w) & chamber(W, w2))
