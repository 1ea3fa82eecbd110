"""(U,T)-ruins, boundary collars, the even/odd coloring, and lemma checks.

Checks on the one-letter ruin run at a check radius rho.  An instance is a
cell whose minimal representative has length <= rho; the supporting ball of
W_U is built at rho + D, with D the longest-element bound over the cell
types, so every vertex of an instance cell is present.  Components of the
boundary are found by union-find over boundary edges (x, xg), g in U - t.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .coxeter import INF, CoxeterGroup, Element, NotEvenError, _mask, subset_key
from .davis import BallComplex, Cell, ruin_filter_types
from .nerve import RuinContext, ruin_context, sphere_check


@dataclass
class Verdict:
    lemma: str
    instances_checked: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"lemma": self.lemma, "instances_checked": self.instances_checked,
               "failures": self.failures, "passed": self.passed}
        if self.details:
            out["details"] = self.details
        return out


def _cell_json(W: CoxeterGroup, words: list, cell: Cell) -> dict:
    return {"rep": W.format(words[cell[0]]), "type": W.names(cell[1])}


# -- general ruins ------------------------------------------------------------

@dataclass
class Ruin:
    U: frozenset
    T: frozenset
    omega: set
    boundary: set
    hat: set
    ball: BallComplex

    def sigma(self) -> set:
        """Cells of Sigma(U) in the ball."""
        return set(self.ball.cells(V for V in self.ball.types if V <= self.U))


def build_ruin(B: BallComplex, U: Iterable, T: Iterable) -> Ruin:
    W = B.group
    U, T = W.gens(U), W.gens(T)
    types_U = [V for V in B.types if V <= U]
    if T not in types_U:
        raise ValueError(f"{W.names(T)} is not a spherical subset of {W.names(U)}")
    omega, hat = set(), set()
    for V in types_U:
        cells = B.cells([V])
        if T <= V:
            omega.update(cells)
            continue
        hat.update(cells)
        top = V | T
        if top in B.type_mask and top <= U:
            omega.update(c for c in cells if B.cell_of(c[0], top) is not None)
    boundary = {c for c in omega if not T <= c[1]}
    return Ruin(U, T, omega, boundary, hat, B)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


@dataclass
class RuinComponent:
    coset: Element           # minimal representative of the coset wW_U
    vertices: list[int]
    cells: set
    coset_consistent: bool

    @property
    def is_base(self) -> bool:
        """The component through e (truncation can split a coset into several pieces)."""
        return self.vertices[0] == 0


def ruin_components(B: BallComplex, t) -> list[RuinComponent]:
    """Path components of Omega(S,t) in the ball, one per vertex class.

    Every vertex of the ball is a vertex of Omega(S,t); vertices are joined
    when they share a cell of the ruin.
    """
    W = B.group
    t = W.gen(t)
    ruin = build_ruin(B, B.generators, {t})
    uf = _UnionFind(len(B))
    for cell in ruin.omega:
        if t in cell[1]:
            for v in B.vertices_of(cell):
                uf.union(cell[0], v)
    U = ruin_context(W, t).U & B.generators
    groups: dict[int, list[int]] = {}
    for v in range(len(B)):
        groups.setdefault(uf.find(v), []).append(v)
    cells_of: dict[int, set] = {}
    for cell in ruin.omega:
        cells_of.setdefault(uf.find(cell[0]), set()).add(cell)
    out = []
    for root, verts in sorted(groups.items()):
        reps = {W.coset_min_rep(B.element(v), U).word for v in verts}
        coset = W.coset_min_rep(B.element(root), U)
        out.append(RuinComponent(coset, verts, cells_of.get(root, set()), len(reps) == 1))
    return out


def verify_excision(B: BallComplex, V: Iterable, T: Iterable, s=None) -> Verdict:
    """Cell-set identities behind the two excision isomorphisms."""
    W = B.group
    V, T = W.gens(V), W.gens(T)
    ruin = build_ruin(B, V, T)
    failures = []
    lhs = ruin.omega - ruin.boundary
    rhs = ruin.sigma() - ruin.hat
    instances = len(lhs | rhs)
    if lhs != rhs:
        failures.append({"identity": 1, "V": W.names(V), "T": W.names(T),
                         "difference": [_cell_json(W, B.words, c) for c in sorted(lhs ^ rhs)[:10]]})
    letters = sorted(T) if s is None else [W.gen(s)]
    for x in letters:
        Tp = T - {x}
        small = build_ruin(B, V - {x}, Tp)
        big_p = build_ruin(B, V, Tp)
        lhs2 = small.sigma() - small.hat
        rhs2 = ruin.hat - big_p.hat
        instances += len(lhs2 | rhs2)
        if lhs2 != rhs2:
            failures.append({"identity": 2, "V": W.names(V), "T": W.names(T), "s": W.generators[x],
                             "difference": [_cell_json(W, B.words, c) for c in sorted(lhs2 ^ rhs2)[:10]]})
    return Verdict("excision", instances, failures)


# -- the one-letter ruin and its coloring ------------------------------------

@dataclass
class Collar:
    component: int               # ball id of the minimal vertex of the boundary component
    color: tuple
    parity: str
    vertices: list[int]
    owner: "OneLetterRuin" = field(repr=False)

    @cached_property
    def body(self) -> set:
        """Union of the chambers vK(U), v a vertex of the component, cut to the ball."""
        B = self.owner.ball
        out = set()
        for v in self.vertices:
            for T in self.owner.types:
                cell = B.cell_of(v, T)
                if cell is not None:
                    out.add(cell)
        return out

    @cached_property
    def boundary_cells(self) -> set:
        return {c for c in self.body if self.owner.t not in c[1]}

    @cached_property
    def inner(self) -> set:
        return {c for c in self.body if self.owner.t in c[1]}


class OneLetterRuin:
    """The component Omega of Omega(S,t) through e, with its collars and coloring."""

    def __init__(self, W: CoxeterGroup, t, radius: int):
        self.group = W
        self.t = W.gen(t)
        self.radius = radius
        self.context: RuinContext = ruin_context(W, self.t)
        self.types = ruin_filter_types(W, self.context.U, self.t)
        self.coordinates = sorted((T for T in self.types if self.t in T), key=subset_key)
        self.D = W.max_longest_length(self.types)
        self.ball = BallComplex(W, radius + self.D, self.context.U)
        self._images: dict[int, tuple] = {0: tuple(0 for _ in self.coordinates)}
        self._colors: dict[int, tuple] = {}
        self._cell_info: dict = {}

    def __repr__(self) -> str:
        W = self.group
        return f"OneLetterRuin(t={W.generators[self.t]}, radius={self.radius}, ball={len(self.ball)})"

    # boundary components

    @cached_property
    def component(self) -> np.ndarray:
        """component[v] = ball id of the minimal vertex in v's boundary component."""
        B = self.ball
        n = len(B)
        right = np.asarray(B.right, dtype=np.int64).reshape(n, -1)
        rows, cols = [], []
        for g in sorted(self.context.U - {self.t}):
            col = right[:, g]
            ok = np.flatnonzero(col >= 0)
            rows.append(ok)
            cols.append(col[ok])
        rows_a = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
        cols_a = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
        graph = coo_matrix((np.ones(len(rows_a), dtype=np.int8), (rows_a, cols_a)), shape=(n, n))
        _, labels = connected_components(graph, directed=False)
        first = np.full(labels.max() + 1, n, dtype=np.int64)
        np.minimum.at(first, labels, np.arange(n))
        return first[labels]

    @cached_property
    def components_match_cosets(self) -> bool:
        """Observed pattern: each boundary component is one coset xW_{U-t}."""
        mask = _mask(self.context.U - {self.t})
        reduced = np.flatnonzero((self.ball.descents & mask) == 0)
        comp = self.component
        counts = np.bincount(comp[reduced], minlength=len(self.ball))
        return bool(np.all(comp[reduced] == reduced) and np.all(counts[np.unique(comp)] == 1))

    # coloring

    @cached_property
    def _parabolics(self) -> list:
        return [self.group.parabolic(T) for T in self.coordinates]

    def _image(self, i: int) -> tuple:
        found = self._images.get(i)
        if found is None:
            word = self.ball.words[i]
            parent = self._image(self.ball.index[word[:-1]])
            s = word[-1]
            found = tuple(par.right[k][s] if s in par.T else k for par, k in zip(self._parabolics, parent))
            self._images[i] = found
        return found

    def color(self, i: int) -> tuple:
        """c(w) as a tuple of coset-representative indices, one per coordinate."""
        if not self.group.even:
            raise NotEvenError("coloring requires an even Coxeter system")
        found = self._colors.get(i)
        if found is None:
            found = tuple(par.coset_rep(k, par.T - {self.t})
                          for par, k in zip(self._parabolics, self._image(i)))
            self._colors[i] = found
        return found

    def color_of_word(self, word: Iterable[int]) -> tuple:
        """c(w) computed from an arbitrary expression of w."""
        word = tuple(word)
        out = []
        for par in self._parabolics:
            k = par.evaluate(x for x in word if x in par.T)
            out.append(par.coset_rep(k, par.T - {self.t}))
        return tuple(out)

    def parity(self, i: int) -> str:
        return self.group.t_parity(self.ball.element(i), self.t)

    def color_json(self, color: tuple) -> dict:
        W = self.group
        return {" ".join(W.names(T)): W.format(par.words[k])
                for T, par, k in zip(self.coordinates, self._parabolics, color)}

    # cells of the check region

    def check_cells(self) -> list[Cell]:
        B = self.ball
        out = []
        for T in self.types:
            reps = B.cell_reps(T)
            out.extend((int(i), T) for i in reps[B.lengths[reps] <= self.radius])
        return out

    def check_vertices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.ball.lengths <= self.radius)]

    def cell_info(self, cell: Cell) -> list[tuple[int, int, int, tuple, str]]:
        """(vertex, offset in W_T, component, color, parity) for each vertex of the cell."""
        found = self._cell_info.get(cell)
        if found is None:
            comp = self.component
            found = [(v, k, int(comp[v]), self.color(v), self.parity(v))
                     for v, k in self.ball.vertices_with_offsets(cell)]
            self._cell_info[cell] = found
        return found

    # collars

    def collar(self, component: int) -> Collar:
        comp = self.component
        verts = [int(v) for v in np.flatnonzero(comp == component)]
        return Collar(component, self.color(component), self.parity(component), verts, self)

    def collars(self) -> list[Collar]:
        """Collars whose boundary component meets the check region."""
        comps = sorted({int(self.component[v]) for v in self.check_vertices()})
        return [self.collar(c) for c in comps]

    def base_collar(self) -> Collar:
        return self.collar(int(self.component[0]))


def color_vertices(omega: OneLetterRuin) -> dict[int, tuple]:
    return {v: omega.color(v) for v in omega.check_vertices()}


def color_classes(omega: OneLetterRuin) -> dict[tuple, list[int]]:
    """Color -> sorted component ids of the collars carrying it."""
    out: dict[tuple, list[int]] = {}
    for c in sorted({int(omega.component[v]) for v in omega.check_vertices()}):
        out.setdefault(omega.color(c), []).append(c)
    return out


def color_summary(omega: OneLetterRuin) -> dict:
    classes = color_classes(omega)
    even = [c for c, comps in classes.items() if omega.parity(comps[0]) == "even"]
    return {"colors": len(classes), "even_colors": len(even), "odd_colors": len(classes) - len(even),
            "collars": sum(len(v) for v in classes.values())}


def color_intersection(omega: OneLetterRuin, first: Iterable[int], second: Iterable[int]) -> set:
    """Cells of the check region lying in a collar of ``first`` and a collar of ``second``.

    A coset lies in the body of a collar exactly when one of its vertices is in
    the collar's boundary component.
    """
    A, Bs = set(first), set(second)
    out = set()
    for cell in omega.check_cells():
        comps = {info[2] for info in omega.cell_info(cell)}
        if comps & A and comps & Bs:
            out.add(cell)
    return out


# -- lemma checks --------------------------------------------------------------

def check_monochromatic(omega: OneLetterRuin) -> Verdict:
    W, B = omega.group, omega.ball
    instances, failures = 0, []
    rest = sorted(omega.context.U - {omega.t})
    for v in omega.check_vertices():
        c = omega.color(v)
        instances += 1
        if c != omega.color(int(omega.component[v])):
            failures.append({"vertex": W.format(B.words[v]), "reason": "differs from its component"})
        for g in rest:
            j = B.right[v][g]
            instances += 1
            if omega.color(j) != c:
                failures.append({"vertex": W.format(B.words[v]), "g": W.generators[g]})
    return Verdict("monochromatic", instances, failures,
                   {"components_match_cosets": omega.components_match_cosets})


def check_trivial_action(omega: OneLetterRuin) -> Verdict:
    """Elements without t keep the trivial color."""
    W, B = omega.group, omega.ball
    trivial = omega.color(0)
    instances, failures = 0, []
    for v in omega.check_vertices():
        if omega.t in B.words[v]:
            continue
        instances += 1
        if omega.color(v) != trivial:
            failures.append({"vertex": W.format(B.words[v])})
    return Verdict("trivial-action", instances, failures)


def check_color_well_defined(omega: OneLetterRuin, samples: int = 3, seed: int = 0) -> Verdict:
    W, B = omega.group, omega.ball
    rng = random.Random(seed)
    instances, failures = 0, []
    for v in omega.check_vertices():
        words = sorted(W.braid_class(B.words[v]))
        picks = rng.sample(words, min(samples, len(words)))
        for word in picks:
            instances += 1
            if omega.color_of_word(word) != omega.color(v):
                failures.append({"vertex": W.format(B.words[v]), "word": W.format(word)})
    return Verdict("color-well-defined", instances, failures)


def check_covering(omega: OneLetterRuin) -> Verdict:
    """Each cell of the check region lies in the body of the collar of its representative."""
    W, B = omega.group, omega.ball
    instances, failures = 0, []
    for cell in omega.check_cells():
        instances += 1
        if B.cell_of(cell[0], cell[1]) != cell:
            failures.append(_cell_json(W, B.words, cell))
    return Verdict("covering", instances, failures)


def check_same_color_disjoint(omega: OneLetterRuin) -> Verdict:
    """Distinct boundary components of one color have disjoint collars."""
    W, B = omega.group, omega.ball
    instances, failures = 0, []
    meeting = set()
    for cell in omega.check_cells():
        instances += 1
        by_color: dict[tuple, set] = {}
        for _, _, comp, color, _ in omega.cell_info(cell):
            by_color.setdefault(color, set()).add(comp)
        comps = sorted({c for group in by_color.values() for c in group})
        meeting.update(combinations(comps, 2))
        for color, group in by_color.items():
            if len(group) > 1:
                failures.append({"cell": _cell_json(W, B.words, cell),
                                 "components": [W.format(B.words[c]) for c in sorted(group)]})
    return Verdict("same-color-disjoint", instances, failures, {"meeting_collar_pairs": len(meeting)})


def check_odd_meets_evens(omega: OneLetterRuin) -> Verdict:
    """A cell holding an odd vertex holds an even one exactly when its type contains t."""
    W, B = omega.group, omega.ball
    instances, failures = 0, []
    for cell in omega.check_cells():
        parities = {info[4] for info in omega.cell_info(cell)}
        if "odd" not in parities:
            continue
        instances += 1
        if ("even" in parities) != (omega.t in cell[1]):
            failures.append({"cell": _cell_json(W, B.words, cell), "parities": sorted(parities)})
    return Verdict("odd-meets-evens", instances, failures)


def check_two_even_colors(omega: OneLetterRuin) -> Verdict:
    """Cells carrying two even colors: one s in S' with {s,t} in the type, t-even connectors."""
    W, B = omega.group, omega.ball
    t = omega.t
    instances, failures = 0, []
    cache: dict = {}
    for cell in omega.check_cells():
        evens = [(k, color) for _, k, _, color, parity in omega.cell_info(cell) if parity == "even"]
        if len({color for _, color in evens}) < 2:
            continue
        instances += 1
        T = cell[1]
        hits = [s for s in sorted(omega.context.S_prime) if {s, t} <= T]
        if len(hits) != 1:
            failures.append({"cell": _cell_json(W, B.words, cell), "S_prime_hits": W.names(hits)})
            continue
        s = hits[0]
        par = W.parabolic(T)
        for (a, ca), (b, cb) in combinations(evens, 2):
            if ca == cb:
                continue
            key = (T, a, b)
            if key not in cache:
                x = W.normal_form(tuple(reversed(par.words[a])) + par.words[b])
                cache[key] = (x, W.is_t_even(x, s, t))
            x, ok = cache[key]
            if not ok:
                failures.append({"cell": _cell_json(W, B.words, cell), "connector": W.format(x)})
    return Verdict("two-even-colors", instances, failures)


def t_even_witnesses(W: CoxeterGroup, s, t) -> list[Element]:
    """t-even u in W_{s,t} with a reduced expression ending in t."""
    s, t = W.gen(s), W.gen(t)
    par = W.parabolic({s, t})
    return [u for u in par.elements if W.is_t_even(u, s, t) and t in W.right_descents(u)]


def _orbit_sets(omega: OneLetterRuin, s: int, u: Element) -> tuple[set, set]:
    """(cells of D_0 ∩ D_u, cells of W'K') in the check region."""
    B, t = omega.ball, omega.t
    comp = omega.component
    c0, cu = int(comp[0]), int(comp[B.id_of(u)])
    actual = color_intersection(omega, [c0], [cu])
    U_st = omega.context.U_st[s]
    tops = [V for V in omega.types if {s, t} <= V]
    expected = set()
    for x in omega.check_vertices():
        if not set(B.words[x]) <= U_st:
            continue
        for V in tops:
            rep = B.coset_rep(x, V)
            if B.length(rep) <= omega.radius:
                expected.add((rep, V))
    return actual, expected


def check_w_orbit(omega: OneLetterRuin) -> Verdict:
    """D_0 ∩ D_2 = W'K' for every s in S' and every admissible t-even u."""
    W, B = omega.group, omega.ball
    instances, failures, sizes = 0, [], {}
    for s in sorted(omega.context.S_prime):
        for u in t_even_witnesses(W, s, omega.t):
            actual, expected = _orbit_sets(omega, s, u)
            instances += len(actual | expected)
            sizes[f"{W.generators[s]}:{W.format(u)}"] = len(actual)
            for cell in sorted(actual - expected):
                failures.append({"s": W.generators[s], "u": W.format(u), "extra": _cell_json(W, B.words, cell)})
            for cell in sorted(expected - actual):
                failures.append({"s": W.generators[s], "u": W.format(u), "missing": _cell_json(W, B.words, cell)})
    return Verdict("orbit-intersection", instances, failures, {"intersection_cells": sizes})


def verify_evens_isomorphism(omega: OneLetterRuin, s) -> Verdict:
    """D_0 ∩ D_2 against the ball of Sigma(W', U_st), W' = W_{U_st}.

    The domain is the part of the intersection whose W'-shadow has all
    vertices within the check radius; it must map bijectively and
    order-isomorphically onto the cells of the radius-rho ball of Sigma(W', U_st)
    under (x, V) -> (x, V - {s, t}).  The target is then tested as a 2-manifold
    truncation: connected, every safe cell in a 2-cell, every safe edge in
    exactly two 2-cells, safe vertex links circles.
    """
    W, B = omega.group, omega.ball
    s, t = W.gen(s), omega.t
    if s not in omega.context.S_prime:
        raise ValueError(f"{W.generators[s]} is not in S'({W.generators[t]})")
    st = frozenset({s, t})
    U_st = omega.context.U_st[s]
    witnesses = t_even_witnesses(W, s, t)
    u = min(witnesses, key=lambda e: e.key)
    actual, expected = _orbit_sets(omega, s, u)
    failures = []
    for cell in sorted(actual ^ expected):
        failures.append({"stage": "orbit", "cell": _cell_json(W, B.words, cell)})

    target = BallComplex(W, omega.radius, U_st)
    domain = [c for c in sorted(actual)
              if W.longest_length(c[1] - st) + B.length(c[0]) <= omega.radius]
    image = {}
    for cell in domain:
        word = B.words[cell[0]]
        if not set(word) <= U_st or cell[1] & st != st:
            failures.append({"stage": "map", "cell": _cell_json(W, B.words, cell)})
            continue
        image[cell] = (target.index[word], cell[1] - st)
    target_cells = set(target.cells())
    if set(image.values()) != target_cells or len(set(image.values())) != len(image):
        failures.append({"stage": "bijection", "domain": len(image), "target": len(target_cells)})
    pairs = 0
    for a, b in combinations(sorted(image), 2):
        for x, y in ((a, b), (b, a)):
            pairs += 1
            if B.leq(x, y) != target.leq(image[x], image[y]):
                failures.append({"stage": "order", "a": _cell_json(W, B.words, x), "b": _cell_json(W, B.words, y)})

    details = {"s": W.generators[s], "t": W.generators[t], "u": W.format(u),
               "U_st": W.names(U_st), "intersection_cells": len(actual),
               "domain_cells": len(image), "target_cells": len(target_cells),
               "order_pairs": pairs}
    if not U_st:
        details["single_cell"] = [_cell_json(W, B.words, c) for c in sorted(actual)]
        if len(actual) != 1:
            failures.append({"stage": "single-cell", "cells": len(actual)})
    elif target.radius < target.D:
        details["two_manifold"] = f"skipped: radius {target.radius} is below D' = {target.D}, no 2-cell fits"
    else:
        details.update(_two_manifold_report(target, failures))
    return Verdict("evens-isomorphism", len(actual | expected) + pairs, failures, details)


def _two_manifold_report(T: BallComplex, failures: list) -> dict:
    W = T.group
    cells = T.cells()
    dim = max(len(c[1]) for c in cells)
    uf = _UnionFind(len(T))
    for i, T1 in ((c[0], c[1]) for c in cells if len(c[1]) == 1):
        uf.union(i, T.mul(i, T1))
    connected = len({uf.find(v) for v in range(len(T))}) == 1
    safe = [c for c in cells if T.length(c[0]) + T.D <= T.radius]
    squares = [V for V in T.types if len(V) == 2]
    pure = all(any(T.leq(c, (T.coset_rep(c[0], V), V)) for V in squares if c[1] <= V) for c in safe)
    interior = [c for c in safe if len(c[1]) == 1]
    for i, (g,) in ((c[0], tuple(c[1])) for c in interior):
        n = sum(1 for V in squares if g in V and T.cell_of(i, V) is not None)
        if n != 2:
            failures.append({"stage": "2-manifold", "edge": _cell_json(W, T.words, (i, frozenset({g}))),
                             "two_cells": n})
    links_ok = True
    for v in range(len(T)):
        if T.is_safe(v):
            links_ok &= sphere_check(T.vertex_link(v), 1).passed
    if dim != 2:
        failures.append({"stage": "2-manifold", "dimension": dim})
    if not (connected and pure and links_ok):
        failures.append({"stage": "2-manifold", "connected": connected, "pure": pure, "links": links_ok})
    return {"dimension": dim, "connected": connected, "pure_on_safe_cells": pure,
            "interior_edges": len(interior), "safe_vertex_links_are_circles": links_ok}


# -- codimension-one faces of 4-cells ------------------------------------------

def classify_codim1_faces(W: CoxeterGroup, T: Iterable, radius: int, V: Iterable | None = None) -> Verdict:
    """Free and shared codimension-1 faces of the top cells of Omega(V,T), |T| = 2.

    Top cells have the dimension n of Sigma (n = 4 for a 3-sphere nerve).  Faces with representative length <= radius are classified; containing
    cells are tested against the ball of radius radius + D.  Every shared
    pattern R+r | R+q must have m_rq = inf, and its adjacency walk
    W_T', W_T'', qW_T', qrW_T'', ... is followed until it leaves the ball.
    """
    T = W.gens(T)
    if len(T) != 2:
        raise ValueError("classify_codim1_faces needs |T| = 2")
    V = W.all_gens if V is None else W.gens(V)
    poset = W.spherical_poset()
    if T not in poset or not T <= V:
        raise ValueError(f"{W.names(T)} is not a spherical subset of {W.names(V)}")
    typesV = poset.restricted(V)
    n = max(len(X) for X in poset)
    tops = {X for X in typesV if T <= X and len(X) == n}
    details: dict = {"T": W.names(T), "V": W.names(V), "radius": radius, "top_dimension": n,
                     "top_types": [W.names(X) for X in sorted(tops, key=subset_key)],
                     "shared_faces": 0, "free_faces": 0, "patterns": []}
    if not tops:
        return Verdict("codim1-faces", 0, [], details)
    D = W.max_longest_length(typesV)
    R = radius + D

    def in_ball(rep: Element, X: frozenset) -> bool:
        return rep.length + W.longest_length(X) <= R

    face_types = sorted({X - {x} for X in tops for x in X}, key=subset_key)
    failures, patterns = [], {}
    instances = 0
    for z in W.enumerate_ball(radius, V):
        desc = W.right_descents(z)
        for F in face_types:
            if desc & F:
                continue
            containing = []
            for y in sorted(V - F):
                Y = F | {y}
                if Y in tops:
                    rep = W.coset_min_rep(z, Y)
                    if in_ball(rep, Y):
                        containing.append((y, rep))
            if not containing:
                continue
            instances += 1
            if len(containing) == 1:
                details["free_faces"] += 1
                continue
            if len(containing) > 2:
                failures.append({"face": {"rep": W.format(z), "type": W.names(F)},
                                 "top_cells": len(containing)})
                continue
            details["shared_faces"] += 1
            (r, _), (q, _) = containing
            key = (subset_key(F), r, q)
            if W.m(r, q) != INF:
                failures.append({"face": {"rep": W.format(z), "type": W.names(F)},
                                 "r": W.generators[r], "q": W.generators[q], "m_rq": W.m(r, q)})
            if key not in patterns:
                patterns[key] = _adjacency_walk(W, z, F, r, q, in_ball, failures)
    details["patterns"] = [patterns[k] for k in sorted(patterns)]
    details["longest_walk"] = max((p["walk_length"] for p in details["patterns"]), default=0)
    return Verdict("codim1-faces", instances, failures, details)


def _adjacency_walk(W, z: Element, R: frozenset, r: int, q: int, in_ball, failures: list) -> dict:
    A, Bt = R | {r}, R | {q}
    cells = []
    g = z
    letters = [q, r]
    step = 0
    while True:
        X = A if step % 2 == 0 else Bt
        rep = W.coset_min_rep(g, X)
        if not in_ball(rep, X):
            break
        cells.append((rep.word, X))
        if step >= 1:
            g = W.multiply(g, W.element([letters[(step - 1) % 2]]))
        step += 1
        if step > 200:
            failures.append({"walk": "did not leave the ball"})
            break
    if len(set(cells)) != len(cells):
        failures.append({"walk": "repeats a cell", "R": W.names(R)})
    return {"R": W.names(R), "T'": W.names(A), "T''": W.names(Bt), "r": W.generators[r],
            "q": W.generators[q], "m_rq": "inf" if W.m(r, q) == INF else int(W.m(r, q)),
            "start": W.format(z), "walk_length": len(cells),
            "walk": [{"rep": W.format(w), "type": W.names(X)} for w, X in cells]}
