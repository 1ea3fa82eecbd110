"""Coxeter matrices, the word problem, and reduced-word combinatorics.

Group elements are stored by their ShortLex-minimal reduced word over the
input generator order.  When every finite label is crystallographic
(2, 3, 4 or 6) normal forms are computed in an integer reflection
representation on the root lattice; otherwise the braid-move closure is used.
Both routes produce the same canonical word.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INF = math.inf

Word = tuple[int, ...]


class CoxeterError(Exception):
    """Base class for errors raised by this package."""


class SystemFormatError(CoxeterError, ValueError):
    pass


class NotEvenError(CoxeterError):
    """Raised by parity and coloring operations on a non-even system."""


class NotSphericalError(CoxeterError, ValueError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    """Generator names plus the symmetric matrix of orders ``m_st``."""

    generators: tuple[str, ...]
    orders: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise SystemFormatError("duplicate generator name")
        if len(self.orders) != n or any(len(row) != n for row in self.orders):
            raise SystemFormatError("order matrix has the wrong shape")
        for i in range(n):
            if self.orders[i][i] != 1:
                raise SystemFormatError(f"m({self.generators[i]},{self.generators[i]}) must be 1")
            for j in range(i + 1, n):
                m = self.orders[i][j]
                if m != self.orders[j][i]:
                    raise SystemFormatError("order matrix is not symmetric")
                if m != INF and (m != int(m) or m < 2):
                    raise SystemFormatError(
                        f"m({self.generators[i]},{self.generators[j]}) = {m} must be an integer >= 2 or inf"
                    )

    @classmethod
    def from_pairs(cls, generators: Sequence[str], pairs: dict | None = None) -> "CoxeterMatrix":
        """Build from ``{(a, b): m}``; unlisted off-diagonal pairs are infinite."""
        gens = tuple(generators)
        pos = {g: i for i, g in enumerate(gens)}
        rows = [[1 if i == j else INF for j in range(len(gens))] for i in range(len(gens))]
        for (a, b), m in (pairs or {}).items():
            if a not in pos or b not in pos:
                raise SystemFormatError(f"unknown generator in pair ({a}, {b})")
            i, j = pos[a], pos[b]
            rows[i][j] = rows[j][i] = m
        return cls(gens, tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def m(self, i: int, j: int):
        return self.orders[i][j]

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise CoxeterError(f"unknown generator {name!r}") from None

    def names(self, gens: Iterable[int]) -> list[str]:
        """Generator names of an index set, in input order."""
        return [self.generators[i] for i in sorted(gens)]

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        for i, j in combinations(range(self.rank), 2):
            m = self.orders[i][j]
            if m != INF:
                lines.append(f"m: {self.generators[i]} {self.generators[j]} {int(m)}")
        return "\n".join(lines) + "\n"


_M_LINE = re.compile(r"^m:\s*(\S+)\s+(\S+)\s+(\S+)$")


def parse_system(text: str) -> CoxeterMatrix:
    """Parse the line-oriented ``.cox`` format.

    >>> parse_system("generators: s t\\nm: s t 4").m(0, 1)
    4
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines or not lines[0][1].startswith("generators:"):
        raise SystemFormatError("first line must be 'generators: g1 g2 ...'")
    gens = lines[0][1][len("generators:"):].split()
    if not gens:
        raise SystemFormatError("no generators listed")
    if len(set(gens)) != len(gens):
        raise SystemFormatError("duplicate generator name")
    pairs: dict[frozenset, float] = {}
    for lineno, line in lines[1:]:
        match = _M_LINE.match(line)
        if match is None:
            raise SystemFormatError(f"line {lineno}: malformed entry {line!r}")
        a, b, value = match.groups()
        for g in (a, b):
            if g not in gens:
                raise SystemFormatError(f"line {lineno}: unknown generator {g!r}")
        if a == b:
            raise SystemFormatError(f"line {lineno}: diagonal entries are fixed at 1")
        if value == "inf":
            m = INF
        else:
            try:
                m = int(value)
            except ValueError:
                raise SystemFormatError(f"line {lineno}: order {value!r} is not an integer or 'inf'") from None
            if m < 2:
                raise SystemFormatError(f"line {lineno}: m({a},{b}) = {m} violates m >= 2")
        key = frozenset((a, b))
        if key in pairs and pairs[key] != m:
            raise SystemFormatError(f"line {lineno}: conflicting duplicate entry for ({a}, {b})")
        pairs[key] = m
    return CoxeterMatrix.from_pairs(gens, {tuple(sorted(k, key=gens.index)): m for k, m in pairs.items()})


def is_even(M: CoxeterMatrix) -> bool:
    return all(
        M.m(i, j) == INF or M.m(i, j) % 2 == 0
        for i, j in combinations(range(M.rank), 2)
    )


def shortlex_key(word: Sequence[int]) -> tuple:
    return (len(word), tuple(word))


@dataclass(frozen=True)
class Element:
    """A group element, held as its ShortLex-minimal reduced word."""

    word: Word = ()

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    @property
    def key(self) -> tuple:
        return shortlex_key(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __len__(self) -> int:
        return len(self.word)


# (a_st, a_ts) for a generalized Cartan matrix with a_st * a_ts = 4 cos^2(pi/m);
# any product >= 4 realizes m = inf.
_CARTAN_PAIRS = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3), INF: (-2, -2)}


class _RootRepresentation:
    """Reflection representation of W on the integer root lattice.

    An element is a tuple of columns, column ``x`` being the image of the
    simple root of ``x``.  Right multiplication by ``s`` only touches the
    columns of ``s`` and of its non-commuting neighbours.  ``s`` is a right
    descent exactly when the image of its simple root is negative.
    """

    def __init__(self, M: CoxeterMatrix):
        n = M.rank
        cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in combinations(range(n), 2):
            a, b = _CARTAN_PAIRS[M.m(i, j)]
            cartan[i][j], cartan[j][i] = a, b
        self.rank = n
        self.neighbors = [
            [(x, cartan[s][x]) for x in range(n) if x != s and cartan[s][x]] for s in range(n)
        ]
        self.identity = tuple(tuple(int(k == x) for k in range(n)) for x in range(n))

    @staticmethod
    def supports(M: CoxeterMatrix) -> bool:
        return all(M.m(i, j) in _CARTAN_PAIRS for i, j in combinations(range(M.rank), 2))

    def times(self, cols: tuple, s: int) -> tuple:
        out = list(cols)
        cs = cols[s]
        for x, a in self.neighbors[s]:
            out[x] = tuple(c - a * d for c, d in zip(cols[x], cs))
        out[s] = tuple(-c for c in cs)
        return tuple(out)

    def columns(self, word: Iterable[int]) -> tuple:
        cols = self.identity
        for s in word:
            cols = self.times(cols, s)
        return cols

    @staticmethod
    def descents(cols: tuple) -> int:
        mask = 0
        for x, col in enumerate(cols):
            if min(col) < 0:
                mask |= 1 << x
        return mask

    def shortlex(self, word: Sequence[int]) -> Word:
        # Left descents of g are right descents of g^-1; peel the smallest each time.
        h = self.columns(reversed(word))
        out = []
        while True:
            d = self.descents(h)
            if not d:
                return tuple(out)
            s = (d & -d).bit_length() - 1
            out.append(s)
            h = self.times(h, s)


def _alternating(a: int, b: int, m: int) -> Word:
    return tuple(a if k % 2 == 0 else b for k in range(m))


def _mask(gens: Iterable[int]) -> int:
    mask = 0
    for g in gens:
        mask |= 1 << g
    return mask


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SphericalPoset:
    """All spherical subsets of S with the orders of their parabolic subgroups."""

    subsets: tuple[frozenset[int], ...]
    order_of: dict

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.subsets)

    def __len__(self) -> int:
        return len(self.subsets)

    def __contains__(self, T) -> bool:
        return frozenset(T) in self.order_of

    def restricted(self, U: Iterable[int]) -> list[frozenset[int]]:
        U = frozenset(U)
        return [T for T in self.subsets if T <= U]

    def at_least(self, T: Iterable[int], within: Iterable[int] | None = None) -> list[frozenset[int]]:
        T = frozenset(T)
        pool = self.subsets if within is None else self.restricted(within)
        return [V for V in pool if T <= V]

    def below(self, V: Iterable[int], strict: bool = False) -> list[frozenset[int]]:
        V = frozenset(V)
        return [T for T in self.subsets if T <= V and not (strict and T == V)]


def subset_key(T: Iterable[int]) -> tuple:
    """Order on generator subsets: by size, then input generator order."""
    T = sorted(T)
    return (len(T), tuple(T))


class CoxeterGroup:
    """The Coxeter system (W, S) of a Coxeter matrix."""

    def __init__(self, matrix: CoxeterMatrix):
        self.matrix = matrix
        self.rank = matrix.rank
        self.identity = Element(())
        self._rep = _RootRepresentation(matrix) if _RootRepresentation.supports(matrix) else None
        self._nf_cache: dict[Word, Element] = {}
        self._braid_cache: dict[Word, frozenset] = {}
        self._parabolics: dict[frozenset, FiniteParabolic] = {}
        self._poset: SphericalPoset | None = None

    @classmethod
    def from_text(cls, text: str) -> "CoxeterGroup":
        return cls(parse_system(text))

    def __repr__(self) -> str:
        return f"CoxeterGroup({' '.join(self.matrix.generators)})"

    @property
    def generators(self) -> tuple[str, ...]:
        return self.matrix.generators

    @property
    def all_gens(self) -> frozenset[int]:
        return frozenset(range(self.rank))

    def m(self, s: int, t: int):
        return self.matrix.m(s, t)

    @property
    def even(self) -> bool:
        return is_even(self.matrix)

    @property
    def crystallographic(self) -> bool:
        return self._rep is not None

    # -- conversions -------------------------------------------------------

    def gen(self, g) -> int:
        if isinstance(g, int):
            if not 0 <= g < self.rank:
                raise CoxeterError(f"generator index {g} out of range")
            return g
        return self.matrix.index(g)

    def word(self, spec) -> Word:
        """Word from a whitespace/comma separated string or an iterable of names or indices."""
        if isinstance(spec, Element):
            return spec.word
        if isinstance(spec, str):
            tokens = [tok for tok in re.split(r"[\s,]+", spec) if tok]
            return tuple(self.matrix.index(tok) for tok in tokens)
        return tuple(self.gen(g) for g in spec)

    def gens(self, spec) -> frozenset[int]:
        if isinstance(spec, (set, frozenset)) and all(isinstance(g, int) for g in spec):
            return frozenset(spec)
        return frozenset(self.word(spec))

    def element(self, spec) -> Element:
        return self.normal_form(self.word(spec))

    def names(self, gens: Iterable[int]) -> list[str]:
        return self.matrix.names(gens)

    def word_names(self, w) -> list[str]:
        word = w.word if isinstance(w, Element) else w
        return [self.generators[i] for i in word]

    def format(self, w) -> str:
        word = w.word if isinstance(w, Element) else w
        return " ".join(self.generators[i] for i in word) or "e"

    # -- braid moves and the word problem ---------------------------------

    def braid_neighbors(self, word: Word) -> Iterator[Word]:
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                continue
            m = self.m(a, b)
            if m == INF or i + m > len(word):
                continue
            m = int(m)
            if word[i:i + m] == _alternating(a, b, m):
                yield word[:i] + _alternating(b, a, m) + word[i + m:]

    def braid_class(self, word) -> frozenset[Word]:
        """Closure of ``word`` under braid moves (finite labels only)."""
        word = self.word(word)
        cached = self._braid_cache.get(word)
        if cached is not None:
            return cached
        seen = {word}
        queue = deque([word])
        while queue:
            for nb in self.braid_neighbors(queue.popleft()):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        result = frozenset(seen)
        for member in result:
            self._braid_cache[member] = result
        return result

    def is_reduced(self, word) -> bool:
        """Tits' criterion: no braid-equivalent word has a repeated adjacent letter."""
        return all(
            all(u[i] != u[i + 1] for i in range(len(u) - 1)) for u in self.braid_class(word)
        )

    def normal_form_braid(self, word) -> Element:
        """Normal form by braid closure and cancellation of adjacent pairs."""
        w = self.word(word)
        while True:
            cls = self.braid_class(w)
            for u in sorted(cls):
                hit = next((i for i in range(len(u) - 1) if u[i] == u[i + 1]), None)
                if hit is not None:
                    w = u[:hit] + u[hit + 2:]
                    break
            else:
                return Element(min(cls))

    def normal_form(self, word) -> Element:
        w = self.word(word)
        found = self._nf_cache.get(w)
        if found is not None:
            return found
        if self._rep is not None:
            result = Element(self._rep.shortlex(w))
        else:
            result = self.normal_form_braid(w)
        self._nf_cache[w] = result
        self._nf_cache.setdefault(result.word, result)
        return result

    def multiply(self, *factors: Element) -> Element:
        word: tuple = ()
        for f in factors:
            word += f.word
        return self.normal_form(word)

    def inverse(self, w: Element) -> Element:
        return self.normal_form(tuple(reversed(w.word)))

    def length(self, word) -> int:
        return self.normal_form(word).length

    def right_descents(self, w) -> frozenset[int]:
        w = w if isinstance(w, Element) else self.normal_form(w)
        if self._rep is not None:
            return frozenset(_bits(self._rep.descents(self._rep.columns(w.word))))
        return frozenset(s for s in range(self.rank) if self.length(w.word + (s,)) < w.length)

    def left_descents(self, w) -> frozenset[int]:
        w = w if isinstance(w, Element) else self.normal_form(w)
        return self.right_descents(self.inverse(w))

    def is_XY_reduced(self, w: Element, X: Iterable[int], Y: Iterable[int]) -> bool:
        X, Y = self.gens(X), self.gens(Y)
        return not (X & self.left_descents(w)) and not (Y & self.right_descents(w))

    def coset_min_rep(self, w: Element, T: Iterable[int]) -> Element:
        """Unique minimal-length element of ``w W_T``, by greedy descent."""
        T = self.gens(T)
        word = w.word
        if self._rep is not None:
            cols = self._rep.columns(word)
            tmask = _mask(T)
            while True:
                d = self._rep.descents(cols) & tmask
                if not d:
                    break
                s = (d & -d).bit_length() - 1
                word += (s,)
                cols = self._rep.times(cols, s)
            return self.normal_form(word)
        current = w
        while True:
            down = sorted(T & self.right_descents(current))
            if not down:
                return current
            current = self.normal_form(current.word + (down[0],))

    # -- parity (even systems only) -----------------------------------------

    def _require_even(self):
        if not self.even:
            raise NotEvenError("operation requires an even Coxeter system")

    def g_VT(self, w: Element, V: Iterable[int], T: Iterable[int]) -> Element:
        """Image of ``w`` under the retraction W_V -> W_T fixing V∩T and killing V-T."""
        self._require_even()
        V, T = self.gens(V), self.gens(T)
        if not w.support <= V:
            raise ValueError("element does not lie in W_V")
        return self.normal_form(tuple(x for x in w.word if x in T))

    def t_parity(self, w: Element, t) -> str:
        self._require_even()
        t = self.gen(t)
        return "odd" if w.word.count(t) % 2 else "even"

    def is_t_even(self, w: Element, s, t) -> bool:
        self._require_even()
        s, t = self.gen(s), self.gen(t)
        count = w.word.count(t)
        return {s, t} <= w.support and count >= 2 and count % 2 == 0

    # -- spherical subsets ---------------------------------------------------

    def spherical_type(self, T: Iterable[int]) -> list[str] | None:
        """Finite-type names of the diagram components of T, or None if W_T is infinite."""
        return classify_diagram(self.matrix, self.gens(T))

    def is_spherical(self, T: Iterable[int]) -> bool:
        return self.spherical_type(T) is not None

    def spherical_order(self, T: Iterable[int]) -> int:
        types = self.spherical_type(T)
        if types is None:
            raise NotSphericalError(f"{self.names(self.gens(T))} is not spherical")
        return math.prod(_TYPE_DATA(name)[0] for name in types)

    def longest_length(self, T: Iterable[int]) -> int:
        """Length of the longest element of the finite group W_T."""
        types = self.spherical_type(T)
        if types is None:
            raise NotSphericalError(f"{self.names(self.gens(T))} is not spherical")
        return sum(_TYPE_DATA(name)[1] for name in types)

    def spherical_poset(self) -> SphericalPoset:
        if self._poset is None:
            layer = [frozenset()]
            found = [frozenset()]
            while layer:
                nxt = []
                for T in layer:
                    top = max(T, default=-1)
                    for g in range(top + 1, self.rank):
                        if all(self.m(g, x) != INF for x in T):
                            V = T | {g}
                            if self.is_spherical(V):
                                nxt.append(V)
                found.extend(nxt)
                layer = nxt
            found.sort(key=subset_key)
            self._poset = SphericalPoset(
                tuple(found), {T: self.spherical_order(T) for T in found}
            )
        return self._poset

    def max_longest_length(self, types: Iterable[frozenset] | None = None) -> int:
        """The bound D = max longest-element length over the given spherical types."""
        pool = self.spherical_poset() if types is None else types
        return max((self.longest_length(T) for T in pool), default=0)

    def parabolic(self, T: Iterable[int]) -> "FiniteParabolic":
        T = self.gens(T)
        if T not in self._parabolics:
            self._parabolics[T] = FiniteParabolic(self, T)
        return self._parabolics[T]

    # -- balls ---------------------------------------------------------------

    def ball_layers(self, radius: int, generators: Iterable[int] | None = None) -> list[list[Element]]:
        data = ball_data(self, radius, generators)
        layers: list[list[Element]] = [[] for _ in range(radius + 1)]
        for word in data.words:
            layers[len(word)].append(Element(word))
        return layers

    def enumerate_ball(self, radius: int, generators: Iterable[int] | None = None) -> list[Element]:
        """All elements of length <= radius in ShortLex order (BFS layer k = length k)."""
        if radius < 0:
            raise ValueError("radius must be non-negative")
        return [Element(w) for w in ball_data(self, radius, generators).words]


@dataclass
class BallData:
    """Flat BFS output: ids are ShortLex positions."""

    radius: int
    generators: tuple[int, ...]
    words: list[Word]
    descents: list[int]
    right: list[list[int]]   # right[i][s] = id of (element i)*s, or -1 outside the ball
    index: dict


def ball_data(W: CoxeterGroup, radius: int, generators: Iterable[int] | None = None) -> BallData:
    """Breadth-first enumeration of the Cayley graph ball of W_V (V = generators)."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    gens = tuple(sorted(W.all_gens if generators is None else W.gens(generators)))
    gmask = _mask(gens)
    n = W.rank
    words: list[Word] = [()]
    descents = [0]
    right: list[list[int]] = [[-1] * n]
    rep = W._rep

    if rep is not None:
        # Shortlex order falls out of scanning parents in order: the first
        # parent to reach a new element carries its minimal word.
        prev_keys: dict = {}
        layer = [(0, rep.identity)]
        for _ in range(radius):
            new_keys: dict = {}
            new_layer = []
            for i, cols in layer:
                desc = descents[i]
                for s in gens:
                    if desc >> s & 1:
                        continue
                    nxt = rep.times(cols, s)
                    j = new_keys.get(nxt)
                    if j is None:
                        j = len(words)
                        new_keys[nxt] = j
                        words.append(words[i] + (s,))
                        descents.append(rep.descents(nxt) & gmask)
                        right.append([-1] * n)
                        new_layer.append((j, nxt))
                    right[i][s] = j
                    right[j][s] = i
            layer = new_layer
        index = {w: i for i, w in enumerate(words)}
    else:
        index = {(): 0}
        frontier = [0]
        for k in range(radius + 1):
            nxt_frontier = []
            for i in frontier:
                for s in gens:
                    nf = W.normal_form(words[i] + (s,)).word
                    if len(nf) < k:
                        right[i][s] = index[nf]
                        descents[i] |= 1 << s
                        continue
                    if k == radius:
                        continue
                    j = index.get(nf)
                    if j is None:
                        j = len(words)
                        index[nf] = j
                        words.append(nf)
                        descents.append(0)
                        right.append([-1] * n)
                        nxt_frontier.append(j)
                    right[i][s] = j
            frontier = nxt_frontier
    return BallData(radius, gens, words, descents, right, index)


class FiniteParabolic:
    """The finite group W_T, enumerated with a right-multiplication table."""

    def __init__(self, W: CoxeterGroup, T: frozenset[int]):
        if not W.is_spherical(T):
            raise NotSphericalError(f"{W.names(T)} is not spherical")
        self.group = W
        self.T = frozenset(T)
        data = ball_data(W, W.longest_length(T), T)
        self.words = data.words
        self.index = data.index
        self.right = data.right
        self.elements = [Element(w) for w in self.words]
        if len(self.words) != W.spherical_order(T):
            raise CoxeterError(f"enumeration of W_T found {len(self.words)} elements")
        self._coset_cache: dict = {}

    def __len__(self) -> int:
        return len(self.words)

    def evaluate(self, word: Iterable[int]) -> int:
        """Index of the product of ``word`` (letters outside T are an error)."""
        i = 0
        for s in word:
            i = self.right[i][s]
        return i

    def coset_rep(self, i: int, V: Iterable[int]) -> int:
        """Index of the minimal representative of (element i)·W_V, V ⊆ T."""
        V = frozenset(V)
        key = (i, V)
        found = self._coset_cache.get(key)
        if found is not None:
            return found
        j = i
        while True:
            w = self.words[j]
            for s in sorted(V):
                k = self.right[j][s]
                if len(self.words[k]) < len(w):
                    j = k
                    break
            else:
                break
        self._coset_cache[key] = j
        return j


# -- finite-type classification --------------------------------------------

_EXCEPTIONAL = {
    "E6": (51840, 36), "E7": (2903040, 63), "E8": (696729600, 120),
    "F4": (1152, 24), "H3": (120, 15), "H4": (14400, 60),
}


def _TYPE_DATA(name: str) -> tuple[int, int]:
    """(group order, longest-element length) of a finite irreducible type."""
    if name in _EXCEPTIONAL:
        return _EXCEPTIONAL[name]
    if name.startswith("I2("):
        m = int(name[3:-1])
        return 2 * m, m
    family, n = name[0], int(name[1:])
    if family == "A":
        return math.factorial(n + 1), n * (n + 1) // 2
    if family == "B":
        return 2 ** n * math.factorial(n), n * n
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n), n * (n - 1)
    raise ValueError(name)


def _classify_component(M: CoxeterMatrix, comp: list[int]) -> str | None:
    n = len(comp)
    if n == 1:
        return "A1"
    edges = {}
    for a, b in combinations(comp, 2):
        m = M.m(a, b)
        if m == INF:
            return None
        if m >= 3:
            edges[(a, b)] = int(m)
    if n == 2:
        return f"I2({next(iter(edges.values()))})"
    if len(edges) != n - 1:
        return None
    degree = {v: 0 for v in comp}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    labels = sorted(edges.values())
    big = [m for m in labels if m > 3]
    if max(degree.values()) > 3:
        return None
    branch = [v for v in comp if degree[v] == 3]
    if not big:
        if not branch:
            return f"A{n}"
        if len(branch) > 1:
            return None
        center = branch[0]
        legs = []
        for (a, b) in edges:
            if center in (a, b):
                legs.append(_leg_length(edges, center, b if a == center else a))
        legs.sort()
        if legs[0] == legs[1] == 1:
            return f"D{n}"
        return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(legs))
    if branch or len(big) > 1:
        return None
    (pair, label), = [(p, m) for p, m in edges.items() if m > 3]
    at_end = degree[pair[0]] == 1 or degree[pair[1]] == 1
    if label == 4:
        if at_end:
            return f"B{n}"
        return "F4" if n == 4 else None
    if label == 5 and at_end:
        return {3: "H3", 4: "H4"}.get(n)
    return None


def _leg_length(edges: dict, center: int, start: int) -> int:
    length, prev, cur = 1, center, start
    while True:
        nxt = [b if a == cur else a for (a, b) in edges if cur in (a, b) and prev not in (a, b)]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def classify_diagram(M: CoxeterMatrix, T: frozenset[int]) -> list[str] | None:
    """Component types of the Coxeter diagram on T (edges: m >= 3 or inf)."""
    remaining = set(T)
    types = []
    while remaining:
        start = min(remaining)
        comp, stack = [start], [start]
        remaining.discard(start)
        while stack:
            v = stack.pop()
            for u in sorted(remaining):
                if M.m(u, v) >= 3:
                    remaining.discard(u)
                    comp.append(u)
                    stack.append(u)
        name = _classify_component(M, sorted(comp))
        if name is None:
            return None
        types.append(name)
    return types
