"""The nerve L of a Coxeter system, flagness, links, and sphere checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .coxeter import INF, CoxeterGroup, SphericalPoset
from .homology import chain_complex, homology


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex stored as its full set of non-empty faces."""

    vertices: frozenset
    faces: frozenset

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[Hashable]], vertices: Iterable = ()) -> "SimplicialComplex":
        closed = set()
        for F in faces:
            F = frozenset(F)
            if F and F not in closed:
                closed.update(_nonempty_subsets(F))
        verts = frozenset(vertices) | frozenset(v for F in closed for v in F)
        closed.update(frozenset([v]) for v in verts)
        return cls(verts, frozenset(closed))

    @property
    def dimension(self) -> int:
        return max((len(F) for F in self.faces), default=0) - 1

    def faces_of_dim(self, k: int) -> list[frozenset]:
        return sorted((F for F in self.faces if len(F) == k + 1), key=lambda F: sorted(F))

    @property
    def f_vector(self) -> list[int]:
        return [len(self.faces_of_dim(k)) for k in range(self.dimension + 1)]

    def simplices(self) -> list[tuple]:
        return [tuple(sorted(F)) for F in self.faces]

    def neighbors(self, v) -> set:
        return {u for F in self.faces if len(F) == 2 and v in F for u in F if u != v}

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = min(self.vertices)
        seen, stack = {start}, [start]
        while stack:
            for u in self.neighbors(stack.pop()):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == set(self.vertices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(F) - 1) for F in self.faces)


def _nonempty_subsets(F: frozenset) -> list[frozenset]:
    items = sorted(F)
    out = []
    for mask in range(1, 1 << len(items)):
        out.append(frozenset(x for i, x in enumerate(items) if mask >> i & 1))
    return out


def build_nerve(P: SphericalPoset | CoxeterGroup) -> SimplicialComplex:
    if isinstance(P, CoxeterGroup):
        verts = range(P.rank)
        P = P.spherical_poset()
    else:
        verts = [v for T in P if len(T) == 1 for v in T]
    return SimplicialComplex(frozenset(verts), frozenset(T for T in P if T))


def is_flag(L: SimplicialComplex) -> bool:
    """Every set of pairwise adjacent vertices spans a face.

    Checked by induction on size: no face together with a vertex adjacent to
    all of its vertices may fail to be a face.
    """
    adj = {v: L.neighbors(v) for v in L.vertices}
    for F in L.faces:
        common = set.intersection(*(adj[v] for v in F)) - F
        for v in common:
            if F | {v} not in L.faces:
                return False
    return True


def link(L: SimplicialComplex, F: Iterable) -> SimplicialComplex:
    F = frozenset(F)
    if F and F not in L.faces:
        raise ValueError(f"{sorted(F)} is not a face")
    faces = {G for G in L.faces if not (G & F) and (G | F) in L.faces}
    return SimplicialComplex(frozenset(v for G in faces for v in G), frozenset(faces))


@dataclass(frozen=True)
class SphereReport:
    dim: int
    verdict: str
    failed_condition: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {"dim": self.dim, "verdict": self.verdict, "failed_condition": self.failed_condition}


def sphere_check(L: SimplicialComplex, n: int) -> SphereReport:
    """Combinatorial-manifold plus homology-sphere battery for dimensions 1 to 3.

    This is not full sphere recognition: in dimension 3 it certifies a closed
    combinatorial 3-manifold with the integral homology of the 3-sphere.
    """
    if n not in (1, 2, 3):
        raise ValueError("sphere_check supports n in {1, 2, 3}")

    def fail(reason: str) -> SphereReport:
        return SphereReport(n, "fail", reason)

    if L.dimension != n:
        return fail(f"dimension is {L.dimension}, expected {n}")
    cofaces: dict[frozenset, int] = {}
    for F in L.faces:
        if len(F) >= 2:
            for v in F:
                G = F - {v}
                cofaces[G] = cofaces.get(G, 0) + 1
    if n == 1:
        if not L.is_connected():
            return fail("not connected")
        for v in sorted(L.vertices):
            if cofaces.get(frozenset([v]), 0) != 2:
                return fail(f"vertex {v} is not in exactly 2 edges")
        return SphereReport(n, "pass")
    if n == 2 and not L.is_connected():
        return fail("not connected")
    if n == 3:
        tops = [F for F in L.faces if len(F) == 4]
        covered = {G for T in tops for G in _nonempty_subsets(T)}
        if covered != set(L.faces):
            return fail("not pure 3-dimensional")
    for F in L.faces_of_dim(n - 1):
        if cofaces.get(F, 0) != 2:
            noun = "edge" if n == 2 else "triangle"
            return fail(f"{noun} {sorted(F)} is not in exactly 2 {'triangles' if n == 2 else 'tetrahedra'}")
    for v in sorted(L.vertices):
        sub = sphere_check(link(L, [v]), n - 1)
        if not sub.passed:
            return fail(f"link of vertex {v} fails: {sub.failed_condition}")
    chi = L.euler_characteristic()
    expected_chi = 2 if n == 2 else 0
    if chi != expected_chi:
        return fail(f"Euler characteristic is {chi}, expected {expected_chi}")
    if n == 3:
        h = homology(chain_complex(L.simplices()))
        if h.betti != (1, 0, 0, 1) or any(h.torsion):
            return fail(f"homology is betti={list(h.betti)} torsion={[list(t) for t in h.torsion]}")
    return SphereReport(n, "pass")


@dataclass(frozen=True)
class RuinContext:
    """Generator sets attached to a fixed generator t."""

    t: int
    U: frozenset[int]
    S_prime: frozenset[int]
    U_st: dict

    def to_json(self, W: CoxeterGroup) -> dict:
        return {
            "t": W.generators[self.t],
            "U": W.names(self.U),
            "S_prime": W.names(self.S_prime),
            "U_st": {W.generators[s]: W.names(v) for s, v in sorted(self.U_st.items())},
        }


def ruin_context(W: CoxeterGroup, t) -> RuinContext:
    t = W.gen(t)
    S = range(W.rank)
    U = frozenset(s for s in S if W.m(s, t) != INF)
    S_prime = frozenset(s for s in U if 2 < W.m(s, t) < INF)
    U_st = {
        s: frozenset(r for r in S if W.m(r, t) == 2 and W.m(r, s) == 2) for s in sorted(S_prime)
    }
    return RuinContext(t, U, S_prime, U_st)


def check_sprime_pairwise_infinite(W: CoxeterGroup) -> tuple[int, list[dict]]:
    """Distinct s, s' in S'(t) must have m(s, s') = inf, for every t (flag nerves)."""
    instances, failures = 0, []
    for t in range(W.rank):
        ctx = ruin_context(W, t)
        sp = sorted(ctx.S_prime)
        for i, s in enumerate(sp):
            for s2 in sp[i + 1:]:
                instances += 1
                if W.m(s, s2) != INF:
                    failures.append({"t": W.generators[t], "s": W.generators[s],
                                     "s'": W.generators[s2], "m": W.m(s, s2)})
    return instances, failures


def check_commuting_link(W: CoxeterGroup) -> tuple[int, list[dict]]:
    """Every u in T - {s,t}, T spherical containing {s,t} with s in S'(t), commutes with s and t.

    Also confirms that U_st(s) is the vertex set of the link of the edge {s, t}.
    """
    poset = W.spherical_poset()
    L = build_nerve(poset)
    instances, failures = 0, []
    for t in range(W.rank):
        ctx = ruin_context(W, t)
        for s in sorted(ctx.S_prime):
            for T in poset.at_least({s, t}):
                for u in sorted(T - {s, t}):
                    instances += 1
                    if W.m(u, t) != 2 or W.m(u, s) != 2:
                        failures.append({"t": W.generators[t], "s": W.generators[s],
                                         "type": W.names(T), "u": W.generators[u]})
            instances += 1
            if link(L, {s, t}).vertices != ctx.U_st[s]:
                failures.append({"t": W.generators[t], "s": W.generators[s],
                                 "reason": "U_st differs from the edge link vertex set"})
    return instances, failures
