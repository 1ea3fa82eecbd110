from __future__ import annotations

import pytest

from evencox.coxeter import CoxeterError, NotSphericalError
from evencox.davis import (BallComplex, ball_order_complex, canonical_coset, chain_counts, chamber,
                           chamber_order_complex, chambers_meet, order_complex, ruin_filter_types)
from evencox.homology import chain_complex, homology
from evencox.nerve import build_nerve, link


def test_canonical_coset(groups):
    A, D = groups["sysa"], groups["sysd"]
    assert canonical_coset(A, A.element("t s"), A.gens("s")).rep == A.element("t")
    w = A.element("s t")
    assert canonical_coset(A, w, set()).rep == w
    assert canonical_coset(D, D.element("t1 t2"), D.gens("t1 s1")).rep == D.element("t2")
    with pytest.raises(NotSphericalError):
        canonical_coset(D, w, D.gens("t1 r1"))


def test_octagon(groups):
    A = groups["sysa"]
    B = BallComplex(A, 4)
    counts = {tuple(A.names(T)): n for T, n in B.cells_by_type().items()}
    assert counts == {(): 8, ("s",): 4, ("t",): 4, ("s", "t"): 1}
    oc = ball_order_complex(B)
    assert oc.f_vector() == [17, 32, 16]
    assert chain_counts(B.cells(), B.faces_of) == [17, 32, 16]


def test_small_balls(groups):
    A = groups["sysa"]
    B = BallComplex(A, 1)
    counts = {tuple(A.names(T)): n for T, n in B.cells_by_type().items()}
    assert counts == {(): 3, ("s",): 1, ("t",): 1, ("s", "t"): 0}
    for name in ("sysb", "sysd"):
        B0 = BallComplex(groups[name], 0)
        assert B0.cells() == [(0, frozenset())]


def test_order_complex_basics():
    below = {"e": ["a", "b"], "a": [], "b": []}
    oc = order_complex(["a", "b", "e"], lambda c: below[c])
    assert oc.f_vector() == [3, 2]
    assert order_complex([], lambda c: []).simplices == []


def test_chambers(groups):
    A, B = groups["sysa"], groups["sysb"]
    assert len(chamber(A, A.element(""))) == 4
    K = chamber(B, B.element(""), filter=(B.gens("t s q"), "t"))
    assert {tuple(B.names(c.type)) for c in K} == {(), ("t",), ("s",), ("q",), ("t", "s"), ("t", "q")}
    moved = chamber(B, B.element("s"))
    assert {c.type for c in moved} == {c.type for c in chamber(B, B.element(""))}
    assert all(B.coset_min_rep(c.rep, c.type) == c.rep for c in moved)
    assert chambers_meet(B, B.element(""), B.element("s"))
    assert chambers_meet(B, B.element(""), B.element("s r"))
    assert not chambers_meet(B, B.element(""), B.element("t r"))
    assert len(ruin_filter_types(B, B.gens("t s q"), "t")) == 6


def test_chamber_is_contractible(groups):
    for name in ("sysb", "sysd"):
        K = chain_complex(chamber_order_complex(groups[name]).simplices)
        assert homology(K).betti[0] == 1 and not any(homology(K).betti[1:])


def test_vertex_links(groups):
    A, B = groups["sysa"], groups["sysb"]
    BA = BallComplex(A, 4)
    assert BA.vertex_link(0).faces == build_nerve(A).faces
    with pytest.raises(CoxeterError):
        BallComplex(B, 1).vertex_link(0)


def test_safe_links_equal_nerve_sysb(groups):
    W = groups["sysb"]
    B = BallComplex(W, 9)
    L = build_nerve(W)
    safe = [i for i in range(len(B)) if B.is_safe(i)]
    assert len(safe) > 1
    assert all(B.vertex_link(i).faces == L.faces for i in safe)


def test_cubes(groups):
    A, D = groups["sysa"], groups["sysd"]
    BA = BallComplex(A, 4)
    assert BA.cube(0, frozenset()) == {(0, frozenset())}
    assert len(BA.cube(0, A.all_gens)) == 4
    BD = BallComplex(D, 8)
    assert len(BD.cube(0, D.gens("t1 s1 t2 s2"))) == 16


def test_faces_and_containment(groups):
    W = groups["sysb"]
    B = BallComplex(W, 6)
    for cell in B.cells():
        for face in B.faces_of(cell):
            assert B.leq(face, cell)
            assert set(B.vertices_of(face)) <= set(B.vertices_of(cell))
    # the link of the edge {t,s} at e is empty in a 4-cycle nerve
    assert link(build_nerve(W), W.gens("t s")).faces == frozenset()


def test_chambers_meet_iff_support_spherical(groups):
    W = groups["sysb"]
    ball = W.enumerate_ball(3)
    for w in ball:
        for w2 in ball:
            x = W.multiply(W.inverse(w), w2)
            assert chambers_meet(W, w, w2) == W.is_spherical(x.support)
