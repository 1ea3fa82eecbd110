from __future__ import annotations

import itertools

import pytest

from evencox.coxeter import CoxeterGroup
from evencox.nerve import (SimplicialComplex, build_nerve, check_commuting_link,
                           check_sprime_pairwise_infinite, is_flag, link, ruin_context, sphere_check)


def cycle(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_faces([(i, (i + 1) % n) for i in range(n)])


def octahedron() -> SimplicialComplex:
    return SimplicialComplex.from_faces(
        [(a, b, c) for a in ("x+", "x-") for b in ("y+", "y-") for c in ("z+", "z-")])


def test_nerves_of_fixtures(groups):
    A, B, D = groups["sysa"], groups["sysb"], groups["sysd"]
    assert build_nerve(A).faces == {frozenset({0}), frozenset({1}), frozenset({0, 1})}
    LB = build_nerve(B)
    assert LB.f_vector == [4, 4] and sphere_check(LB, 1).passed
    LD = build_nerve(D)
    assert LD.dimension == 3 and LD.f_vector == [8, 24, 32, 16]


def test_flagness(groups):
    assert is_flag(cycle(4))
    assert not is_flag(cycle(3))
    assert not is_flag(build_nerve(groups["hollow"]))
    for name in ("sysb", "sysc", "sysd", "syse", "sysf"):
        assert is_flag(build_nerve(groups[name])), name


def test_links(groups):
    L = cycle(4)
    assert link(L, [0]).faces == {frozenset({1}), frozenset({3})}
    D = groups["sysd"]
    LD = build_nerve(D)
    vertex_link = link(LD, D.gens("t1"))
    assert vertex_link.dimension == 2 and sphere_check(vertex_link, 2).passed
    edge_link = link(LD, D.gens("t1 s1"))
    assert edge_link.vertices == D.gens("t2 s2 r2 q2")
    assert sphere_check(edge_link, 1).passed
    with pytest.raises(ValueError):
        link(LD, D.gens("t1 r1"))


def test_sphere_battery(groups):
    assert sphere_check(cycle(4), 1).passed
    assert not sphere_check(SimplicialComplex.from_faces([(0, 1), (2, 3), (3, 4), (4, 2), (1, 0)]), 1).passed
    assert sphere_check(octahedron(), 2).passed
    holed = SimplicialComplex.from_faces(
        [F for F in octahedron().faces if len(F) == 3 and F != frozenset({"x+", "y+", "z+"})])
    report = sphere_check(holed, 2)
    assert report.verdict == "fail" and "edge" in report.failed_condition
    for name in ("sysd", "syse", "sysf"):
        assert sphere_check(build_nerve(groups[name]), 3).passed, name
    report = sphere_check(build_nerve(groups["sysb"]), 3)
    assert report.verdict == "fail" and report.failed_condition.startswith("dimension")


def test_two_disjoint_three_spheres_fail():
    a = [tuple(f"a{i}" for i in F) for F in itertools.combinations(range(5), 4)]
    b = [tuple(f"b{i}" for i in F) for F in itertools.combinations(range(5), 4)]
    report = sphere_check(SimplicialComplex.from_faces(a + b), 3)
    assert report.verdict == "fail"


def test_ruin_contexts(groups):
    B, C, D = groups["sysb"], groups["sysc"], groups["sysd"]
    ctx = ruin_context(B, "t")
    assert ctx.U == B.gens("t s q") and ctx.S_prime == B.gens("s")
    assert ctx.U_st == {B.gen("s"): frozenset()}
    ctx = ruin_context(D, "t1")
    assert ctx.U == D.gens("t1 s1 q1 t2 s2 r2 q2")
    assert ctx.S_prime == D.gens("s1")
    assert ctx.U_st[D.gen("s1")] == D.gens("t2 s2 r2 q2")
    for t in range(C.rank):
        assert not ruin_context(C, t).S_prime


def test_flag_consequences(groups):
    for name in ("sysb", "sysd", "sysf"):
        W = groups[name]
        assert check_sprime_pairwise_infinite(W)[1] == []
        assert check_commuting_link(W)[1] == []
    # a triangle of 4's violates the pairwise-infinite property
    bad = CoxeterGroup.from_text("generators: t a b\nm: t a 4\nm: t b 4\nm: a b 4\n")
    assert check_sprime_pairwise_infinite(bad)[1]
