from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evencox.coxeter import (INF, CoxeterGroup, NotEvenError, SystemFormatError, is_even,
                             parse_system)
from conftest import evaluate, matrix_key, tits_matrices


def test_parse_reads_entries_and_defaults_to_infinity():
    M = parse_system("generators: s t r\nm: s t 4")
    assert M.m(0, 1) == 4
    assert M.m(0, 2) == INF and M.m(1, 2) == INF


@pytest.mark.parametrize("text", [
    "generators: s t\nm: s t 1",
    "m: s t 4",
    "generators: s t\nm: s x 4",
    "generators: s t\nm: s t four",
    "generators: s t\nm: s t 4\nm: t s 6",
    "generators: s s",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(SystemFormatError):
        parse_system(text)


def test_parse_ignores_comments():
    M = parse_system("# header\ngenerators: s t  # two\nm: s t 4 # dihedral\n")
    assert M.m(0, 1) == 4


def test_evenness():
    assert is_even(parse_system("generators: s t\nm: s t 4"))
    assert not is_even(parse_system("generators: s t\nm: s t 3"))
    assert is_even(parse_system("generators: s t r"))


def test_braid_class(groups):
    A, B = groups["sysa"], groups["sysb"]
    assert A.braid_class(A.word("s t s t")) == {A.word("s t s t"), A.word("t s t s")}
    assert A.braid_class(A.word("s")) == {A.word("s")}
    assert len(B.braid_class(B.word("t s t s"))) == 2


def test_is_reduced(groups):
    A = groups["sysa"]
    assert not A.is_reduced(A.word("s s"))
    assert A.is_reduced(A.word("s t s"))
    assert not A.is_reduced(A.word("s t s t s"))


def test_normal_form(groups):
    A = groups["sysa"]
    assert A.normal_form(A.word("s s")).word == ()
    assert A.normal_form(A.word("t s t s")).word == A.word("s t s t")
    assert A.normal_form(A.word("t t s")).word == A.word("s")


def test_multiply(groups):
    A = groups["sysa"]
    assert A.multiply(A.element("s"), A.element("s")).is_identity
    assert A.multiply(A.element("s t"), A.element("t s")).is_identity
    assert A.multiply(A.element("s t s"), A.element("t")).length == 4


def test_xy_reduced_and_cosets(groups):
    A, B = groups["sysa"], groups["sysb"]
    e = A.element("")
    assert A.is_XY_reduced(e, A.all_gens, A.all_gens)
    assert A.is_XY_reduced(A.element("t s t"), A.gens("s"), A.gens("s"))
    assert not A.is_XY_reduced(A.element("s t"), set(), A.gens("t"))
    assert A.coset_min_rep(A.element("t s"), A.gens("s")) == A.element("t")
    assert A.coset_min_rep(A.element("s t"), A.all_gens).is_identity
    assert B.coset_min_rep(B.element("s t s t"), B.gens("t")) == B.element("s t s")


def test_g_VT_and_parity(groups):
    A = groups["sysa"]
    S = A.all_gens
    assert A.g_VT(A.element("s t"), S, A.gens("t")) == A.element("t")
    assert A.g_VT(A.element("s t s t"), S, A.gens("t")).is_identity
    w = A.element("s t s")
    assert A.g_VT(w, S, S) == w
    assert A.t_parity(A.element(""), "t") == "even"
    assert A.t_parity(w, "t") == "odd"
    assert A.t_parity(A.element("s t s t"), "t") == "even"
    assert A.is_t_even(A.element("s t s t"), "s", "t")
    assert not A.is_t_even(w, "s", "t")
    assert not A.is_t_even(A.element("s"), "s", "t")


def test_parity_requires_even_system(groups):
    W = CoxeterGroup.from_text("generators: s t\nm: s t 3")
    with pytest.raises(NotEvenError):
        W.t_parity(W.element("s t"), "t")


def test_spherical_data(groups):
    A, B, D = groups["sysa"], groups["sysb"], groups["sysd"]
    assert A.is_spherical(A.all_gens) and A.spherical_order(A.all_gens) == 8
    assert not B.is_spherical(B.gens("t r"))
    assert not B.is_spherical(B.gens("t s r"))
    assert A.spherical_order(set()) == 1
    assert D.spherical_order(D.gens("t1 s1 t2 s2")) == 64
    assert len(A.spherical_poset()) == 4
    sizes = sorted(len(T) for T in B.spherical_poset())
    assert sizes == [0, 1, 1, 1, 1, 2, 2, 2, 2]
    assert len(D.spherical_poset()) == 81


def test_enumerate_ball(groups):
    A, B = groups["sysa"], groups["sysb"]
    assert len(A.enumerate_ball(4)) == 8
    assert len(A.enumerate_ball(10)) == 8
    assert {A.format(w) for w in A.enumerate_ball(2)} == {"e", "s", "t", "s t", "t s"}
    assert len(B.enumerate_ball(2)) == 15
    assert len(groups["i2_6"].enumerate_ball(20)) == 12


def test_ball_matches_tits_oracle(groups):
    # growth series of each ball against the faithful linear representation
    for name in ("sysa", "i2_6", "sysb", "sysc"):
        W = groups[name]
        mats = tits_matrices(W)
        ball = W.enumerate_ball(4)
        keys = {matrix_key(evaluate(mats, w.word)) for w in ball}
        assert len(keys) == len(ball), name


def _word_pairs(name: str, n: int):
    return st.tuples(st.lists(st.integers(0, n - 1), max_size=10), st.lists(st.integers(0, n - 1), max_size=10))


@pytest.mark.parametrize("name", ["sysa", "sysb", "sysc", "sysd", "i2_6", "hollow"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_normal_form_equality_matches_representation(groups, name, data):
    W = groups[name]
    u, v = data.draw(_word_pairs(name, W.rank))
    mats = tits_matrices(W)
    same = W.normal_form(tuple(u)) == W.normal_form(tuple(v))
    assert same == (matrix_key(evaluate(mats, u)) == matrix_key(evaluate(mats, v)))


@pytest.mark.parametrize("name", ["sysb", "hollow", "i2_6"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_root_fast_path_agrees_with_braid_closure(groups, name, data):
    W = groups[name]
    word = tuple(data.draw(st.lists(st.integers(0, W.rank - 1), max_size=8)))
    assert W.normal_form(word) == W.normal_form_braid(word)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=9))
def test_normal_form_is_reduced_and_shortlex_minimal(word):
    from evencox import fixtures
    W = fixtures.load("sysb")
    nf = W.normal_form(tuple(word))
    assert W.is_reduced(nf.word)
    assert nf.word == min(W.braid_class(nf.word), key=lambda w: (len(w), w))
    assert W.length(tuple(word)) % 2 == len(word) % 2


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 7), max_size=8), st.lists(st.integers(0, 7), max_size=8))
def test_g_VT_is_a_homomorphism(a, b):
    from evencox import fixtures
    W = fixtures.load("sysd")
    S, T = W.all_gens, W.gens("t1 s1 t2")
    x, y = W.normal_form(tuple(a)), W.normal_form(tuple(b))
    assert W.g_VT(W.multiply(x, y), S, T) == W.multiply(W.g_VT(x, S, T), W.g_VT(y, S, T))
