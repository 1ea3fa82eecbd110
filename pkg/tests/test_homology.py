from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from evencox.davis import BallComplex, ball_order_complex, chamber_order_complex
from evencox.homology import (chain_complex, elementary_divisors, euler_characteristic, fraction_str,
                              homology, orbihedral_euler, relative_homology)
from evencox.nerve import build_nerve

RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
       (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)]


def rational_betti(X) -> list[int]:
    """Betti numbers over Q from sympy ranks of dense boundary matrices."""
    ranks = [0] * (len(X.dims) + 1)
    for k in range(1, len(X.dims)):
        M = X.matrix(k)
        ranks[k] = sympy.Matrix(M).rank() if M and M[0] else 0
    return [X.dims[k] - ranks[k] - ranks[k + 1] for k in range(len(X.dims))]


def test_small_complexes():
    X = chain_complex([(0,)])
    assert X.dims == [1] and homology(X).betti == (1,)
    edge = chain_complex([(0, 1), (1, 2)])
    assert edge.dims == [3, 2]
    assert sympy.Matrix(edge.matrix(1)).rank() == 2
    assert euler_characteristic(X) == 1


def test_projective_plane_torsion():
    h = homology(chain_complex(RP2))
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())


def test_circle_and_sphere():
    circle = chain_complex([(0, 1), (1, 2), (0, 2)])
    assert homology(circle).betti == (1, 1)
    tetra = chain_complex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert homology(tetra).betti == (1, 0, 1)


def test_relative_homology():
    X = chain_complex(RP2)
    every = [s for b in X.basis for s in b]
    assert all(b == 0 for b in relative_homology(X, every).betti)
    assert relative_homology(X, []) == homology(X)
    disk = chain_complex([(0, 1, 2)])
    rim = [(0, 1), (1, 2), (0, 2), (0,), (1,), (2,)]
    assert relative_homology(disk, rim).betti == (0, 0, 1)
    with pytest.raises(ValueError):
        relative_homology(disk, [(0, 1)])


def test_davis_homology(groups):
    A = groups["sysa"]
    oc = ball_order_complex(BallComplex(A, 4))
    X = chain_complex(oc.simplices)
    assert X.dims == [17, 32, 16] and X.is_complex()
    assert homology(X).betti == (1, 0, 0)
    assert euler_characteristic(X) == 1
    K = chain_complex(chamber_order_complex(groups["sysd"]).simplices)
    assert homology(K).betti == (1, 0, 0, 0, 0)
    assert euler_characteristic(chain_complex(build_nerve(groups["sysb"]).simplices())) == 0


def test_truncated_right_angled_ball(groups):
    C = groups["sysc"]
    X = chain_complex(ball_order_complex(BallComplex(C, 3)).simplices)
    h = homology(X)
    assert list(h.betti) == rational_betti(X)
    assert h.betti == (1, 0, 0)


def test_orbihedral_euler(groups):
    assert orbihedral_euler(groups["sysb"]) == Fraction(-1, 4)
    assert orbihedral_euler(groups["sysc"]) == Fraction(-1, 4)
    assert orbihedral_euler(groups["sysd"]) == Fraction(1, 16)
    assert orbihedral_euler(groups["syse"]) == 0
    assert orbihedral_euler(groups["sysa"]) == Fraction(1, 8)
    assert fraction_str(Fraction(-1, 4)) == "-1/4"
    assert fraction_str(Fraction(0)) == "0/1"


small_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(small_matrices)
def test_elementary_divisors_match_sympy(rows):
    columns = {j: {i: rows[i][j] for i in range(len(rows)) if rows[i][j]} for j in range(len(rows[0]))}
    ours = elementary_divisors(columns)
    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    theirs = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i])
    assert ours == theirs


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sets(st.integers(0, 6), min_size=1, max_size=4), min_size=1, max_size=8))
def test_random_complexes(faces):
    X = chain_complex([tuple(sorted(F)) for F in faces])
    assert X.is_complex()
    h = homology(X)
    assert list(h.betti) == rational_betti(X)
    assert h.euler == euler_characteristic(X)
