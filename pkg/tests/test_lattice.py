import pytest
from hypothesis import given, strategies as st

from hilbinv.lattice import (
    DiscriminantAction,
    LatticeError,
    MukaiVector,
    NsGram,
    Surface,
    det,
    discriminant_action,
    ideal_sheaf_vector,
    mukai_gram,
    mukai_pairing,
)
from hilbinv.isometry import ns_involution
from hilbinv.pell import PellPair, solve_neg_pell

ints = st.integers(min_value=-10**6, max_value=10**6)
vectors = st.builds(MukaiVector, ints, ints, ints)
surfaces = st.builds(Surface, st.integers(min_value=1, max_value=1000))


def expand_pairing(v, w, t):
    # dot product against the Gram matrix, entry by entry
    G = mukai_gram(t)
    return sum(v.as_tuple()[i] * G[i][j] * w.as_tuple()[j] for i in range(3) for j in range(3))


@pytest.mark.parametrize("v,w,t,expected", [
    ((1, 0, -1), (1, 0, -1), 2, 2),
    ((0, 1, 0), (0, 1, 0), 2, 4),
    ((1, 0, 0), (0, 0, 1), 5, -1),
])
def test_mukai_pairing_examples(v, w, t, expected):
    assert mukai_pairing(MukaiVector(*v), MukaiVector(*w), Surface(t)) == expected


@given(vectors, vectors, vectors, ints, surfaces)
def test_pairing_symmetric_bilinear(u, v, w, c, surf):
    assert mukai_pairing(v, w, surf) == mukai_pairing(w, v, surf)
    assert mukai_pairing(u + c * v, w, surf) == mukai_pairing(u, w, surf) + c * mukai_pairing(v, w, surf)
    assert mukai_pairing(v, w, surf) == expand_pairing(v, w, surf.t)


def test_ideal_sheaf_vector():
    assert ideal_sheaf_vector(2) == MukaiVector(1, 0, -1)
    assert ideal_sheaf_vector(6) == MukaiVector(1, 0, -5)
    assert mukai_pairing(ideal_sheaf_vector(3), ideal_sheaf_vector(3), Surface(5)) == 4
    with pytest.raises(LatticeError):
        ideal_sheaf_vector(1)


@pytest.mark.parametrize("n", range(2, 201))
def test_ideal_sheaf_self_pairing(n):
    v = ideal_sheaf_vector(n)
    assert mukai_pairing(v, v, Surface(7)) == 2 * (n - 1)


def test_surface_validation():
    assert Surface.from_degree(10).t == 5
    with pytest.raises(LatticeError):
        Surface.from_degree(7)
    with pytest.raises(LatticeError):
        Surface(0)


def test_ns_gram():
    assert NsGram(2, 2).gram == ((4, 0), (0, -2))
    # e2 = (1, 0, n-1) is orthogonal to v_n and has square -2(n-1)
    t, n = 3, 5
    e1 = MukaiVector(0, -1, 0)
    e2 = MukaiVector(1, 0, n - 1)
    surf = Surface(t)
    vn = ideal_sheaf_vector(n)
    assert mukai_pairing(e1, vn, surf) == mukai_pairing(e2, vn, surf) == 0
    assert ((mukai_pairing(e1, e1, surf), mukai_pairing(e1, e2, surf)),
            (mukai_pairing(e2, e1, surf), mukai_pairing(e2, e2, surf))) == NsGram(t, n).gram


@pytest.mark.parametrize("t,n,M,modulus", [
    (2, 2, ((3, -2), (4, -3)), 2),
    (5, 3, ((19, -12), (30, -19)), 4),
])
def test_discriminant_action_examples(t, n, M, modulus):
    act = discriminant_action(M, NsGram(t, n))
    assert act.modulus == modulus
    assert act.multiplier == 1 % modulus
    assert act.glue_ok and act.is_identity


@pytest.mark.parametrize("t,n", [(2, 2), (7, 9), (13, 40)])
def test_discriminant_action_identity_matrix(t, n):
    act = discriminant_action(((1, 0), (0, 1)), NsGram(t, n))
    assert act.is_identity
    assert act.h_multiplier == 1


def test_discriminant_action_rejects_non_isometry():
    with pytest.raises(LatticeError):
        discriminant_action(((1, 1), (0, 1)), NsGram(2, 2))


def test_discriminant_minus_identity():
    act = discriminant_action(((-1, 0), (0, -1)), NsGram(2, 4))
    assert act.multiplier == 5 and not act.is_identity


def test_discriminant_sweep():
    # c = -2a^2 - 1 = 1 - 2t(n-1)b^2 is 1 mod 2(n-1); the H-factor gets -1 mod 2t
    for t in range(2, 51):
        for n in range(2, 51):
            p = solve_neg_pell(t * (n - 1))
            if not isinstance(p, PellPair):
                continue
            act = discriminant_action(ns_involution(t, n, p).entries, NsGram(t, n))
            assert act.is_identity, (t, n)
            assert act.h_multiplier == (-1) % (2 * t), (t, n)


def test_det():
    assert det(((1, 2, 3), (4, 5, 6), (7, 8, 10))) == -3
    assert det(((2, 0), (0, 3))) == 6


def test_discriminant_action_validation():
    with pytest.raises(LatticeError):
        DiscriminantAction(0, 0, 2, 1, True)
