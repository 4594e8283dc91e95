import pytest

from hilbinv.isometry import (
    IsometryError,
    mukai_extension,
    ns_involution,
    restrict_to_ns,
    restriction_consistent,
    verify_involution,
    verify_isometry,
)
from hilbinv.lattice import MukaiVector, NsGram, identity, mat_mul
from hilbinv.pell import PellPair, solve_neg_pell


def pair(t, n, a, b):
    return PellPair(t * (n - 1), a, b, -1)


def square(M):
    return [[sum(M[i][k] * M[k][j] for k in range(len(M))) for j in range(len(M))] for i in range(len(M))]


@pytest.mark.parametrize("t,n,a,b,expected", [
    (2, 2, 1, 1, ((3, -2), (4, -3))),
    (5, 2, 2, 1, ((9, -4), (20, -9))),
    (5, 3, 3, 1, ((19, -12), (30, -19))),
])
def test_ns_involution_examples(t, n, a, b, expected):
    M = ns_involution(t, n, pair(t, n, a, b))
    assert M.entries == expected
    assert square(expected) == [[1, 0], [0, 1]]


def test_mukai_extension_example():
    tau = mukai_extension(2, 2, pair(2, 2, 1, 1))
    assert tau.entries == ((-1, -4, -2), (1, 3, 1), (-2, -4, -1))
    assert tau(MukaiVector(1, 0, -1)) == MukaiVector(1, 0, -1)


def test_mukai_extension_fixes_vn():
    tau = mukai_extension(5, 3, pair(5, 3, 3, 1))
    assert tau(MukaiVector(1, 0, -2)) == MukaiVector(1, 0, -2)


def test_rejects_wrong_pair():
    with pytest.raises(IsometryError):
        ns_involution(2, 3, PellPair(2, 1, 1, -1))
    with pytest.raises(IsometryError):
        mukai_extension(5, 2, PellPair(5, 9, 4, 1))


@pytest.mark.parametrize("G", [((4, 0), (0, -2)), ((0, 0, -1), (0, 6, 0), (-1, 0, 0))])
def test_identity_is_isometry(G):
    assert verify_isometry(identity(len(G)), G)


def test_verify_isometry_examples():
    G = ((4, 0), (0, -2))
    assert verify_isometry(((3, -2), (4, -3)), G)
    assert not verify_isometry(((1, 1), (0, 1)), G)
    with pytest.raises(IsometryError):
        verify_isometry(((1, 0), (0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(IsometryError):
        verify_isometry(((1, 0, 0), (0, 1, 0)), G)


def test_verify_involution_examples():
    assert verify_involution(((3, -2), (4, -3)))
    assert verify_involution(identity(3))
    assert not verify_involution(((1, 1), (0, 1)))


def test_restriction_matches_hand_computation():
    # tau(0,-1,0) = (2a^2+1) e1 + 2tab e2 ; tau(1,0,n-1) = -2(n-1)ab e1 - (2a^2+1) e2
    t, n, a, b = 5, 3, 3, 1
    tau = mukai_extension(t, n, pair(t, n, a, b))
    e1, e2 = MukaiVector(0, -1, 0), MukaiVector(1, 0, n - 1)
    assert tau(e1) == (2 * a * a + 1) * e1 + (2 * t * a * b) * e2
    assert tau(e2) == (-2 * (n - 1) * a * b) * e1 + (-2 * a * a - 1) * e2
    assert restrict_to_ns(tau, NsGram(t, n)) == ns_involution(t, n, pair(t, n, a, b)).entries


def test_restriction_detects_sign_error():
    t, n, a, b = 2, 2, 1, 1
    tau = mukai_extension(t, n, pair(t, n, a, b))
    M = ns_involution(t, n, pair(t, n, a, b))
    flipped = type(M)(((M.entries[0][0], -M.entries[0][1]), (-M.entries[1][0], M.entries[1][1])))
    assert not restriction_consistent(tau, flipped, NsGram(t, n))


def test_matrices_act_on_columns():
    # column convention: M applied to e2 = (0, 1) returns the second column
    M = ns_involution(2, 2, pair(2, 2, 1, 1))
    assert mat_mul(M.entries, ((0,), (1,))) == ((-2,), (-3,))


def test_sweep_invariants():
    for t in range(2, 31):
        for n in range(2, 31):
            p = solve_neg_pell(t * (n - 1))
            if not isinstance(p, PellPair):
                continue
            M = ns_involution(t, n, p)
            tau = mukai_extension(t, n, p)
            assert M.det == -1 and tau.det == -1
            assert restriction_consistent(tau, M, NsGram(t, n))
