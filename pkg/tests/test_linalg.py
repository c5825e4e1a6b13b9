from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedderburn import linalg
from wedderburn.errors import AmbientMismatch, SingularMatrix
from wedderburn.fields import GF, QQ
from wedderburn.linalg import Subspace

from .strategies import matrices, scalars


def test_rref_identity():
    F = GF(3)
    red, piv = linalg.rref(F, [(1, 0), (0, 1)])
    assert red == [(1, 0), (0, 1)] and piv == [0, 1]


def test_rref_drops_dependent_rows():
    red, piv = linalg.rref(GF(2), [(1, 1), (1, 1)])
    assert red == [(1, 1)] and len(piv) == 1


def test_rref_swaps():
    red, piv = linalg.rref(GF(5), [(0, 1), (1, 0)])
    assert red == [(1, 0), (0, 1)] and piv == [0, 1]


def test_solve_identity():
    F = GF(7)
    assert linalg.solve(F, linalg.identity(F, 3), (4, 5, 6)) == (4, 5, 6)


def test_solve_inconsistent():
    A = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(2))]
    assert linalg.solve(QQ, A, (Fraction(1), Fraction(3))) is None


def test_solve_free_variables_zero():
    assert linalg.solve(GF(2), [(1, 1)], (1,)) == (1, 0)


def test_inverse():
    F = GF(5)
    M = [(1, 2), (3, 4)]
    Minv = linalg.inverse(F, M)
    assert linalg.mat_mul(F, M, Minv) == linalg.identity(F, 2)
    with pytest.raises(SingularMatrix):
        linalg.inverse(F, [(1, 2), (2, 4)])


def test_subspace_sum_and_predicates():
    F = GF(2)
    U = Subspace.span(F, [(1, 0)], 2)
    V = Subspace.span(F, [(0, 1)], 2)
    full = Subspace.full(F, 2)
    assert U + V == full
    assert U.equals(U)
    assert Subspace.span(F, [(1, 1)], 2).is_subset(full)
    assert not full.is_subset(U)
    assert full.contains((1, 1)) and not U.contains((1, 1))


def test_subspace_ambient_mismatch():
    F = GF(2)
    with pytest.raises(AmbientMismatch):
        Subspace.full(F, 2) + Subspace.full(F, 3)


def test_subspace_elements_count():
    S = Subspace.span(GF(3), [(1, 2, 0), (0, 0, 1)], 3)
    els = list(S.elements())
    assert len(els) == 9 == len(set(els))
    assert els[0] == (0, 0, 0)


@given(matrices())
@settings(max_examples=200)
def test_rref_idempotent_and_preserves_row_space(fm):
    F, M = fm
    red, piv = linalg.rref(F, M)
    assert linalg.rref(F, red) == (red, piv)
    assert len(red) == len(piv)
    assert list(piv) == sorted(set(piv))
    S = Subspace.span(F, red, len(M[0]))
    assert all(S.contains(row) for row in M)


@st.composite
def systems(draw):
    F, A = draw(matrices(max_rows=5, max_cols=5))
    x = draw(st.tuples(*[scalars(F)] * len(A[0])))
    consistent = draw(st.booleans())
    if consistent:
        b = linalg.mat_vec(F, A, x)
    else:
        b = draw(st.tuples(*[scalars(F)] * len(A)))
    return F, A, b


@given(systems())
@settings(max_examples=200)
def test_solve_is_exact(system):
    F, A, b = system
    x = linalg.solve(F, A, b)
    if x is not None:
        assert linalg.mat_vec(F, A, x) == tuple(b)
    else:
        # inconsistent: b is not in the column space
        cols = Subspace.span(F, linalg.transpose(A), len(A))
        assert not cols.contains(tuple(b))


@given(matrices(max_rows=5, max_cols=6))
@settings(max_examples=150)
def test_nullspace(fm):
    F, A = fm
    ncols = len(A[0])
    null = linalg.nullspace(F, A, ncols)
    assert len(null) == ncols - linalg.rank(F, A)
    for v in null:
        assert linalg.is_zero_vector(F, linalg.mat_vec(F, A, v))


@st.composite
def subspace_triples(draw):
    F = draw(st.sampled_from([GF(2), GF(3), GF(2, 2), QQ]))
    n = draw(st.integers(1, 6))
    out = []
    for _ in range(3):
        k = draw(st.integers(0, n))
        rows = draw(st.lists(st.tuples(*[scalars(F)] * n), min_size=k, max_size=k))
        out.append(Subspace.span(F, rows, n))
    return out


@given(subspace_triples())
@settings(max_examples=150)
def test_subspace_sum_is_a_join_semilattice(triple):
    U, V, W = triple
    assert U + V == V + U
    assert (U + V) + W == U + (V + W)
    assert U + U == U
    assert U.is_subset(U + V) and V.is_subset(U + V)
