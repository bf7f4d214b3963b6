"""Invariant closures, dual closures, and nilpotency."""

import pytest

from conftest import rng
from monadcalc.closure import (invariant_closure, is_nilpotent,
                               max_invariant_in_kernel, nilpotency_index)
from monadcalc.errors import DimensionMismatch, NonSquareMatrix
from monadcalc.field import qi
from monadcalc.matrix import Matrix, Subspace, solve

# J e2 = e1 (upper shift)
J2 = Matrix.from_rows([[0, 1], [0, 0]])
E1 = Subspace.from_span(Matrix.column([1, 0]))
E2 = Subspace.from_span(Matrix.column([0, 1]))


def _random_matrix(r_, rows, cols, bound=5):
    return Matrix(rows, cols, [qi(r_.randint(-bound, bound))
                               for _ in range(rows * cols)])


# -- invariant_closure ---------------------------------------------------

def test_closure_examples():
    assert invariant_closure([Matrix.zeros(2, 2)], E1) == E1
    assert invariant_closure([J2], E2).is_full()
    assert invariant_closure([J2], E1) == E1


def test_closure_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        invariant_closure([Matrix.zeros(3, 3)], E1)


def test_closure_properties_random():
    r_ = rng(10)
    for _ in range(25):
        n = r_.randint(1, 5)
        gens = [_random_matrix(r_, n, n) for _ in range(r_.randint(1, 3))]
        seed = Subspace.from_span(_random_matrix(r_, n, r_.randint(0, n)))
        V = invariant_closure(gens, seed)
        # contains the seed; invariant; idempotent
        assert V.contains_space(seed)
        for g in gens:
            assert solve(V.basis, g @ V.basis) is not None
        assert invariant_closure(gens, V) == V
        # monotone in the seed
        smaller = Subspace.from_span(seed.basis)  # same seed, same result
        assert invariant_closure(gens, smaller) == V


# -- max_invariant_in_kernel --------------------------------------------

def test_max_invariant_examples():
    # c = 0 -> full space
    assert max_invariant_in_kernel([J2], Matrix.zeros(1, 2)).is_full()
    # c injective -> zero subspace
    assert max_invariant_in_kernel([J2], Matrix.identity(2)).is_zero()
    # c = (0 1): Ker c = span{e1} is J2-invariant, so the answer is e1
    c = Matrix.from_rows([[0, 1]])
    assert max_invariant_in_kernel([J2], c) == E1


def test_max_invariant_is_maximal_bruteforce():
    """No invariant closure of any seed sits in Ker c without sitting in V."""
    r_ = rng(11)
    for _ in range(20):
        n = r_.randint(1, 3)
        gens = [_random_matrix(r_, n, n) for _ in range(2)]
        c = _random_matrix(r_, r_.randint(1, 2), n)
        V = max_invariant_in_kernel(gens, c)
        # V itself qualifies
        assert (c @ V.basis).is_zero()
        for g in gens:
            assert solve(V.basis, g @ V.basis) is not None
        # every invariant candidate inside Ker c is contained in V
        for _ in range(30):
            seed = Subspace.from_span(_random_matrix(r_, n, 1))
            W = invariant_closure(gens, seed)
            if (c @ W.basis).is_zero():
                assert V.contains_space(W)


# -- nilpotency ----------------------------------------------------------

def test_nilpotency_examples():
    assert nilpotency_index(Matrix.zeros(3, 3)) == 1
    assert nilpotency_index(Matrix.identity(2)) is None
    assert nilpotency_index(J2) == 2
    assert nilpotency_index(Matrix.zeros(0, 0)) == 1
    with pytest.raises(NonSquareMatrix):
        nilpotency_index(Matrix.zeros(2, 3))


def test_nilpotency_index_sharp():
    r_ = rng(12)
    for _ in range(20):
        n = r_.randint(1, 5)
        # random strictly upper triangular matrix: always nilpotent
        M = Matrix(n, n, [qi(r_.randint(-3, 3)) if j > i else qi(0)
                          for i in range(n) for j in range(n)])
        idx = nilpotency_index(M)
        assert idx is not None
        assert (M ** idx).is_zero()
        if idx > 1:
            assert not (M ** (idx - 1)).is_zero()
        assert is_nilpotent(M)


def test_non_nilpotent_random_generic():
    r_ = rng(13)
    M = _random_matrix(r_, 3, 3)
    while (M @ M @ M).is_zero():
        M = _random_matrix(r_, 3, 3)
    assert not is_nilpotent(M)
