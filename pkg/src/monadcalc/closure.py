"""Invariant-subspace closures and nilpotency over Q(i)."""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionMismatch, NonSquareMatrix
from .matrix import Matrix, Subspace, hstack


def _check_generators(generators: Sequence[Matrix], n: int):
    for g in generators:
        if not g.is_square() or g.rows != n:
            raise DimensionMismatch(
                f"generator shape {g.rows}x{g.cols} does not match ambient {n}")


def invariant_closure(generators: Sequence[Matrix], seed: Subspace) -> Subspace:
    """Smallest subspace containing ``seed`` and invariant under all generators.

    Breadth-first Krylov iteration; the dimension strictly increases
    until the fixed point, so it stabilizes in at most ``ambient_dim``
    rounds.
    """
    n = seed.ambient_dim
    _check_generators(generators, n)
    current = seed
    for _ in range(n + 1):
        pieces = [current.basis] + [g @ current.basis for g in generators]
        nxt = Subspace.from_span(hstack(pieces))
        if nxt.dim == current.dim:
            return current
        current = nxt
    return current


def max_invariant_in_kernel(generators: Sequence[Matrix], c: Matrix) -> Subspace:
    """Largest subspace invariant under all generators and contained in Ker c.

    Computed dually: the annihilator of the invariant closure of the row
    space of ``c`` under the transposed generators.
    """
    n = c.cols
    _check_generators(generators, n)
    row_space = Subspace.from_span(c.transpose())
    closed = invariant_closure([g.transpose() for g in generators], row_space)
    return closed.annihilator()


def nilpotency_index(M: Matrix) -> Optional[int]:
    """Smallest n with M^n = 0, or None when M is not nilpotent.

    By Cayley-Hamilton a k x k nilpotent matrix satisfies M^k = 0, so
    only k powers need checking.
    """
    if not M.is_square():
        raise NonSquareMatrix("nilpotency is defined for square matrices")
    k = M.rows
    P = M
    for n in range(1, k + 1):
        if P.is_zero():
            return n
        P = P @ M
    return 1 if k == 0 else None


def is_nilpotent(M: Matrix) -> bool:
    return nilpotency_index(M) is not None
