"""Matrix-coefficient polynomials.

A polynomial matrix is a dict mapping a monomial exponent tuple to its
Matrix coefficient; zero coefficients are dropped.  This is all the
symbolic machinery the monad identities need.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .matrix import Matrix

PolyMatrix = Dict[Tuple[int, ...], Matrix]


def poly_add(p: PolyMatrix, q: PolyMatrix) -> PolyMatrix:
    out = dict(p)
    for mono, M in q.items():
        out[mono] = out[mono] + M if mono in out else M
    return {m: M for m, M in out.items() if not M.is_zero()}


def poly_matmul(p: PolyMatrix, q: PolyMatrix) -> PolyMatrix:
    out: PolyMatrix = {}
    for m1, A in p.items():
        for m2, B in q.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            prod = A @ B
            out[mono] = out[mono] + prod if mono in out else prod
    return {m: M for m, M in out.items() if not M.is_zero()}


def poly_eval(p: PolyMatrix, values, zero: Matrix) -> Matrix:
    """Evaluate at a point; ``zero`` supplies the output shape."""
    acc = zero
    for mono, M in p.items():
        s = None
        for e, v in zip(mono, values):
            for _ in range(e):
                s = v if s is None else s * v
        acc = acc + (M if s is None else M.scale(s))
    return acc
