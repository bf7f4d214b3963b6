"""Monad data on the projective plane.

A tuple (a1, a2, b, c) with a_i in End(W), b: C^r -> W, c: W -> C^r and
[a1, a2] + b c = 0 determines a two-step complex whose middle cohomology
is a framed torsion-free sheaf of rank r and charge k = dim W.  This
module implements the tuple calculus: validation, the GL(W) action,
special subspaces and nondegeneracy, pointwise evaluation of the monad
maps, reduction to a nondegenerate part plus a point multiset, and the
charge-at-the-origin test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .closure import invariant_closure, is_nilpotent, max_invariant_in_kernel
from .eigen import approx_joint_eigenvalue_pairs, joint_eigenvalue_pairs
from .errors import (DimensionMismatch, IntegrabilityViolation,
                     SingularGroupElement)
from .field import ONE, QI, ZERO, qi
from .matrix import (Matrix, Subspace, column_space, hstack, inverse,
                     rank, rref, vstack)
from .polymat import PolyMatrix, poly_matmul


class ProjectivePoint:
    """A point [x1 : x2 : x3], normalized so the first nonzero coord is 1."""

    __slots__ = ("x1", "x2", "x3")

    def __init__(self, x1, x2, x3):
        coords = [qi(x1), qi(x2), qi(x3)]
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise ValueError("all projective coordinates are zero")
        s = lead.inverse()
        self.x1, self.x2, self.x3 = (s * c for c in coords)

    def coords(self) -> Tuple[QI, QI, QI]:
        return (self.x1, self.x2, self.x3)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        return f"[{self.x1!r}:{self.x2!r}:{self.x3!r}]"


@dataclass(frozen=True)
class MonadDataP2:
    """Raw monad tuple on P^2; dimensions are checked, integrability is not.

    Use :func:`validate_p2` (or :meth:`validated`) to enforce the
    integrability condition; the raw form stays constructible so the
    validator and the symbolic identities can be exercised on
    non-integrable tuples.
    """

    a1: Matrix
    a2: Matrix
    b: Matrix
    c: Matrix

    def __post_init__(self):
        k, r = self.k, self.r
        if not (self.a1.rows == self.a1.cols == k and
                self.a2.rows == self.a2.cols == k):
            raise DimensionMismatch("a1, a2 must be square of equal size")
        if self.b.rows != k or self.c.cols != k or self.c.rows != r:
            raise DimensionMismatch("b must be k x r and c must be r x k")

    @property
    def k(self) -> int:
        return self.a1.rows

    @property
    def r(self) -> int:
        return self.b.cols

    @classmethod
    def validated(cls, a1, a2, b, c) -> "MonadDataP2":
        return validate_p2(cls(a1, a2, b, c))


def integrability_defect(m: MonadDataP2) -> Matrix:
    """[a1, a2] + b c, identically zero exactly for valid tuples."""
    return m.a1 @ m.a2 - m.a2 @ m.a1 + m.b @ m.c


def is_integrable(m: MonadDataP2) -> bool:
    return integrability_defect(m).is_zero()


def validate_p2(m: MonadDataP2) -> MonadDataP2:
    defect = integrability_defect(m)
    if not defect.is_zero():
        raise IntegrabilityViolation(defect)
    return m


def act(g: Matrix, m: MonadDataP2) -> MonadDataP2:
    """The GL(W) action (a1, a2, b, c) -> (g^-1 a1 g, g^-1 a2 g, g^-1 b, c g)."""
    ginv = inverse(g)
    if ginv is None:
        raise SingularGroupElement("group element is not invertible")
    return MonadDataP2(ginv @ m.a1 @ g, ginv @ m.a2 @ g, ginv @ m.b, m.c @ g)


# -- special subspaces and nondegeneracy --------------------------------

def min_b_special(m: MonadDataP2) -> Subspace:
    """Smallest (a1, a2)-invariant subspace containing Im b."""
    return invariant_closure([m.a1, m.a2], column_space(m.b))


def max_c_special(m: MonadDataP2) -> Subspace:
    """Largest (a1, a2)-invariant subspace contained in Ker c."""
    return max_invariant_in_kernel([m.a1, m.a2], m.c)


def is_nondegenerate(m: MonadDataP2) -> bool:
    """True iff the only b-special subspace is W and the only c-special is 0."""
    return min_b_special(m).is_full() and max_c_special(m).is_zero()


# -- pointwise monad maps ----------------------------------------------

def evaluate_A(m: MonadDataP2, p: ProjectivePoint) -> Matrix:
    """The (2k+r) x k monad map A at p: rows (x1 - a1 x3; x2 - a2 x3; c x3)."""
    x1, x2, x3 = p.coords()
    eye = Matrix.identity(m.k)
    return vstack([
        eye.scale(x1) - m.a1.scale(x3),
        eye.scale(x2) - m.a2.scale(x3),
        m.c.scale(x3),
    ])


def evaluate_B(m: MonadDataP2, p: ProjectivePoint) -> Matrix:
    """The k x (2k+r) monad map B at p: (-x2 + a2 x3 | x1 - a1 x3 | b x3)."""
    x1, x2, x3 = p.coords()
    eye = Matrix.identity(m.k)
    return hstack([
        eye.scale(-x2) + m.a2.scale(x3),
        eye.scale(x1) - m.a1.scale(x3),
        m.b.scale(x3),
    ])


def symbolic_monad_product(m: MonadDataP2) -> PolyMatrix:
    """B A as a matrix-coefficient polynomial in (x1, x2, x3).

    For every raw tuple this equals ([a1, a2] + b c) * x3^2; all other
    monomial coefficients cancel identically.
    """
    k, r = m.k, m.r
    eye = Matrix.identity(k)
    zkk = Matrix.zeros(k, k)
    zrk = Matrix.zeros(r, k)
    zkr = Matrix.zeros(k, r)
    A: PolyMatrix = {
        (1, 0, 0): vstack([eye, zkk, zrk]),
        (0, 1, 0): vstack([zkk, eye, zrk]),
        (0, 0, 1): vstack([-m.a1, -m.a2, m.c]),
    }
    B: PolyMatrix = {
        (1, 0, 0): hstack([zkk, eye, zkr]),
        (0, 1, 0): hstack([-eye, zkk, zkr]),
        (0, 0, 1): hstack([m.a2, -m.a1, m.b]),
    }
    return poly_matmul(B, A)


def fiber_dimension(m: MonadDataP2, p: ProjectivePoint) -> int:
    """dim Ker B(p) - rank A(p); equals r wherever the monad maps have
    maximal rank."""
    A = evaluate_A(m, p)
    B = evaluate_B(m, p)
    return (B.cols - rank(B)) - rank(A)


# -- reduction to Donaldson-Uhlenbeck data ------------------------------

@dataclass(frozen=True)
class DUPoint:
    """A nondegenerate reduced tuple of charge l plus k - l plane points.

    ``points`` is the sorted multiset of joint eigenvalue pairs of the
    split-off commuting blocks; when ``approx`` is set the pairs are
    floating-point complex numbers from the Schur fallback.
    """

    reduced: MonadDataP2
    points: Tuple[Tuple[object, object], ...]
    approx: bool = False

    @property
    def l(self) -> int:
        return self.reduced.k

    @property
    def total_charge(self) -> int:
        return self.l + len(self.points)


def _basis_extension(space: Subspace) -> Matrix:
    """Invertible matrix whose first dim columns are the subspace basis."""
    n = space.ambient_dim
    _, pivot_rows = rref(space.basis.transpose())
    others = [j for j in range(n) if j not in set(pivot_rows)]
    unit_cols = [Matrix.column([ONE if i == j else ZERO for i in range(n)])
                 for j in others]
    pieces = [space.basis] + unit_cols
    return hstack(pieces) if space.dim + len(others) > 0 else Matrix.zeros(n, 0)


def _sub(M: Matrix, r0: int, r1: int, c0: int, c1: int) -> Matrix:
    return Matrix(r1 - r0, c1 - c0,
                  [M[i, j] for i in range(r0, r1) for j in range(c0, c1)])


def _split_top(m: MonadDataP2, V: Subspace):
    """Conjugate so V occupies the first coordinates and cut into blocks.

    Returns ((top blocks a1, a2 on V), (bottom blocks on W/V), the
    transformed b, c) - callers decide which side is kept.
    """
    g = _basis_extension(V)
    ginv = inverse(g)
    assert ginv is not None
    d, k = V.dim, m.k
    na1, na2 = ginv @ m.a1 @ g, ginv @ m.a2 @ g
    nb, nc = ginv @ m.b, m.c @ g
    # invariance of V makes the lower-left blocks vanish
    assert _sub(na1, d, k, 0, d).is_zero() and _sub(na2, d, k, 0, d).is_zero()
    top = (_sub(na1, 0, d, 0, d), _sub(na2, 0, d, 0, d))
    bottom = (_sub(na1, d, k, d, k), _sub(na2, d, k, d, k))
    return top, bottom, nb, nc, d


def canonical_reduction(m: MonadDataP2, eigen_mode: str = "exact") -> DUPoint:
    """Pass to the completely reducible orbit closure and read off its data.

    Repeatedly splits off a maximal c-special subspace, then a minimal
    b-special one, zeroing the coupling blocks; the survivor is the
    nondegenerate reduced tuple and the discarded commuting diagonal
    blocks contribute their joint eigenvalue pairs as plane points.

    eigen_mode "exact" raises IrrationalSpectrum when a discarded block
    has spectrum outside Q(i); "float" switches to approximate pairs and
    marks the result.
    """
    if eigen_mode not in ("exact", "float"):
        raise ValueError("eigen_mode must be 'exact' or 'float'")
    delta_blocks: List[Tuple[Matrix, Matrix]] = []
    current = m
    while True:
        Vc = max_c_special(current)
        if not Vc.is_zero():
            top, bottom, nb, nc, d = _split_top(current, Vc)
            k = current.k
            # discard the c-special block (eigenvalue points), keep the rest
            delta_blocks.append(top)
            current = MonadDataP2(bottom[0], bottom[1],
                                  _sub(nb, d, k, 0, current.r),
                                  _sub(nc, 0, current.r, d, k))
            continue
        Vb = min_b_special(current)
        if not Vb.is_full():
            top, bottom, nb, nc, d = _split_top(current, Vb)
            k = current.k
            # keep the b-special block, discard the induced quotient action
            delta_blocks.append(bottom)
            current = MonadDataP2(top[0], top[1],
                                  _sub(nb, 0, d, 0, current.r),
                                  _sub(nc, 0, current.r, 0, d))
            continue
        break
    points: List[Tuple[object, object]] = []
    approx = False
    for f1, f2 in delta_blocks:
        if eigen_mode == "exact":
            points.extend(joint_eigenvalue_pairs(f1, f2))
        else:
            points.extend(approx_joint_eigenvalue_pairs(f1, f2))
            approx = True
    if approx:
        points.sort(key=lambda p: (complex(p[0]).real, complex(p[0]).imag,
                                   complex(p[1]).real, complex(p[1]).imag))
    else:
        points.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return DUPoint(reduced=current, points=tuple(points), approx=approx)


def is_concentrated_at_origin(m: MonadDataP2) -> bool:
    """True iff a1, a2 are nilpotent and c kills every word a1^.. a2^.. b.

    The word family (empty word included, i.e. c b = 0) is finite once
    phrased through the invariant closure of Im b.
    """
    if not (is_nilpotent(m.a1) and is_nilpotent(m.a2)):
        return False
    closure = invariant_closure([m.a1, m.a2], column_space(m.b))
    return (m.c @ closure.basis).is_zero()
