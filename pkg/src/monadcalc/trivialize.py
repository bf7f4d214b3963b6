"""Explicit trivialization of the monad sheaf away from [0:0:1].

For tuples whose charge is concentrated at the origin (a1, a2 nilpotent,
all words c a1^.. a2^.. b vanishing) the sheaf is free on the complement
of [0:0:1]; this module builds the kernel-valued frame sections on the
two charts U1 = {x1 != 0}, U2 = {x2 != 0}, the full-rank frame matrices,
and the exact transition solution on the overlap.

Block convention: a kernel vector is (first W block, second W block,
C^r block) in the column order of B, so the b-dependent part of the U1
section sits in the SECOND W block (this is what makes B . s = 0 hold;
see the tests for the k=1 witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import MonadcalcError, OverlapViolation
from .field import ONE, QI, ZERO, qi
from .matrix import Matrix, hstack, inverse, rank, solve, vstack
from .p2 import (MonadDataP2, ProjectivePoint, evaluate_A, evaluate_B,
                 is_concentrated_at_origin)


class NotConcentrated(MonadcalcError):
    """Trivialization requested for data not concentrated at the origin."""


@dataclass(frozen=True)
class ChartPoint:
    """A point of U1 or U2 in affine chart coordinates.

    U1: (alpha2, alpha3) -> [1 : alpha2 : alpha3]
    U2: (beta1, beta3)   -> [beta1 : 1 : beta3]
    """

    chart: str  # "U1" or "U2"
    coord_a: QI
    coord_b: QI

    def __post_init__(self):
        if self.chart not in ("U1", "U2"):
            raise ValueError("chart must be 'U1' or 'U2'")
        object.__setattr__(self, "coord_a", qi(self.coord_a))
        object.__setattr__(self, "coord_b", qi(self.coord_b))

    def projective(self) -> ProjectivePoint:
        if self.chart == "U1":
            return ProjectivePoint(ONE, self.coord_a, self.coord_b)
        return ProjectivePoint(self.coord_a, ONE, self.coord_b)


def _require_concentrated(m: MonadDataP2):
    if not is_concentrated_at_origin(m):
        raise NotConcentrated(
            "sections need nilpotent a1, a2 and vanishing word products")


def _check_index(m: MonadDataP2, i: int):
    if not 1 <= i <= m.r:
        raise IndexError(f"framing index {i} outside 1..{m.r}")


def _unit(r: int, i: int) -> Matrix:
    return Matrix.column([ONE if t == i - 1 else ZERO for t in range(r)])


def _resolvent(a: Matrix, lam: QI) -> Matrix:
    """(1 - lam * a)^-1, which exists for every lam since a is nilpotent."""
    inv = inverse(Matrix.identity(a.rows) - a.scale(lam))
    assert inv is not None
    return inv


def section_s1(m: MonadDataP2, i: int, p: ChartPoint) -> Matrix:
    """U1 frame section (0, -alpha3 (1 - alpha3 a1)^-1 b e_i, e_i)."""
    _require_concentrated(m)
    _check_index(m, i)
    if p.chart != "U1":
        raise ValueError("section_s1 is defined on U1 chart points")
    a3 = p.coord_b
    e = _unit(m.r, i)
    mid = (_resolvent(m.a1, a3) @ m.b @ e).scale(-a3)
    return vstack([Matrix.zeros(m.k, 1), mid, e])


def section_s2(m: MonadDataP2, i: int, p: ChartPoint) -> Matrix:
    """U2 frame section (beta3 (1 - beta3 a2)^-1 b e_i, 0, e_i)."""
    _require_concentrated(m)
    _check_index(m, i)
    if p.chart != "U2":
        raise ValueError("section_s2 is defined on U2 chart points")
    b3 = p.coord_b
    e = _unit(m.r, i)
    top = (_resolvent(m.a2, b3) @ m.b @ e).scale(b3)
    return vstack([top, Matrix.zeros(m.k, 1), e])


def frame_matrix(m: MonadDataP2, p: ChartPoint) -> Matrix:
    """The (2k+r) x (k+r) matrix [A(p) | sections]; full column rank.

    On U1 this is the display with top block 1 - alpha3 a1; invertibility
    of that block (a1 nilpotent) forces maximal rank at every chart point.
    """
    _require_concentrated(m)
    sections = section_s1 if p.chart == "U1" else section_s2
    cols = [evaluate_A(m, p.projective())]
    cols += [sections(m, i, p) for i in range(1, m.r + 1)]
    return hstack(cols)


def transition_xi(m: MonadDataP2, i: int, alpha2: QI, alpha3: QI) -> Tuple[Matrix, Matrix]:
    """The overlap solution of frame_U1 . (xi1, xi2) = s2.

    xi1 = alpha3 (1 - alpha3 a1)^-1 (alpha2 - alpha3 a2)^-1 b e_i and
    xi2 = e_i; consequently s2 - s1 = A . xi1 on U1 ∩ U2 (with the chart
    identification beta1 = 1/alpha2, beta3 = alpha3/alpha2) and c xi1 = 0.
    """
    _require_concentrated(m)
    _check_index(m, i)
    alpha2, alpha3 = qi(alpha2), qi(alpha3)
    if alpha2.is_zero():
        raise OverlapViolation("alpha2 = 0 lies outside U1 ∩ U2")
    e = _unit(m.r, i)
    shifted = inverse(Matrix.identity(m.k).scale(alpha2) - m.a2.scale(alpha3))
    assert shifted is not None  # alpha2 != 0 and a2 nilpotent
    xi1 = (_resolvent(m.a1, alpha3) @ shifted @ m.b @ e).scale(alpha3)
    return xi1, e


def default_sample_points(n: int, seed: int = 11) -> List[ChartPoint]:
    """Deterministic small-rational chart points, always including
    alpha3 = 0 and an overlap point."""
    import random

    rng = random.Random(seed)
    pts = [ChartPoint("U1", qi(1), qi(0)), ChartPoint("U1", qi(1), qi(1))]
    while len(pts) < n:
        num = lambda: qi(rng.randint(-6, 6), rng.randint(-2, 2))
        a2 = num()
        if a2.is_zero():
            a2 = qi(1)
        pts.append(ChartPoint("U1", a2, num()))
    return pts[:n]


def verify_trivialization(m: MonadDataP2,
                          sample_points: Optional[Sequence[ChartPoint]] = None,
                          n_samples: int = 10) -> bool:
    """Exact verification of the trivialization identities on samples.

    At each sample point: both sections lie in Ker B, both frame
    matrices have full column rank, and on the overlap the transition
    identity s2 - s1 = A xi1 holds with c xi1 = 0 and xi matching an
    independent generic linear solve of frame . xi = s2.
    """
    _require_concentrated(m)
    if m.k == 0 and m.r == 0:
        return True
    if sample_points is None:
        sample_points = default_sample_points(n_samples)
    for p in sample_points:
        if p.chart == "U1":
            a2c, a3c = p.coord_a, p.coord_b
            p1 = p
        else:
            # move to U1 coordinates when possible for the overlap test
            if p.coord_a.is_zero():
                p1 = None
            else:
                a2c = p.coord_a.inverse()
                a3c = p.coord_b * p.coord_a.inverse()
                p1 = ChartPoint("U1", a2c, a3c)
        # kernel membership and frame rank on the given chart
        B = evaluate_B(m, p.projective())
        sec = section_s1 if p.chart == "U1" else section_s2
        for i in range(1, m.r + 1):
            if not (B @ sec(m, i, p)).is_zero():
                return False
        F = frame_matrix(m, p)
        if rank(F) != m.k + m.r:
            return False
        if p1 is None or a2c.is_zero():
            continue
        # overlap identities in U1 coordinates
        u2 = ChartPoint("U2", a2c.inverse(), a3c * a2c.inverse())
        A = evaluate_A(m, p1.projective())
        F1 = frame_matrix(m, p1)
        for i in range(1, m.r + 1):
            xi1, xi2 = transition_xi(m, i, a2c, a3c)
            s1 = section_s1(m, i, p1)
            s2 = section_s2(m, i, u2)
            if not (s2 - s1 - A @ xi1).is_zero():
                return False
            if not (m.c @ xi1).is_zero():
                return False
            generic = solve(F1, s2)
            if generic is None or not (generic - vstack([xi1, xi2])).is_zero():
                return False
    return True
