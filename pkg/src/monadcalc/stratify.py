"""Pushforward under blowdown and the charge-at-the-point stratum test.

The pushforward sends (a1, a2, d, b, c) to (d a1, d a2, d b, c); its
integrability defect is d times the blowup defect, so valid tuples push
to valid tuples.  A blowup tuple lies in the fully-degenerate stratum
iff d a1 and d a2 are nilpotent and c kills every word in them applied
to d b; the production classifier phrases the word family through the
invariant closure, while the exhaustive word enumeration is kept as an
independent oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .blowup import MonadDataBlowup
from .closure import invariant_closure, nilpotency_index
from .matrix import column_space
from .p2 import MonadDataP2, canonical_reduction

Witness = Union[str, Tuple[int, ...]]


@dataclass(frozen=True)
class StratumReport:
    """Outcome of the stratum classification with failure witnesses.

    ``nilpotency`` maps "da1"/"da2" to the nilpotency index or None;
    ``witness`` is the name of the first non-nilpotent matrix, or the
    shortest word (indices over {1, 2}) whose triple product c . w . db
    fails to vanish.
    """

    is_s0: bool
    nilpotency: Tuple[Tuple[str, Optional[int]], ...]
    krylov_dim: int
    witness: Optional[Witness] = None


def pushforward(mt: MonadDataBlowup) -> MonadDataP2:
    """(a1, a2, d, b, c) -> (d a1, d a2, d b, c), raw (validity transfers)."""
    return MonadDataP2(mt.d @ mt.a1, mt.d @ mt.a2, mt.d @ mt.b, mt.c)


def _shortest_failing_word(mt: MonadDataBlowup, max_len: int) -> Optional[Tuple[int, ...]]:
    """Breadth-first search for the shortest word with c . w(da1, da2) . db != 0.

    Ties break lexicographically (1 before 2).  Returns None when every
    word up to max_len passes.
    """
    da = {1: mt.d @ mt.a1, 2: mt.d @ mt.a2}
    db = mt.d @ mt.b
    queue = deque([((), db)])
    while queue:
        word, v = queue.popleft()
        if not (mt.c @ v).is_zero():
            return word
        if len(word) < max_len:
            for idx in (1, 2):
                queue.append((word + (idx,), da[idx] @ v))
    return None


def classify_s0(mt: MonadDataBlowup) -> StratumReport:
    """Closure-based stratum classifier with deterministic witnesses."""
    da1, da2 = mt.d @ mt.a1, mt.d @ mt.a2
    n1, n2 = nilpotency_index(da1), nilpotency_index(da2)
    nil = (("da1", n1), ("da2", n2))
    closure = invariant_closure([da1, da2], column_space(mt.d @ mt.b))
    krylov_dim = closure.dim
    if n1 is None:
        return StratumReport(False, nil, krylov_dim, witness="da1 not nilpotent")
    if n2 is None:
        return StratumReport(False, nil, krylov_dim, witness="da2 not nilpotent")
    if (mt.c @ closure.basis).is_zero():
        return StratumReport(True, nil, krylov_dim)
    word = _shortest_failing_word(mt, 2 * mt.k)
    assert word is not None
    return StratumReport(False, nil, krylov_dim, witness=word)


def classify_s0_oracle(mt: MonadDataBlowup, max_len: int) -> bool:
    """Independent oracle: exhaustive word check up to the given length.

    With max_len >= 2k this is equivalent to the closure classifier,
    since the invariant closure of a k-dimensional space stabilizes in
    at most k generator applications.
    """
    da1, da2 = mt.d @ mt.a1, mt.d @ mt.a2
    if nilpotency_index(da1) is None or nilpotency_index(da2) is None:
        return False
    db = mt.d @ mt.b
    level = [db]
    if not (mt.c @ db).is_zero():
        return False
    for _ in range(max_len):
        nxt = []
        for v in level:
            for g in (da1, da2):
                w = g @ v
                if not (mt.c @ w).is_zero():
                    return False
                nxt.append(w)
        level = nxt
    return True


@dataclass(frozen=True)
class ChargeLabel:
    """Bookkeeping of how the total charge k splits under reduction."""

    total_charge: int
    bundle_charge_l: int
    points_at_origin: int
    points_elsewhere: int


def charge_label(m: MonadDataP2, eigen_mode: str = "exact") -> ChargeLabel:
    """Partition the charge via canonical reduction.

    Points are split by whether their eigenvalue pair is (0, 0); in
    float mode a pair counts as the origin when both components are
    within 1e-9 of zero.
    """
    du = canonical_reduction(m, eigen_mode=eigen_mode)
    at_origin = 0
    for p1, p2 in du.points:
        if du.approx:
            if abs(complex(p1)) <= 1e-9 and abs(complex(p2)) <= 1e-9:
                at_origin += 1
        else:
            if p1.is_zero() and p2.is_zero():
                at_origin += 1
    return ChargeLabel(
        total_charge=m.k,
        bundle_charge_l=du.l,
        points_at_origin=at_origin,
        points_elsewhere=len(du.points) - at_origin,
    )
