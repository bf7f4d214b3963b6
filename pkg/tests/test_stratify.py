"""Pushforward and the fully-degenerate stratum classifier."""

from conftest import family_instances, raw_blowup_tuples, rng
from monadcalc.blowup import MonadDataBlowup, blowup_defect
from monadcalc.generate import GenSpec, generate, random_invertible
from monadcalc.matrix import Matrix
from monadcalc.p2 import integrability_defect, is_integrable
from monadcalc.stratify import (ChargeLabel, charge_label, classify_s0,
                                classify_s0_oracle, pushforward)


def test_pushforward_formula():
    mt = generate(GenSpec(k=2, r=2, seed=1, family="blowup_generic"))
    m = pushforward(mt)
    assert m.a1 == mt.d @ mt.a1
    assert m.a2 == mt.d @ mt.a2
    assert m.b == mt.d @ mt.b
    assert m.c == mt.c


def test_pushforward_defect_identity_raw():
    """defect(pushforward) = d . blowup_defect for every raw tuple."""
    for mt in raw_blowup_tuples(40, seed=60):
        assert integrability_defect(pushforward(mt)) == mt.d @ blowup_defect(mt)


def test_pushforward_of_valid_is_integrable():
    for fam in ("blowup_zero_d", "blowup_generic"):
        for mt in family_instances(fam, 5, seed=61):
            assert is_integrable(pushforward(mt))


def test_classify_zero_d_family_is_s0():
    for mt in family_instances("blowup_zero_d", 6, seed=62):
        rep = classify_s0(mt)
        assert rep.is_s0
        assert rep.witness is None
        assert dict(rep.nilpotency) == {"da1": 1, "da2": 1}
        assert rep.krylov_dim == 0
        assert classify_s0_oracle(mt, 2 * mt.k)


def test_classify_witness_non_nilpotent():
    # d = a1 = identity makes d a1 = 1, clearly not nilpotent
    mt = MonadDataBlowup(Matrix.identity(2), Matrix.zeros(2, 2),
                         Matrix.identity(2), Matrix.zeros(2, 1),
                         Matrix.zeros(1, 2))
    rep = classify_s0(mt)
    assert not rep.is_s0
    assert rep.witness == "da1 not nilpotent"
    assert dict(rep.nilpotency)["da1"] is None
    assert not classify_s0_oracle(mt, 4)


def test_classify_witness_failing_word():
    # d a1 = upper shift, d b = e2, c = e1^T: c (da1) db = 1, shortest word (1,)
    J = Matrix.from_rows([[0, 1], [0, 0]])
    mt = MonadDataBlowup(J, Matrix.zeros(2, 2), Matrix.identity(2),
                         Matrix.from_rows([[0], [1]]),
                         Matrix.from_rows([[1, 0]]))
    rep = classify_s0(mt)
    assert not rep.is_s0
    assert rep.witness == (1,)
    assert dict(rep.nilpotency) == {"da1": 2, "da2": 1}
    assert not classify_s0_oracle(mt, 4)


def test_classify_witness_empty_word():
    # c b != 0 already: the empty word is the witness
    mt = MonadDataBlowup(Matrix.zeros(1, 1), Matrix.zeros(1, 1),
                         Matrix.identity(1), Matrix.from_rows([[1]]),
                         Matrix.from_rows([[1]]))
    rep = classify_s0(mt)
    assert not rep.is_s0
    assert rep.witness == ()


def test_classifier_matches_oracle_on_families():
    for fam in ("blowup_zero_d", "blowup_generic", "invalid_integrability"):
        for mt in family_instances(fam, 10, seed=63):
            assert classify_s0(mt).is_s0 == classify_s0_oracle(mt, 2 * mt.k)


def test_classifier_matches_oracle_on_raw():
    for mt in raw_blowup_tuples(30, seed=64, kmax=3):
        assert classify_s0(mt).is_s0 == classify_s0_oracle(mt, 2 * mt.k)


def test_classification_is_group_invariant():
    from monadcalc.blowup import act2
    r_ = rng(65)
    for mt in family_instances("blowup_generic", 5, seed=66):
        verdict = classify_s0(mt).is_s0
        for _ in range(4):
            g0 = random_invertible(r_, mt.k)
            g1 = random_invertible(r_, mt.k)
            assert classify_s0(act2(g0, g1, mt)).is_s0 == verdict


def test_charge_label():
    # diag points away from origin: all charge in free points
    m = pushforward(generate(GenSpec(k=2, r=1, seed=2, family="blowup_zero_d")))
    # concentrated instance: all points at the origin after reduction
    mc = generate(GenSpec(k=3, r=2, seed=3, family="block_concentrated"))
    lab = charge_label(mc)
    assert isinstance(lab, ChargeLabel)
    assert lab.total_charge == 3
    assert lab.bundle_charge_l + lab.points_at_origin + lab.points_elsewhere == 3
    assert lab.points_elsewhere == 0  # concentration pins everything at 0
