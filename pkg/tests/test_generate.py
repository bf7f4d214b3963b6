"""Seeded instance families: determinism and declared properties."""

import pytest

from monadcalc import jsonio
from monadcalc.blowup import blowup_defect, is_valid, surjectivity_corank
from monadcalc.errors import InfeasibleSpec
from monadcalc.generate import (FAMILIES, GenSpec, generate,
                                random_raw_blowup, random_raw_p2)
from monadcalc.p2 import (is_integrable, is_concentrated_at_origin,
                          is_nondegenerate, validate_p2)
from monadcalc.stratify import classify_s0

SHAPES = {
    "charge_one": (1, 2),
    "commuting_points": (3, 2),
    "block_concentrated": (3, 2),
    "blowup_zero_d": (2, 1),
    "blowup_generic": (3, 2),
    "invalid_integrability": (2, 1),
}


def test_determinism_bit_identical():
    for family, (k, r) in SHAPES.items():
        spec = GenSpec(k=k, r=r, seed=123, family=family)
        assert jsonio.dumps(generate(spec)) == jsonio.dumps(generate(spec))


def test_different_seeds_differ():
    a = generate(GenSpec(k=3, r=2, seed=1, family="blowup_generic"))
    b = generate(GenSpec(k=3, r=2, seed=2, family="blowup_generic"))
    assert jsonio.dumps(a) != jsonio.dumps(b)


def test_charge_one_properties():
    for seed in range(6):
        m = generate(GenSpec(k=1, r=3, seed=seed, family="charge_one"))
        validate_p2(m)
        assert is_nondegenerate(m)
        assert not m.b.is_zero() and not m.c.is_zero()


def test_commuting_points_properties():
    for seed in range(6):
        m = generate(GenSpec(k=3, r=2, seed=seed, family="commuting_points"))
        validate_p2(m)
        assert (m.a1 @ m.a2 - m.a2 @ m.a1).is_zero()


def test_block_concentrated_properties():
    for seed in range(6):
        for k, r in ((1, 1), (2, 1), (3, 2), (4, 3)):
            m = generate(GenSpec(k=k, r=r, seed=seed,
                                 family="block_concentrated"))
            validate_p2(m)
            assert is_concentrated_at_origin(m)


def test_blowup_zero_d_properties():
    for seed in range(6):
        mt = generate(GenSpec(k=2, r=2, seed=seed, family="blowup_zero_d"))
        assert is_valid(mt)
        assert classify_s0(mt).is_s0


def test_blowup_generic_properties():
    for seed in range(6):
        mt = generate(GenSpec(k=3, r=2, seed=seed, family="blowup_generic"))
        assert is_valid(mt)


def test_invalid_integrability_properties():
    for seed in range(6):
        mt = generate(GenSpec(k=2, r=1, seed=seed,
                              family="invalid_integrability"))
        assert not blowup_defect(mt).is_zero()
        # surjectivity is left intact; only integrability is broken
        assert surjectivity_corank(mt) == 0


def test_infeasible_specs():
    with pytest.raises(InfeasibleSpec):
        GenSpec(k=2, r=1, seed=0, family="no_such_family")
    with pytest.raises(InfeasibleSpec):
        GenSpec(k=-1, r=1, seed=0, family="charge_one")
    with pytest.raises(InfeasibleSpec):
        GenSpec(k=2, r=1, seed=0, family="not_listed")
    with pytest.raises(InfeasibleSpec):
        generate(GenSpec(k=2, r=2, seed=0, family="charge_one"))
    with pytest.raises(InfeasibleSpec):
        generate(GenSpec(k=1, r=1, seed=0, family="charge_one"))
    with pytest.raises(InfeasibleSpec):
        generate(GenSpec(k=0, r=1, seed=0, family="invalid_integrability"))


def test_raw_tuple_helpers_shapes():
    import random
    r_ = random.Random(0)
    m = random_raw_p2(r_, 3, 2)
    assert (m.k, m.r) == (3, 2)
    mt = random_raw_blowup(r_, 2, 1)
    assert (mt.k, mt.r) == (2, 1)
    # raw tuples are generically non-integrable
    assert not is_integrable(random_raw_p2(r_, 3, 2))


def test_family_list_stable():
    assert FAMILIES == ("charge_one", "commuting_points", "block_concentrated",
                        "blowup_zero_d", "blowup_generic",
                        "invalid_integrability")
