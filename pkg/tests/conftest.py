"""Shared helpers for the test suite: deterministic RNGs and instances."""

import random

from monadcalc.generate import (GenSpec, generate, random_raw_blowup,
                                random_raw_p2)

# (family, k, r) combinations that every family-level test cycles through.
P2_SHAPES = {
    "charge_one": [(1, 2), (1, 3)],
    "commuting_points": [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)],
    "block_concentrated": [(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (4, 3)],
}
BLOWUP_SHAPES = {
    "blowup_zero_d": [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)],
    "blowup_generic": [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)],
    "invalid_integrability": [(1, 1), (2, 1), (3, 2), (4, 3)],
}


def rng(seed=0):
    return random.Random(seed)


def family_instances(family, count, seed=0):
    """`count` deterministic instances of a family, cycling its shapes."""
    shapes = (P2_SHAPES.get(family) or BLOWUP_SHAPES[family])
    out = []
    for t in range(count):
        k, r = shapes[t % len(shapes)]
        out.append(generate(GenSpec(k=k, r=r, seed=seed + t, family=family)))
    return out


def raw_p2_tuples(count, seed=0, kmax=4, rmax=3):
    r_ = rng(seed)
    return [random_raw_p2(r_, r_.randint(0, kmax), r_.randint(1, rmax))
            for _ in range(count)]


def raw_blowup_tuples(count, seed=0, kmax=4, rmax=3):
    r_ = rng(seed)
    return [random_raw_blowup(r_, r_.randint(0, kmax), r_.randint(1, rmax))
            for _ in range(count)]
