"""Monad data on the projective plane.

A tuple (a1, a2, b, c) with [a1, a2] + b c = 0 encodes a framed
torsion-free sheaf on P^2 of rank r and charge k.  This script shows
validation, the symbolic monad identity, the GL(W) action, and the
special-subspace test for nondegeneracy.
"""

from monadcalc import (GenSpec, IntegrabilityViolation, Matrix, MonadDataP2,
                       ProjectivePoint, act, evaluate_A, evaluate_B,
                       fiber_dimension, generate, integrability_defect,
                       is_nondegenerate, max_c_special, min_b_special,
                       symbolic_monad_product, validate_p2)
from monadcalc.generate import random_invertible
import random

# A valid instance from the seeded generator: commuting diagonal pair
# scrambled by a group element.
m = generate(GenSpec(k=2, r=2, seed=3, family="block_concentrated"))
validate_p2(m)
print(f"generated instance: k = {m.k}, r = {m.r}, defect = 0")

# The defining identity: B A = ([a1,a2] + b c) x3^2 for *every* raw
# tuple.  For valid data the product is the zero polynomial, so kernels
# modulo images make sense at every point of P^2.
print("symbolic B*A of the valid instance:", symbolic_monad_product(m))

p = ProjectivePoint(1, 2, 3)
print("B(p) A(p) is zero:", (evaluate_B(m, p) @ evaluate_A(m, p)).is_zero())
print("fiber dimension at a generic point:", fiber_dimension(m, p))

# A deliberately broken tuple: the validator reports the exact defect.
bad = MonadDataP2(Matrix.from_rows([[0, 1], [0, 0]]),
                  Matrix.from_rows([[0, 0], [1, 0]]),
                  Matrix.zeros(2, 1), Matrix.zeros(1, 2))
try:
    validate_p2(bad)
except IntegrabilityViolation as exc:
    print("\nbroken tuple rejected; defect =", exc.defect)

# The GL(W) action conjugates a1, a2 and rescales b, c; the defect is
# conjugated along, so validity is preserved.
g = random_invertible(random.Random(0), m.k)
mg = act(g, m)
print("\nafter a group action, defect still zero:",
      integrability_defect(mg).is_zero())

# Nondegeneracy via special subspaces: the smallest invariant subspace
# containing Im b must be everything, the largest inside Ker c nothing.
m1 = generate(GenSpec(k=1, r=2, seed=0, family="charge_one"))
print("\ncharge_one instance: min b-special dim =", min_b_special(m1).dim,
      ", max c-special dim =", max_c_special(m1).dim,
      ", nondegenerate =", is_nondegenerate(m1))
print("block_concentrated instance nondegenerate?", is_nondegenerate(m))
