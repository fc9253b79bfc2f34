"""Exact checks of the unit-circle identities on random rational points."""

import random

from geoforge import identities as I
from geoforge.numeric import GaussianRational as G, norm_sq

anchor = I.UnimodularTriple(G(1), G(0, 1), G(-1))
s, p, n = I.sigma(anchor), I.pi_product(anchor), I.ext_numerator(anchor)
print(f"alpha, beta, gamma = 1, i, -1")
print(f"sigma = {s}, Pi = {p}, N = {n}")
print(f"|N|^2 = {norm_sq(n)} = |Pi|^2 + |sigma|^2 = {norm_sq(p)} + {norm_sq(s)}")

perm = I.permutation_behavior(anchor)
print("\nN/Pi under even permutations:", perm.even_value)
print("N/Pi under odd permutations: ", perm.odd_value)
print("same modulus everywhere:", perm.norm_invariant)

# points on the unit circle with rational coordinates come from t -> ((1-t^2) + 2ti)/(1+t^2)
rng = random.Random(5)
tr = I.random_unimodular_triple(rng)
print("\na random triple:", *tr)
print("norm identity holds:", I.check_norm_identity(tr))

summary = I.fuzz_identities(2000, seed=1)
print("\n" + summary.summary_line())
