"""Automorphisms of sl(2) as the determinant-one Lorentz group, their
generator factorization, and realization by conjugation on the group.

Run:  python demos/06_lorentz_automorphisms.py
"""
import math

import numpy as np

from sl2geo import (Factorization, assemble, aut_matrix_from_group,
                    classify_structure, factorize, is_lie_automorphism,
                    is_so12, lorentz_boost, lorentz_rotation, realize,
                    rotation)

np.set_printoptions(precision=6, suppress=True)

print("A linear map of sl(2) preserves brackets iff it preserves the")
print("quadratic form diag(-1,1,1) with determinant +1.  Generators:")
print("O(0.8) =\n", lorentz_rotation(0.8))
print("H(1.2) =\n", lorentz_boost(1.2))

m = lorentz_rotation(0.4) @ np.diag([-1.0, 1.0, -1.0]) @ lorentz_boost(-0.9) \
    @ lorentz_rotation(2.1)
print("\nA product O(0.4) I^2 H(-0.9) O(2.1):")
print(m)
print("is_so12:", is_so12(m), " is_lie_automorphism:", is_lie_automorphism(m))

f = factorize(m)
print("\nfactorize recovers the generator data:", f)
print("reassembly error:", np.max(np.abs(assemble(f) - m)))

k = realize(f)
print("\nrealized on the group by K (det", round(float(np.linalg.det(k)), 6),
      "-- the sign tracks the outer coset):")
print(k)
print("conjugation by K induces the same map:",
      np.max(np.abs(aut_matrix_from_group(k) - m)))

print("\nRotation conjugations induce plane rotations of the horizontal")
print("frame:", np.max(np.abs(aut_matrix_from_group(rotation(0.35))
                              - lorentz_rotation(0.7))))

print("\nFrames classify by the sign of the form on their span:")
print("  span{A1, A2}:         ",
      classify_structure((0, 1, 0), (0, 0, 1)).value)
print("  span{A0, A1}:         ",
      classify_structure((1, 0, 0), (0, 1, 0)).value)
print("  boosted horizontal:   ",
      classify_structure(lorentz_boost(1.7)[:, 1], lorentz_boost(1.7)[:, 2]).value)
print("  lightlike direction:  ",
      classify_structure((1, 1, 0), (0, 0, 1)).value)
print("Every automorphic image of the horizontal frame stays elliptic,")
print("which is exactly the class of structures this package solves.")
