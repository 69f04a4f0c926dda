"""The planar quotient: projecting SL(2) by rotation conjugacy.

Conjugation by SO(2) is an isometry of the sub-Riemannian structure fixing
the identity; the invariants x = (a+d)/2 and y = (b-c)/2 identify the orbit
space with the closed exterior of the unit disc.

Run:  python demos/02_quotient_plane.py
"""
import math

import numpy as np

from sl2geo import (christoffel, exp2, basis, project, pushforward_frame,
                    quotient_metric, recover_rotation, rotation)

np.set_printoptions(precision=6, suppress=True)
A0, A1, A2 = basis()

x = np.array([[2.0, 1.0], [1.0, 1.0]])
p = project(x)
print("X =\n", x)
print("projects to", p, "->", p.stratum, "stratum")

k = rotation(0.6)
print("\nConjugating by a rotation does not move the class:")
print("project(K X K^T) =", project(k @ x @ k.T))

print("\nGiven two members of one class, the aligning rotation is recovered")
print("from the double-angle action on the symmetric parts:")
rec = recover_rotation(x, k @ x @ k.T)
print("K_recovered =\n", rec.matrix)
print("(equals the original up to overall sign; unique flag:", rec.unique, ")")

print("\nRotations themselves sit on the unit circle (the singular stratum),")
print("where the whole group fixes the class:")
print("project(rotation(0.6)) =", project(rotation(0.6)))

print("\nOn the regular part, the pushforwards of the horizontal frame are")
print("orthonormal for the conformal metric 4/(x^2+y^2-1) (dx^2+dy^2):")
f1, f2 = pushforward_frame(x)
w = quotient_metric(p)[0, 0]
print("pi_* f1 =", f1, " pi_* f2 =", f2)
print("norms:", w * (f1.dx**2 + f1.dy**2), w * (f2.dx**2 + f2.dy**2),
      " inner:", w * (f1.dx * f2.dx + f1.dy * f2.dy))

print("\nChristoffel symbols at", p, "(upper index first):")
print(christoffel(p))
