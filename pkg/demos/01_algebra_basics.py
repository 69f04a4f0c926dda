"""Tour of the sl(2) algebra layer: basis, brackets, metric, exponentials.

Run:  python demos/01_algebra_basics.py
"""
import math

import numpy as np

from sl2geo import adjoint_matrix, basis, bracket, exp2, metric_g

np.set_printoptions(precision=6, suppress=True)

A0, A1, A2 = basis()

print("The three basis elements of sl(2):")
for name, a in (("A0", A0), ("A1", A1), ("A2", A2)):
    print(f"{name} =\n{a}")

print("\nBracket table ([A0,A1], [A0,A2], [A1,A2]):")
print(bracket(A0, A1), "\n")
print(bracket(A0, A2), "\n")
print(bracket(A1, A2))
print("... which is -A2, A1, A0: the rotation direction A0 acts on the")
print("horizontal plane span{A1, A2}, and horizontal brackets close back")
print("onto A0 (the bracket-generating condition).")

print("\nThe metric g(B, C) = 2 Tr(B C^T) makes the basis orthonormal:")
gram = np.array([[metric_g(x, y) for y in (A0, A1, A2)] for x in (A0, A1, A2)])
print(gram)

print("\nExponentials: A0 generates rotations (by half the parameter),")
print("A1 and A2 generate symmetric boosts:")
print("exp(pi A0) =\n", exp2(math.pi * A0))
print("exp(A1) =\n", exp2(A1))

print("\ndet(exp(M)) = 1 always; a random sample:")
rng = np.random.default_rng(1)
m = (rng.normal() * A0 + rng.normal() * A1 + rng.normal() * A2)
print("M =\n", m)
print("det(exp(M)) =", np.linalg.det(exp2(m)))

print("\nAdjoint matrices ad_A in the basis (columns are images):")
print("ad_A0 =\n", adjoint_matrix(A0))
print("These satisfy ad_[A,B] = [ad_A, ad_B]; the (1,2)-signature inner")
print("product they preserve is what section demos/06 builds on.")
