"""The compact sibling: SU(2) geodesics in the unit disc and the parameter
bridge that matches landing points across the two quotients.

Run:  python demos/05_su2_correspondence.py   (writes su2.svg)
"""
import math

from sl2geo import (c_of_omega, landing_match_error, landing_point,
                    reachable_boundary, su2_landing_point, su2_landing_time,
                    su2_planar_geodesic)
from sl2geo.figures import figure_su2

print("SU(2) planar geodesics live inside the unit disc; omega = 0 crosses")
print("it diametrically:")
for s in (0.0, 1.0, 2.0, math.pi):
    print(f"  s = {s:5.3f}: point = {su2_planar_geodesic(0.0, s)}")

print("\nEach omega lands on the circle at s = pi/sqrt(1+omega^2):")
for omega in (0.0, 1.0, -2.5, 6.0):
    t_land = su2_landing_time(omega)
    print(f"  omega = {omega:+5.2f}: lands at {su2_landing_point(omega)}"
          f"  after s = {t_land:.4f}")

print("\nThe bridge c(omega) picks the landing geodesic of the other")
print("quotient ending at the same circle point:")
print(f"{'omega':>8} {'c(omega)':>12} {'landing match':>16}")
for omega in (-4.0, -1.0, 0.0, 1.0, 4.0):
    c = c_of_omega(omega)
    print(f"{omega:8.2f} {c:12.6f} {landing_match_error(omega):16.3e}")
print("(omega = 0 pairs with c = -2/sqrt(3) =", -2.0 / math.sqrt(3.0), ")")
lp = landing_point(c_of_omega(1.0))
print("e.g. omega = 1 and c =", c_of_omega(1.0), "both land at",
      (lp.x, lp.y))

print("\nReachable sets at fixed time are swept by varying omega; their")
print("boundaries stay inside the closed disc:")
for s in (0.5, 1.5, 3.0):
    pts = reachable_boundary(s, 9)
    worst = max(x * x + y * y for x, y in pts)
    print(f"  s = {s}: 9-point boundary sample, max radius^2 = {worst:.6f}")

with open("su2.svg", "w", encoding="utf-8") as handle:
    handle.write(figure_su2())
print("\nwrote su2.svg (geodesics in blue, reachable boundaries in red)")
