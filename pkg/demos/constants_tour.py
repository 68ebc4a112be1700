"""Tour of the gamma-indexed constant family.

Prints the constants across the moment order gamma, locates the crossover
where the interpolated bound overtakes the single-state route, and shows
the dual (closed-form vs quadrature) routes for the Theta weights agreeing.
"""

from lt_spectral.constants import (ThetaParams, constants_row, crossover,
                                   density_constants, theta_weight)

print("constant family (gamma, classical, LT, GGM, one-state, star, double-star):")
for i in range(7):
    gamma = 0.9 + 0.1 * i
    row = constants_row(gamma)
    dstar = f"{row.L_dstar:.6f}" if row.L_dstar is not None else "   --   "
    print(f"  {gamma:.2f}  {row.L_cl:.6f}  {row.L_LT:.6f}  {row.L_GGM:.6f}"
          f"  {row.L_one:.6f}  {row.L_star:.6f}  {dstar}")

g = crossover()
print(f"\ncrossover: the interpolated constant overtakes at gamma = {g:.6f}")

k32, k11 = density_constants()
print(f"dual density constants: K_3/2 = {k32:.6f}, K_1 = {k11:.6f}")

print("\nTheta weight, closed form vs quadrature:")
for eta in (0.25, 0.5, 0.75):
    p = ThetaParams(eta, 1.0, 2.0)
    c = theta_weight(p, "closed")
    n = theta_weight(p, "numeric")
    print(f"  eta = {eta:.2f}: closed {c:.12f}, numeric {n:.12f},"
          f" rel dev {abs(c - n) / c:.2e}")
