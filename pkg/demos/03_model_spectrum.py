"""Model-operator spectra and the two multiplicity modes.

Each eigenvalue is 2 * sum kappa_l * c_l for a nonnegative integer vector c,
so it is a linear function of the slope vector.  A rational slope can make
two different linear functions collide numerically.  The generic mode keys
eigenvalues by the function itself (an integer vector); the numeric mode
reports what a measurement at this particular slope would see.
"""
from transverse_index import fixed_point, point_spectrum, slope

# two tangent planes spinning at the same speed: an isotropic oscillator
point = fixed_point("iso", [(1, 0), (0, 1)], [((0, 0), 1, (-1, -1))])
tau = slope([1, 1])

print("isotropic oscillator, trivial character, eigenvalues up to 12:")
for mode in ("generic", "numeric"):
    table = point_spectrum(point, (0, 0), tau, 12, mode=mode)
    rows = ", ".join(f"{lam}:{mult}" for lam, mult in table.entries)
    print(f"  {mode:>8}: {rows}")
print("numeric rows are sums of the generic rows with equal value")

print()
print("a slope that separates the two planes removes the collisions:")
tau = slope([1, "5/2"])
for mode in ("generic", "numeric"):
    table = point_spectrum(point, (0, 0), tau, 12, mode=mode)
    rows = ", ".join(f"{lam}:{mult}" for lam, mult in table.entries)
    print(f"  {mode:>8}: {rows}")
