"""The transversally elliptic operator on the two-sphere.

A rank-2 bundle over the sphere, with the circle acting by double-speed
rotation about the axis.  The operator is elliptic away from the equator,
and its index multiplicities localize to the two poles.  The south pole
chart reverses both surface and circle orientation; the file encodes the
circle reversal as group_sign = -1.
"""
from transverse_index import (
    gen_sphere_operator,
    point_spectrum,
    total_spectrum,
    transverse_index,
)

setup = gen_sphere_operator()

print("index multiplicity per character n (expected: odd n give sign(n)):")
for n in range(-9, 10):
    value = transverse_index(setup, (n,)).value
    marker = "" if value == 0 else "  <--"
    print(f"  n = {n:+d}: {value:+d}{marker}")

print()
print("model spectrum at the north pole, character n = -3, up to 20:")
north = setup.points[0]
for lam, mult in point_spectrum(north, (-3,), setup.tau, 20).entries:
    print(f"  lambda = {lam}: multiplicity {mult}")

print()
print("both poles together, character n = 1, up to 8:")
for lam, mult in total_spectrum(setup, (1,), 8).entries:
    print(f"  lambda = {lam}: multiplicity {mult}")
print("the zero modes (lambda = 0) are exactly the kernel contributions")
