"""From torus multiplicities to SU(2) multiplicities.

The quotient of SU(2) by its maximal torus is a two-sphere.  The de Rham
operator there has SU(2) multiplicity 2 in the trivial representation and 0
elsewhere; the branching table recovers this from four torus indices per
representation.
"""
from transverse_index import (
    InfiniteMultiplicity,
    apply_branching,
    gen_su2_mod_t,
    su2_beta,
    su2_index,
)

print("branching coefficients beta_n^b for small n:")
for n in range(4):
    table = su2_beta(n)
    rows = ", ".join(f"b={b[0]:+d}: {beta}" for b, beta in sorted(table.coefficients.items()))
    print(f"  n = {n}: {rows}")

print()
setup = gen_su2_mod_t("deRham")
print("SU(2) multiplicities of the de Rham operator on the quotient sphere:")
for n in range(6):
    print(f"  n = {n}: {su2_index(setup, n)}")

print()
print("the finiteness guard: the zero operator has infinite even sectors")
torus_with_infinities = lambda b: None if b[0] % 2 == 0 else 0
try:
    apply_branching(su2_beta(2), torus_with_infinities)
except InfiniteMultiplicity as exc:
    print(f"  refused as expected: {exc}")
