# Fixed subcomplexes, orbit quotients, wedges and the H_0 statements.
from bredon import (
    bredon_homology,
    builtin_group,
    builtin_space,
    builtin_system,
    fixed_subcomplex,
    orbit_quotient,
    wedge,
)
from bredon.homology import unreduced_homology

G = builtin_group("Z2")
K = builtin_space("circle_reflection", G)
print("circle with a reflection:", K.counts, "cells")
print("  fixed points:", fixed_subcomplex(K, G.whole).counts)
print("  orbit space :", orbit_quotient(K).counts)

# X^G is two points here, so a fixed point alone does not pin down H_0
F = builtin_system("fixed_point", G)
print("  H~_0 with fixed-point coefficients:", bredon_homology(K, F).group_string(0))

# with connected fixed sets, H_0 is M(G/G) and the reduced group vanishes
I = builtin_space("interval_reflection", G)
for sysname in ("constant", "fixed_point", "regular"):
    M = builtin_system(sysname, G)
    print(f"interval, {sysname:11s}: H_0 = {unreduced_homology(I, M).group_string(0)}, "
          f"H~_0 = {bredon_homology(I, M).group_string(0)}, M(G/G) has rank {M.rank(G.whole)}")

# the wedge axiom
L = builtin_space("sphere2_antipodal", G)
W, i, j = wedge(K, L)
M = builtin_system("linearization", G)
print("H(K v L)   =", bredon_homology(W, M).to_json()["H"])
print("H(K)+H(L)  =", (bredon_homology(K, M) + bredon_homology(L, M)).to_json()["H"])
