# Reduced Bredon homology of small simplicial G-sets, checked against
# ordinary homology of the orbit space and of the underlying space.
from bredon import (
    ZZ,
    bredon_homology,
    builtin_group,
    builtin_space,
    builtin_system,
    chain_complex,
)
from bredon.linalg import rank
from bredon.oracles import run_oracles
from bredon.spaces import DEFAULT_GROUPS

for name in ("s0_trivial", "circle_reflection", "circle_antipodal", "sphere2_antipodal", "triangle_dihedral"):
    G = builtin_group(DEFAULT_GROUPS[name])
    K = builtin_space(name, G)
    print(f"== {name} over {G.name}: cells per dimension {K.counts}")
    for sysname in ("constant", "linearization", "fixed_point"):
        H = bredon_homology(K, builtin_system(sysname, G))
        print(f"   {sysname:13s}", ", ".join(f"H~{q}={H.group_string(q)}" for q in range(len(H.betti))))
    for row in run_oracles(K):
        print(f"   oracle {row['check']:16s} {'ok' if row['ok'] else 'MISMATCH'}")

# the chain complex itself: one block per orbit of nondegenerate cells
G = builtin_group("Z2")
C = chain_complex(builtin_space("sphere2_antipodal", G), builtin_system("constant", G))
print("dims of C_q for RP^2 (plus a basepoint):", [C.dim(q) for q in range(C.top + 1)])
D1 = C.differential(1)
print("D_1 is", D1.shape, "with rank", rank(D1, ZZ))
