# Coefficient systems and Mackey functors on O(G).
from bredon import QQ, builtin_group, builtin_system, fixed_point_mackey, is_homological
from bredon.coefficients import BUILTIN_SYSTEMS

G = builtin_group("S3")

# each builtin is validated on every composable pair of the orbit category
for name in BUILTIN_SYSTEMS:
    M = builtin_system(name, G)
    ranks = [M.rank(H) for H in G.subgroups]
    print(f"{name:14s} ranks {ranks}  valid={M.validate().ok}  homological={is_homological(M)}")

# fixed points of a representation: M(G/H) = V^H, projections are sums over cosets
Z2 = builtin_group("Z2")
sign = fixed_point_mackey(Z2, [[[1]], [[-1]]])
print("sign rep: M(G/G) has rank", sign.rank(Z2.whole), "and g acts on M(G/e) by",
      sign.translate(1, Z2.trivial_subgroup).tolist())

# restriction after projection is the index, which is what "homological" means
M = builtin_system("constant", G, QQ)
PR = QQ.matmul(M.project(G.trivial_subgroup, G.whole), M.restrict(G.trivial_subgroup, G.whole))
print("project after restrict for e < S3:", [[str(x) for x in row] for row in PR.tolist()])

# zero_transfer kills the contravariant maps, so the identity fails off the trivial group
print("zero_transfer homological?", is_homological(builtin_system("zero_transfer", G)))
