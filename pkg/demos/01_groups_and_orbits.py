# Finite groups, their subgroup lattices and the orbit category O(G).
from bredon import OrbitCategory, builtin_group, symmetric_group
from bredon.orbits import (
    canonical_projection,
    compose,
    factor,
    hom_set,
    right_translation,
)

S3 = symmetric_group(3)
print(S3, "order", S3.order)

# subgroups come out sorted by order, trivial first and the whole group last
for H in S3.subgroups:
    print("  subgroup of order", H.order, sorted(H))

# morphisms G/H -> G/K exist iff H is subconjugate to K
e, A3 = S3.trivial_subgroup, next(H for H in S3.subgroups if H.order == 3)
print("|Hom(G/A3, G/A3)| =", len(hom_set(A3, A3)))  # the Weyl group Z/2
print("|Hom(G/e, G/e)|   =", len(hom_set(e, e)))    # all of S3

# every morphism is a projection followed by a right translation
t12 = S3.permutations.index((1, 0, 2))
H = S3.subgroup([0, t12])
f = compose(right_translation(2, H), canonical_projection(e, H))
q, R = factor(f)
print("factor:", q, "then", R)

O = OrbitCategory(S3)
d = O.to_dict()
print(len(d["objects"]), "orbits,", sum(map(sum, d["hom_sizes"])), "morphisms,",
      len(d["generators"]), "generators")

# the trivial group has a one-object, one-arrow orbit category
print(OrbitCategory(builtin_group("trivial")).to_dict()["hom_sizes"])
