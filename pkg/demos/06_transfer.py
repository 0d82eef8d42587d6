# Transfers for finite G-coverings and the four axioms.
import random

from bredon import (
    GSet,
    builtin_group,
    builtin_space,
    builtin_system,
    check_axioms,
    transfer,
)
from bredon.fgroups import gamma, pushforward_G
from bredon.homology import chain_complex, homology, induced_map
from bredon.transfer import (
    GCovering,
    random_covering,
    random_covering_over,
    random_map_into,
    simplicial_trivial_covering,
    transfer_chain_map,
)

G = builtin_group("Z2")
M = builtin_system("fixed_point", G)

# the free orbit over a point: p_* t is multiplication by 2
p = GCovering(GSet(G, [[0, 1], [1, 0]]), GSet(G, [[0], [0]]), [0, 0])
v = gamma(M, p.base_plus, [1], 0)
print("t(v) =", transfer(p, M)(v))
print("p_* t(v) =", pushforward_G(p.proj_plus, transfer(p, M)(v)))

# random coverings, pullback squares and composites over S3
S3 = builtin_group("S3")
rng = random.Random(1)
R = builtin_system("regular", S3)
covs = [random_covering(S3, rng, n) for n in (2, 3)]
squares = [(c, random_map_into(c.base, rng)) for c in covs]
comps = [(random_covering_over(c.total, rng, 2), c) for c in covs]
print(check_axioms(R, covs, squares, comps))

# zero_transfer is not homological, so p_* t = n is only flagged
print(check_axioms(builtin_system("zero_transfer", G), [p]))

# levelwise transfer on a simplicial double cover of a circle
Z3 = builtin_group("Z3")
X = builtin_space("circle_rotation", Z3, n=3)
cover = simplicial_trivial_covering(X, 2)
C = builtin_system("constant", Z3)
CX, CE = chain_complex(X, C), chain_complex(cover.total, C)
T = transfer_chain_map(cover, C, CX, CE)
P = induced_map(cover.map, C, CE, CX)
print("H_1 of base:", homology(CX).group_string(1), " of cover:", homology(CE).group_string(1))
print("p_* t on C_1:", C.ring.matmul(P[1], T[1]).tolist())
