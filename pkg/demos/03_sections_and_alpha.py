# The section groups F(S, M), their orbit quotients F^G(S, M) and the map alpha.
from bredon import GF, QQ, GSet, builtin_group, constant_system
from bredon.fgroups import (
    alpha,
    alpha_inverse,
    beta,
    fg_basis,
    gamma,
    generator,
    iota,
    is_fixed,
    matrix_of,
)
from bredon.gsets import add_basepoint
from bredon.linalg import nullspace

G = builtin_group("Z2")
S = add_basepoint(GSet(G, [[0, 1], [1, 0]]))  # a free orbit plus a basepoint

M = constant_system(G)
u = generator(M, S, [3], 1)
print("u =", u)
print("beta(u) =", beta(u))             # moved to the orbit representative 0
print("iota(beta(u)) =", iota(beta(u)))  # the fixed section summing over the orbit
print("fixed?", is_fixed(iota(beta(u))))

# alpha = beta o iota is multiplication by the orbit size on free orbits
v = gamma(M, S, [1], 0)
print("alpha(v) =", alpha(v))

# invertible once |G| is a unit ...
MQ = constant_system(G, QQ)
w = gamma(MQ, S, [1], 0)
print("over Q: alpha^-1 alpha(w) == w:", alpha_inverse(alpha(w)) == w)

# ... but over F2 it has a kernel
M2 = constant_system(G, GF(2))
basis = fg_basis(M2, S)
A = matrix_of(alpha, M2, S, S, basis, basis)
print("over F2 alpha =", A.tolist(), "kernel dim", nullspace(A, GF(2)).shape[1])
