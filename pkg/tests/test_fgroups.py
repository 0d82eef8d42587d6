import itertools
import random

import pytest
from generators import (
    groups,
    random_felement,
    random_fgelement,
    random_pointed_gset,
    random_pointed_map,
    random_system,
)

from bredon.coefficients import builtin_system, constant_system, fixed_point_mackey
from bredon.errors import BasepointGenerator, RankMismatch
from bredon.fgroups import (
    FElement,
    FGElement,
    alpha,
    alpha_inverse,
    beta,
    fg_basis,
    g_act,
    gamma,
    generator,
    iota,
    is_fixed,
    matrix_of,
    pushforward,
    pushforward_G,
    zero,
)
from bredon.groups import builtin_group, cyclic_group, trivial_group
from bredon.gsets import GSet, PointedGMap, PointedGSet, add_basepoint
from bredon.linalg import solve
from bredon.rings import GF, ZZ


def free_plus(G):
    return add_basepoint(GSet(G, [[G.mul(g, x) for x in G.elements] for g in G.elements]))


def test_generator_rules():
    G = cyclic_group(2)
    S = free_plus(G)
    M = constant_system(G)
    assert generator(M, S, [0], 0).is_zero()
    with pytest.raises(BasepointGenerator):
        generator(M, S, [1], S.basepoint)
    with pytest.raises(RankMismatch):
        generator(M, S, [1, 2], 0)
    u = generator(M, S, [1], 0) + generator(M, S, [1], 1)
    assert len(u.support) == 2


def test_g_act_examples():
    G = cyclic_group(2)
    S = free_plus(G)
    C = constant_system(G)
    u = generator(C, S, [5], 0)
    assert g_act(0, u) == u
    assert g_act(1, u) == generator(C, S, [5], 1)
    sign = fixed_point_mackey(G, [[[1]], [[-1]]])
    assert g_act(1, generator(sign, S, [1], 0)) == generator(sign, S, [-1], 1)


def test_pushforward_examples():
    G = trivial_group()
    S = PointedGSet(G, [[0, 1, 2]], 2)
    T = PointedGSet(G, [[0, 1]], 1)
    M = constant_system(G)
    u = generator(M, S, [2], 0) + generator(M, S, [3], 1)
    assert pushforward(PointedGMap.identity(S), u) == u
    collapse = PointedGMap(S, T, [1, 1, 1])
    assert pushforward(collapse, u).is_zero()
    merge = PointedGMap(S, T, [0, 0, 1])
    assert pushforward(merge, u) == generator(M, T, [5], 0)


def test_pushforward_merge_with_projection():
    # Z2 free orbit collapsing onto a fixed point: M_*(G/e ->> G/G) is applied
    G = cyclic_group(2)
    S = free_plus(G)
    T = PointedGSet(G, [[0, 1], [0, 1]], 1)
    M = builtin_system("fixed_point", G)
    f = PointedGMap(S, T, [0, 0, 1])
    u = generator(M, S, [1], 0) + generator(M, S, [1], 1)
    assert pushforward(f, u) == generator(M, T, [4], 0)


def test_alpha_examples():
    T = trivial_group()
    S = PointedGSet(T, [[0, 1]], 1)
    M = constant_system(T)
    v = gamma(M, S, [3], 0)
    assert alpha(v) == v
    G = cyclic_group(2)
    S = free_plus(G)
    M3 = constant_system(G, GF(3))
    v = gamma(M3, S, [1], 0)
    assert alpha(v) == gamma(M3, S, [2], 0)
    assert alpha_inverse(alpha(v)) == v
    MZ = constant_system(G)
    A = matrix_of(alpha, MZ, S, S, fg_basis(MZ, S), fg_basis(MZ, S))
    assert A[0, 0] == 2
    assert solve(A, (1,), ZZ) is None


def test_beta_on_representative_and_surjective():
    G = builtin_group("S3")
    rng = random.Random(3)
    S = random_pointed_gset(G, rng, 4)
    M = builtin_system("regular", G)
    for r, _ in S.orbits():
        if r == S.basepoint:
            continue
        l = [rng.randint(-2, 2) for _ in range(M.rank(S.isotropy(r)))]
        assert beta(generator(M, S, l, r)) == FGElement(M, S, {r: l})


@pytest.mark.parametrize("G", groups(("Z2", "Z3", "Z4", "V4", "S3")), ids=lambda G: G.name)
def test_structural_identities(G):
    rng = random.Random(G.order * 7 + 1)
    for _ in range(25):
        M = random_system(G, rng, ZZ)
        S, T, U = (random_pointed_gset(G, rng) for _ in range(3))
        f, h = random_pointed_map(S, T, rng), random_pointed_map(T, U, rng)
        u, w = random_felement(M, S, rng), random_felement(M, S, rng)
        v = random_fgelement(M, S, rng)
        g = rng.choice(G.elements)
        # additivity
        assert beta(u + w) == beta(u) + beta(w)
        assert pushforward(f, u - w) == pushforward(f, u) - pushforward(f, w)
        # naturality square
        assert beta(pushforward(f, u)) == pushforward_G(f, beta(u))
        # functoriality
        fh = f.then(h)
        assert pushforward(fh, u) == pushforward(h, pushforward(f, u))
        assert pushforward_G(fh, v) == pushforward_G(h, pushforward_G(f, v))
        assert pushforward_G(PointedGMap.identity(S), v) == v
        # equivariance
        assert pushforward(f, g_act(g, u)) == g_act(g, pushforward(f, u))
        # the action is an action
        g2 = rng.choice(G.elements)
        assert g_act(g2, g_act(g, u)) == g_act(G.mul(g2, g), u)
        # beta iota = alpha, image of iota = fixed sections
        assert is_fixed(iota(v))
        assert beta(iota(v)) == alpha(v)
        fixed = iota(v)
        restricted = FGElement(M, S, {r: fixed[r] for r, _ in S.orbits() if r != S.basepoint})
        assert iota(restricted) == fixed
        # beta is invariant under the action
        assert beta(g_act(g, u)) == beta(u)


def test_fixed_sections_lie_in_image_of_iota_exhaustive():
    # every section of a small G-set with entries in {-1,0,1}: fixed iff in image(iota)
    G = cyclic_group(2)
    S = free_plus(G)
    M = builtin_system("sign", G)
    for a, b in itertools.product((-1, 0, 1), repeat=2):
        u = FElement(M, S, {0: [a], 1: [b]})
        in_image = iota(FGElement(M, S, {0: [a]})) == u
        assert is_fixed(u) == in_image


def test_zero_and_scaling():
    G = cyclic_group(3)
    S = free_plus(G)
    M = constant_system(G)
    u = generator(M, S, [2], 1)
    assert (u - u) == zero(M, S)
    assert 3 * u == generator(M, S, [6], 1)
    assert -u == generator(M, S, [-2], 1)
