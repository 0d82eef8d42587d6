import random

import numpy as np
import pytest
from generators import random_fgelement

from bredon.coefficients import (
    HOMOLOGICAL_BUILTINS,
    builtin_system,
    constant_system,
    fixed_point_mackey,
)
from bredon.errors import GroupMismatch, NotACovering, NotLevelwiseCovering
from bredon.fgroups import FGElement, fg_basis, gamma, matrix_of, pushforward_G
from bredon.groups import builtin_group, cyclic_group, symmetric_group
from bredon.gsets import GMap, GSet, coset_gset, plus, trivial_gset
from bredon.homology import (
    agree_on_homology,
    chain_complex,
    discrete,
    homology,
    induced_map,
)
from bredon.orbits import OrbitCategory
from bredon.simplicial import SimplicialGMap, cell
from bredon.spaces import builtin
from bredon.transfer import (
    GCovering,
    SimplicialCovering,
    check_axioms,
    disjoint_union,
    identity_covering,
    orbit_covering,
    pullback,
    quotient_covering,
    random_covering,
    random_covering_over,
    random_map_into,
    simplicial_trivial_covering,
    transfer,
    transfer_chain_map,
    trivial_covering,
)


def push_matrix(f, M):
    return matrix_of(lambda v: pushforward_G(f, v), M, f.source, f.target,
                     fg_basis(M, f.source), fg_basis(M, f.target))


def free_orbit(G):
    return coset_gset(G, G.trivial_subgroup)


def test_covering_validation():
    G = cyclic_group(2)
    X = trivial_gset(G, 2)
    with pytest.raises(NotACovering):
        GCovering(trivial_gset(G, 3), X, [0, 0, 1])
    with pytest.raises(NotACovering):
        GCovering(trivial_gset(G, 2), X, [0, 0])
    assert trivial_covering(X, 3).n == 3
    assert orbit_covering(next(iter(OrbitCategory(G).morphisms()))).n in (1, 2)


def test_identity_covering_is_identity():
    for G in (cyclic_group(3), symmetric_group(3)):
        X = coset_gset(G, G.subgroups[1]).disjoint_union(free_orbit(G))
        for name in HOMOLOGICAL_BUILTINS:
            M = builtin_system(name, G)
            T = transfer(identity_covering(X), M).matrix()
            assert np.array_equal(T, M.ring.identity(T.shape[0]))


def test_trivial_two_fold_formula():
    G = symmetric_group(3)
    H = next(H for H in G.subgroups if H.order == 2)
    X = coset_gset(G, H)
    p = trivial_covering(X, 2)
    M = builtin_system("regular", G)
    t = transfer(p, M)
    E = p.total_plus
    for x, _ in X.orbits():
        l = list(range(1, M.rank(H) + 1))
        got = t(gamma(M, p.base_plus, l, x))
        assert got == gamma(M, E, l, 2 * x) + gamma(M, E, l, 2 * x + 1)


def test_free_orbit_to_point_multiplies_by_two():
    G = cyclic_group(2)
    M = fixed_point_mackey(G, [[[1]], [[1]]])
    p = GCovering(free_orbit(G), trivial_gset(G, 1), [0, 0])
    t = transfer(p, M)
    v = gamma(M, p.base_plus, [1], 0)
    assert t(v) == gamma(M, p.total_plus, [1], 0)
    assert pushforward_G(p.proj_plus, t(v)) == gamma(M, p.base_plus, [2], 0)


def test_composite_two_then_three():
    G = cyclic_group(2)
    Y = free_orbit(G).disjoint_union(trivial_gset(G, 1))
    q = trivial_covering(Y, 3)
    p = trivial_covering(q.total, 2)
    assert p.then(q).n == 6
    for name in HOMOLOGICAL_BUILTINS:
        report = check_axioms(builtin_system(name, G), coverings=[p.then(q)], composites=[(p, q)])
        assert report.ok, str(report)


def test_zero_transfer_flagged():
    G = cyclic_group(2)
    M = builtin_system("zero_transfer", G)
    p = GCovering(free_orbit(G), trivial_gset(G, 1), [0, 0])
    report = check_axioms(M, coverings=[p])
    assert report.ok
    flagged = report.failures(required_only=False)
    assert [r["axiom"] for r in flagged] == ["multiplication_by_n"]
    assert not flagged[0]["required"] and flagged[0]["witness"]
    assert "flagged" in str(report)
    assert report.to_json()["ok"] is True


@pytest.mark.parametrize("gname", ["Z2", "Z4", "V4", "S3"])
def test_axioms_random(gname):
    G = builtin_group(gname)
    rng = random.Random(len(gname) * 31 + G.order)
    for name in HOMOLOGICAL_BUILTINS:
        M = builtin_system(name, G)
        covs = [random_covering(G, rng, rng.randint(1, 3)) for _ in range(3)]
        pbs = [(p, random_map_into(p.base, rng)) for p in covs]
        comps = []
        for _ in range(2):
            q = random_covering(G, rng, rng.randint(1, 3))
            comps.append((random_covering_over(q.total, rng, rng.randint(1, 2)), q))
        report = check_axioms(M, covs + [p.then(q) for p, q in comps], pbs, comps)
        assert report.ok, str(report)
        assert {r["axiom"] for r in report.rows} == {"normalization", "multiplication_by_n", "pullback",
                                                     "functoriality"}


def test_pullback_square_shape():
    G = symmetric_group(3)
    rng = random.Random(4)
    p = random_covering(G, rng, 2)
    f = random_map_into(p.base, rng)
    pt, ft = pullback(p, f)
    assert pt.n == p.n and pt.base == f.source
    for z in range(pt.total.size):
        assert f(pt(z)) == p(ft(z))
    with pytest.raises(GroupMismatch):
        pullback(p, GMap(trivial_gset(G, 1), trivial_gset(G, 1), [0]))


@pytest.mark.parametrize("gname", ["Z2", "S3", "D4"])
def test_representative_rechoice(gname):
    G = builtin_group(gname)
    rng = random.Random(9)
    M = builtin_system("regular", G)
    for _ in range(5):
        p = random_covering(G, rng, 3)
        ref = transfer(p, M).matrix()
        assert np.array_equal(transfer(p, M, choose=max).matrix(), ref)
        assert np.array_equal(transfer(p, M, choose=lambda o: o[len(o) // 2]).matrix(), ref)


def test_additivity():
    G = symmetric_group(3)
    rng = random.Random(12)
    for name in HOMOLOGICAL_BUILTINS:
        M = builtin_system(name, G)
        p = random_covering(G, rng, 2)
        t = transfer(p, M)
        for _ in range(10):
            u, v = random_fgelement(M, p.base_plus, rng), random_fgelement(M, p.base_plus, rng)
            assert t(u + v) == t(u) + t(v)
            assert t(u - u) == FGElement(M, p.total_plus)


def twisted(S: GSet, phi):
    return GSet(S.group, [S.action[phi[g]] for g in S.group.elements])


@pytest.mark.parametrize("gname", ["Z3", "S3", "D4"])
def test_g_naturality_under_conjugation(gname):
    # for phi(g) = c^-1 g c the map e -> c e is an isomorphism E^phi -> E
    G = builtin_group(gname)
    rng = random.Random(21)
    for name in HOMOLOGICAL_BUILTINS:
        M = builtin_system(name, G)
        p = random_covering(G, rng, 2)
        for c in G.elements:
            phi = [G.mul(G.inv(c), G.mul(g, c)) for g in G.elements]
            E2, X2 = twisted(p.total, phi), twisted(p.base, phi)
            p2 = GCovering(E2, X2, p.map.values)
            tau_E = plus(GMap(E2, p.total, [p.total.act(c, e) for e in range(E2.size)]))
            tau_X = plus(GMap(X2, p.base, [p.base.act(c, x) for x in range(X2.size)]))
            lhs = M.ring.matmul(push_matrix(tau_E, M), transfer(p2, M).matrix())
            rhs = M.ring.matmul(transfer(p, M).matrix(), push_matrix(tau_X, M))
            assert np.array_equal(lhs, rhs)


def test_disjoint_union_transfer_is_block_sum():
    G = cyclic_group(2)
    p = trivial_covering(free_orbit(G), 2)
    q = orbit_covering(next(f for f in OrbitCategory(G).morphisms()
                            if f.source.order == 1 and f.target.order == 2))
    pq = disjoint_union(p, q)
    assert pq.n == 2
    M = constant_system(G)
    T, Tp, Tq = (transfer(c, M).matrix() for c in (pq, p, q))
    assert T.shape == (Tp.shape[0] + Tq.shape[0], Tp.shape[1] + Tq.shape[1])
    assert check_axioms(M, coverings=[pq]).ok


# -- simplicial coverings -----------------------------------------------------


def test_simplicial_identity_covering():
    K = builtin("circle_antipodal")
    p = SimplicialCovering(SimplicialGMap.identity(K))
    M = constant_system(K.group)
    T = transfer_chain_map(p, M)
    assert all(np.array_equal(T[q], M.ring.identity(T[q].shape[0])) for q in T)


@pytest.mark.parametrize("n", [2, 3])
def test_trivial_cover_of_rotation_circle(n):
    K = builtin("circle_rotation", cyclic_group(n), n=n)
    p = simplicial_trivial_covering(K, 2)
    for name in HOMOLOGICAL_BUILTINS:
        M = builtin_system(name, K.group)
        CX, CE = chain_complex(K, M), chain_complex(p.total, M)
        T = transfer_chain_map(p, M, CX, CE)
        P = induced_map(p.map, M, CE, CX)
        PT = {q: M.ring.matmul(P[q], T[q]) for q in T}
        two = {q: M.ring.identity(CX.dim(q)) * 2 for q in T}
        assert agree_on_homology(PT, two, CX, CX)
        assert homology(CE).betti[1] == 2 * homology(CX).betti[1]
    # on H_1 with constant coefficients this is multiplication by 2 on Z
    M = constant_system(K.group)
    CX = chain_complex(K, M)
    assert homology(CX)[1] == (1, ())


def test_quotient_covering():
    K = builtin("circle_antipodal")
    G = K.group
    p = quotient_covering(K, G.whole)
    assert p.n == 2
    for name in HOMOLOGICAL_BUILTINS:
        M = builtin_system(name, G)
        transfer_chain_map(p, M)  # verifies commutation with the boundary


def test_not_levelwise_covering():
    K = builtin("circle_reflection")  # basepoint on the circle
    with pytest.raises(NotLevelwiseCovering):
        SimplicialCovering(SimplicialGMap.identity(K))
    G = cyclic_group(2)
    E, X = discrete(trivial_gset(G, 3)), discrete(trivial_gset(G, 2))
    f = SimplicialGMap(E, X, [[cell(0, 0), cell(0, 0), cell(0, 1), cell(0, 2)]])
    with pytest.raises(NotLevelwiseCovering):
        SimplicialCovering(f)
