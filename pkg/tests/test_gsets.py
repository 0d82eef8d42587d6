import random

import pytest
from generators import groups, random_pointed_gset, random_pointed_map

from bredon.errors import GSetError, NotEquivariant
from bredon.groups import builtin_group, conjugate, cyclic_group
from bredon.gsets import (
    GMap,
    GSet,
    PointedGMap,
    PointedGSet,
    add_basepoint,
    gset_from_json,
    plus,
    trivial_gset,
    wedge,
)


def union_find_orbits(S):
    parent = list(range(S.size))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for g in S.group.elements:
        for x in range(S.size):
            a, b = find(x), find(S.act(g, x))
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes = {}
    for x in range(S.size):
        classes.setdefault(find(x), []).append(x)
    return sorted(tuple(v) for v in classes.values())


def test_isotropy_examples():
    Z4 = cyclic_group(4)
    S = PointedGSet(Z4, [[0, 1, 2], [1, 0, 2], [0, 1, 2], [1, 0, 2]], basepoint=2)
    assert S.isotropy(0) == Z4.subgroup([0, 2])
    assert S.isotropy(2) == Z4.whole
    G = cyclic_group(3)
    free = add_basepoint(GSet(G, [[(x + g) % 3 for x in range(3)] for g in G.elements]))
    assert free.isotropy(0) == G.trivial_subgroup
    assert len(free.orbits()) == 2


def test_orbits_v4_mixed():
    V4 = builtin_group("V4")
    # a free orbit {0..3} plus a fixed basepoint 4
    action = [[V4.mul(g, x) for x in V4.elements] + [4] for g in V4.elements]
    S = PointedGSet(V4, action, 4)
    assert [m for _, m in S.orbits()] == union_find_orbits(S)
    assert len(S.orbits()) == 2


@pytest.mark.parametrize("G", groups(), ids=lambda G: G.name)
def test_random_gset_properties(G):
    rng = random.Random(G.order)
    for _ in range(20):
        S = random_pointed_gset(G, rng)
        assert [m for _, m in S.orbits()] == union_find_orbits(S)
        assert S.fixed_points(G.trivial_subgroup) == list(range(S.size))
        for x in range(S.size):
            orbit = {S.act(g, x) for g in G.elements}
            assert len(orbit) * S.isotropy(x).order == G.order
            for g in G.elements:
                assert S.isotropy(S.act(g, x)) == conjugate(S.isotropy(x), g)
            assert S.act(S.transporter(x), x) == S.orbit_rep(x)
        for H in G.subgroups:
            assert S.basepoint in S.fixed_points(H)
            for K in G.subgroups:
                if H <= K:
                    assert set(S.fixed_points(K)) <= set(S.fixed_points(H))


def test_trivial_action_and_add_basepoint():
    G = cyclic_group(2)
    S = trivial_gset(G, 3)
    assert len(S.orbits()) == 3
    P = add_basepoint(GSet(G, [[]] * 2))
    assert P.size == 1 and P.basepoint == 0
    Gp = add_basepoint(GSet(G, [[0, 1], [1, 0]]))
    assert Gp.size == 3 and len(Gp.orbits()) == 2


def test_invalid_sets_and_maps():
    G = cyclic_group(2)
    with pytest.raises(GSetError):
        GSet(G, [[0, 1], [0, 0]])
    with pytest.raises(GSetError):
        PointedGSet(G, [[0, 1], [1, 0]], 0)
    S = GSet(G, [[0, 1], [1, 0]])
    T = trivial_gset(G, 2)
    with pytest.raises(NotEquivariant):
        GMap(T, S, [0, 0])
    P = add_basepoint(S)
    with pytest.raises(GSetError):
        PointedGMap(P, P, [1, 0, 0])


@pytest.mark.parametrize("G", groups(("Z2", "Z4", "S3", "V4")), ids=lambda G: G.name)
def test_wedge(G):
    rng = random.Random(7)
    for _ in range(10):
        S, T = random_pointed_gset(G, rng), random_pointed_gset(G, rng)
        W, i, j = wedge(S, T)
        assert W.size == S.size + T.size - 1
        i._check()
        j._check()
        non_base = [len(m) for r, m in W.orbits() if r != W.basepoint]
        expected = [len(m) for r, m in S.orbits() if r != S.basepoint] + [
            len(m) for r, m in T.orbits() if r != T.basepoint]
        assert sorted(non_base) == sorted(expected)
    point = PointedGSet(G, [[0]] * G.order, 0)
    W, i, _ = wedge(S, point)
    assert W.size == S.size and list(i.values) == list(range(S.size))


def test_maps_compose_and_plus():
    G = builtin_group("S3")
    rng = random.Random(1)
    S, T, U = (random_pointed_gset(G, rng) for _ in range(3))
    f, g = random_pointed_map(S, T, rng), random_pointed_map(T, U, rng)
    h = f.then(g)
    assert all(h(x) == g(f(x)) for x in range(S.size))
    fp = plus(GMap(GSet(G, [[0]] * 6), GSet(G, [[0]] * 6), [0]))
    assert fp.values == (0, 1)


def test_json():
    G = cyclic_group(2)
    P = gset_from_json(G, {"size": 3, "basepoint": 2, "action": [[0, 1, 2], [1, 0, 2]]})
    assert P.to_json() == {"size": 3, "basepoint": 2, "action": [[0, 1, 2], [1, 0, 2]]}
    assert gset_from_json(G, {"size": 2}).size == 2
