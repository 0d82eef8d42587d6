import itertools
import random

import pytest
from generators import SMALL_GROUPS, random_complex

from bredon.errors import (
    GroupMismatch,
    NotClosedUnderAction,
    NotClosedUnderFaces,
    OrderNotInvariant,
    OrderNotTotalOnSimplex,
    SimplicialError,
    UnknownBuiltin,
)
from bredon.groups import builtin_group, cyclic_group, symmetric_group, trivial_group
from bredon.simplicial import (
    FormalSimplex,
    GComplex,
    SimplicialGMap,
    add_basepoint,
    apply_word,
    barycentric_subdivide,
    cell,
    degeneracy,
    fixed_subcomplex,
    from_json,
    from_ordered_complex,
    orbit_quotient,
    wedge,
    word_from_vertices,
)
from bredon.spaces import BUILTIN_SPACES, builtin, builtins_for


def expand(K, x: FormalSimplex):
    """Vertex tuple of a simplex of an ordered complex."""
    t = K.vertices[x.dim][x.cell]
    for j in reversed(x.word):
        t = t[:j + 1] + t[j:]
    return t


def simplex3():
    T = trivial_group()
    return from_ordered_complex(GComplex(T, [list(range(4))], [(0, 1, 2, 3)]), basepoint=0)


def all_simplices(K, top):
    """Every simplex of total dimension <= top, by degenerating cells."""
    out = {0: [cell(0, c) for c in K.cells(0)]}
    for q in range(1, top + 1):
        level = [cell(q, c) for c in K.cells(q)]
        level += [degeneracy(j, x) for x in out[q - 1] for j in range(q)]
        out[q] = sorted(set(level))
    return out


def test_simplicial_identities_against_vertex_tuples():
    K = simplex3()
    sims = all_simplices(K, 5)
    for q, xs in sims.items():
        for x in xs:
            t = expand(K, x)
            assert len(t) == q + 1 and list(t) == sorted(t)
            for j in range(q + 1):
                assert expand(K, degeneracy(j, x)) == t[:j + 1] + t[j:]
            if q:
                for i in range(q + 1):
                    assert expand(K, K.face(x, i)) == t[:i] + t[i + 1:]
            # canonical form: word strictly decreasing
            assert all(a > b for a, b in zip(x.word, x.word[1:]))


def test_word_from_vertices():
    assert word_from_vertices((0, 0, 1, 1, 1)) == ((3, 2, 0), (0, 1))
    K = simplex3()
    x = apply_word((3, 1), cell(1, 0))
    assert expand(K, x) == tuple(sorted(expand(K, x)))


def test_delta1():
    K = from_ordered_complex(GComplex(trivial_group(), [[0, 1]], [(0, 1)]), basepoint=0)
    assert K.counts == [2, 1]
    assert K.faces[1][0] == (cell(0, 1), cell(0, 0))


def test_z3_triangle_boundary_subdivision():
    G = cyclic_group(3)
    cx = GComplex(G, [[(v + g) % 3 for v in range(3)] for g in G.elements], [(0, 1), (1, 2), (0, 2)])
    sd = barycentric_subdivide(cx)
    K = from_ordered_complex(sd)
    assert K.counts == [7, 6]  # 6 + adjoined basepoint


def test_order_errors():
    G = cyclic_group(2)
    with pytest.raises(OrderNotInvariant):
        from_ordered_complex(GComplex(G, [[0, 1], [1, 0]], [(0, 1)]))
    with pytest.raises(OrderNotTotalOnSimplex):
        from_ordered_complex(GComplex(G, [[0, 1], [1, 0]], [(0, 1)], key=[0, 0]))


def test_closure_errors():
    T = trivial_group()
    cx = GComplex(T, [[0, 1, 2]], [(0, 1, 2)])
    cx.simplices = {frozenset({0, 1, 2}), frozenset({0}), frozenset({1}), frozenset({2})}
    with pytest.raises(NotClosedUnderFaces):
        from_ordered_complex(cx, basepoint=0)
    G = cyclic_group(2)
    cx = GComplex(G, [[0, 1, 2], [0, 2, 1]], [(0, 1)])
    cx.simplices = {frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 1})}
    with pytest.raises(NotClosedUnderAction):
        from_ordered_complex(cx, basepoint=0)


def test_barycentric_examples():
    T = trivial_group()
    pt = barycentric_subdivide(GComplex(T, [[0]], []))
    assert from_ordered_complex(pt, basepoint=0).counts == [1]
    edge = from_ordered_complex(barycentric_subdivide(GComplex(T, [[0, 1]], [(0, 1)])), basepoint=0)
    assert edge.counts == [3, 2]
    G = cyclic_group(2)
    swap = from_ordered_complex(barycentric_subdivide(GComplex(G, [[0, 1], [1, 0]], [(0, 1)])))
    assert swap.counts == [4, 2]
    assert swap.orbit_reps(1) == [0]
    assert swap.isotropy(1, 0) == G.trivial_subgroup


def test_fixed_subcomplex_examples():
    K = builtin("circle_reflection")
    G = K.group
    assert fixed_subcomplex(K, G.trivial_subgroup).counts == K.counts
    assert fixed_subcomplex(K, G.whole).counts == [2]
    A = builtin("circle_antipodal")
    assert fixed_subcomplex(A, A.group.whole).counts == [1]


@pytest.mark.parametrize("gname", SMALL_GROUPS)
def test_fixed_subcomplex_monotone(gname):
    G = builtin_group(gname)
    for name in builtins_for(G):
        K = builtin(name, G)
        for H in G.subgroups:
            FH = fixed_subcomplex(K, H)
            for L in G.subgroups:
                if H <= L:
                    FL = fixed_subcomplex(K, L)
                    assert all(a >= b for a, b in itertools.zip_longest(FH.counts, FL.counts, fillvalue=0))


def test_orbit_quotient_examples():
    T = trivial_group()
    K = builtin("circle_rotation", T)
    assert orbit_quotient(K).counts == K.counts
    assert orbit_quotient(builtin("circle_antipodal")).counts == [3, 2]
    assert orbit_quotient(builtin("circle_reflection")).counts == [3, 2]


def test_wedge_counts():
    G = cyclic_group(2)
    K, L = builtin("circle_reflection"), builtin("sphere2_antipodal")
    W, i, j = wedge(K, L)
    assert W.counts == [K.counts[0] + L.counts[0] - 1, K.counts[1] + L.counts[1], L.counts[2]]
    W.check()
    i.check()
    j.check()
    P = builtin("point", G)
    W2, _, _ = wedge(K, P)
    assert W2.counts == K.counts
    with pytest.raises(GroupMismatch):
        wedge(K, builtin("point", trivial_group()))


def test_builtin_shapes():
    assert builtin("s0_trivial").counts == [2]
    assert builtin("circle_reflection").counts == [4, 4]
    K = builtin("circle_rotation", trivial_group())
    assert K.counts == [3, 3] and K.group.order == 1
    with pytest.raises(UnknownBuiltin):
        builtin("torus")
    with pytest.raises(GroupMismatch):
        builtin("circle_reflection", cyclic_group(3))


@pytest.mark.parametrize("name", BUILTIN_SPACES)
def test_builtins_are_valid_and_round_trip(name):
    K = builtin(name)
    K.check()
    assert all(K.action[0][g][K.basepoint] == K.basepoint for g in K.group.elements)
    L = from_json(K.group, K.to_json())
    assert L == K


def test_ordered_complex_json():
    G = cyclic_group(2)
    data = {"vertices": 3, "action": [[0, 1, 2], [2, 1, 0]], "simplices": [[0, 1], [1, 2]],
            "key": [1, 0, 1], "basepoint": 1}
    assert from_json(G, data) == builtin("interval_reflection")


def test_random_complexes_are_valid():
    rng = random.Random(11)
    for gname in SMALL_GROUPS:
        G = builtin_group(gname)
        for _ in range(15):
            random_complex(G, rng).check()


def test_invalid_simplicial_data():
    T = trivial_group()
    K = simplex3()
    faces = [list(fs) for fs in K.faces]
    faces[1][0] = (cell(0, 0), cell(0, 0))
    with pytest.raises(SimplicialError):
        type(K)(T, K.counts, faces, K.action, K.basepoint)
    with pytest.raises(SimplicialError):
        type(K)(cyclic_group(2), [2], [[]], [[[0, 1], [1, 0]]], 0)


def test_vertex_maps():
    G = cyclic_group(2)
    K = builtin("interval_reflection")
    ident = SimplicialGMap.from_vertex_map(K, K, {0: 0, 1: 1, 2: 2})
    assert ident.images == SimplicialGMap.identity(K).images
    P = from_ordered_complex(GComplex(G, [[0], [0]]), basepoint=0)
    collapse = SimplicialGMap.from_vertex_map(K, P, {0: 0, 1: 0, 2: 0})
    assert collapse.images[1][0] == FormalSimplex((0,), 0, 0)
    # the reflection itself is an equivariant simplicial map
    SimplicialGMap.from_vertex_map(K, K, {0: 2, 1: 1, 2: 0}).check()
    with pytest.raises(SimplicialError):
        SimplicialGMap.from_vertex_map(K, K, {0: 0, 1: 1, 2: 0})


def test_add_basepoint():
    K = builtin("interval_reflection")
    Kp = add_basepoint(K)
    Kp.check()
    assert Kp.counts == [4, 2] and Kp.basepoint == 3
    H = symmetric_group(3)
    assert builtin("triangle_dihedral", H).counts == [7, 12, 6]
