"""Named small simplicial G-sets.

Spaces without a G-fixed vertex get a disjoint basepoint adjoined, so their
reduced homology in degree 0 picks up one extra copy of the orbit-space
components.
"""

from __future__ import annotations

from itertools import product

from .errors import GroupMismatch, UnknownBuiltin
from .groups import Group, cyclic_group, symmetric_group, trivial_group
from .simplicial import (
    GComplex,
    SimplicialGSet,
    barycentric_subdivide,
    from_ordered_complex,
)


def _require(group: Group | None, expected: Group, space: str) -> Group:
    if group is None:
        return expected
    if group.table != expected.table:
        raise GroupMismatch(f"{space} needs the group {expected.name}, got {group.name or group.order}")
    return group


def point(group: Group | None = None) -> SimplicialGSet:
    G = group or trivial_group()
    return from_ordered_complex(GComplex(G, [[0]] * G.order), basepoint=0)


def s0_trivial(group: Group | None = None) -> SimplicialGSet:
    """Two points with trivial action; vertex 0 is the basepoint."""
    G = group or trivial_group()
    return from_ordered_complex(GComplex(G, [[0, 1]] * G.order), basepoint=0)


def free_orbit_points(group: Group | None = None) -> SimplicialGSet:
    """``G^+``: the free orbit as a discrete G-set plus a disjoint basepoint."""
    G = group or cyclic_group(2)
    action = [[G.mul(g, x) for x in G.elements] for g in G.elements]
    return from_ordered_complex(GComplex(G, action))


def circle_reflection(group: Group | None = None) -> SimplicialGSet:
    """Square 0-1-2-3 with Z/2 swapping 1 and 3; fixed vertex 0 is the basepoint."""
    G = _require(group, cyclic_group(2), "circle_reflection")
    cx = GComplex(G, [[0, 1, 2, 3], [0, 3, 2, 1]], [(0, 1), (1, 2), (2, 3), (3, 0)], key=[0, 1, 2, 1])
    return from_ordered_complex(cx, basepoint=0)


def circle_antipodal(group: Group | None = None) -> SimplicialGSet:
    """Square with Z/2 acting by the half turn, plus a disjoint basepoint."""
    G = _require(group, cyclic_group(2), "circle_antipodal")
    cx = GComplex(G, [[0, 1, 2, 3], [2, 3, 0, 1]], [(0, 1), (1, 2), (2, 3), (3, 0)], key=[0, 1, 0, 1])
    return from_ordered_complex(cx)


def _polygon(G: Group, m: int, step: int) -> GComplex:
    action = [[(v + step * g) % m for v in range(m)] for g in G.elements]
    return GComplex(G, action, [(v, (v + 1) % m) for v in range(m)])


def circle_rotation(group: Group | None = None, n: int | None = None) -> SimplicialGSet:
    """``Z/n`` rotating a polygon.

    For ``n = 1`` this is a triangle with trivial action pointed at a vertex;
    otherwise the polygon is subdivided and a disjoint basepoint adjoined.
    """
    if n is None:
        n = group.order if group is not None else 3
    G = _require(group, cyclic_group(n), "circle_rotation")
    if n == 1:
        return from_ordered_complex(_polygon(G, 3, 0), basepoint=0)
    m = n if n >= 3 else 4
    return from_ordered_complex(barycentric_subdivide(_polygon(G, m, m // n)))


def sphere2_antipodal(group: Group | None = None) -> SimplicialGSet:
    """Subdivided octahedron with the antipodal map, plus a disjoint basepoint."""
    G = _require(group, cyclic_group(2), "sphere2_antipodal")
    # vertex i and i+3 are antipodal
    action = [list(range(6)), [3, 4, 5, 0, 1, 2]]
    faces = [(a, 1 + b, 2 + c) for a, b, c in product((0, 3), repeat=3)]
    return from_ordered_complex(barycentric_subdivide(GComplex(G, action, faces)))


def interval_reflection(group: Group | None = None) -> SimplicialGSet:
    """Interval [-1, 1] with Z/2 flipping it, pointed at the fixed midpoint."""
    G = _require(group, cyclic_group(2), "interval_reflection")
    cx = GComplex(G, [[0, 1, 2], [2, 1, 0]], [(0, 1), (1, 2)], key=[1, 0, 1])
    return from_ordered_complex(cx, basepoint=1)


def cone_free_orbit(group: Group | None = None) -> SimplicialGSet:
    """Cone on the free orbit ``G``, pointed at the apex."""
    G = group or cyclic_group(2)
    n = G.order
    action = [[G.mul(g, x) for x in G.elements] + [n] for g in G.elements]
    cx = GComplex(G, action, [(x, n) for x in G.elements], key=[1] * n + [0])
    return from_ordered_complex(cx, basepoint=n)


def _triangle_action(G: Group) -> list:
    if G.table == symmetric_group(3).table:
        return [list(p) for p in symmetric_group(3).permutations]
    if G.table == cyclic_group(3).table:
        return [[(v + g) % 3 for v in range(3)] for g in G.elements]
    raise GroupMismatch("triangle spaces need S3 or Z3")


def triangle_dihedral(group: Group | None = None) -> SimplicialGSet:
    """Solid triangle with the group permuting its corners, subdivided and
    pointed at the barycentre."""
    G = group or symmetric_group(3)
    sd = barycentric_subdivide(GComplex(G, _triangle_action(G), [(0, 1, 2)]))
    centre = sd.labels.index(frozenset({0, 1, 2}))
    return from_ordered_complex(sd, basepoint=centre)


def triangle_boundary(group: Group | None = None) -> SimplicialGSet:
    """Subdivided boundary of a triangle (6 vertices, 6 edges) plus a disjoint basepoint."""
    G = group or symmetric_group(3)
    return from_ordered_complex(
        barycentric_subdivide(GComplex(G, _triangle_action(G), [(0, 1), (1, 2), (0, 2)])))


_BUILDERS = {
    "point": point,
    "s0_trivial": s0_trivial,
    "free_orbit_points": free_orbit_points,
    "circle_reflection": circle_reflection,
    "circle_antipodal": circle_antipodal,
    "circle_rotation": circle_rotation,
    "sphere2_antipodal": sphere2_antipodal,
    "interval_reflection": interval_reflection,
    "cone_free_orbit": cone_free_orbit,
    "triangle_dihedral": triangle_dihedral,
    "triangle_boundary": triangle_boundary,
}

BUILTIN_SPACES = tuple(_BUILDERS)

# the group each space is built over when none is given
DEFAULT_GROUPS = {
    "point": "trivial",
    "s0_trivial": "trivial",
    "free_orbit_points": "Z2",
    "circle_reflection": "Z2",
    "circle_antipodal": "Z2",
    "circle_rotation": "Z3",
    "sphere2_antipodal": "Z2",
    "interval_reflection": "Z2",
    "cone_free_orbit": "Z2",
    "triangle_dihedral": "S3",
    "triangle_boundary": "S3",
}


def builtin(name: str, group: Group | None = None, **params) -> SimplicialGSet:
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise UnknownBuiltin(f"unknown space {name!r}; choose from {', '.join(BUILTIN_SPACES)}") from None
    return build(group, **params)


def builtins_for(group: Group) -> list[str]:
    """Names of the built-in spaces that can be built over ``group``."""
    out = []
    for name in BUILTIN_SPACES:
        try:
            builtin(name, group)
        except GroupMismatch:
            continue
        out.append(name)
    return out
