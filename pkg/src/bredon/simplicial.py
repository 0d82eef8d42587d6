"""Finite pointed simplicial G-sets.

A simplicial G-set is stored by its nondegenerate simplices ("cells").
Every simplex is a :class:`FormalSimplex` ``s_{i1} ... s_{ik} y`` with
``i1 > ... > ik`` (Eilenberg-Zilber form) and ``y`` a cell.  Faces of cells
are stored already in this form; faces of degenerate simplices follow from
the simplicial identities.  ``G`` acts on cells by permutations commuting
with the faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from .errors import (
    GroupMismatch,
    NotClosedUnderAction,
    NotClosedUnderFaces,
    OrderNotInvariant,
    OrderNotTotalOnSimplex,
    SimplicialError,
)
from .groups import Group, Subgroup, trivial_group
from .gsets import GSet


class FormalSimplex(NamedTuple):
    word: tuple  # degeneracy indices, strictly decreasing, outermost first
    dim: int  # dimension of the base cell
    cell: int

    @property
    def total_dim(self) -> int:
        return self.dim + len(self.word)

    @property
    def degenerate(self) -> bool:
        return bool(self.word)


def cell(dim: int, c: int) -> FormalSimplex:
    return FormalSimplex((), dim, c)


def degeneracy(j: int, x: FormalSimplex) -> FormalSimplex:
    """``s_j x`` in canonical form, using ``s_i s_j = s_{j+1} s_i`` for ``i <= j``."""
    out = []
    for k, i in enumerate(x.word):
        if j > i:
            return FormalSimplex(tuple(out) + (j,) + x.word[k:], x.dim, x.cell)
        out.append(i + 1)
    return FormalSimplex(tuple(out) + (j,), x.dim, x.cell)


def apply_word(word, x: FormalSimplex) -> FormalSimplex:
    for j in reversed(word):
        x = degeneracy(j, x)
    return x


def word_from_vertices(vertices) -> tuple[tuple, tuple]:
    """Split a weakly increasing vertex tuple into (degeneracy word, distinct vertices)."""
    reps = [j for j in range(len(vertices) - 1) if vertices[j] == vertices[j + 1]]
    distinct = tuple(v for j, v in enumerate(vertices) if j == 0 or vertices[j - 1] != v)
    return tuple(sorted(reps, reverse=True)), distinct


class SimplicialGSet:
    """A pointed simplicial G-set of finite type.

    Parameters
    ----------
    group : Group
    counts : list of int
        Number of cells in each dimension ``0..D``.
    faces : list
        ``faces[q][c]`` is a tuple of ``q+1`` FormalSimplex (empty for q = 0).
    action : list
        ``action[q][g][c]`` is the cell ``g.c``.
    basepoint : int
        A G-fixed vertex.
    vertices : list, optional
        ``vertices[q][c]`` vertex tuple of each cell when built from an
        ordered complex; used by :meth:`SimplicialGMap.from_vertex_map`.
    """

    def __init__(self, group: Group, counts, faces, action, basepoint: int, vertices=None, key=None,
                 check: bool = True):
        self.group = group
        self.counts = [int(n) for n in counts]
        while len(self.counts) > 1 and self.counts[-1] == 0:
            self.counts.pop()
        self.dim = len(self.counts) - 1
        self.faces = [[tuple(FormalSimplex(tuple(f[0]), int(f[1]), int(f[2])) for f in fs) for fs in faces[q]]
                      for q in range(self.dim + 1)]
        self.action = [tuple(tuple(int(v) for v in row) for row in action[q]) for q in range(self.dim + 1)]
        self.basepoint = int(basepoint)
        self.vertices = vertices
        self.key = key
        if check:
            self.check()

    # -- structure -------------------------------------------------------
    def cells(self, q: int) -> range:
        return range(self.counts[q]) if q <= self.dim else range(0)

    def face(self, x: FormalSimplex, i: int) -> FormalSimplex:
        """``d_i x`` for any simplex ``x`` in canonical form."""
        if not x.word:
            if x.dim == 0:
                raise SimplicialError("vertices have no faces")
            return self.faces[x.dim][x.cell][i]
        j, inner = x.word[0], FormalSimplex(x.word[1:], x.dim, x.cell)
        if i < j:
            return degeneracy(j - 1, self.face(inner, i))
        if i in (j, j + 1):
            return inner
        return degeneracy(j, self.face(inner, i - 1))

    def act(self, g: int, x: FormalSimplex) -> FormalSimplex:
        return FormalSimplex(x.word, x.dim, self.action[x.dim][g][x.cell])

    def base_simplex(self, q: int) -> FormalSimplex:
        """The basepoint degenerated up to dimension ``q``."""
        return FormalSimplex(tuple(range(q - 1, -1, -1)), 0, self.basepoint)

    def is_base(self, x: FormalSimplex) -> bool:
        return x.dim == 0 and x.cell == self.basepoint

    def level(self, q: int) -> GSet:
        """Cells of dimension ``q`` as a G-set."""
        return self._levels[q]

    @cached_property
    def _levels(self) -> list[GSet]:
        return [GSet(self.group, self.action[q], check=False) for q in range(self.dim + 1)]

    def isotropy(self, q: int, c: int) -> Subgroup:
        return self.level(q).isotropy(c)

    def orbit_reps(self, q: int, reduced: bool = True) -> list[int]:
        """Orbit representatives of ``q``-cells, the basepoint excluded if ``reduced``."""
        reps = [r for r, _ in self.level(q).orbits()]
        if reduced and q == 0:
            reps = [r for r in reps if r != self.basepoint]
        return reps

    def __eq__(self, other):
        return (isinstance(other, SimplicialGSet) and self.group == other.group and self.counts == other.counts
                and self.faces == other.faces and self.action == other.action and self.basepoint == other.basepoint)

    def __hash__(self):
        return hash((tuple(self.counts), self.basepoint))

    def __repr__(self):
        return f"SimplicialGSet(counts={self.counts}, basepoint={self.basepoint}, G={self.group!r})"

    # -- validation ------------------------------------------------------
    def check(self):
        G = self.group
        if not self.counts or self.counts[0] < 1:
            raise SimplicialError("need at least one vertex for the basepoint")
        if not 0 <= self.basepoint < self.counts[0]:
            raise SimplicialError("basepoint out of range")
        for q in range(self.dim + 1):
            n = self.counts[q]
            if len(self.faces[q]) != (n if q else 0) and not (q == 0 and len(self.faces[0]) in (0, n)):
                raise SimplicialError(f"wrong number of face lists in dimension {q}")
            if len(self.action[q]) != G.order:
                raise SimplicialError(f"action in dimension {q} needs {G.order} rows")
            for g, row in enumerate(self.action[q]):
                if sorted(row) != list(range(n)):
                    raise SimplicialError(f"g={g} does not permute the {q}-cells")
            if self.action[q][0] != tuple(range(n)):
                raise SimplicialError("identity acts nontrivially")
            for g in G.elements:
                for h in G.elements:
                    gh = G.mul(g, h)
                    if any(self.action[q][g][self.action[q][h][c]] != self.action[q][gh][c] for c in range(n)):
                        raise SimplicialError(f"not an action in dimension {q} (g={g}, h={h})")
            if q == 0:
                continue
            for c in range(n):
                fs = self.faces[q][c]
                if len(fs) != q + 1:
                    raise SimplicialError(f"cell ({q},{c}) needs {q + 1} faces")
                for f in fs:
                    self._check_formal(f, q - 1)
        if any(self.action[0][g][self.basepoint] != self.basepoint for g in G.elements):
            raise SimplicialError("basepoint is not G-fixed")
        for q in range(1, self.dim + 1):
            for c in range(self.counts[q]):
                x = cell(q, c)
                for g in G.elements:
                    gx = self.act(g, x)
                    for i in range(q + 1):
                        if self.face(gx, i) != self.act(g, self.face(x, i)):
                            raise SimplicialError(f"action does not commute with d_{i} on ({q},{c}), g={g}")
                if q >= 2:
                    for j in range(q + 1):
                        for i in range(j):
                            if self.face(self.face(x, j), i) != self.face(self.face(x, i), j - 1):
                                raise SimplicialError(f"d_{i} d_{j} != d_{j - 1} d_{i} on ({q},{c})")

    def _check_formal(self, f: FormalSimplex, q: int):
        if f.total_dim != q:
            raise SimplicialError(f"{f} should have dimension {q}")
        if not 0 <= f.dim <= self.dim or not 0 <= f.cell < self.counts[f.dim]:
            raise SimplicialError(f"{f} refers to a missing cell")
        d = f.dim
        for i in reversed(f.word):
            if not 0 <= i <= d:
                raise SimplicialError(f"{f}: s_{i} applied in dimension {d}")
            d += 1
        if any(a <= b for a, b in zip(f.word, f.word[1:])):
            raise SimplicialError(f"{f}: degeneracy word is not strictly decreasing")

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "dims": self.dim,
            "cells": list(self.counts),
            "faces": {str(q): [[[list(f.word), f.cell] for f in fs] for fs in self.faces[q]]
                      for q in range(1, self.dim + 1)},
            "action": [[list(row) for row in self.action[q]] for q in range(self.dim + 1)],
            "basepoint": self.basepoint,
        }


def from_json(group: Group, data: dict) -> SimplicialGSet:
    """Read either the cell format (``cells``/``faces``/``action``) or an ordered complex
    (``vertices``/``simplices``/``action``, optional ``key``, ``basepoint``, ``subdivide``)."""
    if "simplices" in data:
        n = int(data["vertices"])
        action = data.get("action") or [list(range(n))] * group.order
        cx = GComplex(group, action, data["simplices"], data.get("key"))
        if data.get("subdivide"):
            cx = barycentric_subdivide(cx)
        return from_ordered_complex(cx, basepoint=data.get("basepoint"))
    counts = data["cells"]
    D = len(counts) - 1
    faces = [[]]
    for q in range(1, D + 1):
        faces.append([[(tuple(w), q - 1 - len(w), c) for w, c in fs] for fs in data["faces"][str(q)]])
    action = data.get("action") or [[list(range(n))] * group.order for n in counts]
    return SimplicialGSet(group, counts, faces, action, data["basepoint"])


# -- ordered G-complexes -------------------------------------------------


@dataclass
class GComplex:
    """A simplicial complex on ``range(n)`` with a simplicial G-action.

    ``simplices`` is closed under faces and the action on construction.
    ``key`` (one sortable value per vertex) orders the vertices of each simplex.
    """

    group: Group
    vertex_action: list
    simplices: set = field(default_factory=set)
    key: list | None = None

    def __post_init__(self):
        self.vertex_action = [tuple(int(v) for v in row) for row in self.vertex_action]
        self.n = len(self.vertex_action[0]) if self.vertex_action else 0
        given = {frozenset(int(v) for v in s) for s in self.simplices}
        closed = set()
        for s in given:
            for g in self.group.elements:
                img = frozenset(self.vertex_action[g][v] for v in s)
                for k in range(1, len(img) + 1):
                    closed.update(frozenset(c) for c in combinations(sorted(img), k))
        closed.update(frozenset({v}) for v in range(self.n))
        self.simplices = closed


def from_ordered_complex(cx: GComplex, basepoint: int | None = None, close: bool = False) -> SimplicialGSet:
    """The simplicial G-set of an ordered G-complex.

    Nondegenerate ``q``-simplices are the ``q``-simplices of the complex with
    vertices listed in ``key`` order; ``d_i`` deletes the ``i``-th vertex.  If
    ``basepoint`` is None a disjoint fixed basepoint is adjoined as the last
    vertex.  ``cx.simplices`` must already be closed under faces and G unless
    ``close`` is set (``GComplex`` closes on construction).
    """
    G = cx.group
    n = cx.n
    key = list(cx.key) if cx.key is not None else list(range(n))
    simplices = {frozenset(s) for s in cx.simplices}
    for s in simplices:
        ks = [key[v] for v in s]
        if len(set(ks)) != len(ks):
            raise OrderNotTotalOnSimplex(f"key is not injective on simplex {sorted(s)}")
        for v in s:
            if len(s) > 1 and s - {v} not in simplices:
                raise NotClosedUnderFaces(f"face {sorted(s - {v})} of {sorted(s)} missing")

    def ordered(s):
        return tuple(sorted(s, key=lambda v: (key[v], v)))

    by_dim: dict[int, list[tuple]] = {}
    for s in simplices:
        by_dim.setdefault(len(s) - 1, []).append(ordered(s))
    adjoin = basepoint is None
    if adjoin:
        by_dim.setdefault(0, []).append((n,))
    D = max(by_dim) if by_dim else 0
    cells = [sorted(by_dim.get(q, [])) for q in range(D + 1)]
    index = [{t: i for i, t in enumerate(cs)} for cs in cells]

    def vact(g, v):
        return v if v == n else cx.vertex_action[g][v]

    action = []
    for q in range(D + 1):
        rows = []
        for g in G.elements:
            row = []
            for t in cells[q]:
                img = tuple(vact(g, v) for v in t)
                if img not in index[q]:
                    if frozenset(img) in simplices or (adjoin and img == (n,)):
                        raise OrderNotInvariant(f"g={g} reverses the order on {t}")
                    raise NotClosedUnderAction(f"g={g} maps {t} outside the complex")
                row.append(index[q][img])
            rows.append(row)
        action.append(rows)
    faces = [[]]
    for q in range(1, D + 1):
        faces.append([
            tuple(FormalSimplex((), q - 1, index[q - 1][t[:i] + t[i + 1:]]) for i in range(q + 1))
            for t in cells[q]
        ])
    if adjoin:
        bp = index[0][(n,)]
    else:
        if (basepoint,) not in index[0]:
            raise SimplicialError(f"basepoint {basepoint} is not a vertex")
        bp = index[0][(basepoint,)]
    full_key = key + ([min(key) if key else 0] if adjoin else [])
    return SimplicialGSet(G, [len(c) for c in cells], faces, action, bp, vertices=cells, key=full_key)


def barycentric_subdivide(cx: GComplex) -> GComplex:
    """Barycentric subdivision, ordered by the dimension of the barycentre's simplex.

    Vertices are the simplices of ``cx`` sorted by (dimension, vertex tuple);
    simplices are flags.  The order is total on flags and G-invariant.
    """
    G = cx.group
    verts = sorted(cx.simplices, key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(verts)}
    action = [[index[frozenset(cx.vertex_action[g][v] for v in s)] for s in verts] for g in G.elements]
    children = {s: [t for t in verts if t < s] for s in verts}
    flags = set()

    def extend(chain):
        flags.add(frozenset(index[s] for s in chain))
        for t in children[chain[-1]]:
            if len(t) < len(chain[-1]):
                extend(chain + [t])

    for s in verts:
        extend([s])
    key = [len(s) - 1 for s in verts]
    out = GComplex(G, action, set(), key)
    out.simplices = flags
    out.n = len(verts)
    out.labels = verts
    return out


# -- derived objects ------------------------------------------------------


def fixed_subcomplex(K: SimplicialGSet, H: Subgroup) -> SimplicialGSet:
    """``K^H``: cells fixed by every element of ``H``, with the trivial group acting."""
    T = trivial_group()
    kept = [[c for c in K.cells(q) if all(K.action[q][h][c] == c for h in H)] for q in range(K.dim + 1)]
    where = [{c: i for i, c in enumerate(cs)} for cs in kept]
    faces = [[]]
    for q in range(1, K.dim + 1):
        faces.append([tuple(FormalSimplex(f.word, f.dim, where[f.dim][f.cell]) for f in K.faces[q][c])
                      for c in kept[q]])
    action = [[list(range(len(cs)))] for cs in kept]
    vertices = [[K.vertices[q][c] for c in cs] for q, cs in enumerate(kept)] if K.vertices else None
    return SimplicialGSet(T, [len(c) for c in kept], faces, action, where[0][K.basepoint],
                          vertices=vertices, key=K.key)


def quotient_by(K: SimplicialGSet, N: Subgroup) -> SimplicialGSet:
    """``K/N`` for a normal subgroup ``N``, with the induced action of ``G``."""
    G = K.group
    reps = []
    where = []
    for q in range(K.dim + 1):
        rep_of = [min(K.action[q][n][c] for n in N) for c in K.cells(q)]
        rs = sorted(set(rep_of))
        idx = {r: i for i, r in enumerate(rs)}
        reps.append(rs)
        where.append([idx[r] for r in rep_of])
    faces = [[]]
    for q in range(1, K.dim + 1):
        faces.append([tuple(FormalSimplex(f.word, f.dim, where[f.dim][f.cell]) for f in K.faces[q][c])
                      for c in reps[q]])
    action = [[[where[q][K.action[q][g][c]] for c in reps[q]] for g in G.elements] for q in range(K.dim + 1)]
    return SimplicialGSet(G, [len(r) for r in reps], faces, action, where[0][K.basepoint])


def orbit_quotient(K: SimplicialGSet) -> SimplicialGSet:
    """``K/G`` with the trivial group acting."""
    Q = quotient_by(K, K.group.whole)
    T = trivial_group()
    return SimplicialGSet(T, Q.counts, Q.faces, [[list(range(n))] for n in Q.counts], Q.basepoint)


def restrict_action(K: SimplicialGSet, group: Group) -> SimplicialGSet:
    """Forget the action (``group`` must be trivial) or re-check against ``group``."""
    if group.order == 1:
        return SimplicialGSet(group, K.counts, K.faces, [[list(range(n))] for n in K.counts], K.basepoint,
                              vertices=K.vertices, key=K.key, check=False)
    if group != K.group:
        raise GroupMismatch("cannot restrict to an unrelated group")
    return K


def add_basepoint(K: SimplicialGSet) -> SimplicialGSet:
    """``K^+``: forget the basepoint of ``K`` and adjoin a disjoint fixed one."""
    counts = list(K.counts)
    new = counts[0]
    counts[0] += 1
    action = [list(map(list, K.action[0]))] + [list(map(list, a)) for a in K.action[1:]]
    for row in action[0]:
        row.append(new)
    vertices = None
    if K.vertices:
        top = max(v for t in K.vertices[0] for v in t) + 1
        vertices = [list(K.vertices[0]) + [(top,)]] + [list(v) for v in K.vertices[1:]]
    key = list(K.key) + [min(K.key)] if K.key else None
    return SimplicialGSet(K.group, counts, K.faces, action, new, vertices=vertices, key=key, check=False)


class SimplicialGMap:
    """A pointed simplicial G-map, given on cells: ``images[q][c]`` is a FormalSimplex of the target."""

    def __init__(self, source: SimplicialGSet, target: SimplicialGSet, images, check: bool = True):
        self.source = source
        self.target = target
        self.images = [[FormalSimplex(tuple(x[0]), int(x[1]), int(x[2])) for x in row] for row in images]
        if check:
            self.check()

    def __call__(self, x: FormalSimplex) -> FormalSimplex:
        return apply_word(x.word, self.images[x.dim][x.cell])

    def check(self):
        K, L = self.source, self.target
        if K.group != L.group:
            raise GroupMismatch("simplicial map between different groups")
        for q in range(K.dim + 1):
            if len(self.images[q]) != K.counts[q]:
                raise SimplicialError(f"need images of all {q}-cells")
            for c in K.cells(q):
                y = self.images[q][c]
                if y.total_dim != q:
                    raise SimplicialError(f"image of ({q},{c}) has wrong dimension")
                L._check_formal(y, q)
                for g in K.group.elements:
                    if self(K.act(g, cell(q, c))) != L.act(g, y):
                        raise SimplicialError(f"map is not equivariant on ({q},{c}), g={g}")
                for i in range(q + 1) if q else ():
                    if L.face(y, i) != self(K.faces[q][c][i]):
                        raise SimplicialError(f"map does not commute with d_{i} on ({q},{c})")
        if self.images[0][K.basepoint] != cell(0, L.basepoint):
            raise SimplicialError("map does not preserve the basepoint")

    def then(self, other: SimplicialGMap) -> SimplicialGMap:
        """``other o self``."""
        return SimplicialGMap(self.source, other.target,
                              [[other(y) for y in row] for row in self.images], check=False)

    @classmethod
    def identity(cls, K: SimplicialGSet) -> SimplicialGMap:
        return cls(K, K, [[cell(q, c) for c in K.cells(q)] for q in range(K.dim + 1)], check=False)

    @classmethod
    def from_vertex_map(cls, K: SimplicialGSet, L: SimplicialGSet, vmap: dict) -> SimplicialGMap:
        """Extend an order-preserving equivariant map of vertex labels to all cells.

        Both sides must come from ordered complexes (carry ``vertices``);
        ``vmap`` maps vertex labels of ``K`` to vertex labels of ``L``.
        """
        if not K.vertices or not L.vertices:
            raise SimplicialError("vertex maps need complexes with vertex labels")
        index = [{t: i for i, t in enumerate(ts)} for ts in L.vertices]
        images = []
        for q in range(K.dim + 1):
            row = []
            for t in K.vertices[q]:
                img = tuple(vmap[v] for v in t)
                word, distinct = word_from_vertices(img)
                d = len(distinct) - 1
                if d > L.dim or distinct not in index[d]:
                    raise SimplicialError(f"{t} maps to {img}, not an ordered simplex of the target")
                row.append(FormalSimplex(word, d, index[d][distinct]))
            images.append(row)
        return cls(K, L, images)


def wedge(K: SimplicialGSet, L: SimplicialGSet) -> tuple[SimplicialGSet, SimplicialGMap, SimplicialGMap]:
    """``K v L`` with its inclusions; cells of ``K`` come first, then those of ``L``
    except its basepoint."""
    if K.group != L.group:
        raise GroupMismatch("wedge over different groups")
    G = K.group
    D = max(K.dim, L.dim)
    kc = [K.counts[q] if q <= K.dim else 0 for q in range(D + 1)]
    lmap = []
    for q in range(D + 1):
        m, nxt = [], kc[q]
        for c in L.cells(q):
            if q == 0 and c == L.basepoint:
                m.append(K.basepoint)
            else:
                m.append(nxt)
                nxt += 1
        lmap.append(m)
    counts = [kc[q] + sum(1 for c in L.cells(q) if not (q == 0 and c == L.basepoint)) for q in range(D + 1)]

    def lf(f):
        return FormalSimplex(f.word, f.dim, lmap[f.dim][f.cell])

    faces = [[]]
    for q in range(1, D + 1):
        fs = list(K.faces[q]) if q <= K.dim else []
        fs += [None] * (counts[q] - len(fs))
        for c in L.cells(q):
            fs[lmap[q][c]] = tuple(lf(f) for f in L.faces[q][c])
        faces.append(fs)
    action = []
    for q in range(D + 1):
        rows = []
        for g in G.elements:
            row = list(K.action[q][g]) if q <= K.dim else []
            row += [None] * (counts[q] - len(row))
            for c in L.cells(q):
                row[lmap[q][c]] = lmap[q][L.action[q][g][c]]
            rows.append(row)
        action.append(rows)
    W = SimplicialGSet(G, counts, faces, action, K.basepoint, check=False)
    iK = SimplicialGMap(K, W, [[cell(q, c) for c in K.cells(q)] for q in range(K.dim + 1)], check=False)
    iL = SimplicialGMap(L, W, [[cell(q, lmap[q][c]) for c in L.cells(q)] for q in range(L.dim + 1)], check=False)
    return W, iK, iL
