"""Finite G-sets (pointed and unpointed) and equivariant maps between them."""

from __future__ import annotations

from functools import cached_property

from .errors import GroupMismatch, GSetError, NotEquivariant
from .groups import Group, Subgroup, left_cosets


class GSet:
    """A finite G-set on ``range(size)``; ``action[g][x]`` is ``g.x``."""

    def __init__(self, group: Group, action, check: bool = True):
        self.group = group
        self.action = tuple(tuple(int(v) for v in row) for row in action)
        if len(self.action) != group.order:
            raise GSetError(f"action needs {group.order} rows, got {len(self.action)}")
        self.size = len(self.action[0]) if self.action else 0
        if check:
            self._check()

    def _check(self):
        G, n = self.group, self.size
        for g, row in enumerate(self.action):
            if len(row) != n or sorted(row) != list(range(n)):
                raise GSetError(f"row {g} of the action is not a permutation of range({n})")
        if self.action[0] != tuple(range(n)):
            raise GSetError("the identity does not act trivially")
        for g in G.elements:
            for h in G.elements:
                gh = G.mul(g, h)
                for x in range(n):
                    if self.action[g][self.action[h][x]] != self.action[gh][x]:
                        raise GSetError(f"g.(h.x) != (gh).x for g={g}, h={h}, x={x}")

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return type(self) is type(other) and self.group == other.group and self.action == other.action and (
            getattr(self, "basepoint", None) == getattr(other, "basepoint", None))

    def __hash__(self):
        return hash((self.action, getattr(self, "basepoint", None)))

    def isotropy(self, x: int) -> Subgroup:
        return self._isotropy[x]

    @cached_property
    def _isotropy(self) -> list[Subgroup]:
        G = self.group
        return [Subgroup(G, frozenset(g for g in G.elements if self.action[g][x] == x)) for x in range(self.size)]

    @cached_property
    def _orbit_data(self):
        """Per point: (orbit representative, minimal g with g.x = rep)."""
        rep, trans = [None] * self.size, [None] * self.size
        for x in range(self.size):
            r = min(self.action[g][x] for g in self.group.elements)
            rep[x] = r
            trans[x] = next(g for g in self.group.elements if self.action[g][x] == r)
        return rep, trans

    def orbit_rep(self, x: int) -> int:
        return self._orbit_data[0][x]

    def transporter(self, x: int) -> int:
        """Minimal ``h`` with ``h.x = orbit_rep(x)``."""
        return self._orbit_data[1][x]

    def orbits(self) -> list[tuple[int, tuple[int, ...]]]:
        """Orbits as (minimal representative, sorted members)."""
        groups: dict[int, list[int]] = {}
        for x in range(self.size):
            groups.setdefault(self.orbit_rep(x), []).append(x)
        return [(r, tuple(members)) for r, members in sorted(groups.items())]

    def fixed_points(self, H: Subgroup) -> list[int]:
        return [x for x in range(self.size) if all(self.action[h][x] == x for h in H)]

    def disjoint_union(self, other: GSet) -> GSet:
        if other.group != self.group:
            raise GroupMismatch("disjoint union of G-sets over different groups")
        n = self.size
        action = [list(a) + [n + y for y in b] for a, b in zip(self.action, other.action)]
        return GSet(self.group, action, check=False)

    def __repr__(self):
        return f"GSet(size={self.size}, orbits={len(self.orbits())})"


class PointedGSet(GSet):
    """A G-set with a G-fixed basepoint."""

    def __init__(self, group: Group, action, basepoint: int, check: bool = True):
        super().__init__(group, action, check)
        self.basepoint = int(basepoint)
        if not 0 <= self.basepoint < self.size:
            raise GSetError(f"basepoint {basepoint} out of range")
        if any(row[self.basepoint] != self.basepoint for row in self.action):
            raise GSetError("the basepoint is not fixed by G")

    def to_json(self) -> dict:
        return {"size": self.size, "basepoint": self.basepoint, "action": [list(r) for r in self.action]}

    def __repr__(self):
        return f"PointedGSet(size={self.size}, basepoint={self.basepoint}, orbits={len(self.orbits())})"


def gset_from_json(group: Group, data: dict) -> GSet:
    action = data.get("action")
    if action is None:
        action = [list(range(int(data["size"])))] * group.order
    if "basepoint" in data:
        return PointedGSet(group, action, data["basepoint"])
    return GSet(group, action)


def coset_gset(G: Group, H: Subgroup) -> GSet:
    """``G/H`` with points the cosets in minimal-representative order."""
    cosets = left_cosets(G, H)
    where = {a: i for i, (_, members) in enumerate(cosets) for a in members}
    action = [[where[G.mul(g, rep)] for rep, _ in cosets] for g in G.elements]
    return GSet(G, action, check=False)


def trivial_gset(G: Group, n: int) -> GSet:
    return GSet(G, [list(range(n))] * G.order, check=False)


def isotropy(S: GSet, x: int) -> Subgroup:
    return S.isotropy(x)


def orbits(S: GSet):
    return S.orbits()


def fixed_points(S: GSet, H: Subgroup) -> list[int]:
    return S.fixed_points(H)


def add_basepoint(S: GSet) -> PointedGSet:
    """``S^+``: adjoin a disjoint fixed basepoint with index ``len(S)``."""
    n = S.size
    return PointedGSet(S.group, [list(row) + [n] for row in S.action], n, check=False)


class GMap:
    """An equivariant map of G-sets, ``values[x]`` being the image of ``x``."""

    def __init__(self, source: GSet, target: GSet, values, check: bool = True):
        self.source = source
        self.target = target
        self.values = tuple(int(v) for v in values)
        if check:
            self._check()

    def _check(self):
        S, T = self.source, self.target
        if S.group != T.group:
            raise GroupMismatch("map between G-sets over different groups")
        if len(self.values) != S.size or any(not 0 <= v < T.size for v in self.values):
            raise GSetError("map values do not match source/target sizes")
        for g in S.group.elements:
            for x in range(S.size):
                if self.values[S.act(g, x)] != T.act(g, self.values[x]):
                    raise NotEquivariant(f"f(g.x) != g.f(x) for g={g}, x={x}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __eq__(self, other):
        return isinstance(other, GMap) and self.values == other.values and self.source == other.source and (
            self.target == other.target)

    def __hash__(self):
        return hash(self.values)

    def then(self, other: GMap) -> GMap:
        """``other o self``."""
        return type(self)(self.source, other.target, [other(v) for v in self.values])

    def __repr__(self):
        return f"{type(self).__name__}({list(self.values)})"


class PointedGMap(GMap):
    def _check(self):
        super()._check()
        if not isinstance(self.source, PointedGSet) or not isinstance(self.target, PointedGSet):
            raise GSetError("pointed maps need pointed G-sets")
        if self.values[self.source.basepoint] != self.target.basepoint:
            raise GSetError("map does not preserve the basepoint")

    @classmethod
    def identity(cls, S: PointedGSet) -> PointedGMap:
        return cls(S, S, range(S.size), check=False)


def plus(f: GMap) -> PointedGMap:
    """``f^+: S^+ -> T^+``."""
    S, T = add_basepoint(f.source), add_basepoint(f.target)
    return PointedGMap(S, T, list(f.values) + [T.basepoint], check=False)


def wedge(S: PointedGSet, T: PointedGSet) -> tuple[PointedGSet, PointedGMap, PointedGMap]:
    """``S v T`` with its two inclusions.

    Points of ``S`` keep their indices; the non-base points of ``T`` follow
    in order.
    """
    if S.group != T.group:
        raise GroupMismatch("wedge of G-sets over different groups")
    n = S.size
    t_index = []
    k = n
    for y in range(T.size):
        if y == T.basepoint:
            t_index.append(S.basepoint)
        else:
            t_index.append(k)
            k += 1
    action = []
    for g in S.group.elements:
        row = list(S.action[g]) + [0] * (k - n)
        for y in range(T.size):
            if y != T.basepoint:
                row[t_index[y]] = t_index[T.act(g, y)]
        action.append(row)
    W = PointedGSet(S.group, action, S.basepoint, check=False)
    i = PointedGMap(S, W, range(n), check=False)
    j = PointedGMap(T, W, t_index, check=False)
    return W, i, j
