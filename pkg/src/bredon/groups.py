"""Finite groups given by Cayley tables, their subgroups and cosets."""

from __future__ import annotations

import itertools
import os
from functools import cached_property

from .errors import (
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NonAssociative,
    OutOfRange,
    UnknownBuiltin,
)

DEFAULT_MAX_ORDER = 64


def max_group_order() -> int:
    return int(os.environ.get("BREDON_MAX_GROUP_ORDER", DEFAULT_MAX_ORDER))


class Group:
    """A finite group with elements ``0..n-1``; element 0 is the identity.

    ``table[a][b]`` is the product ``a*b``.  Construct with
    :func:`from_cayley_table` (validating) or one of the builders.
    """

    def __init__(self, table, name: str | None = None):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.name = name
        inv = [0] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
        self._inv = tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.table[self.table[g][h]][self._inv[g]]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    def __eq__(self, other):
        return isinstance(other, Group) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Group({self.name or 'order ' + str(self.order)})"

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    # -- subgroups ------------------------------------------------------
    def subgroup(self, elements) -> Subgroup:
        els = frozenset(int(e) for e in elements)
        closure = _closure(self, els)
        if closure != els:
            raise ValueError(f"{sorted(els)} is not a subgroup")
        return Subgroup(self, els)

    def generated(self, gens) -> Subgroup:
        return Subgroup(self, _closure(self, frozenset(gens) | {0}))

    @cached_property
    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, frozenset({0}))

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, frozenset(self.elements))

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(all_subgroups(self))

    def subgroup_index(self, H: Subgroup) -> int:
        """Position of ``H`` in :attr:`subgroups`; used as a stable id."""
        return self._subgroup_ids[H.elements]

    @cached_property
    def _subgroup_ids(self) -> dict:
        return {H.elements: i for i, H in enumerate(self.subgroups)}


def _closure(G: Group, els: frozenset) -> frozenset:
    out = set(els) | {0}
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in out:
                        out.add(c)
                        new.append(c)
        frontier = new
    return frozenset(out)


class Subgroup:
    """A subgroup of ``parent``; compares and hashes by its element set."""

    __slots__ = ("_els", "elements", "order", "parent")

    def __init__(self, parent: Group, elements: frozenset):
        self.parent = parent
        self._els = frozenset(elements)
        self.elements = tuple(sorted(self._els))
        self.order = len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._els

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def __le__(self, other: Subgroup) -> bool:
        return self._els <= other._els

    def __lt__(self, other: Subgroup) -> bool:
        return self._els < other._els

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subgroup({list(self.elements)})"

    @property
    def sort_key(self):
        return (self.order, self.elements)

    def index(self) -> int:
        return self.parent.order // self.order


def from_cayley_table(table, name: str | None = None) -> Group:
    """Validate a Cayley table and build the group.

    Raises ``OutOfRange``, ``NoIdentity``, ``NoInverse`` or ``NonAssociative``
    naming the first offending entry / triple.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise OutOfRange("empty table")
    if n > max_group_order():
        raise GroupTooLarge(f"order {n} exceeds cap {max_group_order()} (BREDON_MAX_GROUP_ORDER)")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise OutOfRange(f"row {a} has length {len(row)}, expected {n}")
        for b, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise OutOfRange(f"entry ({a},{b}) = {x!r} not in range(0, {n})")
    for a in range(n):
        if rows[0][a] != a or rows[a][0] != a:
            raise NoIdentity(f"element 0 is not a two-sided identity (fails at {a})")
    for a, b, c in itertools.product(range(n), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NonAssociative(f"(a*b)*c != a*(b*c) for (a,b,c) = ({a},{b},{c})")
    for a in range(n):
        right = [b for b in range(n) if rows[a][b] == 0]
        if not right or rows[right[0]][a] != 0:
            raise NoInverse(f"element {a} has no two-sided inverse")
    for a in range(n):
        if sorted(rows[a]) != list(range(n)):
            raise NoInverse(f"row {a} is not a permutation")
        if sorted(rows[b][a] for b in range(n)) != list(range(n)):
            raise NoInverse(f"column {a} is not a permutation")
    return Group(rows, name)


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by (size, elements)."""
    cyclic = {_closure(G, frozenset({g})) for g in G.elements}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                J = _closure(G, H | C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    return sorted((Subgroup(G, s) for s in found), key=lambda H: H.sort_key)


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """``g H g^-1``."""
    G = H.parent
    return Subgroup(G, frozenset(G.conj(g, h) for h in H))


def left_cosets(G: Group, H: Subgroup) -> list[tuple[int, tuple[int, ...]]]:
    """Left cosets ``aH`` as (minimal representative, sorted members)."""
    seen = set()
    out = []
    for a in G.elements:
        if a in seen:
            continue
        coset = tuple(sorted(G.mul(a, h) for h in H))
        seen.update(coset)
        out.append((coset[0], coset))
    return out


def coset_rep(G: Group, H: Subgroup, a: int) -> int:
    """Minimal element of ``aH``."""
    return min(G.mul(a, h) for h in H)


def normalizes(H: Subgroup, N: Subgroup) -> bool:
    return all(conjugate(N, h) == N for h in H)


# -- builders ------------------------------------------------------------


def trivial_group() -> Group:
    return Group([[0]], "trivial")


def cyclic_group(n: int) -> Group:
    return Group([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def _permutation_group(perms, name) -> Group:
    perms = list(perms)
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    G = Group(table, name)
    G.permutations = perms
    return G


def symmetric_group(n: int) -> Group:
    """``S_n`` with elements the permutations of ``range(n)`` in lexicographic order."""
    return _permutation_group(itertools.permutations(range(n)), f"S{n}")


def dihedral_group(n: int) -> Group:
    """Symmetries of the regular n-gon (order 2n) as vertex permutations."""
    perms = set()
    for k in range(n):
        perms.add(tuple((i + k) % n for i in range(n)))
        perms.add(tuple((k - i) % n for i in range(n)))
    return _permutation_group(sorted(perms), f"D{n}")


def product_group(G: Group, H: Group) -> Group:
    n, m = G.order, H.order
    table = [
        [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(n * m)]
        for a in range(n * m)
    ]
    return Group(table, f"{G.name}x{H.name}" if G.name and H.name else None)


def klein_four() -> Group:
    G = product_group(cyclic_group(2), cyclic_group(2))
    G.name = "V4"
    return G


def builtin_group(name: str) -> Group:
    """``trivial``, ``Z<n>``, ``S<n>`` (n <= 5), ``D<n>`` or ``V4``."""
    if name in ("trivial", "1", "Z1"):
        return trivial_group()
    if name == "V4":
        return klein_four()
    kind, digits = name[:1], name[1:]
    if digits.isdigit() and int(digits) >= 1:
        n = int(digits)
        if kind == "Z":
            G = cyclic_group(n)
        elif kind == "S" and n <= 5:
            G = symmetric_group(n)
        elif kind == "D" and n >= 2:
            G = dihedral_group(n)
        else:
            raise UnknownBuiltin(f"unknown group {name!r}")
        if G.order > max_group_order():
            raise GroupTooLarge(f"order {G.order} exceeds cap {max_group_order()} (BREDON_MAX_GROUP_ORDER)")
        return G
    raise UnknownBuiltin(f"unknown group {name!r}")
