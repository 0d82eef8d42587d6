"""The orbit category O(G).

Objects are subgroups ``H`` (standing for the orbit ``G/H``).  A morphism
``G/H -> G/K`` is determined by an element ``g`` with ``g^-1 H g <= K``; it
sends ``aH`` to ``agK``.  Two elements give the same map iff they lie in the
same coset ``gK``, and we store the minimal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NonComposable, NotAMorphism, NotASubgroupPair
from .groups import Group, Subgroup, conjugate, coset_rep, left_cosets


@dataclass(frozen=True)
class OrbitMorphism:
    source: Subgroup
    target: Subgroup
    rep: int

    def __post_init__(self):
        G = self.source.parent
        if not conjugate(self.source, G.inv(self.rep)) <= self.target:
            raise NotAMorphism(
                f"{self.rep}^-1 {list(self.source.elements)} {self.rep} is not inside "
                f"{list(self.target.elements)}"
            )
        canonical = coset_rep(G, self.target, self.rep)
        if canonical != self.rep:
            object.__setattr__(self, "rep", canonical)

    @property
    def group(self) -> Group:
        return self.source.parent

    def __call__(self, a: int) -> int:
        """Image of the coset ``aH`` (given by any member ``a``) as a minimal rep."""
        G = self.group
        return coset_rep(G, self.target, G.mul(a, self.rep))

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.rep in self.target

    @property
    def is_projection(self) -> bool:
        return self.rep in self.target and self.source <= self.target

    def __repr__(self):
        return (
            f"OrbitMorphism(G/{list(self.source.elements)} -> "
            f"G/{list(self.target.elements)}, rep={self.rep})"
        )


def identity(H: Subgroup) -> OrbitMorphism:
    return OrbitMorphism(H, H, 0)


def compose(f: OrbitMorphism, g: OrbitMorphism) -> OrbitMorphism:
    """``f o g`` (apply ``g`` first)."""
    if g.target != f.source:
        raise NonComposable(f"cannot compose {f} after {g}")
    G = f.group
    return OrbitMorphism(g.source, f.target, G.mul(g.rep, f.rep))


def right_translation(g: int, H: Subgroup) -> OrbitMorphism:
    """``R_{g^-1}: G/H -> G/gHg^-1``, ``aH -> a g^-1 (gHg^-1)``."""
    G = H.parent
    return OrbitMorphism(H, conjugate(H, g), G.inv(g))


def canonical_projection(H: Subgroup, K: Subgroup) -> OrbitMorphism:
    """``G/H -> G/K``, ``aH -> aK``; needs ``H <= K``."""
    if not H <= K:
        raise NotASubgroupPair(f"{list(H.elements)} is not contained in {list(K.elements)}")
    return OrbitMorphism(H, K, 0)


def hom_set(H: Subgroup, K: Subgroup) -> list[OrbitMorphism]:
    """All G-maps ``G/H -> G/K``, ordered by representative."""
    G = H.parent
    out = []
    for rep, _ in left_cosets(G, K):
        if conjugate(H, G.inv(rep)) <= K:
            out.append(OrbitMorphism(H, K, rep))
    return out


def factor(f: OrbitMorphism) -> tuple[OrbitMorphism, OrbitMorphism]:
    """Write ``f = R o q`` with ``q`` a canonical projection and ``R`` a right translation."""
    G = f.group
    g = G.inv(f.rep)
    middle = conjugate(f.target, f.rep)  # g^-1 K g with g = rep^-1
    q = canonical_projection(f.source, middle)
    R = right_translation(g, middle)
    return q, R


class OrbitCategory:
    """O(G) over all subgroups of ``G`` (not a skeleton)."""

    def __init__(self, G: Group):
        self.group = G

    @property
    def objects(self) -> tuple[Subgroup, ...]:
        return self.group.subgroups

    def hom(self, H: Subgroup, K: Subgroup) -> list[OrbitMorphism]:
        return self._homs[(H, K)]

    @cached_property
    def _homs(self) -> dict:
        return {(H, K): hom_set(H, K) for H in self.objects for K in self.objects}

    def morphisms(self):
        for fs in self._homs.values():
            yield from fs

    def generating_morphisms(self) -> list[OrbitMorphism]:
        """Projections along maximal inclusions plus non-identity right translations."""
        G = self.group
        out = []
        for H in self.objects:
            for K in self.maximal_overgroups(H):
                out.append(canonical_projection(H, K))
        for H in self.objects:
            seen = set()
            for g in G.elements:
                R = right_translation(g, H)
                if R.is_identity or R in seen:
                    continue
                seen.add(R)
                out.append(R)
        return out

    def maximal_overgroups(self, H: Subgroup) -> list[Subgroup]:
        over = [K for K in self.objects if H < K]
        return [K for K in over if not any(H < J < K for J in over)]

    def to_dict(self) -> dict:
        G = self.group
        ids = {H: i for i, H in enumerate(self.objects)}
        return {
            "group_order": G.order,
            "objects": [{"id": i, "elements": list(H.elements)} for H, i in ids.items()],
            "hom_sizes": [[len(self.hom(H, K)) for K in self.objects] for H in self.objects],
            "generators": [
                {"source": ids[f.source], "target": ids[f.target], "rep": f.rep,
                 "kind": "projection" if f.is_projection else "translation"}
                for f in self.generating_morphisms()
            ],
        }
