"""Covariant coefficient systems and Mackey functors on O(G).

Every value ``M(G/H)`` is a free module of finite rank over the ring and
every ``M_*(f)`` is a ``rank(K) x rank(H)`` matrix for ``f: G/H -> G/K``.
The tables are complete: every morphism of O(G) has an entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    CoefficientError,
    InconsistentCompletion,
    InvalidRepresentation,
    UnknownBuiltin,
)
from .groups import Group, Subgroup, conjugate, left_cosets
from .orbits import (
    OrbitCategory,
    OrbitMorphism,
    canonical_projection,
    compose,
    factor,
    identity,
    right_translation,
)
from .rings import ZZ, Ring, parse_ring


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, kind, morphisms, detail=""):
        self.violations.append({"kind": kind, "morphisms": [repr(f) for f in morphisms], "detail": detail})

    def __str__(self):
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s)"]
        for v in self.violations:
            lines.append(f"  {v['kind']}: {' ; '.join(v['morphisms'])} {v['detail']}".rstrip())
        return "\n".join(lines)


def _eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.all(a == b))


class CoefficientSystem:
    """A covariant functor ``M: O(G) -> R-mod`` with free values."""

    def __init__(self, group: Group, ring: Ring, ranks: dict, matrices: dict, name: str | None = None):
        self.group = group
        self.ring = ring
        self.ranks = {H: int(ranks[H]) for H in group.subgroups}
        self.matrices = matrices
        self.name = name

    @property
    def category(self) -> OrbitCategory:
        return OrbitCategory(self.group)

    def rank(self, H: Subgroup) -> int:
        return self.ranks[H]

    def matrix(self, f: OrbitMorphism) -> np.ndarray:
        """``M_*(f)``."""
        return self.matrices[f]

    def translate(self, g: int, H: Subgroup) -> np.ndarray:
        """``M_*(R_{g^-1})`` for ``R_{g^-1}: G/H -> G/gHg^-1``."""
        key = (g, H)
        cache = self.__dict__.setdefault("_tcache", {})
        if key not in cache:
            cache[key] = self.matrices[right_translation(g, H)]
        return cache[key]

    def project(self, H: Subgroup, K: Subgroup) -> np.ndarray:
        """``M_*`` of the canonical projection ``G/H -> G/K``."""
        key = (H, K)
        cache = self.__dict__.setdefault("_pcache", {})
        if key not in cache:
            cache[key] = self.matrices[canonical_projection(H, K)]
        return cache[key]

    @property
    def covariant(self) -> CoefficientSystem:
        return self

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        _check_functor(self, self.matrices, report, contravariant=False)
        return report

    def __repr__(self):
        return f"CoefficientSystem({self.name or '?'}, G={self.group!r}, ring={self.ring})"

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        G = self.group
        sid = G.subgroup_index
        gens = OrbitCategory(G).generating_morphisms()
        out = {
            "ring": self.ring.to_json(),
            "ranks": {str(sid(H)): n for H, n in self.ranks.items()},
            "generators": [
                {"morphism": _morphism_json(f), "matrix": _matrix_json(self.matrices[f])} for f in gens
            ],
        }
        return out


class MackeyFunctor(CoefficientSystem):
    """A coefficient system together with a contravariant part ``M^*``.

    ``comatrices[f]`` is ``M^*(f)``, a ``rank(H) x rank(K)`` matrix for
    ``f: G/H -> G/K``.  On right translations ``M^*`` must invert ``M_*``.
    """

    def __init__(self, group, ring, ranks, matrices, comatrices, name=None):
        super().__init__(group, ring, ranks, matrices, name)
        self.comatrices = comatrices

    def restriction(self, f: OrbitMorphism) -> np.ndarray:
        """``M^*(f)``."""
        return self.comatrices[f]

    def restrict(self, H: Subgroup, K: Subgroup) -> np.ndarray:
        """``M^*`` of the canonical projection ``G/H -> G/K``."""
        key = (H, K)
        cache = self.__dict__.setdefault("_rcache", {})
        if key not in cache:
            cache[key] = self.comatrices[canonical_projection(H, K)]
        return cache[key]

    @property
    def covariant(self) -> CoefficientSystem:
        return CoefficientSystem(self.group, self.ring, self.ranks, self.matrices, self.name)

    def validate(self) -> ValidationReport:
        report = super().validate()
        _check_functor(self, self.comatrices, report, contravariant=True)
        R = self.ring
        for f in self.matrices:
            if f.source.order == f.target.order:  # translation: invertible
                n = self.rank(f.source)
                if not _eq(R.matmul(self.comatrices[f], self.matrices[f]), R.identity(n)):
                    report.add("translation-not-inverse", [f], "M^*(R) M_*(R) != id")
        return report

    def to_json(self) -> dict:
        out = super().to_json()
        gens = OrbitCategory(self.group).generating_morphisms()
        out["contravariant"] = [
            {"morphism": _morphism_json(f), "matrix": _matrix_json(self.comatrices[f])} for f in gens
        ]
        return out

    def __repr__(self):
        return f"MackeyFunctor({self.name or '?'}, G={self.group!r}, ring={self.ring})"


def _check_functor(M, table, report, contravariant, limit=50):
    R = M.ring
    cat = OrbitCategory(M.group)
    for f in cat.morphisms():
        if f not in table:
            report.add("missing", [f])
            continue
        shape = (M.rank(f.source), M.rank(f.target)) if contravariant else (M.rank(f.target), M.rank(f.source))
        if table[f].shape != shape:
            report.add("shape", [f], f"{table[f].shape} != {shape}")
    if not report.ok:
        return
    tag = "contravariant-" if contravariant else ""
    for H in M.group.subgroups:
        if not _eq(table[identity(H)], R.identity(M.rank(H))):
            report.add(tag + "identity", [identity(H)])
    for H in cat.objects:
        for K in cat.objects:
            for g in cat.hom(H, K):
                for L in cat.objects:
                    for f in cat.hom(K, L):
                        fg = compose(f, g)
                        if contravariant:
                            expected = R.matmul(table[g], table[f])
                        else:
                            expected = R.matmul(table[f], table[g])
                        if not _eq(table[fg], expected):
                            report.add(tag + "composition", [f, g])
                            if len(report.violations) >= limit:
                                return


# -- completion from generators -----------------------------------------


def _complete(G: Group, ring: Ring, ranks: dict, generators: dict, contravariant: bool) -> dict:
    """Extend a table given on translations and maximal projections to all of O(G)."""
    cat = OrbitCategory(G)
    table = {identity(H): ring.identity(ranks[H]) for H in G.subgroups}

    def comp(f, g):  # matrix of f o g
        a, b = table[f], table[g]
        return ring.matmul(b, a) if contravariant else ring.matmul(a, b)

    trans_gens = {f: m for f, m in generators.items() if f.source.order == f.target.order}
    table.update(trans_gens)
    frontier = list(table)
    while frontier:
        new = []
        for t in frontier:
            for s in trans_gens:
                if s.source != t.target:
                    continue
                c = compose(s, t)
                if c not in table:
                    table[c] = comp(s, t)
                    new.append(c)
        frontier = new
    for H in G.subgroups:
        for g in G.elements:
            if right_translation(g, H) not in table:
                raise InconsistentCompletion(f"translation {right_translation(g, H)} not generated")

    proj = {f: m for f, m in generators.items() if f.source.order != f.target.order}
    for f in proj:
        if not f.is_projection:
            raise CoefficientError(f"generator {f} is neither a projection nor a translation")

    def projection(H, K):
        q = canonical_projection(H, K)
        if q in table:
            return table[q]
        if q in proj:
            table[q] = proj[q]
            return table[q]
        J = next((J for J in cat.maximal_overgroups(H) if J <= K), None)
        first = canonical_projection(H, J)
        if first not in proj:
            raise InconsistentCompletion(f"projection {first} missing from generators")
        table[first] = proj[first]
        projection(J, K)
        table[q] = comp(canonical_projection(J, K), first)
        return table[q]

    for f in cat.morphisms():
        if f in table:
            continue
        q, R = factor(f)
        projection(q.source, q.target)
        table[f] = comp(R, q)
    return table


def from_generators(G: Group, ring: Ring, ranks: dict, generators: dict, contravariant: dict | None = None,
                    name: str | None = None) -> CoefficientSystem:
    """Build a system from matrices on maximal projections and right translations.

    The rest of the table is obtained by factorization; the result is then
    validated and ``InconsistentCompletion`` is raised if it is not a functor.
    """
    ranks = {H: int(ranks.get(H, 0)) for H in G.subgroups}
    gens = {f: ring.matrix(m, shape=(ranks[f.target], ranks[f.source])) for f, m in generators.items()}
    table = _complete(G, ring, ranks, gens, contravariant=False)
    if contravariant is None:
        M = CoefficientSystem(G, ring, ranks, table, name)
    else:
        cogens = {f: ring.matrix(m, shape=(ranks[f.source], ranks[f.target])) for f, m in contravariant.items()}
        cotable = _complete(G, ring, ranks, cogens, contravariant=True)
        M = MackeyFunctor(G, ring, ranks, table, cotable, name)
    report = M.validate()
    if not report.ok:
        raise InconsistentCompletion(str(report))
    return M


def _morphism_json(f: OrbitMorphism) -> dict:
    G = f.group
    return {"source": G.subgroup_index(f.source), "target": G.subgroup_index(f.target), "rep": f.rep}


def _matrix_json(m: np.ndarray):
    return [[x if isinstance(x, int) else str(x) for x in row] for row in m.tolist()] if m.size else (
        [[] for _ in range(m.shape[0])])


def from_json(G: Group, data: dict, ring: Ring | None = None) -> CoefficientSystem:
    ring = ring or parse_ring(data.get("ring", "Z"))
    subs = G.subgroups
    ranks = {subs[int(k)]: int(v) for k, v in data["ranks"].items()}
    ranks = {H: ranks.get(H, 0) for H in subs}

    def morphisms(entries):
        out = {}
        for e in entries:
            m = e["morphism"]
            f = OrbitMorphism(subs[int(m["source"])], subs[int(m["target"])], int(m["rep"]))
            out[f] = [[_parse_scalar(x) for x in row] for row in e["matrix"]]
        return out

    co = morphisms(data["contravariant"]) if "contravariant" in data else None
    return from_generators(G, ring, ranks, morphisms(data.get("generators", [])), co, data.get("name"))


def _parse_scalar(x):
    from fractions import Fraction

    return Fraction(x) if isinstance(x, str) else x


# -- built-in systems ---------------------------------------------------


def constant_system(G: Group, ring: Ring = ZZ) -> MackeyFunctor:
    """Rank one everywhere, every ``M_*`` the identity.

    The contravariant part multiplies by the number of points in a fibre,
    which makes it a (homological) Mackey functor.
    """
    one = ring.identity(1)
    mats, comats = {}, {}
    for f in OrbitCategory(G).morphisms():
        mats[f] = one
        comats[f] = ring.matrix([[f.target.order // f.source.order]])
    return MackeyFunctor(G, ring, {H: 1 for H in G.subgroups}, mats, comats, "constant")


def linearization_system(G: Group, ring: Ring = ZZ) -> MackeyFunctor:
    """``M(G/H)`` free on the cosets ``G/H``; ``M_*`` pushes forward, ``M^*`` pulls back."""
    cosets = {H: [rep for rep, _ in left_cosets(G, H)] for H in G.subgroups}
    pos = {H: {a: i for i, a in enumerate(reps)} for H, reps in cosets.items()}
    mats, comats = {}, {}
    for f in OrbitCategory(G).morphisms():
        H, K = f.source, f.target
        m = [[0] * len(cosets[H]) for _ in cosets[K]]
        for j, a in enumerate(cosets[H]):
            m[pos[K][f(a)]][j] = 1
        mats[f] = ring.matrix(m, shape=(len(cosets[K]), len(cosets[H])))
        comats[f] = mats[f].T.copy()
    return MackeyFunctor(G, ring, {H: len(c) for H, c in cosets.items()}, mats, comats, "linearization")


def zero_transfer_system(G: Group, ring: Ring = ZZ) -> MackeyFunctor:
    """Rank one, identity on translations, zero on proper projections (both ways).

    Functorial in both directions but not homological; it also fails the
    double coset formula, so it is only useful as a negative example.
    """
    mats = {}
    for f in OrbitCategory(G).morphisms():
        mats[f] = ring.matrix([[1 if f.source.order == f.target.order else 0]])
    return MackeyFunctor(G, ring, {H: 1 for H in G.subgroups}, mats, dict(mats), "zero_transfer")


def _check_representation(G: Group, rho, ring: Ring):
    n = rho[0].shape[0]
    if not _eq(ring.reduce(rho[0]), ring.identity(n)):
        raise InvalidRepresentation("rho(e) is not the identity")
    for g in G.elements:
        for h in G.elements:
            if not _eq(ring.matmul(rho[g], rho[h]), ring.reduce(rho[G.mul(g, h)])):
                raise InvalidRepresentation(f"rho({g}) rho({h}) != rho({G.mul(g, h)})")


def _left_inverse(B: np.ndarray, ring: Ring) -> np.ndarray:
    """``P`` with ``P @ B == I`` for a basis matrix ``B`` of a saturated submodule."""
    n, d = B.shape
    if d == 0:
        return ring.zeros(0, n)
    if ring.kind == "Z":
        snf = linalg.smith_normal_form(B, transforms=True)
        if snf.invariants != (1,) * d:
            raise CoefficientError("basis does not span a saturated sublattice")
        return ring.matrix(snf.V.dot(snf.U[:d, :]), shape=(d, n))
    _, rows = linalg.rref(B.T, ring)
    Bs = ring.matrix(B[rows, :], shape=(d, d))
    aug = np.concatenate([Bs, ring.identity(d)], axis=1)
    R, _ = linalg.rref(aug, ring)
    inv = ring.matrix([r[d:] for r in R], shape=(d, d))
    P = ring.zeros(d, n)
    for k, r in enumerate(rows):
        P[:, r] = inv[:, k]
    return P


def fixed_point_mackey(G: Group, action, ring: Ring = ZZ, name: str | None = None) -> MackeyFunctor:
    """The fixed point Mackey functor ``G/H -> L^H`` of a ``G``-module ``L = R^n``.

    ``action[g]`` is the integer matrix of ``g`` acting on ``L``.  Along
    ``f: G/H -> G/K`` with representative ``r`` (``J = r^-1 H r <= K``) the
    covariant map is ``l -> sum_{kJ in K/J} k r^-1 l`` and the contravariant
    map is ``l -> r l``.  Bases of ``L^H`` are kernel bases in Hermite form.
    """
    rho = [ring.matrix(a) for a in action]
    if len(rho) != G.order:
        raise InvalidRepresentation(f"need {G.order} matrices, got {len(rho)}")
    n = rho[0].shape[0]
    if any(r.shape != (n, n) for r in rho):
        raise InvalidRepresentation("matrices must all be square of the same size")
    _check_representation(G, rho, ring)

    kernel_ring = ZZ if ring.kind in ("Z", "Q") else ring
    bases, left_inv = {}, {}
    for H in G.subgroups:
        if n == 0:
            B = ring.zeros(0, 0)
        else:
            stacked = np.concatenate([rho[h] - ring.identity(n) for h in H], axis=0)
            B = linalg.nullspace(stacked, kernel_ring)
        bases[H] = ring.matrix(B, shape=B.shape)
        P = _left_inverse(kernel_ring.matrix(B, shape=B.shape), kernel_ring)
        left_inv[H] = ring.matrix(P, shape=P.shape)

    mats, comats = {}, {}
    for f in OrbitCategory(G).morphisms():
        H, K, r = f.source, f.target, f.rep
        J = conjugate(H, G.inv(r))
        T = ring.zeros(n, n)
        for k, _ in left_cosets(G, J):
            if k in K:
                T = T + rho[k]
        T = ring.matmul(ring.reduce(T), rho[G.inv(r)])
        mats[f] = ring.matmul(left_inv[K], ring.matmul(T, bases[H]))
        comats[f] = ring.matmul(left_inv[H], ring.matmul(rho[r], bases[K]))
    ranks = {H: bases[H].shape[1] for H in G.subgroups}
    return MackeyFunctor(G, ring, ranks, mats, comats, name or "fixed_point")


def is_homological(M: MackeyFunctor) -> bool:
    """``M_*(q) M^*(q) = [K:H] id`` for every canonical projection ``q: G/H -> G/K``."""
    R = M.ring
    for K in M.group.subgroups:
        for H in M.group.subgroups:
            if not H <= K:
                continue
            q = canonical_projection(H, K)
            lhs = R.matmul(M.matrix(q), M.restriction(q))
            rhs = R.reduce(R.identity(M.rank(K)) * R(K.order // H.order))
            if not _eq(lhs, rhs):
                return False
    return True


def sign_action(G: Group) -> list:
    """The sign of left multiplication on ``G``, as 1x1 matrices (a homomorphism to +-1)."""
    out = []
    for g in G.elements:
        perm = [G.mul(g, h) for h in G.elements]
        seen, sign = set(), 1
        for start in G.elements:
            if start in seen:
                continue
            length, x = 0, start
            while x not in seen:
                seen.add(x)
                x = perm[x]
                length += 1
            if length % 2 == 0:
                sign = -sign
        out.append([[sign]])
    return out


def regular_action(G: Group) -> list:
    out = []
    for g in G.elements:
        m = [[0] * G.order for _ in G.elements]
        for h in G.elements:
            m[G.mul(g, h)][h] = 1
        out.append(m)
    return out


BUILTIN_SYSTEMS = ("constant", "linearization", "fixed_point", "sign", "regular", "zero_transfer")
HOMOLOGICAL_BUILTINS = ("constant", "linearization", "fixed_point", "sign", "regular")


def builtin_system(name: str, G: Group, ring: Ring = ZZ) -> MackeyFunctor:
    if name == "constant":
        return constant_system(G, ring)
    if name == "linearization":
        return linearization_system(G, ring)
    if name == "fixed_point":
        return fixed_point_mackey(G, [[[1]] for _ in G.elements], ring, "fixed_point")
    if name == "sign":
        return fixed_point_mackey(G, sign_action(G), ring, "sign")
    if name == "regular":
        return fixed_point_mackey(G, regular_action(G), ring, "regular")
    if name == "zero_transfer":
        return zero_transfer_system(G, ring)
    raise UnknownBuiltin(f"unknown coefficient system {name!r}; choose from {', '.join(BUILTIN_SYSTEMS)}")
