"""Transfers for finite G-coverings.

For an ``n``-fold covering ``p: E -> X`` of finite G-sets and a Mackey
functor ``M`` the transfer ``t_p: F^G(X^+, M) -> F^G(E^+, M)`` is

    t(gamma_x(l)) = sum_y gamma_y(M^*(G/G_y ->> G/G_x) l)

with ``y`` running over representatives of the ``G_x``-orbits on the fibre
``p^-1(x)``.  :func:`check_axioms` tests pullback, normalization,
functoriality and ``p_* t_p = n`` on concrete instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .coefficients import MackeyFunctor, is_homological
from .errors import GroupMismatch, NotACovering, NotLevelwiseCovering
from .fgroups import FGElement, beta, fg_basis, generator, matrix_of, pushforward_G
from .groups import Group, Subgroup, left_cosets
from .gsets import GMap, GSet, PointedGMap, add_basepoint, coset_gset, plus
from .homology import ChainComplex, chain_complex, is_chain_map
from .orbits import OrbitMorphism
from .simplicial import SimplicialGMap, SimplicialGSet, cell


class GCovering:
    """An ``n``-fold covering ``p: E -> X`` of finite G-sets."""

    def __init__(self, total: GSet, base: GSet, values, check: bool = True):
        self.total = total
        self.base = base
        self.map = GMap(total, base, values, check=check)
        fibres = [[] for _ in range(base.size)]
        for e, x in enumerate(self.map.values):
            fibres[x].append(e)
        self.fibres = [tuple(f) for f in fibres]
        sizes = {len(f) for f in self.fibres}
        if check and len(sizes) > 1:
            raise NotACovering(f"fibres have different sizes {sorted(sizes)}")
        if check and base.size and 0 in sizes:
            raise NotACovering("map is not surjective")
        self.n = sizes.pop() if base.size else (0 if not total.size else None)
        if self.n is None:
            raise NotACovering("nonempty total space over an empty base")

    @property
    def group(self) -> Group:
        return self.base.group

    def __call__(self, e: int) -> int:
        return self.map(e)

    @cached_property
    def total_plus(self):
        return add_basepoint(self.total)

    @cached_property
    def base_plus(self):
        return add_basepoint(self.base)

    @cached_property
    def proj_plus(self) -> PointedGMap:
        return plus(self.map)

    def then(self, other: GCovering) -> GCovering:
        """The composite covering ``other o self``."""
        return GCovering(self.total, other.base, [other(x) for x in self.map.values])

    def __repr__(self):
        return f"GCovering({self.total.size} -> {self.base.size}, n={self.n})"


class Transfer:
    """``t_p`` for a fixed covering and Mackey functor.

    ``choose`` picks fibre-orbit representatives: a function from a sorted
    tuple of points to one of them (default ``min``).  The result does not
    depend on it.
    """

    def __init__(self, p: GCovering, M: MackeyFunctor, choose=min):
        if p.group != M.group:
            raise GroupMismatch("covering and coefficients over different groups")
        self.p = p
        self.M = M
        self.choose = choose

    def _fibre_reps(self, x: int) -> list[int]:
        p = self.p
        Gx = p.base.isotropy(x)
        seen, reps = set(), []
        for e in p.fibres[x]:
            if e in seen:
                continue
            orbit = tuple(sorted({p.total.act(h, e) for h in Gx}))
            seen.update(orbit)
            reps.append(self.choose(orbit))
        return reps

    def __call__(self, v: FGElement) -> FGElement:
        p, M = self.p, self.M
        E = p.total_plus
        out = FGElement(M, E)
        for x, l in v.support:
            Gx = p.base.isotropy(x)
            for y in self._fibre_reps(x):
                w = M.ring.apply(M.restrict(E.isotropy(y), Gx), l)
                out = out + beta(generator(M, E, w, y))
        return out

    def matrix(self) -> np.ndarray:
        M, p = self.M, self.p
        X, E = p.base_plus, p.total_plus
        return matrix_of(self, M, X, E, fg_basis(M, X), fg_basis(M, E))


def transfer(p: GCovering, M: MackeyFunctor, choose=min) -> Transfer:
    return Transfer(p, M, choose)


# -- building coverings ------------------------------------------------------


def identity_covering(X: GSet) -> GCovering:
    return GCovering(X, X, range(X.size), check=False)


def trivial_covering(X: GSet, n: int) -> GCovering:
    """``X x {0..n-1} -> X``, point ``(x, i)`` stored as ``x*n + i``."""
    action = [[row[e // n] * n + e % n for e in range(X.size * n)] for row in X.action]
    E = GSet(X.group, action, check=False)
    return GCovering(E, X, [e // n for e in range(X.size * n)])


def orbit_covering(f: OrbitMorphism) -> GCovering:
    """``G/H -> G/K`` from a morphism of the orbit category; ``n = [K:H]``."""
    G = f.group
    E, X = coset_gset(G, f.source), coset_gset(G, f.target)
    xreps = [r for r, _ in left_cosets(G, f.target)]
    where = {r: i for i, r in enumerate(xreps)}
    values = [where[f(r)] for r, _ in left_cosets(G, f.source)]
    return GCovering(E, X, values)


def disjoint_union(p: GCovering, q: GCovering) -> GCovering:
    if p.n != q.n:
        raise NotACovering(f"cannot join a {p.n}-fold and a {q.n}-fold covering")
    E = p.total.disjoint_union(q.total)
    X = p.base.disjoint_union(q.base)
    return GCovering(E, X, list(p.map.values) + [p.base.size + v for v in q.map.values])


def pullback(p: GCovering, f: GMap) -> tuple[GCovering, GMap]:
    """Fibre product ``Y x_X E`` with its projections ``p~: -> Y`` and ``f~: -> E``.

    Points are pairs ``(y, e)`` with ``f(y) = p(e)`` in lexicographic order.
    """
    if f.target != p.base:
        raise GroupMismatch("map does not land in the base of the covering")
    Y, E = f.source, p.total
    pairs = [(y, e) for y in range(Y.size) for e in p.fibres[f(y)]]
    index = {pe: i for i, pe in enumerate(pairs)}
    action = [[index[(Y.act(g, y), E.act(g, e))] for y, e in pairs] for g in p.group.elements]
    P = GSet(p.group, action, check=False)
    return GCovering(P, Y, [y for y, _ in pairs]), GMap(P, E, [e for _, e in pairs])


def random_gset(G: Group, rng: random.Random, orbits: int = 2) -> GSet:
    subs = G.subgroups
    S = GSet(G, [[]] * G.order, check=False)
    for _ in range(orbits):
        S = S.disjoint_union(coset_gset(G, rng.choice(subs)))
    return S


def random_covering(G: Group, rng: random.Random, n: int, orbits: int = 2) -> GCovering:
    """A random ``n``-fold covering over a random union of orbits."""
    return random_covering_over(random_gset(G, rng, orbits), rng, n)


def random_covering_over(X: GSet, rng: random.Random, n: int) -> GCovering:
    """A random ``n``-fold covering of ``X``.

    Over the orbit of ``x`` (isotropy ``K``) the total space is a union of
    orbits ``G/H`` mapped by ``aH -> agx`` with ``g^-1 H g <= K``, the
    indices ``[K : g^-1 H g]`` summing to ``n``.
    """
    G = X.group
    E = GSet(G, [[]] * G.order, check=False)
    values = []
    for x, _ in X.orbits():
        K = X.isotropy(x)
        left = n
        while left:
            choices = [(H, g) for H in G.subgroups if H.order <= K.order and K.order // H.order <= left
                       for g in G.elements if all(G.conj(G.inv(g), h) in K for h in H)]
            H, g = rng.choice(choices)
            E = E.disjoint_union(coset_gset(G, H))
            values += [X.act(G.mul(a, g), x) for a, _ in left_cosets(G, H)]
            left -= K.order // H.order
    return GCovering(E, X, values)


def random_map_into(X: GSet, rng: random.Random, orbits: int = 2) -> GMap:
    """A random G-map ``Y -> X`` from a union of orbits ``G/H``; each orbit is
    sent to a point fixed by ``H``."""
    G = X.group
    Y = GSet(G, [[]] * G.order, check=False)
    values = []
    for _ in range(orbits):
        H = rng.choice(G.subgroups)
        targets = X.fixed_points(H)
        if not targets:
            continue
        x = rng.choice(targets)
        cosets = left_cosets(G, H)
        Y = Y.disjoint_union(coset_gset(G, H))
        values += [X.act(r, x) for r, _ in cosets]
    return GMap(Y, X, values)


# -- axioms ------------------------------------------------------------------


@dataclass
class AxiomReport:
    """One row per (axiom, instance).  Rows with ``required=False`` are
    informational: ``p_* t = n`` is only promised for homological ``M``."""

    rows: list = field(default_factory=list)

    def add(self, axiom: str, instance: str, ok: bool, witness=None, required: bool = True):
        self.rows.append({"axiom": axiom, "instance": instance, "ok": bool(ok), "witness": witness,
                          "required": required})

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.rows if r["required"])

    def failures(self, required_only: bool = True) -> list:
        return [r for r in self.rows if not r["ok"] and (r["required"] or not required_only)]

    def summary(self) -> dict:
        out = {}
        for r in self.rows:
            s = out.setdefault(r["axiom"], {"passed": 0, "failed": 0, "required": r["required"]})
            s["passed" if r["ok"] else "failed"] += 1
        return out

    def __str__(self):
        lines = []
        for a, s in self.summary().items():
            note = "" if s["required"] else " (not required: coefficients are not homological)"
            lines.append(f"{a}: {s['passed']} passed, {s['failed']} failed{note}")
        for r in self.failures(required_only=False):
            tag = "FAIL" if r["required"] else "flagged"
            lines.append(f"  {tag} {r['axiom']} [{r['instance']}]: {r['witness']}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"ok": self.ok, "summary": self.summary(),
                "rows": [{**r, "witness": None if r["witness"] is None else str(r["witness"])} for r in self.rows]}


def _witness(A: np.ndarray, B: np.ndarray):
    """First column where two matrices differ, or None."""
    if A.shape != B.shape:
        return f"shapes {A.shape} != {B.shape}"
    for j in range(A.shape[1]):
        if not np.array_equal(A[:, j], B[:, j]):
            return f"generator {j}: {list(A[:, j])} != {list(B[:, j])}"
    return None


def _push_matrix(f: PointedGMap, M) -> np.ndarray:
    return matrix_of(lambda v: pushforward_G(f, v), M, f.source, f.target,
                     fg_basis(M, f.source), fg_basis(M, f.target))


def check_axioms(M: MackeyFunctor, coverings=(), pullbacks=(), composites=()) -> AxiomReport:
    """Check the transfer axioms.

    coverings : coverings for normalization (on their base) and for ``p_* t = n``,
        the latter only required when ``M`` is homological
    pullbacks : pairs ``(p, f)`` with ``f: Y -> X`` a G-map into the base of ``p``
    composites : pairs ``(p, q)`` with ``p: E -> X`` and ``q: X -> Y``
    """
    R = M.ring
    report = AxiomReport()
    homological = is_homological(M)
    for k, p in enumerate(coverings):
        ident = identity_covering(p.base)
        T = transfer(ident, M).matrix()
        I = R.identity(T.shape[0])
        report.add("normalization", f"covering {k}", np.array_equal(T, I), _witness(T, I))
        lhs = R.matmul(_push_matrix(p.proj_plus, M), transfer(p, M).matrix())
        rhs = R.reduce(R.identity(lhs.shape[0]) * R(p.n))
        report.add("multiplication_by_n", f"covering {k} (n={p.n})", np.array_equal(lhs, rhs), _witness(lhs, rhs),
                   required=homological)
    for k, (p, f) in enumerate(pullbacks):
        pt, ft = pullback(p, f)
        lhs = R.matmul(transfer(p, M).matrix(), _push_matrix(plus(f), M))
        rhs = R.matmul(_push_matrix(plus(ft), M), transfer(pt, M).matrix())
        report.add("pullback", f"square {k}", np.array_equal(lhs, rhs), _witness(lhs, rhs))
    for k, (p, q) in enumerate(composites):
        qp = p.then(q)
        lhs = transfer(qp, M).matrix()
        rhs = R.matmul(transfer(p, M).matrix(), transfer(q, M).matrix())
        report.add("functoriality", f"pair {k} (n={p.n}*{q.n})", np.array_equal(lhs, rhs), _witness(lhs, rhs))
    return report


# -- simplicial coverings ----------------------------------------------------


class SimplicialCovering:
    """A levelwise covering ``p: E -> X`` of simplicial G-sets with isolated basepoints.

    ``E`` and ``X`` stand for ``E'^+`` and ``X'^+``; ``p`` must send the
    basepoint to the basepoint and nondegenerate non-base cells to
    nondegenerate non-base cells with fibres of constant size ``n``.
    """

    def __init__(self, p: SimplicialGMap):
        self.map = p
        E, X = p.source, p.target
        self.total, self.base = E, X
        for K in (E, X):
            if any(f.dim == 0 and f.cell == K.basepoint and not f.word
                   for fs in K.faces[1:] for face in fs for f in face):
                raise NotLevelwiseCovering("basepoint must be an isolated vertex")
        self.levels = []
        self.n = None
        for q in range(E.dim + 1):
            if q > X.dim:
                raise NotLevelwiseCovering("total space has higher dimension than the base")
            ecells, xcells = self._live(E, q), self._live(X, q)
            ewhere = {c: i for i, c in enumerate(ecells)}
            xwhere = {c: i for i, c in enumerate(xcells)}
            values = []
            for c in ecells:
                y = p(cell(q, c))
                if y.word or y.cell not in xwhere:
                    raise NotLevelwiseCovering(f"cell ({q},{c}) does not map to a nondegenerate cell")
                values.append(xwhere[y.cell])
            try:
                cov = GCovering(_sub_gset(E, q, ecells, ewhere), _sub_gset(X, q, xcells, xwhere), values)
            except NotACovering as exc:
                raise NotLevelwiseCovering(f"dimension {q}: {exc}") from None
            if cov.n is not None and xcells:
                if self.n not in (None, cov.n):
                    raise NotLevelwiseCovering("fibre size changes between dimensions")
                self.n = cov.n
            self.levels.append(cov)
        if X.dim > E.dim and any(self._live(X, q) for q in range(E.dim + 1, X.dim + 1)):
            raise NotLevelwiseCovering("cells of the base without preimages")

    @staticmethod
    def _live(K: SimplicialGSet, q: int) -> list[int]:
        return [c for c in K.cells(q) if not (q == 0 and c == K.basepoint)]


def _sub_gset(K: SimplicialGSet, q: int, cells, where) -> GSet:
    return GSet(K.group, [[where[K.action[q][g][c]] for c in cells] for g in K.group.elements], check=False)


def transfer_chain_map(p: SimplicialCovering, M: MackeyFunctor, source: ChainComplex | None = None,
                       target: ChainComplex | None = None, verify: bool = True) -> dict:
    """Levelwise transfer ``C_q(X) -> C_q(E)`` in the chain-complex bases.

    Removing the isolated basepoint renumbers cells monotonically, so orbit
    representatives and block order agree with :func:`chain_complex`.
    """
    source = source or chain_complex(p.base, M)
    target = target or chain_complex(p.total, M)
    out = {q: transfer(cov, M).matrix() for q, cov in enumerate(p.levels)}
    if verify and not is_chain_map(out, source, target):
        raise NotLevelwiseCovering("levelwise transfer does not commute with the boundary")
    return out


def simplicial_trivial_covering(X: SimplicialGSet, n: int) -> SimplicialCovering:
    """``n`` disjoint copies of ``X`` (basepoint shared) mapping onto ``X``.

    Cell ``(c, i)`` of copy ``i`` is numbered ``c*n + i`` with the base
    vertex kept as a single point at the end of dimension 0.
    """
    b = X.basepoint
    number = []
    for q in range(X.dim + 1):
        live = [c for c in X.cells(q) if not (q == 0 and c == b)]
        pos = {c: k for k, c in enumerate(live)}
        number.append(pos)
    counts = [len(number[q]) * n for q in range(X.dim + 1)]
    base = counts[0]
    counts[0] += 1

    def idx(q, c, i):
        if q == 0 and c == b:
            return base
        return number[q][c] * n + i

    faces = [[]]
    for q in range(1, X.dim + 1):
        fs = [None] * counts[q]
        for c, k in number[q].items():
            for i in range(n):
                fs[k * n + i] = tuple(f._replace(cell=idx(f.dim, f.cell, i)) for f in X.faces[q][c])
        faces.append(fs)
    action = []
    for q in range(X.dim + 1):
        rows = []
        for g in X.group.elements:
            row = [None] * counts[q]
            for c, k in number[q].items():
                for i in range(n):
                    row[k * n + i] = idx(q, X.action[q][g][c], i)
            if q == 0:
                row[base] = base
            rows.append(row)
        action.append(rows)
    E = SimplicialGSet(X.group, counts, faces, action, base)
    images = [[None] * counts[q] for q in range(X.dim + 1)]
    for q in range(X.dim + 1):
        for c, k in number[q].items():
            for i in range(n):
                images[q][k * n + i] = cell(q, c)
    images[0][base] = cell(0, b)
    return SimplicialCovering(SimplicialGMap(E, X, images))


def quotient_covering(K: SimplicialGSet, N: Subgroup) -> SimplicialCovering:
    """``K -> K/N`` for a normal subgroup ``N`` acting freely off the basepoint."""
    from .simplicial import quotient_by

    Q = quotient_by(K, N)
    images = []
    for q in range(K.dim + 1):
        row = []
        rep_index = {}
        reps = sorted({min(K.action[q][m][c] for m in N) for c in K.cells(q)})
        rep_index = {r: i for i, r in enumerate(reps)}
        for c in K.cells(q):
            row.append(cell(q, rep_index[min(K.action[q][m][c] for m in N)]))
        images.append(row)
    return SimplicialCovering(SimplicialGMap(K, Q, images))
