"""The modules F(S, M) and F^G(S, M) for a pointed G-set S.

``FElement`` is a finitely supported section ``x -> u(x) in M(G/G_x)``
vanishing at the basepoint.  ``FGElement`` lives in the quotient
F^G(S, M), stored in the basis of orbit generators: one coordinate vector
in ``M(G/G_r)`` per orbit representative ``r``, meaning
``sum_r gamma_r(v_r)``.  Both are immutable; zero vectors are pruned so
equality is structural.
"""

from __future__ import annotations

from .coefficients import CoefficientSystem
from .errors import BasepointGenerator, GroupMismatch, RankMismatch
from .groups import left_cosets
from .gsets import PointedGMap, PointedGSet


class _Sparse:
    __slots__ = ("space", "support", "system")

    def __init__(self, system: CoefficientSystem, space: PointedGSet, support=()):
        self.system = system
        self.space = space
        R = system.ring
        items = support.items() if isinstance(support, dict) else support
        clean = {}
        for x, v in items:
            v = R.vector(v)
            if len(v) != self._rank_at(x):
                raise RankMismatch(f"vector of length {len(v)} at {x}, expected {self._rank_at(x)}")
            if not R.is_zero_vector(v):
                clean[int(x)] = v
        self._check_keys(clean)
        self.support = tuple(sorted(clean.items()))

    def _rank_at(self, x):
        return self.system.rank(self.space.isotropy(x))

    def _check_keys(self, clean):
        if self.space.basepoint in clean:
            raise BasepointGenerator("sections must vanish at the basepoint")

    def _like(self, support):
        return type(self)(self.system, self.space, support)

    def as_dict(self) -> dict:
        return dict(self.support)

    def __getitem__(self, x):
        d = self.as_dict()
        return d.get(x, (self.system.ring(0),) * self._rank_at(x))

    def is_zero(self) -> bool:
        return not self.support

    def _combine(self, other, sign):
        if other.space is not self.space and other.space != self.space:
            raise GroupMismatch("elements live on different G-sets")
        out = self.as_dict()
        for x, v in other.support:
            w = out.get(x, (0,) * len(v))
            out[x] = tuple(a + sign * b for a, b in zip(w, v))
        return self._like(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.system.ring(c)
        return self._like({x: tuple(c * a for a in v) for x, v in self.support})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return type(other) is type(self) and self.support == other.support and self.space == other.space

    def __hash__(self):
        return hash(self.support)

    def __repr__(self):
        body = ", ".join(f"{x}: {list(v)}" for x, v in self.support)
        return f"{type(self).__name__}({{{body}}})"


class FElement(_Sparse):
    """An element of F(S, M)."""


class FGElement(_Sparse):
    """An element of F^G(S, M) in orbit-generator coordinates."""

    def _check_keys(self, clean):
        super()._check_keys(clean)
        for x in clean:
            if self.space.orbit_rep(x) != x:
                raise ValueError(f"{x} is not an orbit representative")


def zero(M: CoefficientSystem, S: PointedGSet) -> FElement:
    return FElement(M, S)


def zero_G(M: CoefficientSystem, S: PointedGSet) -> FGElement:
    return FGElement(M, S)


def generator(M: CoefficientSystem, S: PointedGSet, l, x: int) -> FElement:
    """The section ``lx``: value ``l`` at ``x`` and zero elsewhere."""
    if x == S.basepoint:
        raise BasepointGenerator("no generators at the basepoint")
    l = M.ring.vector(l)
    if len(l) != M.rank(S.isotropy(x)):
        raise RankMismatch(f"|l| = {len(l)} but rank M(G/G_x) = {M.rank(S.isotropy(x))}")
    return FElement(M, S, {x: l})


def _accumulate(out: dict, x, v):
    if x in out:
        out[x] = tuple(a + b for a, b in zip(out[x], v))
    else:
        out[x] = v


def g_act(g: int, u: FElement) -> FElement:
    """``g . (lx) = M_*(R_{g^-1})(l) (gx)``, extended linearly."""
    M, S = u.system, u.space
    R = M.ring
    out = {}
    for x, l in u.support:
        _accumulate(out, S.act(g, x), R.apply(M.translate(g, S.isotropy(x)), l))
    return FElement(M, S, out)


def is_fixed(u: FElement) -> bool:
    return all(g_act(g, u) == u for g in u.space.group.elements)


def pushforward(f: PointedGMap, u: FElement) -> FElement:
    """``f_*(lx) = M_*(G/G_x ->> G/G_{f(x)})(l) f(x)``."""
    M = u.system
    R = M.ring
    S, T = f.source, f.target
    out = {}
    for x, l in u.support:
        y = f(x)
        if y == T.basepoint:
            continue
        _accumulate(out, y, R.apply(M.project(S.isotropy(x), T.isotropy(y)), l))
    return FElement(M, T, out)


def transport(M: CoefficientSystem, S: PointedGSet, x: int, l) -> tuple[int, tuple]:
    """Rewrite ``gamma_x(l)`` as ``gamma_r(l')`` with ``r`` the orbit representative.

    With ``h`` minimal such that ``h.x = r``, ``gamma_x = gamma_r M_*(R_{h^-1})``.
    """
    h = S.transporter(x)
    return S.orbit_rep(x), M.ring.apply(M.translate(h, S.isotropy(x)), l)


def beta(u: FElement) -> FGElement:
    """``beta(lx) = gamma_x(l)``: collapse each orbit onto its representative."""
    M, S = u.system, u.space
    out = {}
    for x, l in u.support:
        r, v = transport(M, S, x, l)
        _accumulate(out, r, v)
    return FGElement(M, S, out)


def gamma(M: CoefficientSystem, S: PointedGSet, l, x: int) -> FGElement:
    """The generator ``gamma_x(l)`` of F^G(S, M)."""
    return beta(generator(M, S, l, x))


def iota(v: FGElement) -> FElement:
    """Expand ``gamma_r(l)`` to ``sum_{[g] in G/G_r} M_*(R_{g^-1})(l) (gr)``."""
    M, S = v.system, v.space
    G = S.group
    R = M.ring
    out = {}
    for r, l in v.support:
        Gr = S.isotropy(r)
        for g, _ in left_cosets(G, Gr):
            _accumulate(out, S.act(g, r), R.apply(M.translate(g, Gr), l))
    return FElement(M, S, out)


def pushforward_G(f: PointedGMap, v: FGElement) -> FGElement:
    """``f^G_*(gamma_x(l)) = gamma_{f(x)}(M_*(G/G_x ->> G/G_{f(x)})(l))``."""
    M = v.system
    R = M.ring
    S, T = f.source, f.target
    out = {}
    for x, l in v.support:
        y = f(x)
        if y == T.basepoint:
            continue
        r, w = transport(M, T, y, R.apply(M.project(S.isotropy(x), T.isotropy(y)), l))
        _accumulate(out, r, w)
    return FGElement(M, T, out)


def alpha(v: FGElement) -> FGElement:
    """``beta o iota``: multiplies the coordinate at ``r`` by ``[G:G_r]``."""
    M, S = v.system, v.space
    R = M.ring
    return FGElement(M, S, {r: tuple(R(S.isotropy(r).index()) * a for a in l) for r, l in v.support})


def alpha_inverse(v: FGElement) -> FGElement:
    """Inverse of :func:`alpha`; raises ``ZeroDivisionError`` if an index is not a unit."""
    M, S = v.system, v.space
    R = M.ring
    return FGElement(M, S, {r: tuple(R.inverse(S.isotropy(r).index()) * a for a in l) for r, l in v.support})


# -- coordinates ----------------------------------------------------------


def fg_basis(M: CoefficientSystem, S: PointedGSet) -> list[tuple[int, int]]:
    """Basis of F^G(S, M) as (orbit representative, coordinate) pairs."""
    return [
        (r, j)
        for r, _ in S.orbits()
        if r != S.basepoint
        for j in range(M.rank(S.isotropy(r)))
    ]


def f_basis(M: CoefficientSystem, S: PointedGSet) -> list[tuple[int, int]]:
    return [(x, j) for x in range(S.size) if x != S.basepoint for j in range(M.rank(S.isotropy(x)))]


def to_vector(u: _Sparse, basis) -> tuple:
    R = u.system.ring
    d = u.as_dict()
    return tuple(d[x][j] if x in d else R(0) for x, j in basis)


def from_vector(cls, M, S, basis, vec):
    out = {}
    for (x, j), a in zip(basis, vec):
        out.setdefault(x, [0] * M.rank(S.isotropy(x)))[j] = a
    return cls(M, S, out)


def matrix_of(fn, M, source: PointedGSet, target: PointedGSet, src_basis, tgt_basis, cls=FGElement):
    """Matrix of a homomorphism given as a function on elements."""
    R = M.ring
    cols = []
    for k in range(len(src_basis)):
        e = [R(0)] * len(src_basis)
        e[k] = R(1)
        cols.append(to_vector(fn(from_vector(cls, M, source, src_basis, e)), tgt_basis))
    m = R.zeros(len(tgt_basis), len(src_basis))
    for k, col in enumerate(cols):
        for i, a in enumerate(col):
            m[i, k] = a
    return m
