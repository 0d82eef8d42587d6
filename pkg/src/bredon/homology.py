"""Normalized equivariant chains ``C_q = F^G(K_q, M)`` and their homology.

The basis of ``C_q`` consists of blocks, one per orbit representative ``s``
of nondegenerate non-basepoint ``q``-cells, each of size ``rank M(G/G_s)``.
A generator ``gamma_s(l)`` has boundary
``sum_i (-1)^i gamma_{d_i s}(M_*(G/G_s ->> G/G_{d_i s}) l)``, each term moved
to the representative of its orbit by a right translation.  Degenerate
faces and the basepoint are zero in the normalized complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coefficients import CoefficientSystem
from .errors import GroupMismatch, NotAComplex
from .gsets import GSet
from .linalg import nullspace, rank, smith_normal_form, solve
from .rings import Ring
from .simplicial import (
    FormalSimplex,
    SimplicialGMap,
    SimplicialGSet,
    add_basepoint,
    cell,
)


@dataclass
class ChainComplex:
    """``D[q]`` maps degree ``q`` to ``q-1`` (shape ``dim C_{q-1} x dim C_q``)."""

    ring: Ring
    blocks: list  # blocks[q] = [(cell, rank), ...]
    D: dict = field(default_factory=dict)

    @property
    def top(self) -> int:
        return len(self.blocks) - 1

    def dim(self, q: int) -> int:
        if not 0 <= q <= self.top:
            return 0
        return sum(r for _, r in self.blocks[q])

    def offsets(self, q: int) -> dict:
        out, k = {}, 0
        for c, r in self.blocks[q]:
            out[c] = k
            k += r
        return out

    def differential(self, q: int) -> np.ndarray:
        if q in self.D:
            return self.D[q]
        return self.ring.zeros(self.dim(q - 1), self.dim(q))

    def check(self):
        for q in range(2, self.top + 1):
            prod = self.ring.matmul(self.differential(q - 1), self.differential(q))
            if prod.size and any(x != 0 for x in prod.flat):
                raise NotAComplex(f"D_{q - 1} D_{q} != 0")


def _face_block(K: SimplicialGSet, M: CoefficientSystem, src_iso, x: FormalSimplex):
    """Image of ``gamma_s(-)`` under a map sending ``s`` to ``x``, as
    (target orbit representative, matrix), or None if ``x`` is zero in the
    normalized complex."""
    if x.word or K.is_base(x):
        return None
    lvl = K.level(x.dim)
    iso = lvl.isotropy(x.cell)
    P = M.project(src_iso, iso)
    T = M.translate(lvl.transporter(x.cell), iso)
    return lvl.orbit_rep(x.cell), M.ring.matmul(T, P)


def chain_complex(K: SimplicialGSet, M: CoefficientSystem) -> ChainComplex:
    if K.group != M.group:
        raise GroupMismatch("space and coefficient system are over different groups")
    R = M.ring
    blocks = [[(c, M.rank(K.isotropy(q, c))) for c in K.orbit_reps(q)] for q in range(K.dim + 1)]
    C = ChainComplex(R, blocks)
    for q in range(1, K.dim + 1):
        rows, cols = C.offsets(q - 1), C.offsets(q)
        D = R.zeros(C.dim(q - 1), C.dim(q))
        for s, r in blocks[q]:
            iso = K.isotropy(q, s)
            for i in range(q + 1):
                hit = _face_block(K, M, iso, K.faces[q][s][i])
                if hit is None:
                    continue
                t, B = hit
                a, b = rows[t], cols[s]
                sign = 1 if i % 2 == 0 else -1
                D[a:a + B.shape[0], b:b + r] += sign * B
        C.D[q] = R.reduce(D)
    return C


def induced_map(f: SimplicialGMap, M: CoefficientSystem, source: ChainComplex | None = None,
                target: ChainComplex | None = None) -> dict:
    """Chain map matrices ``F[q]: C_q(source) -> C_q(target)``."""
    K, L = f.source, f.target
    if K.group != L.group or K.group != M.group:
        raise GroupMismatch("map and coefficients over different groups")
    R = M.ring
    source = source or chain_complex(K, M)
    target = target or chain_complex(L, M)
    out = {}
    for q in range(K.dim + 1):
        rows, cols = target.offsets(q), source.offsets(q)
        F = R.zeros(target.dim(q), source.dim(q))
        for s, r in source.blocks[q]:
            hit = _face_block(L, M, K.isotropy(q, s), f(cell(q, s)))
            if hit is None:
                continue
            t, B = hit
            F[rows[t]:rows[t] + B.shape[0], cols[s]:cols[s] + r] += B
        out[q] = R.reduce(F)
    return out


def is_chain_map(F: dict, source: ChainComplex, target: ChainComplex) -> bool:
    R = source.ring
    for q in range(1, source.top + 1):
        lhs = R.matmul(target.differential(q), F[q])
        rhs = R.matmul(F[q - 1], source.differential(q))
        if not np.array_equal(lhs, rhs):
            return False
    return True


# -- homology ---------------------------------------------------------------


@dataclass(frozen=True)
class HomologyResult:
    ring: Ring
    betti: tuple
    torsion: tuple  # per degree, a tuple of invariant factors > 1

    def __getitem__(self, q: int) -> tuple[int, tuple]:
        if 0 <= q < len(self.betti):
            return self.betti[q], self.torsion[q]
        return 0, ()

    def trimmed(self, max_degree: int) -> HomologyResult:
        n = max_degree + 1
        pad = max(0, n - len(self.betti))
        return HomologyResult(self.ring, (self.betti + (0,) * pad)[:n], (self.torsion + ((),) * pad)[:n])

    def __add__(self, other: HomologyResult) -> HomologyResult:
        """Degreewise direct sum."""
        n = max(len(self.betti), len(other.betti))
        a, b = self.trimmed(n - 1), other.trimmed(n - 1)
        return HomologyResult(self.ring, tuple(x + y for x, y in zip(a.betti, b.betti)),
                              tuple(tuple(_merge_torsion(s + t)) for s, t in zip(a.torsion, b.torsion)))

    def equivalent(self, other: HomologyResult) -> bool:
        n = max(len(self.betti), len(other.betti))
        return self.trimmed(n - 1) == other.trimmed(n - 1)

    def is_zero(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def group_string(self, q: int) -> str:
        b, t = self[q]
        R = str(self.ring)
        parts = []
        if b:
            parts.append(R if b == 1 else f"{R}^{b}")
        parts += [f"Z/{d}" for d in t]
        return " ⊕ ".join(parts) if parts else "0"

    def __str__(self):
        return "\n".join(f"H_{q} = {self.group_string(q)}" for q in range(len(self.betti)))

    def to_json(self) -> dict:
        return {"ring": str(self.ring),
                "H": [{"q": q, "betti": b, "torsion": list(t)} for q, (b, t) in enumerate(zip(self.betti, self.torsion))]}


def _merge_torsion(ts) -> list[int]:
    """Invariant-factor form of a direct sum of cyclic groups ``Z/t``."""
    if not ts:
        return []
    inv = smith_normal_form([[t if i == j else 0 for j in range(len(ts))] for i, t in enumerate(ts)]).invariants
    return [d for d in inv if d > 1]


def homology(C: ChainComplex, check: bool = True) -> HomologyResult:
    if check:
        C.check()
    R = C.ring
    ranks, inv = {}, {}
    for q in range(1, C.top + 1):
        D = C.differential(q)
        if R.kind == "Z":
            snf = smith_normal_form(D)
            ranks[q], inv[q] = snf.rank, [abs(d) for d in snf.invariants if abs(d) > 1]
        else:
            ranks[q], inv[q] = rank(D, R), []
    betti, torsion = [], []
    for q in range(C.top + 1):
        betti.append(C.dim(q) - ranks.get(q, 0) - ranks.get(q + 1, 0))
        torsion.append(tuple(inv.get(q + 1, [])))
    return HomologyResult(R, tuple(betti), tuple(torsion))


def bredon_homology(K: SimplicialGSet, M: CoefficientSystem, max_degree: int | None = None) -> HomologyResult:
    """Reduced Bredon homology of the pointed simplicial G-set ``K``."""
    H = homology(chain_complex(K, M))
    return H if max_degree is None else H.trimmed(max_degree)


def discrete(S: GSet) -> SimplicialGSet:
    """The 0-dimensional simplicial G-set ``S^+``."""
    n = S.size
    action = [[list(row) + [n] for row in S.action]]
    return SimplicialGSet(S.group, [n + 1], [[]], action, n)


def unreduced_homology(K, M: CoefficientSystem, max_degree: int | None = None) -> HomologyResult:
    """``H_q(K; M) = H~_q(K^+; M)``; the basepoint of ``K`` (if any) is forgotten.

    ``K`` may also be a G-set, viewed as a discrete space.
    """
    Kp = discrete(K) if isinstance(K, GSet) else add_basepoint(K)
    return bredon_homology(Kp, M, max_degree)


def agree_on_homology(F: dict, G: dict, source: ChainComplex, target: ChainComplex) -> bool:
    """Whether two chain maps induce the same map on homology, i.e. ``F - G``
    sends every cycle to a boundary."""
    R = source.ring
    for q in range(source.top + 1):
        if source.dim(q) == 0:
            continue
        Z = nullspace(source.differential(q), R) if q else R.identity(source.dim(0))
        if Z.size == 0:
            continue
        diff = R.reduce(R.matmul(F[q] - G[q], Z))
        B = target.differential(q + 1)
        for j in range(diff.shape[1]):
            col = tuple(diff[:, j])
            if all(x == 0 for x in col):
                continue
            if B.shape[1] == 0 or solve(B, col, R) is None:
                return False
    return True
