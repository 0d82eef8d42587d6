"""Nonequivariant cross-checks.

Ordinary reduced homology of a pointed simplicial set, computed directly
from the face data with sympy's Smith form.  It shares no code with the
equivariant chain complex or its reduction, so agreement is meaningful:

* constant coefficients should give the homology of the orbit space,
* the linearization system should give the homology of the underlying space.
"""

from __future__ import annotations

from sympy import GF, QQ, ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from .coefficients import constant_system, linearization_system
from .homology import HomologyResult, bredon_homology
from .rings import ZZ as RZ
from .rings import Ring
from .simplicial import SimplicialGSet, orbit_quotient


def _boundary(K: SimplicialGSet, q: int) -> Matrix:
    """Reduced normalized boundary ``C_q -> C_{q-1}`` ignoring the group."""
    def live(d):
        return [c for c in range(K.counts[d]) if not (d == 0 and c == K.basepoint)]

    rows, cols = live(q - 1), live(q)
    where = {c: i for i, c in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for i, f in enumerate(K.faces[q][c]):
            if f.word or (f.dim == 0 and f.cell == K.basepoint):
                continue
            m[where[f.cell]][j] += (-1) ** i
    return Matrix(len(rows), len(cols), lambda a, b: m[a][b])


def ordinary_reduced_homology(K: SimplicialGSet, ring: Ring = RZ) -> HomologyResult:
    D = {q: _boundary(K, q) for q in range(1, K.dim + 1)}
    dims = [K.counts[q] - (1 if q == 0 else 0) for q in range(K.dim + 1)]
    ranks, tors = {}, {}
    for q, m in D.items():
        if 0 in m.shape:
            ranks[q], tors[q] = 0, []
        elif ring.kind == "Z":
            inv = [abs(int(d)) for d in invariant_factors(m, domain=ZZ) if d != 0]
            ranks[q], tors[q] = len(inv), [d for d in inv if d > 1]
        else:
            dom = QQ if ring.kind == "Q" else GF(ring.p)
            ranks[q], tors[q] = DomainMatrix.from_Matrix(m).convert_to(dom).rank(), []
    betti = tuple(dims[q] - ranks.get(q, 0) - ranks.get(q + 1, 0) for q in range(K.dim + 1))
    torsion = tuple(tuple(tors.get(q + 1, [])) for q in range(K.dim + 1))
    return HomologyResult(ring, betti, torsion)


def orbit_space_oracle(K: SimplicialGSet, ring: Ring = RZ) -> tuple[HomologyResult, HomologyResult]:
    """(Bredon homology with constant coefficients, ordinary homology of ``K/G``)."""
    return (bredon_homology(K, constant_system(K.group, ring)),
            ordinary_reduced_homology(orbit_quotient(K), ring))


def underlying_space_oracle(K: SimplicialGSet, ring: Ring = RZ) -> tuple[HomologyResult, HomologyResult]:
    """(Bredon homology with linearization coefficients, ordinary homology of ``K``)."""
    return (bredon_homology(K, linearization_system(K.group, ring)),
            ordinary_reduced_homology(K, ring))


def run_oracles(K: SimplicialGSet, ring: Ring = RZ) -> list[dict]:
    """All cross-checks for ``K`` as report rows."""
    out = []
    for name, fn in (("orbit_space", orbit_space_oracle), ("underlying_space", underlying_space_oracle)):
        got, want = fn(K, ring)
        out.append({"check": name, "ok": got.equivalent(want), "bredon": got, "oracle": want})
    return out
