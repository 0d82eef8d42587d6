"""Coefficient rings: the integers, the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime

from .errors import BredonError


@dataclass(frozen=True)
class Ring:
    """One of Z, Q or F_p.

    Elements are plain Python ``int`` (Z and F_p, the latter reduced into
    ``range(p)``) or ``fractions.Fraction`` (Q).
    """

    kind: str  # "Z", "Q" or "Fp"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Fp"):
            raise BredonError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Fp" and not isprime(self.p):
            raise BredonError(f"F_p needs p prime, got {self.p}")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __str__(self):
        return f"F{self.p}" if self.kind == "Fp" else self.kind

    def to_json(self):
        return {"Fp": self.p} if self.kind == "Fp" else self.kind

    # -- scalars ---------------------------------------------------------
    def __call__(self, x):
        """Coerce an integer (or fraction, for Q) into the ring."""
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise BredonError(f"{x} is not an integer")
                return int(x.numerator)
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p
        return int(x) % self.p

    def is_unit(self, x) -> bool:
        x = self(x)
        if self.kind == "Z":
            return x in (1, -1)
        return x != 0

    def inverse(self, x):
        x = self(x)
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not invertible in {self}")
        if self.kind == "Z":
            return x
        if self.kind == "Q":
            return 1 / x
        return pow(x, -1, self.p)

    # -- vectors and matrices -------------------------------------------
    def vector(self, values) -> tuple:
        return tuple(self(v) for v in values)

    def matrix(self, rows, shape=None) -> np.ndarray:
        """Object-dtype matrix with entries coerced into the ring."""
        if shape is not None and (shape[0] == 0 or shape[1] == 0):
            return np.zeros(shape, dtype=object)
        arr = np.array(rows, dtype=object)
        if arr.ndim != 2:
            if shape is None:
                raise BredonError("matrix must be two-dimensional")
            arr = arr.reshape(shape)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        if shape is not None and out.shape != tuple(shape):
            raise BredonError(f"matrix has shape {out.shape}, expected {tuple(shape)}")
        return out

    def zeros(self, m: int, n: int) -> np.ndarray:
        out = np.empty((m, n), dtype=object)
        out.fill(self(0))
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self(1)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.kind == "Fp" and arr.size:
            return arr % self.p
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return self.reduce(a.dot(b))

    def apply(self, a: np.ndarray, v: tuple) -> tuple:
        """Matrix times coordinate vector."""
        if a.shape[1] != len(v):
            raise BredonError(f"cannot apply {a.shape} matrix to vector of length {len(v)}")
        out = []
        for row in a:
            s = self(0)
            for x, y in zip(row, v):
                s += x * y
            out.append(s)
        return self.vector(out)

    def is_zero_vector(self, v) -> bool:
        return all(self(x) == 0 for x in v)


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    return Ring("Fp", p)


def parse_ring(spec) -> Ring:
    """Parse ``"Z"``, ``"Q"``, ``"Fp:5"``, ``"F5"`` or ``{"Fp": 5}``."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, dict):
        if set(spec) != {"Fp"}:
            raise BredonError(f"bad ring {spec!r}")
        return GF(int(spec["Fp"]))
    s = str(spec).strip()
    if s in ("Z", "ZZ"):
        return ZZ
    if s in ("Q", "QQ"):
        return QQ
    if s.startswith("Fp:"):
        return GF(int(s[3:]))
    if s.startswith("F") and s[1:].isdigit():
        return GF(int(s[1:]))
    raise BredonError(f"bad ring {spec!r}")
