"""Dense matrices over R, C, H and the complexified quaternions C(x)H."""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from .division import Quaternion

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"
CQUATERNION = "CH"
RINGS = (REAL, COMPLEX, QUATERNION, CQUATERNION)

RANK_TOL = 1e-9


@dataclass(frozen=True)
class CQuaternion:
    """a + b*i where a, b are quaternions and i is a central square root of -1."""

    a: Quaternion = Quaternion()
    b: Quaternion = Quaternion()

    def __add__(self, other):
        other = _as_cquat(other)
        if other is None:
            return NotImplemented
        return CQuaternion(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CQuaternion(-self.a, -self.b)

    def __sub__(self, other):
        other = _as_cquat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_cquat(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return CQuaternion(a * c - b * d, a * d + b * c)

    def __rmul__(self, other):
        other = _as_cquat(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = _as_cquat(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))


def _as_cquat(x) -> CQuaternion | None:
    if isinstance(x, CQuaternion):
        return x
    if isinstance(x, Quaternion):
        return CQuaternion(x, Quaternion())
    if isinstance(x, complex):
        return CQuaternion(Quaternion(x.real), Quaternion(x.imag))
    if isinstance(x, Number):
        return CQuaternion(Quaternion(x), Quaternion())
    return None


IMAG = CQuaternion(Quaternion(), Quaternion(1))


def zero(ring: str):
    return {REAL: 0, COMPLEX: 0j, QUATERNION: Quaternion(), CQUATERNION: CQuaternion()}[ring]


def one(ring: str):
    return {
        REAL: 1,
        COMPLEX: 1 + 0j,
        QUATERNION: Quaternion(1),
        CQUATERNION: CQuaternion(Quaternion(1)),
    }[ring]


def lift(x, ring: str):
    """Embed a scalar from a smaller ring (R into C, H into CH, ...)."""
    if ring == REAL:
        if isinstance(x, complex):
            raise TypeError(f"cannot place {x!r} in R")
        return x
    if ring == COMPLEX:
        if isinstance(x, (Quaternion, CQuaternion)):
            raise TypeError(f"cannot place {x!r} in C")
        return complex(x)
    if ring == QUATERNION:
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, complex) or isinstance(x, CQuaternion):
            raise TypeError(f"cannot place {x!r} in H")
        return Quaternion(x)
    return _as_cquat(x)


def to_reals(x, ring: str) -> list[float]:
    if ring == REAL:
        return [float(x)]
    if ring == COMPLEX:
        x = complex(x)
        return [x.real, x.imag]
    if ring == QUATERNION:
        return [float(c) for c in x]
    return [float(c) for c in x.a] + [float(c) for c in x.b]


REAL_WIDTH = {REAL: 1, COMPLEX: 2, QUATERNION: 4, CQUATERNION: 8}


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class RingMatrix:
    rows: int
    cols: int
    entries: tuple
    ring: str

    def __post_init__(self):
        if self.ring not in RINGS:
            raise ValueError(f"unknown ring {self.ring!r}")
        entries = tuple(lift(e, self.ring) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: str) -> "RingMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, tuple(e for r in rows for e in r), ring)

    @classmethod
    def from_array(cls, arr, ring: str) -> "RingMatrix":
        arr = np.asarray(arr)
        return cls.from_rows(
            [[e.item() if hasattr(e, "item") else e for e in row] for row in arr], ring
        )

    @classmethod
    def identity(cls, size: int, ring: str) -> "RingMatrix":
        z, u = zero(ring), one(ring)
        return cls(size, size, tuple(u if r == c else z for r in range(size) for c in range(size)), ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: str) -> "RingMatrix":
        return cls(rows, cols, (zero(ring),) * (rows * cols), ring)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_ring(self, ring: str) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, self.entries, ring)

    def _check(self, other: "RingMatrix"):
        if self.ring != other.ring:
            raise ShapeError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RingMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)), self.ring)

    def __neg__(self):
        return RingMatrix(self.rows, self.cols, tuple(-e for e in self.entries), self.ring)

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in range(self.rows):
            left = self.row(r)
            for c in range(other.cols):
                acc = zero(self.ring)
                for k in range(self.cols):
                    acc = acc + left[k] * other.entries[k * other.cols + c]
                out.append(acc)
        return RingMatrix(self.rows, other.cols, tuple(out), self.ring)

    def scale(self, s, side: str = "left") -> "RingMatrix":
        """Multiply every entry by ``s`` (on the given side; H does not commute)."""
        s = lift(s, self.ring)
        if side == "left":
            entries = tuple(s * e for e in self.entries)
        else:
            entries = tuple(e * s for e in self.entries)
        return RingMatrix(self.rows, self.cols, entries, self.ring)

    def __mul__(self, s):
        if isinstance(s, RingMatrix):
            return NotImplemented
        return self.scale(s, "right")

    def __rmul__(self, s):
        return self.scale(s, "left")

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries, self.ring))

    def isclose(self, other: "RingMatrix", tol: float = 0.0) -> bool:
        self._check(other)
        if self.shape != other.shape:
            return False
        a = np.array(flatten_real(self))
        b = np.array(flatten_real(other))
        return bool(np.all(np.abs(a - b) <= tol))

    def is_scalar_identity(self):
        """+1 or -1 when the matrix is plus/minus the identity, else None."""
        if self.rows != self.cols:
            return None
        ident = RingMatrix.identity(self.rows, self.ring)
        if self == ident:
            return 1
        if self == -ident:
            return -1
        return None


def mat_arith(op: str, lhs: RingMatrix, rhs=None, tol: float = 0.0):
    """Dispatch ``add``, ``mul``, ``scale`` or ``equal`` on ring matrices."""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs @ rhs
    if op == "scale":
        return lhs.scale(rhs)
    if op == "equal":
        return lhs.isclose(rhs, tol) if tol else lhs == rhs
    raise ValueError(f"unknown matrix operation {op!r}")


def flatten_real(m: RingMatrix) -> list[float]:
    out = []
    for e in m.entries:
        out.extend(to_reals(e, m.ring))
    return out


def ambient_real_dim(size: int, ring: str) -> int:
    return REAL_WIDTH[ring] * size * size


def real_rank(vectors: Iterable[Sequence[float]], tol: float = RANK_TOL) -> int:
    """Rank by Gaussian elimination with partial pivoting."""
    rows = [list(map(float, v)) for v in vectors]
    if not rows:
        return 0
    a = np.array(rows, dtype=float)
    if a.ndim != 2:
        raise ValueError("vectors must share one length")
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = rank + int(np.argmax(np.abs(a[rank:, col])))
        if abs(a[pivot, col]) <= tol:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank + 1 :] -= np.outer(a[rank + 1 :, col] / a[rank, col], a[rank])
        rank += 1
    return rank


def diag2_embed(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Block-diagonal matrix [[a, 0], [0, b]]."""
    if a.ring != b.ring:
        raise ShapeError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.rows != a.cols or a.shape != b.shape:
        raise ShapeError(f"diag2 needs equal square blocks, got {a.shape} and {b.shape}")
    m = a.rows
    z = zero(a.ring)
    rows = []
    for r in range(m):
        rows.append(list(a.row(r)) + [z] * m)
    for r in range(m):
        rows.append([z] * m + list(b.row(r)))
    return RingMatrix.from_rows(rows, a.ring)
