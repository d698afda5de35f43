"""Quaternions, octonions and the quaternion matrix embeddings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number

import numpy as np

UNIT_TOL = 1e-9
AXIS_TOL = 1e-12


@dataclass(frozen=True)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k. Components may be ints, Fractions or floats."""

    x0: object = 0
    x1: object = 0
    x2: object = 0
    x3: object = 0

    @classmethod
    def from_seq(cls, seq) -> "Quaternion":
        return cls(*seq)

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(*(a + b for a, b in zip(self, other)))
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(self.x0 + other, self.x1, self.x2, self.x3)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        if isinstance(other, (Quaternion, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(*(c * other for c in self))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(*(other * c for c in self))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            return Quaternion(*(c / other for c in self))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __bool__(self):
        return any(c != 0 for c in self)

    def conj(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm_squared(self):
        return sum(c * c for c in self)

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def inverse(self) -> "Quaternion | None":
        n2 = self.norm_squared()
        if n2 == 0:
            return None
        return self.conj() / n2

    def vector(self) -> tuple:
        return (self.x1, self.x2, self.x3)

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self, other))


ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def quat_mul(g: Quaternion, h: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = g
    b0, b1, b2, b3 = h
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj_norm_inv(h: Quaternion):
    """(conjugate, norm, inverse); the inverse is None for h = 0."""
    return h.conj(), h.norm(), h.inverse()


@dataclass(frozen=True)
class AxisAngle:
    angle: float
    axis: tuple[float, float, float]

    def __post_init__(self):
        w = tuple(float(c) for c in self.axis)
        if len(w) != 3:
            raise ValueError(f"axis must have 3 components, got {len(w)}")
        if abs(math.sqrt(sum(c * c for c in w)) - 1.0) > AXIS_TOL:
            raise ValueError(f"axis {w} is not a unit vector")
        object.__setattr__(self, "axis", w)
        object.__setattr__(self, "angle", normalize_angle(self.angle))


def normalize_angle(a: float) -> float:
    """Reduce ``a`` modulo 2*pi into (-pi, pi]."""
    r = math.remainder(a, 2 * math.pi)
    return math.pi if r <= -math.pi else r


def quat_exp(aa: AxisAngle) -> Quaternion:
    c, s = math.cos(aa.angle), math.sin(aa.angle)
    w1, w2, w3 = aa.axis
    return Quaternion(c, w1 * s, w2 * s, w3 * s)


def quat_rotate(h: Quaternion, x) -> tuple[float, float, float]:
    """Apply x -> h x conj(h) to a 3-vector; h must be a unit quaternion."""
    if abs(h.norm() - 1.0) > UNIT_TOL:
        raise ValueError(f"quaternion {h} is not a unit quaternion")
    if len(x) != 3:
        raise ValueError(f"expected a 3-vector, got {len(x)} components")
    image = h * Quaternion(0, *x) * h.conj()
    return image.vector()


def phi0_embed(h: Quaternion) -> np.ndarray:
    """2x2 complex matrix of ``h``."""
    x0, x1, x2, x3 = (complex(c) for c in h)
    return np.array(
        [[x0 + x1 * 1j, x2 + x3 * 1j], [-x2 + x3 * 1j, x0 - x1 * 1j]],
        dtype=np.complex128,
    )


def phi1_embed(h: Quaternion) -> np.ndarray:
    """4x4 real matrix of ``h``."""
    x0, x1, x2, x3 = h
    return np.array(
        [
            [x0, -x1, x3, -x2],
            [x1, x0, -x2, -x3],
            [-x3, x2, x0, -x1],
            [x2, x3, x1, x0],
        ]
    )


@dataclass(frozen=True)
class Octonion:
    """Pair (a, b) of quaternions."""

    a: Quaternion = Quaternion()
    b: Quaternion = Quaternion()

    @classmethod
    def from_seq(cls, seq) -> "Octonion":
        seq = list(seq)
        if len(seq) != 8:
            raise ValueError(f"expected 8 components, got {len(seq)}")
        return cls(Quaternion(*seq[:4]), Quaternion(*seq[4:]))

    def __iter__(self):
        yield from self.a
        yield from self.b

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return Octonion(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, Number) and not isinstance(other, complex):
            return Octonion(self.a * other, self.b * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, complex):
            return Octonion(other * self.a, other * self.b)
        return NotImplemented

    def __truediv__(self, other):
        return Octonion(self.a / other, self.b / other)

    def conj(self) -> "Octonion":
        return Octonion(self.a.conj(), -self.b)

    def norm_squared(self):
        return self.a.norm_squared() + self.b.norm_squared()

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def inverse(self) -> "Octonion | None":
        n2 = self.norm_squared()
        if n2 == 0:
            return None
        return self.conj() / n2


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    """Cayley-Dickson product (h0, h1)(h2, h3) = (h0 h2 - h3 conj(h1), conj(h0) h3 + h2 h1)."""
    h0, h1 = x.a, x.b
    h2, h3 = y.a, y.b
    return Octonion(h0 * h2 - h3 * h1.conj(), h0.conj() * h3 + h2 * h1)


def oct_conj_norm_inv(x: Octonion):
    """(conjugate, norm, inverse); the inverse is None for x = 0."""
    return x.conj(), x.norm(), x.inverse()


def octonion_basis() -> list[Octonion]:
    zero = Quaternion()
    return [Octonion(u, zero) for u in (ONE, I, J, K)] + [
        Octonion(zero, u) for u in (ONE, I, J, K)
    ]
